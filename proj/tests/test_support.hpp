#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <numeric>
#include <random>
#include <vector>

#include "eulerclass/corpus.hpp"
#include "eulerclass/multigraph.hpp"

namespace testing_support {

using namespace eulerclass;

inline std::shared_ptr<const Multigraph> share(Multigraph g) {
  return std::make_shared<const Multigraph>(std::move(g));
}

inline GraphView view_of(const std::string& name) { return GraphView(share(named_graph(name).graph)); }

inline GraphView view_of(Multigraph g) { return GraphView(share(std::move(g))); }

// Rank of an edge subset of the base graph, by a private union-find.
inline int subset_rank(const Multigraph& g, std::uint64_t subset) {
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v];
    return v;
  };
  int rank = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!(subset >> e & 1)) continue;
    int a = find(g.edge(e).tail), b = find(g.edge(e).head);
    if (a != b) {
      parent[a] = b;
      ++rank;
    }
  }
  return rank;
}

inline long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Whitney rank-generating form: sum over all edge subsets A of
// (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A)).
inline long long tutte_by_subsets(const Multigraph& g, long long x, long long y) {
  const int m = g.edge_count();
  const std::uint64_t all = m == 0 ? 0 : (~std::uint64_t{0} >> (64 - m));
  const int full = subset_rank(g, all);
  long long total = 0;
  for (std::uint64_t a = 0; a <= all; ++a) {
    int r = subset_rank(g, a);
    total += ipow(x - 1, full - r) * ipow(y - 1, std::popcount(a) - r);
    if (a == all) break;
  }
  return total;
}

// Number of spanning forests: subsets of size r(E) with full rank.
inline long long forests_by_subsets(const Multigraph& g) {
  const int m = g.edge_count();
  const std::uint64_t all = m == 0 ? 0 : (~std::uint64_t{0} >> (64 - m));
  const int full = subset_rank(g, all);
  long long n = 0;
  for (std::uint64_t a = 0; a <= all; ++a) {
    if (std::popcount(a) == full && subset_rank(g, a) == full) ++n;
    if (a == all) break;
  }
  return n;
}

// Strong connectivity per weak component via Floyd-Warshall closure on the
// arcs, independent of the library's search.
inline bool strongly_connected_components_only(int n, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (int v = 0; v < n; ++v) reach[v][v] = 1;
  for (auto [u, v] : arcs) reach[u][v] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (reach[i][k])
        for (int j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = 1;
  for (auto [u, v] : arcs)
    if (!reach[v][u]) return false;
  return true;
}

}  // namespace testing_support
