#include "eulerclass/corpus.hpp"

#include <algorithm>
#include <numeric>

#include "eulerclass/error.hpp"

namespace eulerclass {

std::vector<NamedGraph> named_graphs() {
  return {
      {"C3", Multigraph(3, {{0, 1}, {1, 2}, {2, 0}})},
      {"C4", Multigraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})},
      {"D2", Multigraph(2, {{0, 1}, {0, 1}})},
      {"P3E", Multigraph(2, {{0, 1}, {0, 1}, {0, 1}})},
      {"B1", Multigraph(2, {{0, 1}})},
      {"L1", Multigraph(1, {{0, 0}})},
      {"K4", Multigraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})},
      {"K4-minus-edge", Multigraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}})},
      // Three internally disjoint 0-1 paths of lengths 1, 2 and 2.
      {"theta", Multigraph(4, {{0, 1}, {0, 2}, {2, 1}, {0, 3}, {3, 1}})},
  };
}

NamedGraph named_graph(const std::string& name) {
  for (NamedGraph& g : named_graphs())
    if (g.name == name) return g;
  throw InvalidInputError("no named graph '" + name + "'");
}

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

std::vector<EdgeId> random_order(int edge_count, std::mt19937_64& rng) {
  std::vector<EdgeId> order(edge_count);
  std::iota(order.begin(), order.end(), 0);
  for (int i = edge_count - 1; i > 0; --i) std::swap(order[i], order[draw_below(rng, i + 1)]);
  return order;
}

Orientation random_orientation(const GraphView& view, std::mt19937_64& rng) {
  EdgeSet reversed;
  view.present_edges().for_each([&](EdgeId e) {
    if (rng() & 1U) reversed.insert(e);
  });
  return Orientation(view.present_edges(), reversed);
}

std::vector<NamedGraph> random_graphs(std::uint64_t seed, int count, CorpusLimits limits) {
  if (limits.max_vertices < 1 || limits.max_edges < 0)
    throw InvalidInputError("corpus limits must allow at least one vertex");
  std::mt19937_64 rng(seed);
  std::vector<NamedGraph> out;
  for (int i = 0; i < count; ++i) {
    const int top = std::min(limits.max_vertices, limits.max_edges + 1);
    const int n = 1 + static_cast<int>(draw_below(rng, top));
    const int m = (n - 1) + static_cast<int>(draw_below(rng, limits.max_edges - (n - 1) + 1));
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.push_back({static_cast<Vertex>(draw_below(rng, v)), v});
    while (static_cast<int>(edges.size()) < m)
      edges.push_back({static_cast<Vertex>(draw_below(rng, n)), static_cast<Vertex>(draw_below(rng, n))});
    for (int j = static_cast<int>(edges.size()) - 1; j > 0; --j)
      std::swap(edges[j], edges[draw_below(rng, j + 1)]);
    for (Edge& e : edges)
      if (rng() & 1U) std::swap(e.tail, e.head);
    std::string name = "R" + std::string(i < 10 ? "0" : "") + std::to_string(i);
    out.push_back({std::move(name), Multigraph(n, std::move(edges))});
  }
  return out;
}

std::vector<NamedGraph> corpus(std::uint64_t seed, int count, CorpusLimits limits) {
  std::vector<NamedGraph> out;
  for (NamedGraph& g : named_graphs())
    if (g.graph.vertex_count() <= limits.max_vertices && g.graph.edge_count() <= limits.max_edges)
      out.push_back(std::move(g));
  for (NamedGraph& g : random_graphs(seed, count, limits)) out.push_back(std::move(g));
  return out;
}

}  // namespace eulerclass
