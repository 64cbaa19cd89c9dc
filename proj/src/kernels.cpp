#include "eulerclass/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "eulerclass/equivalence.hpp"
#include "eulerclass/error.hpp"

namespace eulerclass {

std::vector<unsigned char> restriction_flags(const GraphView& view,
                                             std::span<const Orientation> orientations,
                                             Restriction restriction, Exec exec) {
  const long n = static_cast<long>(orientations.size());
  std::vector<unsigned char> flags(orientations.size(), 0);
  if (exec == Exec::kSerial) {
    for (long i = 0; i < n; ++i) flags[i] = in_restriction(view, orientations[i], restriction);
    return flags;
  }
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) flags[i] = in_restriction(view, orientations[i], restriction);
  return flags;
}

namespace {

std::vector<std::pair<int, int>> related_pairs_serial(const GraphView& view,
                                                      std::span<const Orientation> orientations,
                                                      Relation relation) {
  std::vector<std::pair<int, int>> out;
  const int n = static_cast<int>(orientations.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (related(view, relation, orientations[a], orientations[b])) out.emplace_back(a, b);
  return out;
}

// Row a of the relation. For the Eulerian-cut relation the Eulerian and
// directed-cut subsets of the present edges are tabulated once under
// orientations[a], then each difference set is split by submask enumeration.
void related_row(const GraphView& view, std::span<const Orientation> orientations,
                 Relation relation, int a, const std::vector<EdgeId>& ids,
                 std::vector<std::pair<int, int>>& out) {
  const Orientation& base = orientations[a];
  const int n = static_cast<int>(orientations.size());
  if (relation != Relation::kEulerianCut) {
    for (int b = a + 1; b < n; ++b)
      if (related(view, relation, base, orientations[b])) out.emplace_back(a, b);
    return;
  }
  const int m = static_cast<int>(ids.size());
  if (m > kEulerianCutSplitCap)
    throw ResourceError("Eulerian-cut split search over " + std::to_string(m) + " edges exceeds cap");
  const std::uint64_t full = std::uint64_t{1} << m;
  std::vector<unsigned char> eulerian(full), cut(full);
  for (std::uint64_t d = 0; d < full; ++d) {
    EdgeSet s = expand(d, ids);
    eulerian[d] = is_directed_eulerian(view, base, s);
    cut[d] = is_directed_cut(view, base, s);
  }
  for (int b = a + 1; b < n; ++b) {
    std::uint64_t d = compress(difference_set(base, orientations[b]), ids);
    bool hit = false;
    for (std::uint64_t part = d;; part = (part - 1) & d) {
      if (eulerian[part] && cut[d ^ part]) {
        hit = true;
        break;
      }
      if (part == 0) break;
    }
    if (hit) out.emplace_back(a, b);
  }
}

}  // namespace

std::vector<std::pair<int, int>> related_pairs(const GraphView& view,
                                               std::span<const Orientation> orientations,
                                               Relation relation, Exec exec) {
  if (exec == Exec::kSerial) return related_pairs_serial(view, orientations, relation);

  const int n = static_cast<int>(orientations.size());
  const std::vector<EdgeId> ids = view.present_edges().ids();
  std::vector<std::vector<std::pair<int, int>>> rows(n);
  // Exceptions may not cross the parallel region; stash the first one.
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4)
  for (int a = 0; a < n; ++a) {
    try {
      related_row(view, orientations, relation, a, ids, rows[a]);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<std::pair<int, int>> out;
  for (auto& row : rows) out.insert(out.end(), row.begin(), row.end());
  return out;
}

ActivityCounts activity_tally(const GraphView& view, std::span<const SpanningForest> forests,
                              Exec exec) {
  const long n = static_cast<long>(forests.size());
  std::vector<Activities> act(forests.size());
  if (exec == Exec::kSerial) {
    for (long i = 0; i < n; ++i) act[i] = activities(view, forests[i]);
  } else {
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < n; ++i) act[i] = activities(view, forests[i]);
  }
  ActivityCounts counts;
  for (const Activities& a : act) ++counts[{a.internal, a.external}];
  return counts;
}

}  // namespace eulerclass
