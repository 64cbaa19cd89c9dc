#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eulerclass/multigraph.hpp"

namespace eulerclass {

// One direction bit per present edge of a view: '+' keeps the stored
// tail->head direction, '-' reverses it. `reversed` is always a subset of
// `present`.
class Orientation {
 public:
  Orientation() = default;
  Orientation(EdgeSet present, EdgeSet reversed);

  // All edges '+'.
  static Orientation forward(const GraphView& view);
  // m characters over {+,-} for the view's present edges in id order. The
  // Unicode minus sign is accepted as '-'.
  static Orientation parse(const GraphView& view, std::string_view text);

  EdgeSet present() const { return present_; }
  EdgeSet reversed() const { return reversed_; }
  bool is_reversed(EdgeId e) const { return reversed_.contains(e); }

  std::string str() const;

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  EdgeSet present_;
  EdgeSet reversed_;
};

// Directed endpoints (dense view indices) of e under the orientation.
struct Arc {
  int from = 0;
  int to = 0;
};
Arc arc(const GraphView& view, const Orientation& o, EdgeId e);

// Throws InvalidInputError when o does not carry exactly the view's present edges.
void require_attached(const GraphView& view, const Orientation& o);

inline constexpr int kDefaultOrientationCap = 20;
inline constexpr int kDirectedCutOracleCap = 12;

// All 2^m orientations in lexicographic string order ('+' before '-').
std::vector<Orientation> enumerate_orientations(const GraphView& view,
                                                int max_edges = kDefaultOrientationCap);

// Directed path from u to v (base vertices, mapped to their classes) using
// present edges other than `excluded`. The empty path counts.
bool reachable(const GraphView& view, const Orientation& o, Vertex u, Vertex v,
               std::optional<EdgeId> excluded = std::nullopt);

// No directed cut: each component is strongly connected. Loops never matter.
bool is_totally_cyclic(const GraphView& view, const Orientation& o);
// Brute-force reference: every present edge lies on a directed cycle.
bool every_edge_on_directed_cycle(const GraphView& view, const Orientation& o);
// No directed cycle. Any loop is a directed cycle.
bool is_acyclic(const GraphView& view, const Orientation& o);

// Directed u->v edge with directed paths both u->v and v->u avoiding it.
// Loops are cycle flippable.
bool is_cycle_flippable(const GraphView& view, const Orientation& o, EdgeId e);
// No directed path either way avoiding e. Rejects loops.
bool is_cut_flippable(const GraphView& view, const Orientation& o, EdgeId e);

// In-degree equals out-degree at every vertex of the sub-digraph on `d`.
bool is_directed_eulerian(const GraphView& view, const Orientation& o, EdgeSet d);

// `d` is a disjoint union of directed bonds. Tested through an integer
// height on view vertices that rises by exactly one along every edge of d
// and stays level across every other present edge.
bool is_directed_cut(const GraphView& view, const Orientation& o, EdgeSet d);

// Definitional reference for is_directed_cut: repeatedly peel off a
// bipartition boundary lying inside d and crossed in one direction.
// Limited to views with at most kDirectedCutOracleCap present edges.
bool directed_cut_oracle(const GraphView& view, const Orientation& o, EdgeSet d);

Orientation reverse_edges(const Orientation& o, EdgeSet s);

}  // namespace eulerclass
