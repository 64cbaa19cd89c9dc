#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "eulerclass/orientation.hpp"

namespace eulerclass {

// The fixed reference data of the bijection: a graph (whose rank table is
// the activity order) and a normal orientation of all its edges.
struct NormalContext {
  std::shared_ptr<const Multigraph> graph;
  Orientation normal;

  NormalContext() = default;
  NormalContext(std::shared_ptr<const Multigraph> g, Orientation n);
  // Normal orientation = every edge as written.
  explicit NormalContext(std::shared_ptr<const Multigraph> g);

  GraphView view() const { return GraphView(graph); }
  bool normal_reversed(EdgeId e) const { return normal.is_reversed(e); }
};

enum class EdgeState : unsigned char { kOriented, kUnoriented, kDeleted };

// Partial orientation after `stage` edges (the largest ones) have been
// processed. oriented / unoriented / deleted partition the edge set and
// `reversed` only mentions oriented edges.
struct StageState {
  NormalContext context;
  EdgeSet oriented;
  EdgeSet unoriented;
  EdgeSet deleted;
  EdgeSet reversed;
  int stage = 0;

  static StageState initial(const NormalContext& ctx, const Orientation& o);

  EdgeState state(EdgeId e) const;
  int edge_count() const { return context.graph->edge_count(); }
  Orientation orientation() const { return Orientation(oriented, reversed); }

  friend bool operator==(const StageState& a, const StageState& b) {
    return a.oriented == b.oriented && a.unoriented == b.unoriented && a.deleted == b.deleted &&
           a.reversed == b.reversed && a.stage == b.stage;
  }
};

// Unoriented edges contracted, deleted edges removed, oriented edges keep
// their bits.
struct Contraction {
  GraphView view;
  Orientation orientation;
};
Contraction contraction_of(const StageState& state);

// Every oriented edge of the contraction agrees with the normal orientation
// or lies on no directed cycle whose other edges are all smaller.
bool is_reduced(const StageState& state);
// Orientation of the whole graph, checked as a stage-0 state.
bool is_reduced(const NormalContext& ctx, const Orientation& o);

struct TraceEvent {
  int stage = 0;
  std::string action;  // "normalize-reversal", "unorient" or "delete"
  EdgeId edge = -1;
  EdgeSet cycle;       // reversed edges, for normalize-reversal
  int contraction_vertices = 0;
  EdgeSet contraction_edges;
  std::string contraction_orientation;
};
using Trace = std::vector<TraceEvent>;

// Repeatedly reverses, for the largest edge violating the reduced property,
// a directed cycle through it whose other edges are smaller. The cycle is
// the lexicographically first one found by a depth-first search that takes
// smaller edges first, or a shuffled search when `rng` is given. Requires a
// totally cyclic contraction; runs out of fuel after 2^m reversals.
StageState normalize(const StageState& state, std::mt19937_64* rng = nullptr, Trace* trace = nullptr);
Orientation normalize(const NormalContext& ctx, const Orientation& o, std::mt19937_64* rng = nullptr);

// The O_k membership conditions, reported separately.
struct StageConditions {
  bool a = false;  // stage layout, and unoriented edges form a forest
  bool b = false;  // contraction totally cyclic
  bool c = false;  // contraction reduced
  bool d = false;  // each unoriented bridge has a smaller edge in its full cut
  bool all() const { return a && b && c && d; }
};
StageConditions check_stage_conditions(const StageState& state);

// What one stage did, kept for the stage-level checks.
struct StageOutcome {
  StageState normalized_input;  // after the leading normalization
  EdgeId edge = -1;             // the processed (largest oriented) edge
  bool deleted = false;
  StageState before_renormalize;  // edge deleted/unoriented, not yet normalized
  StageState result;
};

// One stage: normalize, then delete the largest oriented edge if it is a
// loop or cycle flippable in the contraction and unorient it otherwise, then
// normalize again. Input must satisfy the O_{k-1} conditions; the output is
// checked against O_k; a violation raises InternalError.
StageOutcome stage_step_detailed(const StageState& state, Trace* trace = nullptr);
StageState stage_step(const StageState& state, Trace* trace = nullptr);

// Spanning tree with no internally active edge. Requires a connected graph
// and a totally cyclic orientation.
EdgeSet forward(const NormalContext& ctx, const Orientation& o, Trace* trace = nullptr);

struct InverseStats {
  int loop_iterations = 0;
  bool used_fallback = false;
};

// The unique O_{k-1} state that stage_step maps onto `state`.
StageState inverse_stage(const StageState& state, InverseStats* stats = nullptr);

// Reduced totally cyclic orientation whose forward image is `tree`.
Orientation inverse(const NormalContext& ctx, EdgeSet tree, InverseStats* stats = nullptr);

}  // namespace eulerclass
