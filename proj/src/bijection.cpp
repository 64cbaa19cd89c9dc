#include "eulerclass/bijection.hpp"

#include <algorithm>
#include <optional>
#include <unordered_set>

#include "eulerclass/disjoint_sets.hpp"
#include "eulerclass/error.hpp"

namespace eulerclass {

NormalContext::NormalContext(std::shared_ptr<const Multigraph> g, Orientation n)
    : graph(std::move(g)), normal(n) {
  if (normal.present() != graph->all_edges())
    throw InvalidInputError("normal orientation must cover every edge");
}

NormalContext::NormalContext(std::shared_ptr<const Multigraph> g)
    : NormalContext(g, Orientation(g->all_edges(), EdgeSet{})) {}

StageState StageState::initial(const NormalContext& ctx, const Orientation& o) {
  if (o.present() != ctx.graph->all_edges())
    throw InvalidInputError("orientation must cover every edge");
  StageState s;
  s.context = ctx;
  s.oriented = ctx.graph->all_edges();
  s.reversed = o.reversed();
  return s;
}

EdgeState StageState::state(EdgeId e) const {
  if (oriented.contains(e)) return EdgeState::kOriented;
  if (unoriented.contains(e)) return EdgeState::kUnoriented;
  return EdgeState::kDeleted;
}

Contraction contraction_of(const StageState& state) {
  GraphView view = state.context.view();
  state.deleted.for_each([&](EdgeId e) { view = delete_edge(view, e); });
  state.unoriented.for_each([&](EdgeId e) {
    if (view.present(e)) view = contract(view, e);
  });
  return {view, Orientation(view.present_edges(), state.reversed & view.present_edges())};
}

namespace {

EdgeSet smaller_than(const GraphView& view, EdgeId e) {
  const Multigraph& g = view.base();
  EdgeSet out;
  view.present_edges().for_each([&](EdgeId f) {
    if (g.smaller(f, e)) out.insert(f);
  });
  return out;
}

// Simple directed path from `from` to `to` over `allowed` edges: the first
// one met by a depth-first search that tries smaller edges first (or a
// shuffled order when rng is set). Empty set when from == to.
std::optional<EdgeSet> directed_path(const GraphView& view, const Orientation& o, int from, int to,
                                     EdgeSet allowed, std::mt19937_64* rng) {
  if (from == to) return EdgeSet{};
  const int n = view.vertex_count();
  std::vector<std::vector<std::pair<EdgeId, int>>> out(n);
  std::vector<std::vector<int>> in(n);
  for (EdgeId e : view.present_by_rank()) {
    if (!allowed.contains(e)) continue;
    Arc a = arc(view, o, e);
    if (a.from == a.to) continue;
    out[a.from].emplace_back(e, a.to);
    in[a.to].push_back(a.from);
  }
  if (rng)
    for (auto& arcs : out) std::shuffle(arcs.begin(), arcs.end(), *rng);

  // Vertices that can reach `to` at all; the search never leaves this set.
  std::vector<bool> useful(n, false);
  std::vector<int> stack{to};
  useful[to] = true;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : in[x])
      if (!useful[y]) {
        useful[y] = true;
        stack.push_back(y);
      }
  }
  if (!useful[from]) return std::nullopt;

  std::vector<bool> on_path(n, false);
  std::optional<EdgeSet> found;
  auto dfs = [&](auto& self, int at, EdgeSet used) -> bool {
    if (at == to) {
      found = used;
      return true;
    }
    on_path[at] = true;
    for (auto [e, next] : out[at]) {
      if (on_path[next] || !useful[next]) continue;
      if (self(self, next, used.with(e))) return true;
    }
    on_path[at] = false;
    return false;
  };
  dfs(dfs, from, EdgeSet{});
  return found;
}

bool has_directed_path(const GraphView& view, const Orientation& o, int from, int to, EdgeSet allowed) {
  if (from == to) return true;
  std::vector<std::vector<int>> out(view.vertex_count());
  allowed.for_each([&](EdgeId e) {
    Arc a = arc(view, o, e);
    out[a.from].push_back(a.to);
  });
  std::vector<bool> seen(view.vertex_count(), false);
  std::vector<int> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (x == to) return true;
    for (int y : out[x])
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
  }
  return false;
}

bool violates_reduced(const NormalContext& ctx, const GraphView& view, const Orientation& o, EdgeId e) {
  if (o.is_reversed(e) == ctx.normal_reversed(e)) return false;
  Arc a = arc(view, o, e);
  if (a.from == a.to) return true;
  return has_directed_path(view, o, a.to, a.from, smaller_than(view, e));
}

// Largest oriented edge breaking the reduced property, or -1.
EdgeId largest_violation(const NormalContext& ctx, const GraphView& view, const Orientation& o) {
  std::vector<EdgeId> by_rank = view.present_by_rank();
  for (auto it = by_rank.rbegin(); it != by_rank.rend(); ++it)
    if (violates_reduced(ctx, view, o, *it)) return *it;
  return -1;
}

std::uint64_t fuel_for(int edges) { return std::uint64_t{1} << std::min(edges, 40); }

void emit(Trace* trace, int stage, std::string action, EdgeId edge, EdgeSet cycle,
          const StageState& after) {
  if (!trace) return;
  Contraction c = contraction_of(after);
  trace->push_back({stage, std::move(action), edge, cycle, c.view.vertex_count(),
                    c.view.present_edges(), c.orientation.str()});
}

}  // namespace

bool is_reduced(const StageState& state) {
  Contraction c = contraction_of(state);
  return largest_violation(state.context, c.view, c.orientation) < 0;
}

bool is_reduced(const NormalContext& ctx, const Orientation& o) {
  return is_reduced(StageState::initial(ctx, o));
}

StageState normalize(const StageState& state, std::mt19937_64* rng, Trace* trace) {
  Contraction c = contraction_of(state);
  if (!is_totally_cyclic(c.view, c.orientation))
    throw PreconditionError("normalization needs a totally cyclic contraction");
  StageState s = state;
  std::uint64_t fuel = fuel_for(c.view.present_edges().size());
  for (;;) {
    Orientation o(c.view.present_edges(), s.reversed & c.view.present_edges());
    EdgeId bad = largest_violation(s.context, c.view, o);
    if (bad < 0) return s;
    if (fuel-- == 0) throw InternalError("normalization did not converge");
    Arc a = arc(c.view, o, bad);
    std::optional<EdgeSet> path = directed_path(c.view, o, a.to, a.from, smaller_than(c.view, bad), rng);
    if (!path) throw InternalError("violating edge has no small directed cycle");
    EdgeSet cycle = path->with(bad);
    s.reversed ^= cycle;
    emit(trace, s.stage, "normalize-reversal", bad, cycle, s);
  }
}

Orientation normalize(const NormalContext& ctx, const Orientation& o, std::mt19937_64* rng) {
  return normalize(StageState::initial(ctx, o), rng).orientation();
}

StageConditions check_stage_conditions(const StageState& state) {
  StageConditions out;
  const Multigraph& g = *state.context.graph;
  const int q = g.edge_count();
  const int k = state.stage;
  const EdgeSet all = g.all_edges();
  const bool partition = k >= 0 && k <= q && (state.oriented | state.unoriented | state.deleted) == all &&
                         (state.oriented & state.unoriented).empty() &&
                         (state.oriented & state.deleted).empty() &&
                         (state.unoriented & state.deleted).empty() &&
                         state.reversed.subset_of(state.oriented);
  if (!partition) return out;

  out.a = true;
  for (EdgeId e = 0; e < q; ++e) {
    bool processed = g.rank(e) >= q - k;
    if (processed == state.oriented.contains(e)) out.a = false;
  }
  DisjointSets forest(g.vertex_count());
  state.unoriented.for_each([&](EdgeId e) {
    if (!forest.unite(g.edge(e).tail, g.edge(e).head)) out.a = false;
  });

  Contraction c = contraction_of(state);
  // The subgraph of a connected graph stays connected through the ladder,
  // so the contraction must be a single strongly connected component.
  out.b = component_count(c.view) == 1 && is_totally_cyclic(c.view, c.orientation);
  out.c = largest_violation(state.context, c.view, c.orientation) < 0;

  GraphView sub = state.context.view();
  state.deleted.for_each([&](EdgeId e) { sub = delete_edge(sub, e); });
  out.d = true;
  state.unoriented.for_each([&](EdgeId e) {
    if (!out.d || !is_bridge(sub, e)) return;
    std::vector<int> side = component_labels(sub, sub.present_edges().without(e));
    int s1 = side[sub.index_of(g.edge(e).tail)], s2 = side[sub.index_of(g.edge(e).head)];
    bool smaller_in_cut = false;
    for (EdgeId f = 0; f < q; ++f) {
      int x = side[sub.index_of(g.edge(f).tail)], y = side[sub.index_of(g.edge(f).head)];
      bool crosses = (x == s1 && y == s2) || (x == s2 && y == s1);
      if (crosses && g.smaller(f, e)) smaller_in_cut = true;
    }
    if (!smaller_in_cut) out.d = false;
  });
  return out;
}

namespace {

std::string describe(const StageConditions& c) {
  std::string s;
  if (!c.a) s += " (a)";
  if (!c.b) s += " (b)";
  if (!c.c) s += " (c)";
  if (!c.d) s += " (d)";
  return s;
}

}  // namespace

StageOutcome stage_step_detailed(const StageState& state, Trace* trace) {
  if (state.oriented.empty()) throw PreconditionError("no oriented edge left to process");
  StageConditions pre = check_stage_conditions(state);
  if (!pre.all()) throw PreconditionError("input state violates O_k condition" + describe(pre));
  const Multigraph& g = *state.context.graph;

  StageOutcome out;
  out.normalized_input = normalize(state, nullptr, trace);
  out.edge = max_by_rank(g, state.oriented);
  Contraction c = contraction_of(out.normalized_input);
  out.deleted = is_loop(c.view, out.edge) || is_cycle_flippable(c.view, c.orientation, out.edge);

  StageState next = out.normalized_input;
  next.oriented.erase(out.edge);
  next.reversed.erase(out.edge);
  (out.deleted ? next.deleted : next.unoriented).insert(out.edge);
  next.stage = state.stage + 1;
  out.before_renormalize = next;
  emit(trace, next.stage, out.deleted ? "delete" : "unorient", out.edge, EdgeSet{}, next);

  out.result = normalize(next, nullptr, trace);
  StageConditions post = check_stage_conditions(out.result);
  if (!post.all()) throw InternalError("stage output violates O_k condition" + describe(post));
  return out;
}

StageState stage_step(const StageState& state, Trace* trace) {
  return stage_step_detailed(state, trace).result;
}

namespace {

void require_connected(const GraphView& full) {
  if (component_count(full) != 1) throw InvalidInputError("disconnected graphs are not supported");
}

bool has_bridge(const GraphView& full) {
  bool found = false;
  full.present_edges().for_each([&](EdgeId e) { found = found || is_bridge(full, e); });
  return found;
}

constexpr const char* kNoTotallyCyclic = "graph has a bridge, so it has no totally cyclic orientations";

}  // namespace

EdgeSet forward(const NormalContext& ctx, const Orientation& o, Trace* trace) {
  GraphView full = ctx.view();
  require_attached(full, o);
  require_connected(full);
  if (!is_totally_cyclic(full, o)) {
    if (has_bridge(full)) throw InvalidInputError(kNoTotallyCyclic);
    throw InvalidInputError("orientation " + o.str() + " is not totally cyclic");
  }
  StageState s = normalize(StageState::initial(ctx, o), nullptr, trace);
  if (!check_stage_conditions(s).all()) throw InternalError("normalized input is not in O_0");
  while (!s.oriented.empty()) s = stage_step(s, trace);

  EdgeSet tree = s.unoriented;
  if (!is_spanning_forest(full, tree) || activities(full, {tree}).internal != 0)
    throw InternalError("forward image " + format_edges(tree) + " is not an internally inactive tree");
  return tree;
}

namespace {

bool is_preimage(const StageState& candidate, const StageState& target) {
  if (!check_stage_conditions(candidate).all()) return false;
  return stage_step(candidate) == target;
}

// Every orientation of the candidate's oriented edges, filtered by the O_{k-1}
// conditions and by mapping onto the target.
std::optional<StageState> exhaustive_preimage(const StageState& base, const StageState& target) {
  std::vector<EdgeId> ids = base.oriented.ids();
  if (ids.size() > 24) throw ResourceError("exhaustive preimage search over too many edges");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ids.size()); ++mask) {
    StageState s = base;
    s.reversed = expand(mask, ids);
    Contraction c = contraction_of(s);
    if (!is_totally_cyclic(c.view, c.orientation)) continue;
    if (largest_violation(s.context, c.view, c.orientation) >= 0) continue;
    if (is_preimage(s, target)) return s;
  }
  return std::nullopt;
}

}  // namespace

StageState inverse_stage(const StageState& state, InverseStats* stats) {
  const int k = state.stage;
  if (k < 1) throw PreconditionError("stage 0 has no predecessor");
  StageConditions cond = check_stage_conditions(state);
  if (!cond.all()) throw PreconditionError("state violates O_k condition" + describe(cond));
  const Multigraph& g = *state.context.graph;
  const EdgeId e = g.edge_at_rank(g.edge_count() - k);
  const bool normal_bit = state.context.normal_reversed(e);

  StageState cand = state;
  cand.stage = k - 1;
  cand.oriented.insert(e);

  if (state.deleted.contains(e)) {
    cand.deleted.erase(e);
    if (normal_bit) cand.reversed.insert(e);
    Contraction c = contraction_of(cand);
    if (!check_stage_conditions(cand).all() ||
        !(is_loop(c.view, e) || is_cycle_flippable(c.view, c.orientation, e)))
      throw InternalError("re-adding deleted e" + std::to_string(e + 1) + " left O_{k-1}");
    if (stage_step(cand) != state) throw InternalError("deleted-edge preimage does not map back");
    return cand;
  }

  cand.unoriented.erase(e);
  std::optional<StageState> cur;
  for (bool rev : {normal_bit, !normal_bit}) {
    StageState s = cand;
    if (rev) s.reversed.insert(e);
    Contraction c = contraction_of(s);
    if (is_totally_cyclic(c.view, c.orientation)) {
      cur = s;
      break;
    }
  }
  if (!cur) throw InternalError("no orientation of e" + std::to_string(e + 1) + " is totally cyclic");

  // Flip e, reverse a directed cycle through it, renormalize; stop once e is
  // no longer cycle flippable. A repeated state means the loop is stuck.
  std::optional<StageState> answer;
  std::unordered_set<std::uint64_t> seen;
  std::uint64_t fuel = fuel_for(cur->oriented.size());
  StageState s = normalize(*cur);
  while (fuel-- > 0 && seen.insert(s.reversed.bits()).second) {
    Contraction c = contraction_of(s);
    if (!is_cycle_flippable(c.view, c.orientation, e)) {
      answer = s;
      break;
    }
    if (stats) ++stats->loop_iterations;
    s.reversed.flip(e);
    Orientation o = s.orientation();
    Arc a = arc(c.view, o, e);
    std::optional<EdgeSet> path =
        directed_path(c.view, o, a.to, a.from, c.view.present_edges().without(e), nullptr);
    if (!path) break;
    s.reversed ^= path->with(e);
    s = normalize(s);
  }
  if (answer && is_preimage(*answer, state)) return *answer;

  if (stats) stats->used_fallback = true;
  std::optional<StageState> found = exhaustive_preimage(cand, state);
  if (!found) throw InternalError("no preimage exists for stage " + std::to_string(k));
  return *found;
}

Orientation inverse(const NormalContext& ctx, EdgeSet tree, InverseStats* stats) {
  GraphView full = ctx.view();
  require_connected(full);
  if (!is_spanning_forest(full, tree))
    throw InvalidInputError(format_edges(tree) + " is not a spanning tree");
  if (has_bridge(full)) throw InvalidInputError(kNoTotallyCyclic);
  if (activities(full, {tree}).internal != 0)
    throw InvalidInputError(format_edges(tree) + " has internally active edges");

  StageState s;
  s.context = ctx;
  s.unoriented = tree;
  s.deleted = ctx.graph->all_edges() - tree;
  s.stage = ctx.graph->edge_count();
  while (s.stage > 0) s = inverse_stage(s, stats);
  return s.orientation();
}

}  // namespace eulerclass
