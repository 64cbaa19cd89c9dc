#include "eulerclass/equivalence.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "eulerclass/disjoint_sets.hpp"
#include "eulerclass/error.hpp"

namespace eulerclass {

std::string to_string(Relation r) {
  switch (r) {
    case Relation::kEulerian: return "eulerian";
    case Relation::kCut: return "cut";
    case Relation::kEulerianCut: return "eulerian_cut";
  }
  return "?";
}

std::string to_string(Restriction r) {
  switch (r) {
    case Restriction::kAll: return "all";
    case Restriction::kTotallyCyclic: return "totally_cyclic";
    case Restriction::kAcyclic: return "acyclic";
  }
  return "?";
}

std::optional<Relation> parse_relation(std::string_view s) {
  if (s == "eulerian") return Relation::kEulerian;
  if (s == "cut") return Relation::kCut;
  if (s == "eulerian_cut" || s == "eulerian-cut") return Relation::kEulerianCut;
  return std::nullopt;
}

std::optional<Restriction> parse_restriction(std::string_view s) {
  if (s == "all") return Restriction::kAll;
  if (s == "totally_cyclic" || s == "totally-cyclic") return Restriction::kTotallyCyclic;
  if (s == "acyclic") return Restriction::kAcyclic;
  return std::nullopt;
}

EdgeSet difference_set(const Orientation& a, const Orientation& b) {
  if (a.present() != b.present()) throw InvalidInputError("orientations belong to different views");
  return a.reversed() ^ b.reversed();
}

bool eulerian_equivalent(const GraphView& view, const Orientation& a, const Orientation& b) {
  return is_directed_eulerian(view, a, difference_set(a, b));
}

bool cut_equivalent(const GraphView& view, const Orientation& a, const Orientation& b) {
  return is_directed_cut(view, a, difference_set(a, b));
}

bool eulerian_cut_equivalent(const GraphView& view, const Orientation& a, const Orientation& b,
                             int max_difference) {
  EdgeSet d = difference_set(a, b);
  if (d.size() > max_difference)
    throw ResourceError("difference set of " + std::to_string(d.size()) + " edges exceeds split cap");
  const std::uint64_t bits = d.bits();
  for (std::uint64_t part = bits;; part = (part - 1) & bits) {
    EdgeSet eulerian_part(part);
    if (is_directed_eulerian(view, a, eulerian_part) && is_directed_cut(view, a, d - eulerian_part))
      return true;
    if (part == 0) break;
  }
  return false;
}

bool related(const GraphView& view, Relation relation, const Orientation& a, const Orientation& b) {
  switch (relation) {
    case Relation::kEulerian: return eulerian_equivalent(view, a, b);
    case Relation::kCut: return cut_equivalent(view, a, b);
    case Relation::kEulerianCut: return eulerian_cut_equivalent(view, a, b);
  }
  return false;
}

bool in_restriction(const GraphView& view, const Orientation& o, Restriction restriction) {
  switch (restriction) {
    case Restriction::kAll: return true;
    case Restriction::kTotallyCyclic: return is_totally_cyclic(view, o);
    case Restriction::kAcyclic: return is_acyclic(view, o);
  }
  return false;
}

std::vector<Orientation> restricted_orientations(const GraphView& view, Restriction restriction,
                                                 int max_edges, Exec exec) {
  std::vector<Orientation> all = enumerate_orientations(view, max_edges);
  if (restriction == Restriction::kAll) return all;
  std::vector<unsigned char> keep = restriction_flags(view, all, restriction, exec);
  std::vector<Orientation> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (keep[i]) out.push_back(all[i]);
  return out;
}

namespace {

// Groups orientation indices by their union-find root; blocks ordered by
// smallest member, members ascending.
ClassPartition assemble(Relation relation, Restriction restriction,
                        const std::vector<Orientation>& members, DisjointSets& ds) {
  ClassPartition out{relation, restriction, {}, {}};
  std::unordered_map<int, std::size_t> block_of_root;
  for (int i = 0; i < static_cast<int>(members.size()); ++i) {
    int r = ds.find(i);
    auto [it, fresh] = block_of_root.emplace(r, out.blocks.size());
    if (fresh) out.blocks.emplace_back();
    out.blocks[it->second].push_back(members[i]);
  }
  for (const auto& block : out.blocks) out.representatives.push_back(block.front());
  return out;
}

}  // namespace

ClassPartition classes(const GraphView& view, Relation relation, Restriction restriction,
                       int max_edges, Exec exec) {
  std::vector<Orientation> members = restricted_orientations(view, restriction, max_edges, exec);
  DisjointSets ds(static_cast<int>(members.size()));
  for (auto [a, b] : related_pairs(view, members, relation, exec)) ds.unite(a, b);
  return assemble(relation, restriction, members, ds);
}

std::vector<EdgeSet> directed_cycles(const GraphView& view, const Orientation& o) {
  require_attached(view, o);
  std::vector<std::vector<std::pair<EdgeId, int>>> out_arcs(view.vertex_count());
  view.present_edges().for_each([&](EdgeId e) {
    Arc a = arc(view, o, e);
    out_arcs[a.from].emplace_back(e, a.to);
  });

  std::vector<EdgeSet> cycles;
  std::vector<bool> on_path(view.vertex_count(), false);
  // Each cycle is generated once, from its smallest edge id.
  view.present_edges().for_each([&](EdgeId first) {
    Arc start = arc(view, o, first);
    if (start.from == start.to) {
      cycles.push_back(EdgeSet{first});
      return;
    }
    auto extend = [&](auto& self, int at, EdgeSet used) -> void {
      if (at == start.from) {
        cycles.push_back(used);
        return;
      }
      on_path[at] = true;
      for (auto [e, next] : out_arcs[at]) {
        if (e <= first || on_path[next] || next == at) continue;
        self(self, next, used.with(e));
      }
      on_path[at] = false;
    };
    on_path[start.from] = false;
    extend(extend, start.to, EdgeSet{first});
  });
  return cycles;
}

std::vector<EdgeSet> directed_bonds(const GraphView& view, const Orientation& o) {
  require_attached(view, o);
  const int n = view.vertex_count();
  if (n > 24) throw ResourceError("bond enumeration is limited to 24 vertices");
  const int base_components = component_count(view);
  std::set<std::uint64_t> seen;
  std::vector<EdgeSet> bonds;
  for (std::uint64_t s = 1; s + 1 < (std::uint64_t{1} << n); ++s) {
    EdgeSet boundary;
    bool one_way = true;
    view.present_edges().for_each([&](EdgeId e) {
      Arc a = arc(view, o, e);
      bool from_in = (s >> a.from) & 1U, to_in = (s >> a.to) & 1U;
      if (from_in == to_in) return;
      boundary.insert(e);
      if (!from_in) one_way = false;
    });
    if (boundary.empty() || !one_way) continue;
    if (component_count(view, view.present_edges() - boundary) != base_components + 1) continue;
    if (seen.insert(boundary.bits()).second) bonds.push_back(boundary);
  }
  return bonds;
}

ClassPartition classes_by_flips(const GraphView& view, Relation relation, Restriction restriction,
                                int max_edges) {
  std::vector<Orientation> members =
      restricted_orientations(view, restriction, max_edges, Exec::kSerial);
  std::unordered_map<std::uint64_t, int> index;
  for (int i = 0; i < static_cast<int>(members.size()); ++i) index[members[i].reversed().bits()] = i;

  const bool cycles_move = relation != Relation::kCut;
  const bool bonds_move = relation != Relation::kEulerian;
  DisjointSets ds(static_cast<int>(members.size()));
  std::vector<bool> visited(members.size(), false);
  for (int start = 0; start < static_cast<int>(members.size()); ++start) {
    if (visited[start]) continue;
    visited[start] = true;
    std::vector<int> queue{start};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const Orientation& cur = members[queue[qi]];
      std::vector<EdgeSet> moves;
      if (cycles_move) moves = directed_cycles(view, cur);
      if (bonds_move) {
        std::vector<EdgeSet> bonds = directed_bonds(view, cur);
        moves.insert(moves.end(), bonds.begin(), bonds.end());
      }
      for (EdgeSet flip : moves) {
        auto it = index.find(reverse_edges(cur, flip).reversed().bits());
        if (it == index.end() || visited[it->second]) continue;
        visited[it->second] = true;
        ds.unite(start, it->second);
        queue.push_back(it->second);
      }
    }
  }
  return assemble(relation, restriction, members, ds);
}

std::size_t alpha(const GraphView& view, int max_edges) {
  return classes(view, Relation::kEulerian, Restriction::kTotallyCyclic, max_edges).count();
}

std::size_t count_unique_source_acyclic(const GraphView& view, Vertex v, int max_edges) {
  const int target = view.index_of(v);
  std::size_t count = 0;
  for (const Orientation& o : restricted_orientations(view, Restriction::kAcyclic, max_edges)) {
    std::vector<int> indeg(view.vertex_count(), 0);
    view.present_edges().for_each([&](EdgeId e) { ++indeg[arc(view, o, e).to]; });
    int sources = 0;
    bool target_is_source = indeg[target] == 0;
    for (int d : indeg) sources += d == 0;
    if (sources == 1 && target_is_source) ++count;
  }
  return count;
}

bool IdentityReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const IdentityCheck& c) { return c.status == CheckStatus::kFail; });
}

const IdentityCheck* IdentityReport::find(const std::string& name) const {
  for (const IdentityCheck& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

void record(IdentityReport& report, std::string name, const BigInt& lhs, const BigInt& rhs,
            std::string note = {}) {
  report.checks.push_back(
      {std::move(name), lhs, rhs, lhs == rhs ? CheckStatus::kPass : CheckStatus::kFail, std::move(note)});
}

void skip(IdentityReport& report, std::string name, std::string note) {
  report.checks.push_back({std::move(name), 0, 0, CheckStatus::kSkipped, std::move(note)});
}

}  // namespace

IdentityReport verify_identities(const GraphView& view, const VerifyOptions& options) {
  IdentityReport report;
  const TuttePolynomial t = tutte_deletion_contraction(view);
  const int m = view.present_edges().size();
  const bool enumerable = m <= options.enumeration_limit;
  const std::string too_big = "more than " + std::to_string(options.enumeration_limit) + " edges";
  auto T = [&](long x, long y) { return evaluate(t, x, y); };
  auto n = [](std::size_t v) { return BigInt(v); };

  record(report, "spanning forests = T(1,1)", n(spanning_forests(view).size()), T(1, 1));

  if (!enumerable) {
    for (const char* name :
         {"alpha = T(0,1)", "|AO| = T(2,0)", "|BO| = T(0,2)", "eulerian classes of O = T(2,1)",
          "cut classes of O = T(1,2)", "cut classes of AO = T(1,0)",
          "eulerian-cut classes of O = T(1,1)", "unique source = T(1,0)", "alpha recurrences"})
      skip(report, name, too_big);
    return report;
  }

  const std::size_t a = alpha(view);
  record(report, "alpha = T(0,1)", n(a), T(0, 1));
  record(report, "|AO| = T(2,0)", n(restricted_orientations(view, Restriction::kAcyclic).size()),
         T(2, 0));
  record(report, "|BO| = T(0,2)",
         n(restricted_orientations(view, Restriction::kTotallyCyclic).size()), T(0, 2));
  record(report, "eulerian classes of O = T(2,1)",
         n(classes(view, Relation::kEulerian, Restriction::kAll).count()), T(2, 1));
  record(report, "cut classes of O = T(1,2)",
         n(classes(view, Relation::kCut, Restriction::kAll).count()), T(1, 2));
  record(report, "cut classes of AO = T(1,0)",
         n(classes(view, Relation::kCut, Restriction::kAcyclic).count()), T(1, 0));
  record(report, "eulerian-cut classes of O = T(1,1)",
         n(classes(view, Relation::kEulerianCut, Restriction::kAll).count()), T(1, 1));

  if (component_count(view) == 1) {
    for (Vertex v : view.vertices())
      record(report, "unique source at " + std::to_string(v) + " = T(1,0)",
             n(count_unique_source_acyclic(view, v)), T(1, 0));
  } else {
    skip(report, "unique source = T(1,0)", "view is disconnected");
  }

  GraphView edgeless = view;
  view.present_edges().for_each([&](EdgeId e) { edgeless = delete_edge(edgeless, e); });
  record(report, "alpha(E_n) = 1", n(alpha(edgeless)), 1);

  view.present_edges().for_each([&](EdgeId e) {
    const std::string tag = " [e" + std::to_string(e + 1) + "]";
    if (is_loop(view, e)) {
      record(report, "alpha(G) = alpha(G-e) for loop" + tag, n(a), n(alpha(delete_edge(view, e))));
    } else if (is_bridge(view, e)) {
      record(report, "alpha(G) = 0 for bridge" + tag, n(a), 0);
    } else {
      record(report, "alpha(G) = alpha(G-e) + alpha(G/e)" + tag, n(a),
             n(alpha(delete_edge(view, e)) + alpha(contract(view, e))));
    }
  });
  return report;
}

}  // namespace eulerclass
