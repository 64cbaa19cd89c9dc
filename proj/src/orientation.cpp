#include "eulerclass/orientation.hpp"

#include <unordered_map>

#include "eulerclass/error.hpp"

namespace eulerclass {

Orientation::Orientation(EdgeSet present, EdgeSet reversed) : present_(present), reversed_(reversed) {
  if (!reversed_.subset_of(present_))
    throw InvalidInputError("orientation reverses an edge it does not carry");
}

Orientation Orientation::forward(const GraphView& view) {
  return Orientation(view.present_edges(), EdgeSet{});
}

Orientation Orientation::parse(const GraphView& view, std::string_view text) {
  std::vector<EdgeId> ids = view.present_edges().ids();
  std::vector<bool> minus;
  for (std::size_t i = 0; i < text.size();) {
    if (text[i] == '+' || text[i] == '-') {
      minus.push_back(text[i] == '-');
      ++i;
    } else if (text.substr(i, 3) == "\xE2\x88\x92") {  // U+2212
      minus.push_back(true);
      i += 3;
    } else {
      throw ParseError("orientation may only contain '+' and '-'");
    }
  }
  if (minus.size() != ids.size())
    throw ParseError("orientation must have exactly " + std::to_string(ids.size()) + " characters");
  EdgeSet reversed;
  for (std::size_t j = 0; j < ids.size(); ++j)
    if (minus[j]) reversed.insert(ids[j]);
  return Orientation(view.present_edges(), reversed);
}

std::string Orientation::str() const {
  std::string s;
  present_.for_each([&](EdgeId e) { s.push_back(reversed_.contains(e) ? '-' : '+'); });
  return s;
}

Arc arc(const GraphView& view, const Orientation& o, EdgeId e) {
  auto [t, h] = view.ends(e);
  return o.is_reversed(e) ? Arc{h, t} : Arc{t, h};
}

void require_attached(const GraphView& view, const Orientation& o) {
  if (o.present() != view.present_edges())
    throw InvalidInputError("orientation does not belong to this view");
}

std::vector<Orientation> enumerate_orientations(const GraphView& view, int max_edges) {
  std::vector<EdgeId> ids = view.present_edges().ids();
  const int m = static_cast<int>(ids.size());
  if (m > max_edges)
    throw ResourceError("orientation enumeration over " + std::to_string(m) +
                        " edges exceeds cap of " + std::to_string(max_edges));
  std::vector<Orientation> out;
  out.reserve(std::size_t{1} << m);
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << m); ++k) {
    EdgeSet reversed;
    for (int j = 0; j < m; ++j)
      if ((k >> (m - 1 - j)) & 1U) reversed.insert(ids[j]);
    out.emplace_back(view.present_edges(), reversed);
  }
  return out;
}

namespace {

void require_subset(const GraphView& view, EdgeSet d) {
  if (!d.subset_of(view.present_edges()))
    throw InvalidEdgeError("edge set " + format_edges(d) + " is not contained in the view");
}

// Marks every vertex reachable from `start` along arcs (or against them when
// `backward`), skipping `excluded`.
std::vector<bool> sweep(const GraphView& view, const Orientation& o, int start, bool backward,
                        EdgeSet excluded = {}) {
  std::vector<std::vector<int>> adj(view.vertex_count());
  (view.present_edges() - excluded).for_each([&](EdgeId e) {
    Arc a = arc(view, o, e);
    if (backward)
      adj[a.to].push_back(a.from);
    else
      adj[a.from].push_back(a.to);
  });
  std::vector<bool> seen(view.vertex_count(), false);
  std::vector<int> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x]) {
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  return seen;
}

}  // namespace

bool reachable(const GraphView& view, const Orientation& o, Vertex u, Vertex v,
               std::optional<EdgeId> excluded) {
  require_attached(view, o);
  EdgeSet skip;
  if (excluded) skip.insert(*excluded);
  int a = view.index_of(u), b = view.index_of(v);
  if (a == b) return true;
  return sweep(view, o, a, false, skip)[b];
}

bool is_totally_cyclic(const GraphView& view, const Orientation& o) {
  require_attached(view, o);
  std::vector<int> labels = component_labels(view);
  std::vector<bool> done(view.vertex_count(), false);
  for (int root = 0; root < view.vertex_count(); ++root) {
    if (done[root]) continue;
    std::vector<bool> fwd = sweep(view, o, root, false);
    std::vector<bool> bwd = sweep(view, o, root, true);
    for (int v = 0; v < view.vertex_count(); ++v) {
      if (labels[v] != labels[root]) continue;
      if (!fwd[v] || !bwd[v]) return false;
      done[v] = true;
    }
  }
  return true;
}

bool every_edge_on_directed_cycle(const GraphView& view, const Orientation& o) {
  require_attached(view, o);
  bool ok = true;
  view.present_edges().for_each([&](EdgeId e) {
    if (!ok) return;
    Arc a = arc(view, o, e);
    if (a.from != a.to && !sweep(view, o, a.to, false)[a.from]) ok = false;
  });
  return ok;
}

bool is_acyclic(const GraphView& view, const Orientation& o) {
  require_attached(view, o);
  std::vector<int> indeg(view.vertex_count(), 0);
  std::vector<std::vector<int>> adj(view.vertex_count());
  bool loop = false;
  view.present_edges().for_each([&](EdgeId e) {
    Arc a = arc(view, o, e);
    if (a.from == a.to) loop = true;
    adj[a.from].push_back(a.to);
    ++indeg[a.to];
  });
  if (loop) return false;
  std::vector<int> ready;
  for (int v = 0; v < view.vertex_count(); ++v)
    if (indeg[v] == 0) ready.push_back(v);
  int removed = 0;
  while (!ready.empty()) {
    int x = ready.back();
    ready.pop_back();
    ++removed;
    for (int y : adj[x])
      if (--indeg[y] == 0) ready.push_back(y);
  }
  return removed == view.vertex_count();
}

bool is_cycle_flippable(const GraphView& view, const Orientation& o, EdgeId e) {
  require_attached(view, o);
  if (!view.present(e)) throw InvalidEdgeError("e" + std::to_string(e + 1) + " is not present");
  Arc a = arc(view, o, e);
  if (a.from == a.to) return true;
  EdgeSet skip{e};
  return sweep(view, o, a.from, false, skip)[a.to] && sweep(view, o, a.to, false, skip)[a.from];
}

bool is_cut_flippable(const GraphView& view, const Orientation& o, EdgeId e) {
  require_attached(view, o);
  if (!view.present(e)) throw InvalidEdgeError("e" + std::to_string(e + 1) + " is not present");
  Arc a = arc(view, o, e);
  if (a.from == a.to) throw InvalidInputError("a loop is never cut flippable");
  EdgeSet skip{e};
  return !sweep(view, o, a.from, false, skip)[a.to] && !sweep(view, o, a.to, false, skip)[a.from];
}

bool is_directed_eulerian(const GraphView& view, const Orientation& o, EdgeSet d) {
  require_attached(view, o);
  require_subset(view, d);
  std::vector<int> balance(view.vertex_count(), 0);
  d.for_each([&](EdgeId e) {
    Arc a = arc(view, o, e);
    ++balance[a.from];
    --balance[a.to];
  });
  for (int b : balance)
    if (b != 0) return false;
  return true;
}

bool is_directed_cut(const GraphView& view, const Orientation& o, EdgeSet d) {
  require_attached(view, o);
  require_subset(view, d);
  struct Step {
    int to;
    int delta;
  };
  std::vector<std::vector<Step>> adj(view.vertex_count());
  bool loop_in_d = false;
  view.present_edges().for_each([&](EdgeId e) {
    Arc a = arc(view, o, e);
    int delta = d.contains(e) ? 1 : 0;
    if (a.from == a.to) {
      if (delta) loop_in_d = true;
      return;
    }
    adj[a.from].push_back({a.to, delta});
    adj[a.to].push_back({a.from, -delta});
  });
  if (loop_in_d) return false;

  std::vector<std::optional<int>> height(view.vertex_count());
  for (int root = 0; root < view.vertex_count(); ++root) {
    if (height[root]) continue;
    height[root] = 0;
    std::vector<int> queue{root};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int x = queue[qi];
      for (const Step& s : adj[x]) {
        int want = *height[x] + s.delta;
        if (!height[s.to]) {
          height[s.to] = want;
          queue.push_back(s.to);
        } else if (*height[s.to] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

bool directed_cut_oracle(const GraphView& view, const Orientation& o, EdgeSet d) {
  require_attached(view, o);
  require_subset(view, d);
  if (view.present_edges().size() > kDirectedCutOracleCap)
    throw ResourceError("directed cut oracle is limited to " +
                        std::to_string(kDirectedCutOracleCap) + " edges");
  if (view.vertex_count() > 24) throw ResourceError("directed cut oracle is limited to 24 vertices");

  // Every boundary [S, T] whose edges all run from S to T.
  std::vector<EdgeSet> one_way;
  const int n = view.vertex_count();
  for (std::uint64_t s = 1; s + 1 < (std::uint64_t{1} << n); ++s) {
    EdgeSet boundary;
    bool directed = true;
    view.present_edges().for_each([&](EdgeId e) {
      Arc a = arc(view, o, e);
      bool from_in = (s >> a.from) & 1U, to_in = (s >> a.to) & 1U;
      if (from_in == to_in) return;
      boundary.insert(e);
      if (!from_in) directed = false;
    });
    if (directed && !boundary.empty()) one_way.push_back(boundary);
  }

  std::unordered_map<std::uint64_t, bool> memo;
  auto peel = [&](auto& self, EdgeSet rest) -> bool {
    if (rest.empty()) return true;
    if (auto it = memo.find(rest.bits()); it != memo.end()) return it->second;
    bool ok = false;
    for (EdgeSet b : one_way) {
      if (b.subset_of(rest) && self(self, rest - b)) {
        ok = true;
        break;
      }
    }
    memo[rest.bits()] = ok;
    return ok;
  };
  return peel(peel, d);
}

Orientation reverse_edges(const Orientation& o, EdgeSet s) {
  if (!s.subset_of(o.present()))
    throw InvalidEdgeError("cannot reverse edges " + format_edges(s - o.present()) + " that are absent");
  return Orientation(o.present(), o.reversed() ^ s);
}

}  // namespace eulerclass
