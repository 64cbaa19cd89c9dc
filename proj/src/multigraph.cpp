#include "eulerclass/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "eulerclass/disjoint_sets.hpp"
#include "eulerclass/error.hpp"

namespace eulerclass {

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 1) throw InvalidInputError("graph needs at least one vertex");
  if (edge_count() > kMaxEdges)
    throw ResourceError("at most " + std::to_string(kMaxEdges) + " edges are supported");
  for (const Edge& e : edges_) {
    if (e.tail < 0 || e.head < 0 || e.tail >= vertex_count_ || e.head >= vertex_count_)
      throw InvalidInputError("edge endpoint out of range");
  }
  rank_.resize(edges_.size());
  by_rank_.resize(edges_.size());
  std::iota(rank_.begin(), rank_.end(), 0);
  std::iota(by_rank_.begin(), by_rank_.end(), 0);
}

Multigraph Multigraph::with_order(const std::vector<EdgeId>& ascending) const {
  if (static_cast<int>(ascending.size()) != edge_count())
    throw InvalidInputError("edge order must list every edge exactly once");
  Multigraph g = *this;
  std::vector<bool> seen(edges_.size(), false);
  for (int r = 0; r < edge_count(); ++r) {
    EdgeId e = ascending[r];
    if (e < 0 || e >= edge_count() || seen[e])
      throw InvalidInputError("edge order must list every edge exactly once");
    seen[e] = true;
    g.rank_[e] = r;
    g.by_rank_[r] = e;
  }
  return g;
}

GraphView::GraphView(std::shared_ptr<const Multigraph> base) : base_(std::move(base)) {
  status_.assign(base_->edge_count(), EdgeStatus::kPresent);
  present_ = base_->all_edges();
  class_of_.resize(base_->vertex_count());
  std::iota(class_of_.begin(), class_of_.end(), 0);
  reindex();
}

GraphView full_view(Multigraph g) {
  return GraphView(std::make_shared<const Multigraph>(std::move(g)));
}

void GraphView::reindex() {
  reps_ = class_of_;
  std::sort(reps_.begin(), reps_.end());
  reps_.erase(std::unique(reps_.begin(), reps_.end()), reps_.end());
  vertex_count_ = static_cast<int>(reps_.size());
  index_of_.resize(class_of_.size());
  for (std::size_t v = 0; v < class_of_.size(); ++v) {
    index_of_[v] = static_cast<int>(
        std::lower_bound(reps_.begin(), reps_.end(), class_of_[v]) - reps_.begin());
  }
}

EdgeSet GraphView::deleted_edges() const {
  EdgeSet s;
  for (EdgeId e = 0; e < static_cast<EdgeId>(status_.size()); ++e)
    if (status_[e] == EdgeStatus::kDeleted) s.insert(e);
  return s;
}

EdgeSet GraphView::contracted_edges() const {
  EdgeSet s;
  for (EdgeId e = 0; e < static_cast<EdgeId>(status_.size()); ++e)
    if (status_[e] == EdgeStatus::kContracted) s.insert(e);
  return s;
}

std::vector<EdgeId> GraphView::present_by_rank() const {
  std::vector<EdgeId> out;
  for (EdgeId e : base_->activity_order())
    if (present_.contains(e)) out.push_back(e);
  return out;
}

namespace {

void require_present(const GraphView& view, EdgeId e) {
  if (e < 0 || e >= view.base().edge_count() || !view.present(e))
    throw InvalidEdgeError("edge e" + std::to_string(e + 1) + " is not present in the view");
}

}  // namespace

GraphView delete_edge(const GraphView& view, EdgeId e) {
  require_present(view, e);
  GraphView out = view;
  out.status_[e] = EdgeStatus::kDeleted;
  out.present_.erase(e);
  return out;
}

GraphView contract(const GraphView& view, EdgeId e) {
  require_present(view, e);
  if (is_loop(view, e)) return delete_edge(view, e);
  GraphView out = view;
  out.status_[e] = EdgeStatus::kContracted;
  out.present_.erase(e);
  const Edge& ed = view.base().edge(e);
  Vertex a = view.class_of(ed.tail);
  Vertex b = view.class_of(ed.head);
  Vertex keep = std::min(a, b);
  for (Vertex& c : out.class_of_)
    if (c == a || c == b) c = keep;
  out.reindex();
  return out;
}

bool is_loop(const GraphView& view, EdgeId e) {
  require_present(view, e);
  auto [u, v] = view.ends(e);
  return u == v;
}

bool is_bridge(const GraphView& view, EdgeId e) {
  require_present(view, e);
  if (is_loop(view, e)) return false;
  EdgeSet rest = view.present_edges().without(e);
  auto [u, v] = view.ends(e);
  std::vector<int> labels = component_labels(view, rest);
  return labels[u] != labels[v];
}

std::vector<int> component_labels(const GraphView& view, EdgeSet edges) {
  DisjointSets ds(view.vertex_count());
  (edges & view.present_edges()).for_each([&](EdgeId e) {
    auto [u, v] = view.ends(e);
    ds.unite(u, v);
  });
  std::vector<int> root_label(view.vertex_count(), -1);
  std::vector<int> labels(view.vertex_count());
  int next = 0;
  for (int v = 0; v < view.vertex_count(); ++v) {
    int r = ds.find(v);
    if (root_label[r] < 0) root_label[r] = next++;
    labels[v] = root_label[r];
  }
  return labels;
}

std::vector<int> component_labels(const GraphView& view) {
  return component_labels(view, view.present_edges());
}

int component_count(const GraphView& view, EdgeSet edges) {
  std::vector<int> labels = component_labels(view, edges);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

int component_count(const GraphView& view) { return component_count(view, view.present_edges()); }

std::vector<std::vector<Vertex>> connected_components(const GraphView& view, EdgeSet edges) {
  std::vector<int> labels = component_labels(view, edges);
  int count = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<std::vector<Vertex>> out(count);
  // Dense indices follow representative order, so members and blocks come
  // out sorted.
  for (int v = 0; v < view.vertex_count(); ++v) out[labels[v]].push_back(view.vertices()[v]);
  return out;
}

std::vector<std::vector<Vertex>> connected_components(const GraphView& view) {
  return connected_components(view, view.present_edges());
}

int forest_rank(const GraphView& view) { return view.vertex_count() - component_count(view); }

bool is_spanning_forest(const GraphView& view, EdgeSet edges) {
  if (!edges.subset_of(view.present_edges())) return false;
  if (edges.size() != forest_rank(view)) return false;
  DisjointSets ds(view.vertex_count());
  bool acyclic = true;
  edges.for_each([&](EdgeId e) {
    auto [u, v] = view.ends(e);
    if (!ds.unite(u, v)) acyclic = false;
  });
  return acyclic;
}

namespace {

struct ForestSearch {
  const GraphView& view;
  std::vector<EdgeId> edges;  // present edges, ascending id
  int target = 0;
  std::size_t cap = 0;
  std::vector<SpanningForest> out;

  // `label` maps each view vertex to its current tree label.
  void run(std::size_t idx, EdgeSet chosen, std::vector<int>& label) {
    if (chosen.size() == target) {
      if (out.size() >= cap)
        throw ResourceError("spanning forest enumeration exceeded cap of " + std::to_string(cap));
      out.push_back({chosen});
      return;
    }
    if (static_cast<int>(edges.size() - idx) < target - chosen.size()) return;
    EdgeId e = edges[idx];
    auto [u, v] = view.ends(e);
    if (label[u] != label[v]) {
      std::vector<int> saved = label;
      int from = label[v], to = label[u];
      for (int& l : label)
        if (l == from) l = to;
      run(idx + 1, chosen.with(e), label);
      label = std::move(saved);
    }
    run(idx + 1, chosen, label);
  }
};

}  // namespace

std::vector<SpanningForest> spanning_forests(const GraphView& view, std::size_t cap) {
  ForestSearch search{view, view.present_edges().ids(), forest_rank(view), cap, {}};
  std::vector<int> label(view.vertex_count());
  std::iota(label.begin(), label.end(), 0);
  search.run(0, EdgeSet{}, label);
  return std::move(search.out);
}

namespace {

void require_forest(const GraphView& view, const SpanningForest& forest) {
  if (!is_spanning_forest(view, forest.edges))
    throw InvalidInputError("edge set " + format_edges(forest.edges) + " is not a spanning forest");
}

}  // namespace

EdgeSet fundamental_cut(const GraphView& view, const SpanningForest& forest, EdgeId e) {
  require_present(view, e);
  require_forest(view, forest);
  if (!forest.edges.contains(e))
    throw InvalidInputError("e" + std::to_string(e + 1) + " is not a forest edge");
  std::vector<int> labels = component_labels(view, forest.edges.without(e));
  auto [a, b] = view.ends(e);
  int la = labels[a], lb = labels[b];
  EdgeSet cut;
  view.present_edges().for_each([&](EdgeId f) {
    auto [u, v] = view.ends(f);
    if ((labels[u] == la && labels[v] == lb) || (labels[u] == lb && labels[v] == la)) cut.insert(f);
  });
  return cut;
}

EdgeSet fundamental_cycle(const GraphView& view, const SpanningForest& forest, EdgeId e) {
  require_present(view, e);
  require_forest(view, forest);
  if (forest.edges.contains(e))
    throw InvalidInputError("e" + std::to_string(e + 1) + " is a forest edge");
  auto [src, dst] = view.ends(e);
  if (src == dst) return EdgeSet{e};

  // BFS inside the forest from src, remembering the edge used to reach each vertex.
  std::vector<EdgeId> via(view.vertex_count(), -1);
  std::vector<int> prev(view.vertex_count(), -1);
  std::vector<bool> seen(view.vertex_count(), false);
  std::vector<int> queue{src};
  seen[src] = true;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int x = queue[qi];
    forest.edges.for_each([&](EdgeId f) {
      auto [u, v] = view.ends(f);
      int y = u == x ? v : (v == x ? u : -1);
      if (y < 0 || seen[y]) return;
      seen[y] = true;
      via[y] = f;
      prev[y] = x;
      queue.push_back(y);
    });
  }
  if (!seen[dst])
    throw InvalidInputError("e" + std::to_string(e + 1) + " joins two forest components");
  EdgeSet cycle{e};
  for (int x = dst; x != src; x = prev[x]) cycle.insert(via[x]);
  return cycle;
}

EdgeId min_by_rank(const Multigraph& g, EdgeSet s) {
  EdgeId best = -1;
  s.for_each([&](EdgeId e) {
    if (best < 0 || g.smaller(e, best)) best = e;
  });
  return best;
}

EdgeId max_by_rank(const Multigraph& g, EdgeSet s) {
  EdgeId best = -1;
  s.for_each([&](EdgeId e) {
    if (best < 0 || g.smaller(best, e)) best = e;
  });
  return best;
}

Activities activities(const GraphView& view, const SpanningForest& forest) {
  require_forest(view, forest);
  const Multigraph& g = view.base();
  Activities act;
  view.present_edges().for_each([&](EdgeId e) {
    if (forest.edges.contains(e)) {
      if (min_by_rank(g, fundamental_cut(view, forest, e)) == e) ++act.internal;
    } else {
      if (min_by_rank(g, fundamental_cycle(view, forest, e)) == e) ++act.external;
    }
  });
  return act;
}

std::string format_edges(EdgeSet s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  s.for_each([&](EdgeId e) {
    if (!first) os << ',';
    os << (e + 1);
    first = false;
  });
  os << '}';
  return os.str();
}

}  // namespace eulerclass
