#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eulerclass/edge_set.hpp"

namespace eulerclass {

struct Edge {
  Vertex tail = 0;
  Vertex head = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Vertices 0..n-1 and an edge list whose positions are the stable edge
// identities. A separate rank table gives the activity order; by default
// rank(e) == e. Loops and parallel edges are allowed.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  EdgeSet all_edges() const { return EdgeSet::first(edge_count()); }

  int rank(EdgeId e) const { return rank_[e]; }
  EdgeId edge_at_rank(int r) const { return by_rank_[r]; }
  bool smaller(EdgeId a, EdgeId b) const { return rank_[a] < rank_[b]; }
  // Edge ids listed from smallest to largest in the activity order.
  const std::vector<EdgeId>& activity_order() const { return by_rank_; }

  // Same edges and identities, new activity order (`ascending` lists every
  // edge id once, smallest first).
  Multigraph with_order(const std::vector<EdgeId>& ascending) const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> rank_;
  std::vector<EdgeId> by_rank_;
};

enum class EdgeStatus : unsigned char { kPresent, kDeleted, kContracted };

// A minor of a base multigraph. Contraction merges vertex classes instead of
// rebuilding the graph, so edge ids survive every operation. View vertices
// are the classes, named by their smallest base vertex and densely indexed
// in that order.
class GraphView {
 public:
  GraphView() = default;
  explicit GraphView(std::shared_ptr<const Multigraph> base);

  const Multigraph& base() const { return *base_; }
  const std::shared_ptr<const Multigraph>& base_ptr() const { return base_; }

  EdgeStatus status(EdgeId e) const { return status_[e]; }
  bool present(EdgeId e) const { return present_.contains(e); }
  EdgeSet present_edges() const { return present_; }
  EdgeSet deleted_edges() const;
  EdgeSet contracted_edges() const;

  // Representative (smallest base vertex) of v's class.
  Vertex class_of(Vertex v) const { return class_of_[v]; }
  // Dense index 0..vertex_count()-1 of v's class.
  int index_of(Vertex v) const { return index_of_[v]; }
  int vertex_count() const { return vertex_count_; }
  // Class representatives in dense-index order.
  const std::vector<Vertex>& vertices() const { return reps_; }

  // Dense indices of the endpoints of e as stored (tail, head).
  std::pair<int, int> ends(EdgeId e) const {
    const Edge& ed = base_->edge(e);
    return {index_of_[ed.tail], index_of_[ed.head]};
  }

  // Present edge ids sorted by activity rank, smallest first.
  std::vector<EdgeId> present_by_rank() const;

  friend bool operator==(const GraphView& a, const GraphView& b) {
    return *a.base_ == *b.base_ && a.status_ == b.status_ && a.class_of_ == b.class_of_;
  }

 private:
  friend GraphView delete_edge(const GraphView&, EdgeId);
  friend GraphView contract(const GraphView&, EdgeId);
  void reindex();

  std::shared_ptr<const Multigraph> base_;
  std::vector<EdgeStatus> status_;
  EdgeSet present_;
  std::vector<Vertex> class_of_;
  std::vector<int> index_of_;
  std::vector<Vertex> reps_;
  int vertex_count_ = 0;
};

GraphView full_view(Multigraph g);

struct SpanningForest {
  EdgeSet edges;
  friend bool operator==(const SpanningForest&, const SpanningForest&) = default;
};

struct Activities {
  int internal = 0;
  int external = 0;
  friend bool operator==(const Activities&, const Activities&) = default;
};

inline constexpr std::size_t kDefaultForestCap = 1'000'000;

GraphView delete_edge(const GraphView& view, EdgeId e);
// Contracting a loop of the view deletes it.
GraphView contract(const GraphView& view, EdgeId e);

bool is_loop(const GraphView& view, EdgeId e);
bool is_bridge(const GraphView& view, EdgeId e);

// Dense component label per view vertex, labels numbered in order of first
// appearance. Only edges in `edges` (intersected with the present set) count.
std::vector<int> component_labels(const GraphView& view, EdgeSet edges);
std::vector<int> component_labels(const GraphView& view);
int component_count(const GraphView& view, EdgeSet edges);
int component_count(const GraphView& view);

// Components as lists of class representatives, each sorted, ordered by
// their smallest member.
std::vector<std::vector<Vertex>> connected_components(const GraphView& view);
std::vector<std::vector<Vertex>> connected_components(const GraphView& view, EdgeSet edges);

// Number of edges in any spanning forest of the view.
int forest_rank(const GraphView& view);
bool is_spanning_forest(const GraphView& view, EdgeSet edges);

// Every spanning forest, ordered lexicographically by sorted edge ids.
std::vector<SpanningForest> spanning_forests(const GraphView& view,
                                             std::size_t cap = kDefaultForestCap);

// U_F(e): edges f with (F - e) + f a spanning forest. Contains e.
EdgeSet fundamental_cut(const GraphView& view, const SpanningForest& forest, EdgeId e);
// Z_F(e): edge set of the unique cycle of F + e. Contains e.
EdgeSet fundamental_cycle(const GraphView& view, const SpanningForest& forest, EdgeId e);

// Smallest edge of s in the activity order, or -1 for an empty set.
EdgeId min_by_rank(const Multigraph& g, EdgeSet s);
EdgeId max_by_rank(const Multigraph& g, EdgeSet s);

Activities activities(const GraphView& view, const SpanningForest& forest);

// "{2,3}"-style rendering with 1-based edge names.
std::string format_edges(EdgeSet s);

}  // namespace eulerclass
