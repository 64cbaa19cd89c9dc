#include <gtest/gtest.h>

#include <random>

#include "eulerclass/error.hpp"
#include "eulerclass/multigraph.hpp"
#include "test_support.hpp"

using namespace eulerclass;
using testing_support::share;
using testing_support::view_of;

TEST(Multigraph, RejectsBadInput) {
  EXPECT_THROW(Multigraph(0, {}), InvalidInputError);
  EXPECT_THROW(Multigraph(2, {{0, 2}}), InvalidInputError);
  EXPECT_THROW(Multigraph(2, {{-1, 0}}), InvalidInputError);
  std::vector<Edge> many(65, Edge{0, 1});
  EXPECT_THROW(Multigraph(2, many), ResourceError);
  EXPECT_NO_THROW(Multigraph(2, std::vector<Edge>(64, Edge{0, 1})));
}

TEST(Multigraph, OrderTable) {
  Multigraph g = named_graph("C3").graph.with_order({2, 0, 1});
  EXPECT_EQ(g.rank(2), 0);
  EXPECT_EQ(g.rank(0), 1);
  EXPECT_EQ(g.edge_at_rank(2), 1);
  EXPECT_TRUE(g.smaller(2, 1));
  EXPECT_EQ(g.edge(2), (Edge{2, 0}));
  EXPECT_THROW(g.with_order({0, 0, 1}), InvalidInputError);
  EXPECT_THROW(g.with_order({0, 1}), InvalidInputError);
}

TEST(GraphView, DeleteAndContract) {
  GraphView c3 = view_of("C3");
  GraphView d = delete_edge(c3, 0);
  EXPECT_EQ(d.status(0), EdgeStatus::kDeleted);
  EXPECT_EQ(d.vertex_count(), 3);
  EXPECT_TRUE(is_bridge(d, 1));

  GraphView c = contract(c3, 2);  // e3 merges 2 into 0
  EXPECT_EQ(c.vertex_count(), 2);
  EXPECT_EQ(c.class_of(2), 0);
  EXPECT_EQ(c.vertices(), (std::vector<Vertex>{0, 1}));
  EXPECT_FALSE(is_loop(c, 0));
  GraphView cc = contract(c, 1);
  EXPECT_EQ(cc.vertex_count(), 1);
  EXPECT_TRUE(is_loop(cc, 0));
  // Contracting a loop removes it.
  GraphView gone = contract(cc, 0);
  EXPECT_EQ(gone.status(0), EdgeStatus::kDeleted);
  EXPECT_TRUE(gone.present_edges().empty());
  EXPECT_THROW(delete_edge(gone, 0), InvalidEdgeError);
  EXPECT_THROW(contract(c3, 7), InvalidEdgeError);
}

TEST(GraphView, DeleteContractCommute) {
  for (const NamedGraph& ng : corpus(3, 20)) {
    GraphView v(share(ng.graph));
    std::vector<EdgeId> ids = v.present_edges().ids();
    for (EdgeId a : ids)
      for (EdgeId b : ids) {
        if (a == b) continue;
        EXPECT_EQ(delete_edge(delete_edge(v, a), b), delete_edge(delete_edge(v, b), a)) << ng.name;
        if (!is_loop(v, a) && !is_loop(v, b) && !is_loop(contract(v, a), b) && !is_loop(contract(v, b), a))
          EXPECT_EQ(contract(contract(v, a), b), contract(contract(v, b), a)) << ng.name;
        EXPECT_EQ(contract(delete_edge(v, a), b), delete_edge(contract(v, b), a)) << ng.name;
      }
  }
}

TEST(GraphView, Bridges) {
  EXPECT_TRUE(is_bridge(view_of("B1"), 0));
  EXPECT_FALSE(is_bridge(view_of("C3"), 0));
  EXPECT_FALSE(is_bridge(view_of("L1"), 0));
  EXPECT_TRUE(is_loop(view_of("L1"), 0));
  EXPECT_FALSE(is_bridge(view_of("D2"), 1));
}

TEST(GraphView, Components) {
  GraphView v = view_of(Multigraph(5, {{0, 1}, {3, 4}, {2, 2}}));
  EXPECT_EQ(component_count(v), 3);
  EXPECT_EQ(component_labels(v), (std::vector<int>{0, 0, 1, 2, 2}));
  EXPECT_EQ(connected_components(v), (std::vector<std::vector<Vertex>>{{0, 1}, {2}, {3, 4}}));
  EXPECT_EQ(component_count(v, EdgeSet{}), 5);
  EXPECT_EQ(forest_rank(v), 2);
}

TEST(SpanningForests, Triangle) {
  GraphView c3 = view_of("C3");
  std::vector<SpanningForest> f = spanning_forests(c3);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0].edges, (EdgeSet{0, 1}));
  EXPECT_EQ(f[1].edges, (EdgeSet{0, 2}));
  EXPECT_EQ(f[2].edges, (EdgeSet{1, 2}));
  EXPECT_TRUE(is_spanning_forest(c3, EdgeSet{0, 2}));
  EXPECT_FALSE(is_spanning_forest(c3, EdgeSet{0, 1, 2}));
  EXPECT_FALSE(is_spanning_forest(c3, EdgeSet{0}));
}

TEST(SpanningForests, CountsMatchSubsetOracle) {
  EXPECT_EQ(spanning_forests(view_of("K4")).size(), 16u);
  EXPECT_EQ(spanning_forests(view_of("L1")).size(), 1u);
  EXPECT_EQ(spanning_forests(view_of(Multigraph(3, {}))).size(), 1u);
  for (const NamedGraph& ng : corpus(11, 25)) {
    long long expect = testing_support::forests_by_subsets(ng.graph);
    EXPECT_EQ(static_cast<long long>(spanning_forests(view_of(ng.graph)).size()), expect) << ng.name;
  }
}

TEST(SpanningForests, IndependentOfOrder) {
  std::mt19937_64 rng(5);
  for (const NamedGraph& ng : corpus(12, 10)) {
    std::size_t n = spanning_forests(view_of(ng.graph)).size();
    for (int i = 0; i < 5; ++i) {
      Multigraph g = ng.graph.with_order(random_order(ng.graph.edge_count(), rng));
      EXPECT_EQ(spanning_forests(view_of(g)).size(), n);
    }
  }
}

TEST(SpanningForests, Cap) { EXPECT_THROW(spanning_forests(view_of("K4"), 10), ResourceError); }

TEST(Fundamental, CutAndCycle) {
  GraphView c3 = view_of("C3");
  EXPECT_EQ(fundamental_cut(c3, {EdgeSet{0, 1}}, 0), (EdgeSet{0, 2}));
  EXPECT_EQ(fundamental_cut(c3, {EdgeSet{1, 2}}, 1), (EdgeSet{0, 1}));
  EXPECT_EQ(fundamental_cycle(c3, {EdgeSet{1, 2}}, 0), (EdgeSet{0, 1, 2}));
  GraphView l1 = view_of("L1");
  EXPECT_EQ(fundamental_cycle(l1, {EdgeSet{}}, 0), (EdgeSet{0}));
  EXPECT_THROW(fundamental_cut(c3, {EdgeSet{1, 2}}, 0), InvalidInputError);
  EXPECT_THROW(fundamental_cycle(c3, {EdgeSet{1, 2}}, 1), InvalidInputError);
}

TEST(Activities, Triangle) {
  GraphView c3 = view_of("C3");
  EXPECT_EQ(activities(c3, {EdgeSet{0, 1}}), (Activities{2, 0}));
  EXPECT_EQ(activities(c3, {EdgeSet{0, 2}}), (Activities{1, 0}));
  EXPECT_EQ(activities(c3, {EdgeSet{1, 2}}), (Activities{0, 1}));
}

TEST(Activities, FollowsRankNotId) {
  // With e3 smallest, tree {e1,e2} has e3 externally active.
  GraphView v = view_of(named_graph("C3").graph.with_order({2, 0, 1}));
  EXPECT_EQ(activities(v, {EdgeSet{0, 1}}), (Activities{0, 1}));
  EXPECT_EQ(min_by_rank(v.base(), EdgeSet{0, 1, 2}), 2);
  EXPECT_EQ(max_by_rank(v.base(), EdgeSet{0, 1, 2}), 1);
  EXPECT_EQ(min_by_rank(v.base(), EdgeSet{}), -1);
}

TEST(EdgeSetFormat, OneBased) {
  EXPECT_EQ(format_edges(EdgeSet{1, 2}), "{2,3}");
  EXPECT_EQ(format_edges(EdgeSet{}), "{}");
}
