#include <gtest/gtest.h>

#include "eulerclass/error.hpp"
#include "eulerclass/graph_io.hpp"
#include "test_support.hpp"

using namespace eulerclass;

TEST(ParseGraph, Triangle) {
  Multigraph g = parse_graph("v 3\ne 0 1\ne 1 2\ne 2 0\n");
  EXPECT_EQ(g, named_graph("C3").graph);
}

TEST(ParseGraph, CommentsBlankLinesAndLoops) {
  Multigraph g = parse_graph("# a loop\n\nv 1\n  # edges\n  e 0 0  \n");
  EXPECT_EQ(g, named_graph("L1").graph);
  EXPECT_EQ(parse_graph("v 4\n").edge_count(), 0);
}

TEST(ParseGraph, Errors) {
  EXPECT_THROW(parse_graph("v 2\ne 0 5\n"), ParseError);
  EXPECT_THROW(parse_graph("v 0\n"), ParseError);
  EXPECT_THROW(parse_graph("e 0 1\n"), ParseError);
  EXPECT_THROW(parse_graph(""), ParseError);
  EXPECT_THROW(parse_graph("v 2\nv 2\n"), ParseError);
  EXPECT_THROW(parse_graph("v 2\ne 0\n"), ParseError);
  EXPECT_THROW(parse_graph("v 2\ne 0 1 2\n"), ParseError);
  EXPECT_THROW(parse_graph("v 2\nx 0 1\n"), ParseError);
  EXPECT_THROW(parse_graph("v 1\ne 0 0 # trailing\n"), ParseError);
  EXPECT_THROW(parse_graph("v two\n"), ParseError);
  EXPECT_THROW(read_graph_file("/nonexistent/graph.g"), ParseError);
}

TEST(FormatGraph, RoundTripsCorpus) {
  for (const NamedGraph& ng : corpus(0, 50)) {
    std::string text = format_graph(ng.graph, ng.name);
    EXPECT_EQ(parse_graph(text), ng.graph) << ng.name;
    EXPECT_EQ(format_graph(parse_graph(text), ng.name), text);
  }
}

TEST(EdgeIds, ParseOneBased) {
  EXPECT_EQ(parse_edge_ids("2,3", 3), (std::vector<EdgeId>{1, 2}));
  EXPECT_EQ(parse_edge_ids(" 3 , 1 ", 3), (std::vector<EdgeId>{2, 0}));
  EXPECT_EQ(parse_edge_set("2,3", 3), (EdgeSet{1, 2}));
  EXPECT_EQ(parse_edge_set("", 3), EdgeSet{});
  EXPECT_THROW(parse_edge_ids("0", 3), ParseError);
  EXPECT_THROW(parse_edge_ids("4", 3), ParseError);
  EXPECT_THROW(parse_edge_ids("1,,2", 3), ParseError);
  EXPECT_THROW(parse_edge_ids("a", 3), ParseError);
  EXPECT_THROW(parse_edge_set("1,1", 3), ParseError);
}

TEST(Corpus, DeterministicWithinLimitsConnected) {
  std::vector<NamedGraph> a = corpus(0, 30), b = corpus(0, 30);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].graph, b[i].graph);
  }
  for (const NamedGraph& ng : corpus(9, 40, {4, 6})) {
    EXPECT_LE(ng.graph.vertex_count(), 4) << ng.name;
    EXPECT_LE(ng.graph.edge_count(), 6) << ng.name;
    EXPECT_EQ(component_count(testing_support::view_of(ng.graph)), 1) << ng.name;
  }
  std::vector<NamedGraph> s1 = random_graphs(1, 5), s2 = random_graphs(2, 5);
  bool all_same = true;
  for (int i = 0; i < 5; ++i) all_same = all_same && s1[i].graph == s2[i].graph;
  EXPECT_FALSE(all_same);
}

TEST(Corpus, NamedGraphs) {
  std::vector<std::string> names;
  for (const NamedGraph& ng : named_graphs()) names.push_back(ng.name);
  EXPECT_EQ(names, (std::vector<std::string>{"C3", "C4", "D2", "P3E", "B1", "L1", "K4", "K4-minus-edge",
                                             "theta"}));
  EXPECT_THROW(named_graph("nope"), InvalidInputError);
}
