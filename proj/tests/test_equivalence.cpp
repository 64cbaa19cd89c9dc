#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "eulerclass/equivalence.hpp"
#include "eulerclass/error.hpp"
#include "test_support.hpp"

using namespace eulerclass;
using testing_support::view_of;

namespace {

Orientation parse(const GraphView& v, const char* s) { return Orientation::parse(v, s); }

std::vector<std::vector<std::string>> strings(const ClassPartition& p) {
  std::vector<std::vector<std::string>> out;
  for (const auto& block : p.blocks) {
    out.emplace_back();
    for (const Orientation& o : block) out.back().push_back(o.str());
  }
  return out;
}

const Relation kRelations[] = {Relation::kEulerian, Relation::kCut, Relation::kEulerianCut};
const Restriction kRestrictions[] = {Restriction::kAll, Restriction::kTotallyCyclic, Restriction::kAcyclic};

}  // namespace

TEST(DifferenceSet, Examples) {
  GraphView c3 = view_of("C3");
  EXPECT_EQ(difference_set(parse(c3, "+++"), parse(c3, "+++")), EdgeSet{});
  EXPECT_EQ(difference_set(parse(c3, "+++"), parse(c3, "---")), (EdgeSet{0, 1, 2}));
  EXPECT_EQ(difference_set(parse(c3, "+++"), parse(c3, "++-")), EdgeSet{2});
  GraphView minor = delete_edge(c3, 0);
  EXPECT_THROW(difference_set(parse(c3, "+++"), parse(minor, "++")), InvalidInputError);
}

TEST(Relations, PairwiseExamples) {
  GraphView c3 = view_of("C3");
  EXPECT_TRUE(eulerian_equivalent(c3, parse(c3, "+++"), parse(c3, "---")));
  EXPECT_FALSE(eulerian_equivalent(c3, parse(c3, "+++"), parse(c3, "++-")));
  EXPECT_TRUE(eulerian_equivalent(c3, parse(c3, "+-+"), parse(c3, "+-+")));

  Orientation e1 = parse(c3, "++-");  // 0->1, 1->2, 0->2
  EXPECT_TRUE(cut_equivalent(c3, e1, reverse_edges(e1, EdgeSet{0, 2})));
  EXPECT_FALSE(cut_equivalent(c3, parse(c3, "+++"), parse(c3, "---")));
  EXPECT_TRUE(cut_equivalent(c3, e1, e1));

  EXPECT_TRUE(eulerian_cut_equivalent(c3, parse(c3, "+++"), parse(c3, "---")));
  EXPECT_TRUE(eulerian_cut_equivalent(c3, e1, reverse_edges(e1, EdgeSet{0, 2})));
  // Differs from "+++" only on e2, which is neither a cycle nor a bond.
  EXPECT_FALSE(eulerian_cut_equivalent(c3, parse(c3, "+++"), parse(c3, "+-+")));
}

TEST(Relations, EulerianCutNeedsBothParts) {
  // Two triangles sharing vertex 0: reverse one cyclic triangle and a
  // directed bond of the other at once.
  GraphView v = view_of(Multigraph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {0, 4}}));
  Orientation a = parse(v, "++++++");
  Orientation b = reverse_edges(a, EdgeSet{0, 1, 2, 3, 5});
  EXPECT_FALSE(eulerian_equivalent(v, a, b));
  EXPECT_FALSE(cut_equivalent(v, a, b));
  EXPECT_TRUE(eulerian_cut_equivalent(v, a, b));
}

TEST(Relations, Symmetric) {
  for (const NamedGraph& ng : corpus(41, 10, {5, 6})) {
    GraphView v = view_of(ng.graph);
    std::vector<Orientation> all = enumerate_orientations(v);
    for (Relation r : kRelations)
      for (const Orientation& a : all)
        for (const Orientation& b : all) EXPECT_EQ(related(v, r, a, b), related(v, r, b, a)) << ng.name;
  }
}

TEST(Classes, TriangleExamples) {
  GraphView c3 = view_of("C3");
  ClassPartition tc = classes(c3, Relation::kEulerian, Restriction::kTotallyCyclic);
  EXPECT_EQ(strings(tc), (std::vector<std::vector<std::string>>{{"+++", "---"}}));
  EXPECT_EQ(tc.representatives.front().str(), "+++");
  EXPECT_EQ(classes(c3, Relation::kEulerian, Restriction::kAll).count(), 7u);
  EXPECT_EQ(classes(c3, Relation::kCut, Restriction::kAcyclic).count(), 2u);
  EXPECT_EQ(classes(c3, Relation::kCut, Restriction::kAll).count(), 4u);
  EXPECT_EQ(classes(c3, Relation::kEulerianCut, Restriction::kAll).count(), 3u);
}

TEST(Classes, Digon) {
  GraphView d2 = view_of("D2");
  ClassPartition p = classes_by_flips(d2, Relation::kEulerian, Restriction::kTotallyCyclic);
  EXPECT_EQ(strings(p), (std::vector<std::vector<std::string>>{{"+-", "-+"}}));
}

TEST(Classes, PartitionAndClosure) {
  for (const NamedGraph& ng : corpus(42, 12, {5, 7})) {
    GraphView v = view_of(ng.graph);
    for (Relation r : kRelations)
      for (Restriction s : kRestrictions) {
        ClassPartition p = classes(v, r, s);
        std::vector<Orientation> members = restricted_orientations(v, s);
        std::map<std::string, int> block_of;
        for (std::size_t i = 0; i < p.blocks.size(); ++i) {
          EXPECT_EQ(p.representatives[i], p.blocks[i].front());
          for (const Orientation& o : p.blocks[i]) {
            EXPECT_TRUE(block_of.emplace(o.str(), static_cast<int>(i)).second) << "duplicate " << o.str();
            EXPECT_TRUE(in_restriction(v, o, s));
          }
        }
        EXPECT_EQ(block_of.size(), members.size()) << ng.name;
        // Related pairs never straddle blocks.
        for (const Orientation& a : members)
          for (const Orientation& b : members)
            if (related(v, r, a, b)) EXPECT_EQ(block_of[a.str()], block_of[b.str()]);
        EXPECT_EQ(strings(classes_by_flips(v, r, s)), strings(p))
            << ng.name << " " << to_string(r) << " " << to_string(s);
      }
  }
}

TEST(Classes, EulerianClassesPreserveTotalCyclicity) {
  for (const NamedGraph& ng : corpus(43, 12)) {
    GraphView v = view_of(ng.graph);
    for (const auto& block : classes(v, Relation::kEulerian, Restriction::kAll).blocks) {
      bool tc = is_totally_cyclic(v, block.front());
      for (const Orientation& o : block) EXPECT_EQ(is_totally_cyclic(v, o), tc) << ng.name;
    }
  }
}

TEST(DirectedCycles, MatchesMinimalEulerianSubsets) {
  for (const NamedGraph& ng : corpus(44, 10, {5, 7})) {
    GraphView v = view_of(ng.graph);
    std::vector<EdgeId> ids = v.present_edges().ids();
    for (const Orientation& o : enumerate_orientations(v)) {
      std::vector<EdgeSet> eulerian;
      for (std::uint64_t d = 1; d < (std::uint64_t{1} << ids.size()); ++d)
        if (is_directed_eulerian(v, o, expand(d, ids))) eulerian.push_back(expand(d, ids));
      std::set<std::uint64_t> minimal;
      for (EdgeSet s : eulerian) {
        bool min = std::none_of(eulerian.begin(), eulerian.end(),
                                [&](EdgeSet t) { return t != s && t.subset_of(s); });
        if (min) minimal.insert(s.bits());
      }
      std::set<std::uint64_t> got;
      for (EdgeSet c : directed_cycles(v, o)) EXPECT_TRUE(got.insert(c.bits()).second) << "repeat";
      EXPECT_EQ(got, minimal) << ng.name << " " << o.str();
    }
  }
}

TEST(DirectedBonds, MatchesMinimalDirectedCuts) {
  for (const NamedGraph& ng : corpus(45, 10, {5, 7})) {
    GraphView v = view_of(ng.graph);
    std::vector<EdgeId> ids = v.present_edges().ids();
    for (const Orientation& o : enumerate_orientations(v)) {
      std::vector<EdgeSet> cuts;
      for (std::uint64_t d = 1; d < (std::uint64_t{1} << ids.size()); ++d)
        if (directed_cut_oracle(v, o, expand(d, ids))) cuts.push_back(expand(d, ids));
      std::set<std::uint64_t> minimal;
      for (EdgeSet s : cuts)
        if (std::none_of(cuts.begin(), cuts.end(), [&](EdgeSet t) { return t != s && t.subset_of(s); }))
          minimal.insert(s.bits());
      std::set<std::uint64_t> got;
      for (EdgeSet b : directed_bonds(v, o)) got.insert(b.bits());
      EXPECT_EQ(got, minimal) << ng.name << " " << o.str();
    }
  }
}

TEST(Alpha, Examples) {
  EXPECT_EQ(alpha(view_of("C3")), 1u);
  EXPECT_EQ(alpha(view_of("B1")), 0u);
  EXPECT_EQ(alpha(view_of("L1")), 1u);
  EXPECT_EQ(alpha(view_of("K4")), 6u);
  EXPECT_EQ(alpha(view_of(Multigraph(4, {}))), 1u);
  EXPECT_EQ(count_unique_source_acyclic(view_of("C3"), 0), 2u);
  EXPECT_EQ(count_unique_source_acyclic(view_of("B1"), 1), 1u);
}

TEST(VerifyIdentities, TriangleAndBridge) {
  IdentityReport c3 = verify_identities(view_of("C3"));
  EXPECT_TRUE(c3.passed());
  ASSERT_NE(c3.find("|BO| = T(0,2)"), nullptr);
  EXPECT_EQ(c3.find("|BO| = T(0,2)")->lhs, 2);
  EXPECT_EQ(c3.find("|AO| = T(2,0)")->lhs, 6);
  IdentityReport b1 = verify_identities(view_of("B1"));
  EXPECT_TRUE(b1.passed());
  EXPECT_EQ(b1.find("alpha = T(0,1)")->lhs, 0);
}

TEST(VerifyIdentities, K4) {
  IdentityReport r = verify_identities(view_of("K4"));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.find("alpha = T(0,1)")->lhs, 6);
  EXPECT_EQ(r.find("|BO| = T(0,2)")->lhs, 24);
  EXPECT_EQ(r.find("|AO| = T(2,0)")->lhs, 24);
}

TEST(VerifyIdentities, SkipsAboveLimit) {
  IdentityReport r = verify_identities(view_of("K4"), VerifyOptions{4});
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.find("|BO| = T(0,2)")->status, CheckStatus::kSkipped);
}

TEST(RelationNames, RoundTrip) {
  for (Relation r : kRelations) EXPECT_EQ(parse_relation(to_string(r)), r);
  for (Restriction s : kRestrictions) EXPECT_EQ(parse_restriction(to_string(s)), s);
  EXPECT_EQ(parse_relation("eulerian-cut"), Relation::kEulerianCut);
  EXPECT_EQ(parse_restriction("totally-cyclic"), Restriction::kTotallyCyclic);
  EXPECT_FALSE(parse_relation("bogus").has_value());
}
