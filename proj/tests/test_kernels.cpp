#include <gtest/gtest.h>

#include "eulerclass/equivalence.hpp"
#include "eulerclass/error.hpp"
#include "eulerclass/kernels.hpp"
#include "test_support.hpp"

using namespace eulerclass;
using testing_support::view_of;

TEST(Kernels, RestrictionFlagsAgree) {
  for (const NamedGraph& ng : corpus(51, 15)) {
    GraphView v = view_of(ng.graph);
    std::vector<Orientation> all = enumerate_orientations(v);
    for (Restriction s : {Restriction::kAll, Restriction::kTotallyCyclic, Restriction::kAcyclic})
      EXPECT_EQ(restriction_flags(v, all, s, Exec::kSerial), restriction_flags(v, all, s, Exec::kParallel))
          << ng.name;
  }
}

TEST(Kernels, RelatedPairsAgree) {
  for (const NamedGraph& ng : corpus(52, 12, {5, 7})) {
    GraphView v = view_of(ng.graph);
    std::vector<Orientation> all = enumerate_orientations(v);
    for (Relation r : {Relation::kEulerian, Relation::kCut, Relation::kEulerianCut})
      EXPECT_EQ(related_pairs(v, all, r, Exec::kSerial), related_pairs(v, all, r, Exec::kParallel))
          << ng.name << " " << to_string(r);
  }
}

TEST(Kernels, RelatedPairsOnTriangle) {
  GraphView c3 = view_of("C3");
  std::vector<Orientation> all = enumerate_orientations(c3);
  // "+++" is index 0, "---" index 7.
  std::vector<std::pair<int, int>> eulerian = related_pairs(c3, all, Relation::kEulerian, Exec::kParallel);
  EXPECT_EQ(eulerian, (std::vector<std::pair<int, int>>{{0, 7}}));
}

TEST(Kernels, ActivityTallyAgrees) {
  for (const NamedGraph& ng : corpus(53, 15)) {
    GraphView v = view_of(ng.graph);
    std::vector<SpanningForest> f = spanning_forests(v);
    ActivityCounts serial = activity_tally(v, f, Exec::kSerial);
    EXPECT_EQ(serial, activity_tally(v, f, Exec::kParallel)) << ng.name;
    std::uint64_t total = 0;
    for (const auto& [key, n] : serial) total += n;
    EXPECT_EQ(total, f.size());
  }
}

TEST(Kernels, ParallelPathPropagatesErrors) {
  // 21 parallel edges exceed the Eulerian-cut tabulation cap.
  GraphView v = view_of(Multigraph(2, std::vector<Edge>(21, Edge{0, 1})));
  std::vector<Orientation> two = {Orientation::forward(v), Orientation::forward(v)};
  EXPECT_THROW(related_pairs(v, two, Relation::kEulerianCut, Exec::kParallel), ResourceError);
}
