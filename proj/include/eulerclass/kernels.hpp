#pragma once

// Data-parallel inner loops. Each kernel has a serial reference path and an
// OpenMP path; both must return identical results, which the tests check.

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "eulerclass/orientation.hpp"
#include "eulerclass/relation.hpp"

namespace eulerclass {

enum class Exec { kSerial, kParallel };

// flags[i] != 0 iff orientations[i] lies in the restricted set.
std::vector<unsigned char> restriction_flags(const GraphView& view,
                                             std::span<const Orientation> orientations,
                                             Restriction restriction, Exec exec);

// Every index pair (a, b), a < b, whose orientations are related. Sorted.
// The serial path calls the pairwise predicates directly; the parallel path
// tabulates Eulerian and directed-cut subsets once per row for the
// Eulerian-cut relation.
std::vector<std::pair<int, int>> related_pairs(const GraphView& view,
                                               std::span<const Orientation> orientations,
                                               Relation relation, Exec exec);

using ActivityCounts = std::map<std::pair<int, int>, std::uint64_t>;

// Number of forests per (internal, external) activity pair.
ActivityCounts activity_tally(const GraphView& view, std::span<const SpanningForest> forests,
                              Exec exec);

}  // namespace eulerclass
