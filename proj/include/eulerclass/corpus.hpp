#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "eulerclass/multigraph.hpp"
#include "eulerclass/orientation.hpp"

namespace eulerclass {

struct NamedGraph {
  std::string name;
  Multigraph graph;
};

struct CorpusLimits {
  int max_vertices = 6;
  int max_edges = 9;
};

// C3, C4, D2, P3E, B1, L1, K4, K4-minus-edge, theta.
std::vector<NamedGraph> named_graphs();
NamedGraph named_graph(const std::string& name);

// Connected multigraphs (loops and parallel edges allowed) drawn from a
// 64-bit Mersenne Twister using only its raw output, so the sequence is the
// same on every platform.
std::vector<NamedGraph> random_graphs(std::uint64_t seed, int count, CorpusLimits limits = {});

// Named graphs within the limits, followed by `count` random graphs.
std::vector<NamedGraph> corpus(std::uint64_t seed, int count = 50, CorpusLimits limits = {});

// Uniform helpers on raw mt19937_64 output.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound);
std::vector<EdgeId> random_order(int edge_count, std::mt19937_64& rng);
Orientation random_orientation(const GraphView& view, std::mt19937_64& rng);

}  // namespace eulerclass
