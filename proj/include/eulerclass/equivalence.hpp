#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "eulerclass/kernels.hpp"
#include "eulerclass/orientation.hpp"
#include "eulerclass/relation.hpp"
#include "eulerclass/tutte.hpp"

namespace eulerclass {

inline constexpr int kEulerianCutSplitCap = 20;

// Blocks of a restricted orientation set under the transitive closure of a
// pairwise relation. Blocks and their members are in lexicographic string
// order; representatives[i] is the first member of blocks[i].
struct ClassPartition {
  Relation relation = Relation::kEulerian;
  Restriction restriction = Restriction::kAll;
  std::vector<std::vector<Orientation>> blocks;
  std::vector<Orientation> representatives;

  std::size_t count() const { return blocks.size(); }
};

// Edges on which the two orientations disagree. Both must carry the same edges.
EdgeSet difference_set(const Orientation& a, const Orientation& b);

bool eulerian_equivalent(const GraphView& view, const Orientation& a, const Orientation& b);
bool cut_equivalent(const GraphView& view, const Orientation& a, const Orientation& b);
// Searches every split of the difference set into an Eulerian part and a
// directed-cut part.
bool eulerian_cut_equivalent(const GraphView& view, const Orientation& a, const Orientation& b,
                             int max_difference = kEulerianCutSplitCap);
bool related(const GraphView& view, Relation relation, const Orientation& a, const Orientation& b);

bool in_restriction(const GraphView& view, const Orientation& o, Restriction restriction);

std::vector<Orientation> restricted_orientations(const GraphView& view, Restriction restriction,
                                                 int max_edges = kDefaultOrientationCap,
                                                 Exec exec = Exec::kParallel);

ClassPartition classes(const GraphView& view, Relation relation, Restriction restriction,
                       int max_edges = kDefaultOrientationCap, Exec exec = Exec::kParallel);

// Same partition, generated by moves instead of the pairwise test: reversing
// a directed cycle (Eulerian), a directed bond (cut), or either.
ClassPartition classes_by_flips(const GraphView& view, Relation relation, Restriction restriction,
                                int max_edges = kDefaultOrientationCap);

// Simple directed cycles of the orientation, as edge sets. Loops included.
std::vector<EdgeSet> directed_cycles(const GraphView& view, const Orientation& o);
// Bonds whose edges all cross in the same direction.
std::vector<EdgeSet> directed_bonds(const GraphView& view, const Orientation& o);

// Number of Eulerian classes of totally cyclic orientations.
std::size_t alpha(const GraphView& view, int max_edges = kDefaultOrientationCap);

// Acyclic orientations whose only source is v's class.
std::size_t count_unique_source_acyclic(const GraphView& view, Vertex v,
                                        int max_edges = kDefaultOrientationCap);

enum class CheckStatus { kPass, kFail, kSkipped };

struct IdentityCheck {
  std::string name;
  BigInt lhs;
  BigInt rhs;
  CheckStatus status = CheckStatus::kSkipped;
  std::string note;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool passed() const;
  const IdentityCheck* find(const std::string& name) const;
};

struct VerifyOptions {
  // Identities that enumerate all 2^m orientations are skipped above this.
  int enumeration_limit = 14;
};

// Brute-force counts against Tutte evaluations, plus the loop / bridge /
// deletion-contraction recurrences for alpha on every edge.
IdentityReport verify_identities(const GraphView& view, const VerifyOptions& options = {});

}  // namespace eulerclass
