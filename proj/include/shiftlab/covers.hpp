// covers.hpp -- right-resolving covers, Fischer covers, synchronizing blocks

#ifndef SHIFTLAB_COVERS_HPP
#define SHIFTLAB_COVERS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shiftlab/core.hpp"
#include "shiftlab/oracle.hpp"

namespace shiftlab {

bool is_right_resolving(const LabeledGraph& g);

/// Coarsest partition of a right-resolving graph's vertices into classes
/// with identical follower languages (Moore refinement). Classes are sorted
/// and ordered by their least member.
std::vector<VertexSet> follower_separation(const LabeledGraph& g);

/// Merges each class into one vertex (named after its least member);
/// parallel edges created by the merge collapse.
LabeledGraph quotient(const LabeledGraph& g, const std::vector<VertexSet>& classes);

/// Follower-set graph: the reachable subsets image_set(g, w, all vertices),
/// trimmed to its essential part. Vertices are named `{A,B,...}`.
LabeledGraph subset_cover(const LabeledGraph& g);

/// Minimal right-resolving presentation of an irreducible sofic shift.
LabeledGraph fischer_cover(const LabeledGraph& g);

/// BFS relabeling of a Fischer cover from the image vertex of its least
/// synchronizing word. Two Fischer covers are isomorphic iff their
/// canonical forms are equal.
std::string canonical_form(const LabeledGraph& fischer);

/// Presented languages of two irreducible presentations coincide.
bool same_irreducible_shift(const LabeledGraph& a, const LabeledGraph& b);
/// Every word of `a` is a word of `b` (exact, via a product of
/// determinizations). Works for reducible presentations too.
bool language_contained(const LabeledGraph& a, const LabeledGraph& b);

struct SyncVerdict {
  enum class Status { synchronizing, not_synchronizing };
  Status status;
  /// (u, w) with uv and vw admissible but uvw not.
  std::optional<std::pair<Block, Block>> witness;
};

/// Exact decision via follower classes of the determinized presentation;
/// context_bound only bounds the length-lexicographic witness search (it is
/// widened to a size bound that guarantees a witness when needed).
SyncVerdict is_synchronizing(const LabeledGraph& g, const Block& v, std::size_t context_bound);

/// Length-lexicographically least synchronizing block of length
/// 1..max_len.
std::optional<Block> find_synchronizing_word(const LabeledGraph& g, std::size_t max_len);

struct HalfSyncVerdict {
  enum class Status { holds_at_horizon, refuted };
  Status status;
  Block block;
  std::size_t horizon;
  /// Left context ending in `block` whose follower set matches the block's
  /// at the horizon. Present iff holds_at_horizon.
  std::optional<Block> transitive_ray_prefix;
  /// Block following `block` but not the constructed context.
  std::optional<Block> refutation;
  /// Holds for every horizon, not just the tested one (sofic oracles only).
  bool exact = false;
};

HalfSyncVerdict is_half_synchronizing(const ShiftOracle& o, const Block& m, std::size_t horizon);

/// Helper shared by the synchronizing checks: determinization from the full
/// vertex set with follower classes of its states.
struct FollowerClasses {
  SubsetAutomaton automaton;
  std::vector<std::size_t> class_of;
};
FollowerClasses follower_classes(const LabeledGraph& g);
/// Moore refinement on a partial deterministic automaton whose states are
/// all accepting. Class ids are assigned in order of first occurrence.
std::vector<std::size_t> moore_classes(const std::vector<std::vector<std::int32_t>>& transitions);
bool synchronizes(const FollowerClasses& fc, const Block& v);

}  // namespace shiftlab

#endif  // SHIFTLAB_COVERS_HPP
