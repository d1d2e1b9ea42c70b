// Copyright 2026 The hgw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hgw/bigraph.hpp"
#include "hgw/bitset.hpp"
#include "hgw/halfgraph.hpp"

namespace hgw {

// Node positions τ ∈ {0,1}^{<n} are heap indices: the root ∅ is 0 and τ⌢j is 2τ+1+j.
// Equivalently position+1 written in binary is "1" followed by the bits of τ.
using Position = std::uint32_t;

inline int position_depth(Position p) { return static_cast<int>(std::bit_width(p + 1)) - 1; }
inline Position child_position(Position p, unsigned bit) { return 2 * p + 1 + bit; }
inline Position parent_position(Position p) { return (p - 1) / 2; }
/// The bits of τ as an integer, τ(0) most significant.
inline std::uint32_t position_path(Position p) { return (p + 1) - (std::uint32_t{1} << position_depth(p)); }
inline Position position_from_path(int depth, std::uint32_t path) {
  return (std::uint32_t{1} << depth) - 1 + path;
}
/// True when p extends root (p lies in the cone rooted at root, root included).
inline bool in_cone(Position p, Position root) {
  const int dp = position_depth(p);
  const int dr = position_depth(root);
  return dp >= dr && ((p + 1) >> (dp - dr)) == root + 1;
}
std::string position_to_bits(Position p);
/// Parses a '0'/'1' string; throws ParseError.
Position position_from_bits(std::string_view bits);

inline constexpr Vertex kMissing = std::numeric_limits<Vertex>::max();
inline constexpr int kMaxTreeHeight = 24;

/// Finite tree for a relation φ: branches a_σ (σ ∈ {0,1}^n, indexed by σ read as a binary
/// number with σ(0) most significant) and nodes b_τ (τ ∈ {0,1}^{<n}, indexed by Position).
/// Branch elements are left ids of the relation graph and node elements are right ids.
///
/// The constructor accepts kMissing entries so partially specified input can be reported
/// by validate_tree rather than rejected at load time.
class PhiTree {
 public:
  PhiTree(int height, std::vector<Vertex> branches, std::vector<Vertex> nodes,
          std::shared_ptr<const BipartiteGraph> relation);

  int height() const { return height_; }
  std::size_t branch_count() const { return branches_.size(); }
  std::size_t node_count() const { return nodes_.size(); }
  Vertex branch(std::uint32_t sigma) const { return branches_[sigma]; }
  Vertex node(Position p) const { return nodes_[p]; }
  std::span<const Vertex> branches() const { return branches_; }
  std::span<const Vertex> nodes() const { return nodes_; }

  bool is_leaf(Position p) const { return position_depth(p) == height_ - 1; }
  /// Node on branch sigma at depth i, i.e. b_{σ|i}.
  Position path_node(std::uint32_t sigma, int depth) const {
    return position_from_path(depth, sigma >> (height_ - depth));
  }
  /// σ(i) for branch sigma.
  unsigned branch_bit(std::uint32_t sigma, int depth) const { return (sigma >> (height_ - 1 - depth)) & 1U; }

  const BipartiteGraph& relation() const { return *relation_; }
  const std::shared_ptr<const BipartiteGraph>& relation_ptr() const { return relation_; }
  bool holds(Vertex a, Vertex b) const { return relation_->has_edge(a, b); }

  friend bool operator==(const PhiTree& x, const PhiTree& y) {
    return x.height_ == y.height_ && x.branches_ == y.branches_ && x.nodes_ == y.nodes_ &&
           (x.relation_ == y.relation_ || *x.relation_ == *y.relation_);
  }

 private:
  int height_;
  std::vector<Vertex> branches_;
  std::vector<Vertex> nodes_;
  std::shared_ptr<const BipartiteGraph> relation_;
};

/// φ(a_σ, b_{σ|i}) iff σ(i) = 0 for every branch and every i < n.
/// Throws MissingEntry for unset entries and OutOfRange for ids outside the relation.
bool validate_tree(const PhiTree& t);

/// A set of node positions claimed to form an m-subtree with the given root.
struct SubtreeSelection {
  std::vector<Position> positions;  // sorted ascending
  int claimed_height = 1;
  Position root = 0;

  friend bool operator==(const SubtreeSelection&, const SubtreeSelection&) = default;
};

BitSet selection_mask(const PhiTree& t, const SubtreeSelection& s);

/// Recursive m-subtree check: leaves for m = 1; otherwise the root plus an (m-1)-subtree in
/// each child cone and nothing else.
bool validate_subtree(const PhiTree& t, const SubtreeSelection& s);

/// For every position, the largest m such that the cone rooted there contains an m-subtree
/// made of allowed positions (0 if none).
std::vector<std::uint8_t> max_subtree_heights(const PhiTree& t, const BitSet& allowed);

/// An m-subtree inside `allowed`, if any. The root is the first admissible position in
/// preorder (lexicographic order of τ) and each child part is chosen by the same rule inside
/// its cone, which makes the result deterministic.
std::optional<SubtreeSelection> find_subtree(const PhiTree& t, const BitSet& allowed, int m);

/// Turns an m-subtree into an m-tree: its nodes, re-indexed along the subtree, plus the
/// branches a_{σ⌢0}, a_{σ⌢1} of T for each leaf σ it contains. Throws InvalidSubtree.
PhiTree complete_subtree(const PhiTree& t, const SubtreeSelection& s);

/// The full cone below child `bit` of the root, as an (n-1)-subtree selection. Needs n >= 2.
SubtreeSelection cone_selection(const PhiTree& t, unsigned bit);

enum class RamseySide { P, Q };

struct RamseyOutcome {
  RamseySide side = RamseySide::P;
  SubtreeSelection selection;
};

/// Given a partition {P, Q} of the nodes of a (p+q)-tree, a p-subtree inside P or a
/// q-subtree inside Q (P tried first). Throws BadPartition, and InternalLemmaViolation if
/// neither exists.
RamseyOutcome ramsey_split(const PhiTree& t, const BitSet& p_class, const BitSet& q_class, int p, int q);

struct ExtractionStep {
  /// Subtree height index before the step; H has height 2^{r+1}-2.
  int r = 0;
  /// True when some branch a had an (h+1)-subtree inside H(a).
  bool branch_case = false;
};

struct Extraction {
  HalfGraphWitness witness;
  std::vector<ExtractionStep> steps;
};

/// From a valid tree of height 2^{n+1}-2, branches a_0..a_{n-1} and nodes b_0..b_{n-1} with
/// φ(a_i, b_j) iff i <= j. Throws BadHeight or InvalidTree.
HalfGraphWitness extract_halfgraph(const PhiTree& t, int n);
Extraction extract_halfgraph_traced(const PhiTree& t, int n);

inline constexpr std::uint64_t kDefaultGrowBudget = std::uint64_t{1} << 20;

struct GrowResult {
  std::optional<PhiTree> tree;
  /// False when the search stopped on its budget, so an empty result is inconclusive.
  bool exhaustive = true;
};

/// Searches g for a tree of the requested height with branches in U and nodes in V.
/// Memoised backtracking on (candidate branch set, remaining height); `budget` caps the
/// number of distinct states explored.
GrowResult grow_tree(const BipartiteGraph& g, int target_height, std::uint64_t budget = kDefaultGrowBudget);

enum class TreeFill {
  Random,  // unconstrained pairs are seeded coin flips
  None,    // unconstrained pairs are false
  All,     // unconstrained pairs are true
};

inline constexpr int kMaxRandomTreeHeight = 15;

/// A synthetic tree over fresh elements; the relation is the forced pattern plus `fill` on
/// every other pair. `universe_padding` extra elements are added to both sides.
PhiTree gen_random_tree(int n, std::uint64_t seed, std::size_t universe_padding = 0, TreeFill fill = TreeFill::Random);

}  // namespace hgw
