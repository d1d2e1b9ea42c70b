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

#include "hgw/tree.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "hgw/error.hpp"
#include "hgw/random.hpp"

namespace hgw {

std::string position_to_bits(Position p) {
  const int depth = position_depth(p);
  const std::uint32_t path = position_path(p);
  std::string out(static_cast<std::size_t>(depth), '0');
  for (int i = 0; i < depth; ++i) {
    if ((path >> (depth - 1 - i)) & 1U) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

Position position_from_bits(std::string_view bits) {
  if (bits.size() >= static_cast<std::size_t>(kMaxTreeHeight)) {
    throw Error(ErrorCode::ParseError, "position '" + std::string(bits) + "' too deep");
  }
  std::uint32_t path = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw Error(ErrorCode::ParseError, "bad position '" + std::string(bits) + "'");
    path = (path << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return position_from_path(static_cast<int>(bits.size()), path);
}

PhiTree::PhiTree(int height, std::vector<Vertex> branches, std::vector<Vertex> nodes,
                 std::shared_ptr<const BipartiteGraph> relation)
    : height_(height), branches_(std::move(branches)), nodes_(std::move(nodes)), relation_(std::move(relation)) {
  if (height_ < 1 || height_ > kMaxTreeHeight) {
    throw Error(ErrorCode::BadHeight, "tree height " + std::to_string(height_) + " outside [1," +
                                          std::to_string(kMaxTreeHeight) + "]");
  }
  const std::size_t expected_branches = std::size_t{1} << height_;
  if (branches_.size() != expected_branches || nodes_.size() != expected_branches - 1) {
    throw Error(ErrorCode::BadArgument, "tree of height " + std::to_string(height_) + " needs " +
                                            std::to_string(expected_branches) + " branches and " +
                                            std::to_string(expected_branches - 1) + " nodes");
  }
  if (!relation_) throw Error(ErrorCode::BadArgument, "tree without a relation");
}

bool validate_tree(const PhiTree& t) {
  const BipartiteGraph& rel = t.relation();
  for (Vertex a : t.branches()) {
    if (a == kMissing) throw Error(ErrorCode::MissingEntry, "tree has an unset branch");
    if (a >= rel.left_size()) throw Error(ErrorCode::OutOfRange, "branch element " + std::to_string(a) + " out of range");
  }
  for (Vertex b : t.nodes()) {
    if (b == kMissing) throw Error(ErrorCode::MissingEntry, "tree has an unset node");
    if (b >= rel.right_size()) throw Error(ErrorCode::OutOfRange, "node element " + std::to_string(b) + " out of range");
  }
  for (std::uint32_t sigma = 0; sigma < t.branch_count(); ++sigma) {
    const BitSet& row = rel.row(t.branch(sigma));
    for (int i = 0; i < t.height(); ++i) {
      if (row.test(t.node(t.path_node(sigma, i))) != (t.branch_bit(sigma, i) == 0)) return false;
    }
  }
  return true;
}

BitSet selection_mask(const PhiTree& t, const SubtreeSelection& s) {
  BitSet mask(t.node_count());
  for (Position p : s.positions) {
    if (p >= t.node_count()) throw Error(ErrorCode::OutOfRange, "position " + std::to_string(p) + " outside tree");
    mask.set(p);
  }
  return mask;
}

namespace {

bool valid_subtree_rec(const PhiTree& t, const std::vector<Position>& positions, int m, Position root) {
  if (m < 1 || m > t.height()) return false;
  if (positions.size() != (std::size_t{1} << m) - 1) return false;
  if (m == 1) return positions.front() == root && t.is_leaf(root);
  if (t.is_leaf(root)) return false;
  std::vector<Position> parts[2];
  bool has_root = false;
  for (Position p : positions) {
    if (p == root) {
      has_root = true;
    } else if (in_cone(p, child_position(root, 0))) {
      parts[0].push_back(p);
    } else if (in_cone(p, child_position(root, 1))) {
      parts[1].push_back(p);
    } else {
      return false;
    }
  }
  if (!has_root) return false;
  for (auto& part : parts) {
    if (part.empty()) return false;
    // Sorted ascending, so the front is the shallowest member: the only possible root.
    if (!valid_subtree_rec(t, part, m - 1, part.front())) return false;
  }
  return true;
}

}  // namespace

bool validate_subtree(const PhiTree& t, const SubtreeSelection& s) {
  std::vector<Position> sorted = s.positions;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (sorted.empty() || sorted.back() >= t.node_count()) return false;
  return valid_subtree_rec(t, sorted, s.claimed_height, s.root);
}

std::vector<std::uint8_t> max_subtree_heights(const PhiTree& t, const BitSet& allowed) {
  if (allowed.size() != t.node_count()) throw Error(ErrorCode::BadArgument, "allowed set does not match tree");
  const std::size_t count = t.node_count();
  const std::size_t first_leaf = (count - 1) / 2;
  std::vector<std::uint8_t> best(count, 0);
  for (std::size_t p = count; p-- > 0;) {
    const bool ok = allowed.test(p);
    if (p >= first_leaf) {
      best[p] = ok ? 1 : 0;
      continue;
    }
    const std::uint8_t m0 = best[2 * p + 1];
    const std::uint8_t m1 = best[2 * p + 2];
    const std::uint8_t lo = std::min(m0, m1);
    const std::uint8_t rooted = (ok && lo >= 1) ? static_cast<std::uint8_t>(lo + 1) : 0;
    best[p] = std::max({m0, m1, rooted});
  }
  return best;
}

namespace {

class SubtreeBuilder {
 public:
  SubtreeBuilder(const PhiTree& t, const BitSet& allowed, std::vector<std::uint8_t> best)
      : t_(t), allowed_(allowed), best_(std::move(best)) {}

  bool rootable(Position p, int m) const {
    if (!allowed_.test(p)) return false;
    if (t_.is_leaf(p)) return m == 1;
    return m >= 2 && std::min(best_[child_position(p, 0)], best_[child_position(p, 1)]) >= m - 1;
  }

  // Preorder-first position in the cone at `top` that roots an m-subtree.
  Position first_root(Position top, int m) const {
    std::vector<Position> stack{top};
    while (!stack.empty()) {
      const Position p = stack.back();
      stack.pop_back();
      if (best_[p] < m) continue;
      if (rootable(p, m)) return p;
      if (!t_.is_leaf(p)) {
        stack.push_back(child_position(p, 1));
        stack.push_back(child_position(p, 0));
      }
    }
    throw Error(ErrorCode::InternalLemmaViolation, "subtree height table inconsistent");
  }

  void build(Position root, int m, std::vector<Position>& out) const {
    out.push_back(root);
    if (m == 1) return;
    for (unsigned bit = 0; bit < 2; ++bit) build(first_root(child_position(root, bit), m - 1), m - 1, out);
  }

  std::uint8_t best_at(Position p) const { return best_[p]; }

 private:
  const PhiTree& t_;
  const BitSet& allowed_;
  std::vector<std::uint8_t> best_;
};

SubtreeSelection make_selection(std::vector<Position> positions, int m, Position root) {
  std::sort(positions.begin(), positions.end());
  return SubtreeSelection{std::move(positions), m, root};
}

}  // namespace

std::optional<SubtreeSelection> find_subtree(const PhiTree& t, const BitSet& allowed, int m) {
  if (m < 1) throw Error(ErrorCode::BadArgument, "subtree height must be at least 1");
  if (m > t.height()) return std::nullopt;
  SubtreeBuilder builder(t, allowed, max_subtree_heights(t, allowed));
  if (builder.best_at(0) < m) return std::nullopt;
  const Position root = builder.first_root(0, m);
  std::vector<Position> positions;
  builder.build(root, m, positions);
  return make_selection(std::move(positions), m, root);
}

PhiTree complete_subtree(const PhiTree& t, const SubtreeSelection& s) {
  if (!validate_subtree(t, s)) throw Error(ErrorCode::InvalidSubtree, "selection is not a valid subtree");
  const int n = t.height();
  const int m = s.claimed_height;
  const BitSet mask = selection_mask(t, s);
  std::vector<Vertex> nodes((std::size_t{1} << m) - 1, kMissing);
  std::vector<Position> source(nodes.size(), kMissing);
  std::vector<Vertex> branches(std::size_t{1} << m, kMissing);
  for (Position leaf : s.positions) {
    if (!t.is_leaf(leaf)) continue;
    const std::uint32_t sigma = position_path(leaf);  // n-1 bits
    std::uint32_t new_path = 0;
    int j = 0;
    for (int i = 0; i < n; ++i) {
      const Position q = position_from_path(i, sigma >> (n - 1 - i));
      if (!mask.test(q)) continue;
      const Position target = position_from_path(j, new_path);
      if (source[target] != kMissing && source[target] != q) {
        throw Error(ErrorCode::InternalLemmaViolation, "two subtree nodes map to one position");
      }
      source[target] = q;
      nodes[target] = t.node(q);
      if (i < n - 1) new_path = (new_path << 1) | ((sigma >> (n - 2 - i)) & 1U);
      ++j;
    }
    for (std::uint32_t k = 0; k < 2; ++k) branches[(new_path << 1) | k] = t.branch((sigma << 1) | k);
  }
  return PhiTree(m, std::move(branches), std::move(nodes), t.relation_ptr());
}

SubtreeSelection cone_selection(const PhiTree& t, unsigned bit) {
  if (t.height() < 2) throw Error(ErrorCode::BadHeight, "cone of a height-1 tree is empty");
  const Position top = child_position(0, bit);
  std::vector<Position> positions;
  for (Position p = 0; p < t.node_count(); ++p) {
    if (in_cone(p, top)) positions.push_back(p);
  }
  return SubtreeSelection{std::move(positions), t.height() - 1, top};
}

RamseyOutcome ramsey_split(const PhiTree& t, const BitSet& p_class, const BitSet& q_class, int p, int q) {
  if (p < 1 || q < 1 || p + q != t.height()) {
    throw Error(ErrorCode::BadPartition, "need p, q >= 1 with p + q equal to the tree height");
  }
  if (p_class.size() != t.node_count() || q_class.size() != t.node_count() || p_class.intersects(q_class) ||
      (p_class | q_class).count() != t.node_count()) {
    throw Error(ErrorCode::BadPartition, "P and Q must partition the tree's nodes");
  }
  if (auto s = find_subtree(t, p_class, p)) return RamseyOutcome{RamseySide::P, std::move(*s)};
  if (auto s = find_subtree(t, q_class, q)) return RamseyOutcome{RamseySide::Q, std::move(*s)};
  throw Error(ErrorCode::InternalLemmaViolation, "neither class contains the promised subtree");
}

namespace {

std::size_t extraction_height(int n) { return (std::size_t{1} << (n + 1)) - 2; }

// H(a) as an allowed set: nodes b of h with φ(a, b).
BitSet satisfied_nodes(const PhiTree& h, Vertex a) {
  const BitSet& row = h.relation().row(a);
  BitSet out(h.node_count());
  for (Position p = 0; p < h.node_count(); ++p) {
    if (row.test(h.node(p))) out.set(p);
  }
  return out;
}

// Whether the cone heights of H(a) reach `target` at the root; the scan over all branches
// dominates extraction time, so this avoids materialising H(a).
bool reaches_height(const PhiTree& h, Vertex a, int target, std::vector<std::uint8_t>& best) {
  const BitSet& row = h.relation().row(a);
  const std::size_t count = h.node_count();
  const std::size_t first_leaf = (count - 1) / 2;
  const auto nodes = h.nodes();
  for (std::size_t p = count; p-- > first_leaf;) best[p] = row.test(nodes[p]) ? 1 : 0;
  for (std::size_t p = first_leaf; p-- > 0;) {
    const std::uint8_t m0 = best[2 * p + 1];
    const std::uint8_t m1 = best[2 * p + 2];
    const std::uint8_t lo = std::min(m0, m1);
    const std::uint8_t rooted = (lo >= 1 && row.test(nodes[p])) ? static_cast<std::uint8_t>(lo + 1) : 0;
    best[p] = std::max({m0, m1, rooted});
  }
  return best[0] >= target;
}

}  // namespace

Extraction extract_halfgraph_traced(const PhiTree& t, int n) {
  if (n < 1 || static_cast<std::size_t>(t.height()) != extraction_height(n)) {
    throw Error(ErrorCode::BadHeight, "extraction at n=" + std::to_string(n) + " needs height 2^(n+1)-2, got " +
                                          std::to_string(t.height()));
  }
  if (!validate_tree(t)) throw Error(ErrorCode::InvalidTree, "input is not a tree for its relation");

  Extraction result;
  // Fixed pairs before H, and after H stored nearest-last.
  std::vector<std::pair<Vertex, Vertex>> before;
  std::vector<std::pair<Vertex, Vertex>> after_reversed;
  PhiTree h = t;
  std::vector<std::uint8_t> scratch;
  for (int r = n; r >= 2; --r) {
    const int half = (1 << r) - 2;  // h = 2^r - 2; current height is 2h + 2
    scratch.assign(h.node_count(), 0);
    bool branch_case = false;
    for (std::uint32_t sigma = 0; sigma < h.branch_count() && !branch_case; ++sigma) {
      const Vertex a = h.branch(sigma);
      if (!reaches_height(h, a, half + 1, scratch)) continue;
      const BitSet allowed = satisfied_nodes(h, a);
      const auto k_sel = find_subtree(h, allowed, half + 1);
      if (!k_sel) throw Error(ErrorCode::InternalLemmaViolation, "height scan and subtree search disagree");
      // Keep the part of the (h+1)-subtree below the root's 1-child: an h-subtree on which
      // φ(a, -) holds and whose branches all fail φ(-, root).
      const Position tau = k_sel->root;
      const Position one_child = child_position(tau, 1);
      std::vector<Position> part;
      for (Position p : k_sel->positions) {
        if (in_cone(p, one_child)) part.push_back(p);
      }
      SubtreeSelection next = make_selection(std::move(part), half, 0);
      next.root = next.positions.front();
      before.emplace_back(a, h.node(tau));
      h = complete_subtree(h, next);
      branch_case = true;
    }
    if (!branch_case) {
      const Vertex b = h.node(0);
      PhiTree zero_cone = complete_subtree(h, cone_selection(h, 0));
      const Vertex a = zero_cone.branch(0);
      const BitSet p_class = satisfied_nodes(zero_cone, a);
      const BitSet q_class = ~p_class;
      RamseyOutcome outcome = ramsey_split(zero_cone, p_class, q_class, half + 1, half);
      if (outcome.side != RamseySide::Q) {
        throw Error(ErrorCode::InternalLemmaViolation, "H(a) holds a subtree the branch scan missed");
      }
      after_reversed.emplace_back(a, b);
      h = complete_subtree(zero_cone, outcome.selection);
    }
    result.steps.push_back(ExtractionStep{r, branch_case});
  }

  // Height-2 tree: the root and any branch through its 0-child satisfy φ.
  const Vertex last_a = h.branch(0);
  const Vertex last_b = h.node(0);
  HalfGraphWitness& w = result.witness;
  for (const auto& [a, b] : before) {
    w.a.push_back(a);
    w.b.push_back(b);
  }
  w.a.push_back(last_a);
  w.b.push_back(last_b);
  for (auto it = after_reversed.rbegin(); it != after_reversed.rend(); ++it) {
    w.a.push_back(it->first);
    w.b.push_back(it->second);
  }
  if (!verify_witness(t.relation(), w)) {
    throw Error(ErrorCode::InternalLemmaViolation, "extracted tuple fails the half-graph pattern");
  }
  return result;
}

HalfGraphWitness extract_halfgraph(const PhiTree& t, int n) { return extract_halfgraph_traced(t, n).witness; }

namespace {

class TreeGrower {
 public:
  TreeGrower(const BipartiteGraph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

  struct OutOfBudget {};

  bool solve(const BitSet& candidates, int h) {
    if (candidates.count() < (std::size_t{1} << h)) return false;
    if (h == 0) return true;
    auto key = std::make_pair(std::vector<BitSet::Word>(candidates.words().begin(), candidates.words().end()), h);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second != kMissing;
    if (++states_ > budget_) throw OutOfBudget{};
    Vertex chosen = kMissing;
    const std::size_t need = std::size_t{1} << (h - 1);
    for (std::size_t v = 0; v < g_.right_size() && chosen == kMissing; ++v) {
      BitSet zero_side = candidates & g_.col(static_cast<Vertex>(v));
      if (zero_side.count() < need) continue;
      BitSet one_side = candidates;
      one_side.subtract(zero_side);
      if (one_side.count() < need) continue;
      if (solve(zero_side, h - 1) && solve(one_side, h - 1)) chosen = static_cast<Vertex>(v);
    }
    memo_.emplace(std::move(key), chosen);
    return chosen != kMissing;
  }

  void build(const BitSet& candidates, int h, int depth, std::uint32_t path, std::vector<Vertex>& branches,
             std::vector<Vertex>& nodes) const {
    if (h == 0) {
      branches[path] = static_cast<Vertex>(candidates.first());
      return;
    }
    const Vertex v = memo_.at(std::make_pair(
        std::vector<BitSet::Word>(candidates.words().begin(), candidates.words().end()), h));
    nodes[position_from_path(depth, path)] = v;
    BitSet zero_side = candidates & g_.col(v);
    BitSet one_side = candidates;
    one_side.subtract(zero_side);
    build(zero_side, h - 1, depth + 1, path << 1, branches, nodes);
    build(one_side, h - 1, depth + 1, (path << 1) | 1U, branches, nodes);
  }

 private:
  const BipartiteGraph& g_;
  std::uint64_t budget_;
  std::uint64_t states_ = 0;
  std::map<std::pair<std::vector<BitSet::Word>, int>, Vertex> memo_;
};

}  // namespace

GrowResult grow_tree(const BipartiteGraph& g, int target_height, std::uint64_t budget) {
  if (target_height < 1 || target_height > kMaxTreeHeight) {
    throw Error(ErrorCode::BadHeight, "target height must lie in [1," + std::to_string(kMaxTreeHeight) + "]");
  }
  GrowResult result;
  // Branches are pairwise distinct in any tree, so U must hold 2^height of them.
  if ((std::size_t{1} << target_height) > g.left_size()) return result;
  TreeGrower grower(g, budget);
  const BitSet everything(g.left_size(), true);
  try {
    if (!grower.solve(everything, target_height)) return result;
  } catch (const TreeGrower::OutOfBudget&) {
    result.exhaustive = false;
    return result;
  }
  std::vector<Vertex> branches(std::size_t{1} << target_height, kMissing);
  std::vector<Vertex> nodes(branches.size() - 1, kMissing);
  grower.build(everything, target_height, 0, 0, branches, nodes);
  result.tree.emplace(target_height, std::move(branches), std::move(nodes), std::make_shared<BipartiteGraph>(g));
  return result;
}

PhiTree gen_random_tree(int n, std::uint64_t seed, std::size_t universe_padding, TreeFill fill) {
  if (n < 1 || n > kMaxRandomTreeHeight) {
    throw Error(ErrorCode::BudgetExceeded, "random trees are limited to heights 1.." +
                                               std::to_string(kMaxRandomTreeHeight));
  }
  Rng rng(seed);
  const std::size_t branch_count = std::size_t{1} << n;
  const std::size_t left = branch_count + universe_padding;
  const std::size_t right = branch_count - 1 + universe_padding;

  auto shuffled = [&rng](std::size_t size) {
    std::vector<Vertex> ids(size);
    for (std::size_t i = 0; i < size; ++i) ids[i] = static_cast<Vertex>(i);
    for (std::size_t i = size; i > 1; --i) std::swap(ids[i - 1], ids[uniform_below(rng, i)]);
    return ids;
  };
  std::vector<Vertex> branches = shuffled(left);
  branches.resize(branch_count);
  std::vector<Vertex> nodes = shuffled(right);
  nodes.resize(branch_count - 1);

  std::vector<BitSet> rows(left, BitSet(right, fill == TreeFill::All));
  if (fill == TreeFill::Random) {
    for (BitSet& row : rows) {
      for (auto& word : row.mutable_words()) word = rng();
      // Re-clear padding bits past the row width.
      if (right % BitSet::kWordBits != 0 && row.word_count() > 0) {
        row.mutable_words().back() &= (BitSet::Word{1} << (right % BitSet::kWordBits)) - 1;
      }
    }
  }
  for (std::uint32_t sigma = 0; sigma < branch_count; ++sigma) {
    BitSet& row = rows[branches[sigma]];
    for (int i = 0; i < n; ++i) {
      const Position p = position_from_path(i, sigma >> (n - i));
      row.assign(nodes[p], ((sigma >> (n - 1 - i)) & 1U) == 0);
    }
  }
  auto relation = std::make_shared<BipartiteGraph>(BipartiteGraph::from_rows(left, right, std::move(rows)));
  return PhiTree(n, std::move(branches), std::move(nodes), std::move(relation));
}

}  // namespace hgw
