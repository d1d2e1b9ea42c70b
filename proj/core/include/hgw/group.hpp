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

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "hgw/bigraph.hpp"
#include "hgw/bitset.hpp"
#include "hgw/halfgraph.hpp"
#include "hgw/rational.hpp"

namespace hgw {

using Element = std::uint32_t;

/// Largest order whose associativity is checked exhaustively at construction.
inline constexpr std::size_t kGroupOrderBudget = 256;

/// A finite group given by its multiplication table over ids 0..n-1.
class FiniteGroup {
 public:
  std::size_t order() const { return order_; }
  Element multiply(Element a, Element b) const { return table_[a * order_ + b]; }
  Element identity() const { return identity_; }
  Element inverse(Element g) const { return inverse_[g]; }
  /// False when associativity was only sampled (order above kGroupOrderBudget).
  bool associativity_verified() const { return verified_; }
  std::span<const Element> table() const { return table_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  friend FiniteGroup validate_group(const std::vector<std::vector<Element>>& table);

  std::size_t order_ = 0;
  std::vector<Element> table_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
  bool verified_ = true;
};

/// Checks a square table for the group axioms and resolves identity and inverses.
/// Throws NotLatinSquare, NoIdentity, NoInverse or NotAssociative (checked in that order).
FiniteGroup validate_group(const std::vector<std::vector<Element>>& table);

struct GroupSubset {
  BitSet members;

  static GroupSubset empty(const FiniteGroup& g) { return {BitSet(g.order())}; }
  static GroupSubset full(const FiniteGroup& g) { return {BitSet(g.order(), true)}; }
  /// Throws OutOfRange.
  static GroupSubset of(const FiniteGroup& g, std::span<const Element> ids);
  static GroupSubset of(const FiniteGroup& g, std::initializer_list<Element> ids);

  bool contains(Element e) const { return members.test(e); }
  std::size_t size() const { return members.count(); }
  std::vector<Element> elements() const;

  friend bool operator==(const GroupSubset&, const GroupSubset&) = default;
};

bool is_subgroup(const FiniteGroup& g, const GroupSubset& h);
bool is_normal_subgroup(const FiniteGroup& g, const GroupSubset& h);

/// Subgroup generated by a set of elements.
GroupSubset generated_subgroup(const FiniteGroup& g, const GroupSubset& generators);
std::vector<GroupSubset> conjugacy_classes(const FiniteGroup& g);

inline constexpr std::size_t kNormalSubgroupBudget = 4096;

/// Every normal subgroup, ordered by size then by member list.
///
/// Normal subgroups are exactly the joins of normal closures of conjugacy classes, so the
/// lattice is generated from the trivial subgroup by repeatedly joining with those closures
/// (the join of two normal subgroups is their product set). Throws BudgetExceeded above
/// kGroupOrderBudget or when more than `max_count` subgroups turn up.
std::vector<GroupSubset> enumerate_normal_subgroups(const FiniteGroup& g,
                                                    std::size_t max_count = kNormalSubgroupBudget);

/// Edge (g, h) iff g⁻¹h ∈ A.
BipartiteGraph cayley_relation(const FiniteGroup& g, const GroupSubset& a);
/// Edge (x, y) iff y·x ∈ A.
BipartiteGraph phi_relation(const FiniteGroup& g, const GroupSubset& a);

/// Maps a half-graph of Cay(G,A) to one of φ_A: c_i = b_{k-i+1}, d_i = a_{k-i+1}⁻¹.
/// Throws InvalidWitness unless w verifies on cayley_relation(g, a).
HalfGraphWitness halfgraph_bijection(const FiniteGroup& g, const GroupSubset& a, const HalfGraphWitness& w);
/// Inverse map, from φ_A back to Cay(G,A). Throws InvalidWitness.
HalfGraphWitness halfgraph_bijection_inverse(const FiniteGroup& g, const GroupSubset& a, const HalfGraphWitness& w);

/// Left cosets xH, ordered by their least element.
std::vector<GroupSubset> left_cosets(const FiniteGroup& g, const GroupSubset& h);

/// A union B of cosets of a normal subgroup H approximating A.
struct CosetApprox {
  GroupSubset subgroup;
  std::size_t index = 0;
  GroupSubset coset_union;
  std::size_t symdiff = 0;
  /// eps·|H|, when the approximation was scored against an eps.
  std::optional<Rational> bound;

  bool within_bound() const { return bound && Rational(symdiff) < *bound; }
};

/// The coset union minimising |A△B|: a coset joins B iff more than half of it lies in A.
/// Throws NotNormal.
CosetApprox best_coset_union(const FiniteGroup& g, const GroupSubset& a, const GroupSubset& h);

struct ArithmeticSearchResult {
  /// Best candidate with |A△B| < eps·|H|, if any.
  std::optional<CosetApprox> approximation;
  /// Best candidate overall, reported even when it misses the bound.
  std::optional<CosetApprox> best_found;
};

/// Scans normal subgroups of index <= max_index. Candidates are ranked by symdiff, then by
/// larger H, then by member list; `approximation` is the top candidate meeting the strict
/// bound. Throws BadArgument for eps <= 0 and BudgetExceeded from the enumeration.
ArithmeticSearchResult arithmetic_regularity_search(const FiniteGroup& g, const GroupSubset& a, const Rational& eps,
                                                    std::size_t max_index);

}  // namespace hgw
