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
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "hgw/bigraph.hpp"
#include "hgw/group.hpp"
#include "hgw/rational.hpp"
#include "hgw/regularity.hpp"

namespace hgw {

/// HG_n: n×n with edge (i, j) iff i <= j.
BipartiteGraph gen_canonical_halfgraph(std::size_t n);

/// Complete bipartite K_{m,n}.
BipartiteGraph gen_complete(std::size_t left, std::size_t right);

using BlockShape = std::pair<std::size_t, std::size_t>;  // (left size, right size)

/// Disjoint union of complete blocks (vertices numbered block by block on each side), then
/// every pair of U×V flipped independently with probability `noise`.
BipartiteGraph gen_biclique_union(std::span<const BlockShape> blocks, const Rational& noise, std::uint64_t seed);

/// The planted block partition of gen_biclique_union, with empty exceptional parts.
/// Zero-sized block sides are skipped.
RegularityPartition block_partition(const BipartiteGraph& g, std::span<const BlockShape> blocks);

/// Each pair present independently with probability `density`.
BipartiteGraph gen_random_graph(std::size_t left, std::size_t right, const Rational& density, std::uint64_t seed);

FiniteGroup cyclic_group(std::size_t n);
/// Symmetries of the n-gon, order 2n; element r^i s^e has id i + n·e.
FiniteGroup dihedral_group(std::size_t n);
/// Permutations of n <= 5 points in lexicographic order, composed right to left.
FiniteGroup symmetric_group(std::size_t n);
/// (g1, g2) has id g1·|H| + g2.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// Parses "cyclic:N", "dihedral:N", "symmetric:N" or "product(SPEC,SPEC)".
/// Throws ParseError, and BudgetExceeded when the order would exceed kGroupOrderBudget.
FiniteGroup gen_group(std::string_view spec);

/// Each element present independently with probability `density`.
GroupSubset gen_random_subset(const FiniteGroup& g, const Rational& density, std::uint64_t seed);

}  // namespace hgw
