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
#include <optional>
#include <vector>

#include "hgw/bigraph.hpp"
#include "hgw/rational.hpp"

namespace hgw {

/// Ordered tuple (a_1, b_1, ..., a_k, b_k) with E(a_i, b_j) iff i <= j.
struct HalfGraphWitness {
  std::vector<Vertex> a;  // left vertices
  std::vector<Vertex> b;  // right vertices

  std::size_t height() const { return a.size(); }
  friend bool operator==(const HalfGraphWitness&, const HalfGraphWitness&) = default;
};

/// Normalisation for half-graph densities.
enum class DensityMode {
  /// Denominator (|U|+|V|)^{2k}: all 2k coordinates range over the whole vertex set.
  Total,
  /// Denominator |U|^k * |V|^k: a's range over U, b's over V.
  Sorted,
};

/// Default enumeration budget (tuples visited) for exact counting.
inline constexpr std::uint64_t kDefaultCountBudget = std::uint64_t{1} << 26;

/// Full k×k pattern check. Throws OutOfRange for ids outside the graph and BadArgument for
/// mismatched a/b lengths. Repeated vertices can never satisfy the pattern.
bool verify_witness(const BipartiteGraph& g, const HalfGraphWitness& w);

/// |H_k(E)| by enumerating all |U|^k |V|^k ordered tuples. Throws BudgetExceeded.
std::uint64_t count_halfgraphs_naive(const BipartiteGraph& g, std::size_t k,
                                     std::uint64_t budget = kDefaultCountBudget);

/// |H_k(E)| by enumerating right tuples (b_1..b_k) only.
///
/// For a fixed right tuple the admissible a_i form S_i = ⋂_{j>=i} N(b_j) ∖ ⋃_{j<i} N(b_j)
/// (column neighbourhoods); these sets are pairwise disjoint, so the tuple contributes
/// ∏|S_i|. S_i are maintained incrementally as b's are appended and the search prunes as
/// soon as one empties. The outer b_1 range can be split over `workers` threads; partial
/// sums are reduced in worker order. Throws BudgetExceeded when |V|^k exceeds the budget.
std::uint64_t count_halfgraphs_fast(const BipartiteGraph& g, std::size_t k,
                                    std::uint64_t budget = kDefaultCountBudget, unsigned workers = 1);

/// count divided by the mode's tuple-space size. Throws ZeroSide when that space is empty.
Rational halfgraph_density(std::uint64_t count, const BipartiteGraph& g, std::size_t k, DensityMode mode);

/// Lexicographically least witness in (b_1..b_k, a_1..a_k) order, if H_k(E) is nonempty.
std::optional<HalfGraphWitness> find_halfgraph(const BipartiteGraph& g, std::size_t k);

/// Largest k <= k_max with H_k(E) nonempty, or 0.
std::size_t ladder_index(const BipartiteGraph& g, std::size_t k_max);

struct DensityEstimate {
  Rational estimate;  // hits / samples
  double standard_error = 0.0;
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
};

/// Monte Carlo estimate of halfgraph_density: uniform 2k-tuples from the mode's sample
/// space, averaging the pattern indicator. Deterministic given the seed.
DensityEstimate estimate_halfgraph_density(const BipartiteGraph& g, std::size_t k, std::uint64_t samples,
                                           std::uint64_t seed, DensityMode mode);

}  // namespace hgw
