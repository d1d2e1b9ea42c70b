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
#include <span>
#include <vector>

#include "hgw/bigraph.hpp"
#include "hgw/rational.hpp"

namespace hgw {

/// Two-sided partition; index 0 on each side is the exceptional part (possibly empty).
struct RegularityPartition {
  std::vector<VertexSet> left_parts;
  std::vector<VertexSet> right_parts;

  std::size_t left_count() const { return left_parts.empty() ? 0 : left_parts.size() - 1; }
  std::size_t right_count() const { return right_parts.empty() ? 0 : right_parts.size() - 1; }

  friend bool operator==(const RegularityPartition&, const RegularityPartition&) = default;
};

struct PartitionReport {
  Rational eps;
  Rational delta;
  bool left_exceptional_ok = false;
  bool right_exceptional_ok = false;
  /// grid[i-1][j-1] is the verdict for U_i × V_j, i, j >= 1.
  std::vector<std::vector<HomogeneityVerdict>> grid;
  bool pass = false;
};

/// Throws MalformedPartition unless the parts are on the right sides, disjoint and covering.
void validate_partition(const BipartiteGraph& g, const RegularityPartition& p);

/// Exceptional parts must be empty or smaller than delta times their side; every
/// non-exceptional cell must be eps-homogeneous. Throws MalformedPartition, and EmptyPart for
/// an empty non-exceptional part.
PartitionReport check_partition(const BipartiteGraph& g, const RegularityPartition& p, const Rational& eps,
                                const Rational& delta);

/// Atoms of the Boolean algebra generated by the neighbourhoods of the witnesses: left parts
/// from right witnesses, right parts from left witnesses. Atoms are ordered by their
/// membership vector (one flag per witness, in witness order, false before true); atoms with
/// fewer than min_part vertices are merged into the exceptional part.
RegularityPartition atom_partition(const BipartiteGraph& g, std::span<const Vertex> right_witnesses,
                                   std::span<const Vertex> left_witnesses, std::size_t min_part);

/// ceil(delta * side_size / (2 * atom_count)); 0 when there are no atoms.
std::size_t default_min_part(const Rational& delta, std::size_t side_size, std::size_t atom_count);

/// Σ over non-exceptional cells of min(edges, non-edges).
std::uint64_t imbalance_score(const BipartiteGraph& g, const RegularityPartition& p);

struct GreedyResult {
  RegularityPartition partition;
  PartitionReport report;
  std::vector<Vertex> right_witnesses;
  std::vector<Vertex> left_witnesses;
};

/// Adds neighbourhood witnesses one at a time until the partition passes or no witness can
/// be added. Candidates are the vertices of failing cells (a right vertex of V_j splits U, a
/// left vertex of U_i splits V); the candidate with the lowest resulting imbalance score wins,
/// ties going to the lower id and then to right witnesses. Candidates that leave the
/// partition unchanged are skipped. `max_witnesses` caps each side.
GreedyResult greedy_regularize(const BipartiteGraph& g, const Rational& eps, const Rational& delta,
                               std::size_t max_witnesses);

struct MinimalPartition {
  RegularityPartition partition;
  std::size_t r = 0;
  std::size_t s = 0;
};

inline constexpr std::size_t kExhaustiveSideCap = 8;
inline constexpr std::size_t kExhaustivePartsCap = 4;

/// Passing partition with empty exceptional parts minimising r + s (then r), each side split
/// into at most max_parts blocks. Throws BudgetExceeded beyond 8 vertices per side or 4 parts.
std::optional<MinimalPartition> exhaustive_min_partition(const BipartiteGraph& g, const Rational& eps,
                                                         const Rational& delta, std::size_t max_parts);

}  // namespace hgw
