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
#include <utility>
#include <vector>

#include "hgw/bitset.hpp"
#include "hgw/rational.hpp"

namespace hgw {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

enum class Side { Left, Right };

/// Finite relation E ⊆ U×V with packed incidence rows (over V) and columns (over U).
///
/// Both orientations are stored: row(u) has bit v iff col(v) has bit u. Instances are
/// immutable once built and may be shared freely across threads.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  /// Edgeless graph on the given sides.
  BipartiteGraph(std::size_t left_size, std::size_t right_size);

  /// Takes ownership of per-left-vertex rows; the column view is derived by block transposition.
  static BipartiteGraph from_rows(std::size_t left_size, std::size_t right_size, std::vector<BitSet> rows);

  std::size_t left_size() const { return left_size_; }
  std::size_t right_size() const { return right_size_; }
  std::size_t side_size(Side side) const { return side == Side::Left ? left_size_ : right_size_; }

  bool has_edge(Vertex u, Vertex v) const { return rows_[u].test(v); }
  /// Right neighbours of u.
  const BitSet& row(Vertex u) const { return rows_[u]; }
  /// Left neighbours of v.
  const BitSet& col(Vertex v) const { return cols_[v]; }

  std::size_t edge_count() const;
  std::vector<Edge> edges() const;

  /// The opposite relation E*(v,u) = E(u,v), sides swapped.
  BipartiteGraph transposed() const;
  /// Same sides, E replaced by its complement in U×V.
  BipartiteGraph complemented() const;

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.left_size_ == b.left_size_ && a.right_size_ == b.right_size_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t left_size_ = 0;
  std::size_t right_size_ = 0;
  std::vector<BitSet> rows_;
  std::vector<BitSet> cols_;
};

/// Builds a graph from an edge list; duplicates are allowed. Throws OutOfRange.
BipartiteGraph build_graph(std::size_t left_size, std::size_t right_size, std::span<const Edge> edges);
BipartiteGraph build_graph(std::size_t left_size, std::size_t right_size, std::initializer_list<Edge> edges);

/// Transposes a packed bit matrix with `row_count` rows of `col_count` bits each.
std::vector<BitSet> transpose_bits(const std::vector<BitSet>& rows, std::size_t row_count, std::size_t col_count);

struct VertexSet {
  Side side = Side::Left;
  BitSet members;

  static VertexSet empty(const BipartiteGraph& g, Side side);
  static VertexSet full(const BipartiteGraph& g, Side side);
  /// Throws OutOfRange for ids outside the side.
  static VertexSet of(const BipartiteGraph& g, Side side, std::span<const Vertex> ids);
  static VertexSet of(const BipartiteGraph& g, Side side, std::initializer_list<Vertex> ids);

  std::size_t size() const { return members.count(); }
  bool empty() const { return members.none(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

/// |E ∩ (X×Y)|, computed by word-parallel row intersections.
std::uint64_t edge_count_between(const BipartiteGraph& g, const VertexSet& x, const VertexSet& y);

enum class Homogeneity { EdgeDense, NonEdgeDense, Neither };

struct HomogeneityVerdict {
  Homogeneity kind = Homogeneity::Neither;
  std::uint64_t edge_count = 0;
  std::uint64_t box_size = 0;
  /// (1-eps)^2 * box_size, exact.
  Rational threshold;
};

/// Classifies a box from its counts. EdgeDense wins when both densities clear the threshold.
HomogeneityVerdict classify_box(std::uint64_t edge_count, std::uint64_t box_size, const Rational& eps);

/// eps-homogeneity of E restricted to X×Y. Throws EmptySide when X or Y is empty.
HomogeneityVerdict is_eps_homogeneous(const BipartiteGraph& g, const VertexSet& x, const VertexSet& y,
                                      const Rational& eps);

struct RegularityCheck {
  bool regular = true;
  /// False when the A-subsets were sampled rather than enumerated.
  bool exhaustive = true;
  std::uint64_t subsets_examined = 0;
  /// Rule-of-three 95% upper bound on the fraction of qualifying A-subsets admitting a
  /// violation; zero for exhaustive runs.
  double violation_rate_bound = 0.0;
  /// A violating pair, when one was found.
  std::optional<std::pair<VertexSet, VertexSet>> violation;
};

/// Max side size for which all A ⊆ X are enumerated.
inline constexpr std::size_t kRegularityExhaustiveCap = 16;

/// Density-deviation eps-regularity: for all A ⊆ X, B ⊆ Y with |A| >= eps|X|, |B| >= eps|Y|
/// (both nonempty), |d(A,B) - d(X,Y)| <= eps.
///
/// For a fixed A the extreme densities over B of a fixed size come from the |B| highest or
/// lowest A-degrees in Y, so only one side is ever enumerated. The smaller side is
/// enumerated when it has at most kRegularityExhaustiveCap vertices; otherwise `samples`
/// random subsets of it are drawn from `seed`.
RegularityCheck is_eps_regular(const BipartiteGraph& g, const VertexSet& x, const VertexSet& y, const Rational& eps,
                               std::uint64_t samples = 4096, std::uint64_t seed = 0);

}  // namespace hgw
