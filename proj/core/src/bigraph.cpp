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

#include "hgw/bigraph.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "hgw/error.hpp"
#include "hgw/random.hpp"

namespace hgw {

namespace {

// In-place transpose of a 64x64 bit block: bit c of rows[r] moves to bit r of rows[c].
void transpose_block(std::array<std::uint64_t, 64>& a) {
  std::uint64_t mask = 0x00000000FFFFFFFFULL;
  for (unsigned j = 32; j != 0; j >>= 1, mask ^= (mask << j)) {
    for (unsigned k = 0; k < 64; k = ((k | j) + 1) & ~j) {
      const std::uint64_t t = ((a[k] >> j) ^ a[k | j]) & mask;
      a[k] ^= t << j;
      a[k | j] ^= t;
    }
  }
}

void check_side(const BipartiteGraph& g, const VertexSet& s, Side expected, const char* what) {
  if (s.side != expected || s.members.size() != g.side_size(expected)) {
    throw Error(ErrorCode::BadArgument, std::string(what) + " does not belong to the expected side of the graph");
  }
}

}  // namespace

std::vector<BitSet> transpose_bits(const std::vector<BitSet>& rows, std::size_t row_count, std::size_t col_count) {
  std::vector<BitSet> cols(col_count, BitSet(row_count));
  const std::size_t row_blocks = BitSet::words_for(row_count);
  const std::size_t col_blocks = BitSet::words_for(col_count);
  std::array<std::uint64_t, 64> block{};
  for (std::size_t rb = 0; rb < row_blocks; ++rb) {
    for (std::size_t cb = 0; cb < col_blocks; ++cb) {
      bool nonzero = false;
      for (std::size_t i = 0; i < 64; ++i) {
        const std::size_t r = rb * 64 + i;
        block[i] = r < row_count ? rows[r].words()[cb] : 0;
        nonzero |= block[i] != 0;
      }
      if (!nonzero) continue;
      transpose_block(block);
      for (std::size_t i = 0; i < 64; ++i) {
        const std::size_t c = cb * 64 + i;
        if (c < col_count) cols[c].mutable_words()[rb] = block[i];
      }
    }
  }
  return cols;
}

BipartiteGraph::BipartiteGraph(std::size_t left_size, std::size_t right_size)
    : left_size_(left_size),
      right_size_(right_size),
      rows_(left_size, BitSet(right_size)),
      cols_(right_size, BitSet(left_size)) {}

BipartiteGraph BipartiteGraph::from_rows(std::size_t left_size, std::size_t right_size, std::vector<BitSet> rows) {
  if (rows.size() != left_size) throw Error(ErrorCode::BadArgument, "row count does not match left side size");
  for (const BitSet& r : rows) {
    if (r.size() != right_size) throw Error(ErrorCode::BadArgument, "row width does not match right side size");
  }
  BipartiteGraph g;
  g.left_size_ = left_size;
  g.right_size_ = right_size;
  g.cols_ = transpose_bits(rows, left_size, right_size);
  g.rows_ = std::move(rows);
  return g;
}

std::size_t BipartiteGraph::edge_count() const {
  std::size_t total = 0;
  for (const BitSet& r : rows_) total += r.count();
  return total;
}

std::vector<Edge> BipartiteGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < left_size_; ++u) {
    rows_[u].for_each([&](std::size_t v) { out.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v)); });
  }
  return out;
}

BipartiteGraph BipartiteGraph::transposed() const {
  BipartiteGraph g;
  g.left_size_ = right_size_;
  g.right_size_ = left_size_;
  g.rows_ = cols_;
  g.cols_ = rows_;
  return g;
}

BipartiteGraph BipartiteGraph::complemented() const {
  BipartiteGraph g = *this;
  for (BitSet& r : g.rows_) r.flip();
  for (BitSet& c : g.cols_) c.flip();
  return g;
}

BipartiteGraph build_graph(std::size_t left_size, std::size_t right_size, std::span<const Edge> edges) {
  std::vector<BitSet> rows(left_size, BitSet(right_size));
  for (const auto& [u, v] : edges) {
    if (u >= left_size || v >= right_size) {
      throw Error(ErrorCode::OutOfRange, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                             ") outside a " + std::to_string(left_size) + "x" +
                                             std::to_string(right_size) + " graph");
    }
    rows[u].set(v);
  }
  return BipartiteGraph::from_rows(left_size, right_size, std::move(rows));
}

BipartiteGraph build_graph(std::size_t left_size, std::size_t right_size, std::initializer_list<Edge> edges) {
  return build_graph(left_size, right_size, std::span<const Edge>(edges.begin(), edges.size()));
}

VertexSet VertexSet::empty(const BipartiteGraph& g, Side side) { return {side, BitSet(g.side_size(side))}; }

VertexSet VertexSet::full(const BipartiteGraph& g, Side side) { return {side, BitSet(g.side_size(side), true)}; }

VertexSet VertexSet::of(const BipartiteGraph& g, Side side, std::span<const Vertex> ids) {
  VertexSet s = empty(g, side);
  for (Vertex id : ids) {
    if (id >= s.members.size()) throw Error(ErrorCode::OutOfRange, "vertex " + std::to_string(id) + " out of range");
    s.members.set(id);
  }
  return s;
}

VertexSet VertexSet::of(const BipartiteGraph& g, Side side, std::initializer_list<Vertex> ids) {
  return of(g, side, std::span<const Vertex>(ids.begin(), ids.size()));
}

std::uint64_t edge_count_between(const BipartiteGraph& g, const VertexSet& x, const VertexSet& y) {
  check_side(g, x, Side::Left, "X");
  check_side(g, y, Side::Right, "Y");
  std::uint64_t total = 0;
  x.members.for_each([&](std::size_t u) { total += g.row(static_cast<Vertex>(u)).intersection_count(y.members); });
  return total;
}

HomogeneityVerdict classify_box(std::uint64_t edge_count, std::uint64_t box_size, const Rational& eps) {
  require_unit_interval(eps, "eps");
  HomogeneityVerdict verdict;
  verdict.edge_count = edge_count;
  verdict.box_size = box_size;
  const Rational keep = 1 - eps;
  verdict.threshold = keep * keep * box_size;
  if (Rational(edge_count) >= verdict.threshold) {
    verdict.kind = Homogeneity::EdgeDense;
  } else if (Rational(box_size - edge_count) >= verdict.threshold) {
    verdict.kind = Homogeneity::NonEdgeDense;
  } else {
    verdict.kind = Homogeneity::Neither;
  }
  return verdict;
}

HomogeneityVerdict is_eps_homogeneous(const BipartiteGraph& g, const VertexSet& x, const VertexSet& y,
                                      const Rational& eps) {
  check_side(g, x, Side::Left, "X");
  check_side(g, y, Side::Right, "Y");
  const std::uint64_t nx = x.size();
  const std::uint64_t ny = y.size();
  if (nx == 0 || ny == 0) throw Error(ErrorCode::EmptySide, "homogeneity needs nonempty X and Y");
  return classify_box(edge_count_between(g, x, y), nx * ny, eps);
}

namespace {

// Checks every B ⊆ Y for one fixed A, given the A-degrees of Y's vertices.
// Deviation test: |e(A,B)/(|A||B|) - e(X,Y)/(|X||Y|)| <= p/q, cross-multiplied.
struct DeviationTester {
  BigInt p, q;
  std::uint64_t nx, ny, exy;
  std::uint64_t min_b;

  // Returns the violating size and whether the high (true) or low end violates.
  std::optional<std::pair<std::size_t, bool>> test(std::vector<std::uint64_t>& degrees, std::uint64_t a_size) const {
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    const std::size_t n = degrees.size();
    std::vector<std::uint64_t> prefix(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + degrees[i];
    const BigInt box = BigInt(nx) * ny;
    for (std::size_t t = std::max<std::uint64_t>(min_b, 1); t <= n; ++t) {
      const BigInt rhs = p * a_size * t * box;
      const BigInt base = BigInt(exy) * a_size * t;
      const BigInt high = BigInt(prefix[t]) * box - base;
      const BigInt low = BigInt(prefix[n] - prefix[n - t]) * box - base;
      if (abs(high) * q > rhs) return std::make_pair(t, true);
      if (abs(low) * q > rhs) return std::make_pair(t, false);
    }
    return std::nullopt;
  }
};

std::uint64_t ceil_mul(const Rational& eps, std::uint64_t n) {
  const Rational v = eps * n;
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  return BigInt((num + den - 1) / den).convert_to<std::uint64_t>();
}

}  // namespace

RegularityCheck is_eps_regular(const BipartiteGraph& g, const VertexSet& x, const VertexSet& y, const Rational& eps,
                               std::uint64_t samples, std::uint64_t seed) {
  check_side(g, x, Side::Left, "X");
  check_side(g, y, Side::Right, "Y");
  require_unit_interval(eps, "eps");
  if (x.empty() || y.empty()) throw Error(ErrorCode::EmptySide, "regularity needs nonempty X and Y");

  // Enumerate subsets of the smaller side ("outer"); the other side ("inner") is optimised.
  const bool outer_is_left = x.size() <= y.size();
  const std::vector<std::size_t> outer = outer_is_left ? x.members.members() : y.members.members();
  const std::vector<std::size_t> inner = outer_is_left ? y.members.members() : x.members.members();

  DeviationTester tester{boost::multiprecision::numerator(eps), boost::multiprecision::denominator(eps),
                         x.size(), y.size(), edge_count_between(g, x, y), ceil_mul(eps, inner.size())};
  const std::uint64_t min_a = std::max<std::uint64_t>(ceil_mul(eps, outer.size()), 1);

  auto incident = [&](std::size_t o, std::size_t i) {
    return outer_is_left ? g.has_edge(static_cast<Vertex>(o), static_cast<Vertex>(i))
                         : g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(o));
  };

  RegularityCheck result;
  std::vector<std::uint64_t> degrees(inner.size());
  // Returns true when this choice of outer subset (given by member flags) violates.
  auto examine = [&](const std::vector<bool>& chosen, std::uint64_t a_size) {
    std::fill(degrees.begin(), degrees.end(), 0);
    for (std::size_t oi = 0; oi < outer.size(); ++oi) {
      if (!chosen[oi]) continue;
      for (std::size_t ii = 0; ii < inner.size(); ++ii) degrees[ii] += incident(outer[oi], inner[ii]) ? 1 : 0;
    }
    ++result.subsets_examined;
    std::vector<std::uint64_t> sorted = degrees;
    const auto hit = tester.test(sorted, a_size);
    if (!hit) return false;
    // Rebuild the violating inner subset: the t highest- or lowest-degree members.
    std::vector<std::size_t> order(inner.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return hit->second ? degrees[a] > degrees[b] : degrees[a] < degrees[b];
    });
    VertexSet a_set = VertexSet::empty(g, outer_is_left ? Side::Left : Side::Right);
    VertexSet b_set = VertexSet::empty(g, outer_is_left ? Side::Right : Side::Left);
    for (std::size_t oi = 0; oi < outer.size(); ++oi) {
      if (chosen[oi]) a_set.members.set(outer[oi]);
    }
    for (std::size_t i = 0; i < hit->first; ++i) b_set.members.set(inner[order[i]]);
    result.regular = false;
    result.violation = outer_is_left ? std::make_pair(std::move(a_set), std::move(b_set))
                                     : std::make_pair(std::move(b_set), std::move(a_set));
    return true;
  };

  std::vector<bool> chosen(outer.size());
  if (outer.size() <= kRegularityExhaustiveCap) {
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << outer.size()); ++mask) {
      const auto a_size = static_cast<std::uint64_t>(std::popcount(mask));
      if (a_size < min_a) continue;
      for (std::size_t i = 0; i < outer.size(); ++i) chosen[i] = (mask >> i) & 1U;
      if (examine(chosen, a_size)) return result;
    }
    return result;
  }

  result.exhaustive = false;
  Rng rng(seed);
  std::vector<std::size_t> perm(outer.size());
  for (std::uint64_t s = 0; s < samples; ++s) {
    const std::uint64_t a_size = min_a + uniform_below(rng, outer.size() - min_a + 1);
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::fill(chosen.begin(), chosen.end(), false);
    for (std::uint64_t i = 0; i < a_size; ++i) {
      const std::size_t j = i + uniform_below(rng, perm.size() - i);
      std::swap(perm[i], perm[j]);
      chosen[perm[i]] = true;
    }
    if (examine(chosen, a_size)) return result;
  }
  result.violation_rate_bound = samples == 0 ? 1.0 : 3.0 / static_cast<double>(samples);
  return result;
}

}  // namespace hgw
