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

#include <gtest/gtest.h>

#include <random>

#include "hgw/bigraph.hpp"
#include "hgw/error.hpp"
#include "hgw/generators.hpp"
#include "oracles.hpp"

namespace hgw {
namespace {

BipartiteGraph hg2() { return build_graph(2, 2, {{0, 0}, {0, 1}, {1, 1}}); }

VertexSet random_subset(std::mt19937_64& rng, const BipartiteGraph& g, Side side) {
  VertexSet s = VertexSet::empty(g, side);
  for (std::size_t i = 0; i < g.side_size(side); ++i) {
    if (rng() & 1U) s.members.set(i);
  }
  return s;
}

TEST(BuildGraph, ListedEdgesOnly) {
  const auto g = hg2();
  EXPECT_EQ(g.edge_count(), 3U);
  EXPECT_TRUE(g.has_edge(0, 0));
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_FALSE(g.has_edge(1, 0));
  EXPECT_TRUE(g.has_edge(1, 1));
  EXPECT_EQ(g, gen_canonical_halfgraph(2));
}

TEST(BuildGraph, CompleteAndEmpty) {
  std::vector<Edge> all;
  for (Vertex u = 0; u < 2; ++u) {
    for (Vertex v = 0; v < 3; ++v) all.emplace_back(u, v);
  }
  EXPECT_EQ(build_graph(2, 3, std::span<const Edge>(all)), gen_complete(2, 3));
  const auto empty = build_graph(3, 3, {});
  EXPECT_EQ(empty.edge_count(), 0U);
  for (Vertex u = 0; u < 3; ++u) EXPECT_TRUE(empty.row(u).none());
}

TEST(BuildGraph, DuplicatesCollapse) {
  EXPECT_EQ(build_graph(2, 2, {{0, 1}, {0, 1}, {1, 0}}).edge_count(), 2U);
}

TEST(BuildGraph, RejectsOutOfRange) {
  try {
    build_graph(2, 2, {{0, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutOfRange);
  }
  EXPECT_THROW(build_graph(2, 2, {{2, 0}}), Error);
}

TEST(BuildGraph, RowsAndColumnsAgree) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = oracle::random_graph(rng, 1 + rng() % 150, 1 + rng() % 150, 0.3);
    for (Vertex u = 0; u < g.left_size(); ++u) {
      for (Vertex v = 0; v < g.right_size(); ++v) ASSERT_EQ(g.row(u).test(v), g.col(v).test(u));
    }
    EXPECT_EQ(g.transposed().transposed(), g);
    EXPECT_EQ(g.complemented().edge_count(), g.left_size() * g.right_size() - g.edge_count());
  }
}

TEST(EdgeCountBetween, Examples) {
  const auto k23 = gen_complete(2, 3);
  EXPECT_EQ(edge_count_between(k23, VertexSet::full(k23, Side::Left), VertexSet::full(k23, Side::Right)), 6U);
  const auto h = hg2();
  EXPECT_EQ(edge_count_between(h, VertexSet::of(h, Side::Left, {0, 1}), VertexSet::of(h, Side::Right, {0, 1})), 3U);
  const auto e = build_graph(3, 3, {});
  EXPECT_EQ(edge_count_between(e, VertexSet::of(e, Side::Left, {0, 2}), VertexSet::full(e, Side::Right)), 0U);
  EXPECT_EQ(edge_count_between(e, VertexSet::empty(e, Side::Left), VertexSet::empty(e, Side::Right)), 0U);
}

TEST(EdgeCountBetween, MatchesColumnCount) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = oracle::random_graph(rng, 1 + rng() % 80, 1 + rng() % 80);
    const auto x = random_subset(rng, g, Side::Left);
    const auto y = random_subset(rng, g, Side::Right);
    std::uint64_t via_cols = 0;
    y.members.for_each([&](std::size_t v) { via_cols += g.col(static_cast<Vertex>(v)).intersection_count(x.members); });
    EXPECT_EQ(edge_count_between(g, x, y), via_cols);
  }
}

TEST(Homogeneity, Examples) {
  const auto eps = make_rational(1, 10);
  const auto k23 = gen_complete(2, 3);
  EXPECT_EQ(is_eps_homogeneous(k23, VertexSet::full(k23, Side::Left), VertexSet::full(k23, Side::Right), eps).kind,
            Homogeneity::EdgeDense);
  const auto e = build_graph(3, 3, {});
  EXPECT_EQ(is_eps_homogeneous(e, VertexSet::full(e, Side::Left), VertexSet::full(e, Side::Right), eps).kind,
            Homogeneity::NonEdgeDense);
  const auto h = hg2();
  const auto v = is_eps_homogeneous(h, VertexSet::full(h, Side::Left), VertexSet::full(h, Side::Right), eps);
  EXPECT_EQ(v.kind, Homogeneity::Neither);
  EXPECT_EQ(v.edge_count, 3U);
  EXPECT_EQ(v.box_size, 4U);
  EXPECT_EQ(v.threshold, make_rational(81, 25));
}

TEST(Homogeneity, BoundaryIsInclusive) {
  // (1 - 1/2)^2 * 4 = 1, so one edge out of four is exactly on the threshold.
  const auto half = make_rational(1, 2);
  EXPECT_EQ(classify_box(1, 4, half).kind, Homogeneity::EdgeDense);
  EXPECT_EQ(classify_box(0, 4, half).kind, Homogeneity::NonEdgeDense);
  // (1 - 1/10)^2 * 100 = 81.
  EXPECT_EQ(classify_box(81, 100, make_rational(1, 10)).kind, Homogeneity::EdgeDense);
  EXPECT_EQ(classify_box(80, 100, make_rational(1, 10)).kind, Homogeneity::Neither);
  EXPECT_EQ(classify_box(19, 100, make_rational(1, 10)).kind, Homogeneity::NonEdgeDense);
}

TEST(Homogeneity, AgreesWithIntegerOracle) {
  for (std::int64_t q = 1; q <= 12; ++q) {
    for (std::int64_t p = 0; p <= q; ++p) {
      for (std::uint64_t box = 1; box <= 30; ++box) {
        for (std::uint64_t e = 0; e <= box; ++e) {
          const int expected = oracle::homogeneity_kind(e, box, p, q);
          ASSERT_EQ(static_cast<int>(classify_box(e, box, make_rational(p, q)).kind), expected)
              << e << "/" << box << " eps " << p << "/" << q;
        }
      }
    }
  }
}

TEST(Homogeneity, ZeroEpsNeedsPureBox) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = oracle::random_graph(rng, 1 + rng() % 5, 1 + rng() % 5, 0.7);
    const auto x = VertexSet::full(g, Side::Left);
    const auto y = VertexSet::full(g, Side::Right);
    const auto v = is_eps_homogeneous(g, x, y, Rational(0));
    const auto box = x.size() * y.size();
    const bool pure = v.edge_count == 0 || v.edge_count == box;
    EXPECT_EQ(v.kind != Homogeneity::Neither, pure);
  }
}

TEST(Homogeneity, MonotoneInEps) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t box = 1 + rng() % 50;
    const std::uint64_t e = rng() % (box + 1);
    bool was_homogeneous = false;
    for (std::int64_t p = 0; p <= 20; ++p) {
      const bool now = classify_box(e, box, make_rational(p, 20)).kind != Homogeneity::Neither;
      EXPECT_TRUE(now || !was_homogeneous);
      was_homogeneous = now;
    }
  }
}

TEST(Homogeneity, ComplementDuality) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = oracle::random_graph(rng, 1 + rng() % 6, 1 + rng() % 6, trial % 2 ? 0.9 : 0.5);
    const auto x = random_subset(rng, g, Side::Left);
    const auto y = random_subset(rng, g, Side::Right);
    if (x.empty() || y.empty()) continue;
    const auto eps = make_rational(static_cast<std::int64_t>(rng() % 5), 10);
    const auto v = is_eps_homogeneous(g, x, y, eps);
    const auto c = is_eps_homogeneous(g.complemented(), x, y, eps);
    EXPECT_EQ(c.edge_count, v.box_size - v.edge_count);
    if (v.kind == Homogeneity::EdgeDense) {
      EXPECT_TRUE(c.kind == Homogeneity::NonEdgeDense || c.kind == Homogeneity::EdgeDense);
      EXPECT_GE(Rational(c.box_size - c.edge_count), c.threshold);
    }
  }
}

TEST(Homogeneity, EmptySideRejected) {
  const auto h = hg2();
  try {
    is_eps_homogeneous(h, VertexSet::empty(h, Side::Left), VertexSet::full(h, Side::Right), make_rational(1, 10));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptySide);
  }
}

TEST(Regularity, Examples) {
  const auto k23 = gen_complete(2, 3);
  EXPECT_TRUE(
      is_eps_regular(k23, VertexSet::full(k23, Side::Left), VertexSet::full(k23, Side::Right), make_rational(3, 10))
          .regular);
  const auto e = build_graph(4, 5, {});
  for (std::int64_t p : {0, 1, 5}) {
    EXPECT_TRUE(
        is_eps_regular(e, VertexSet::full(e, Side::Left), VertexSet::full(e, Side::Right), make_rational(p, 10))
            .regular);
  }
  const auto h = hg2();
  const auto full_l = VertexSet::full(h, Side::Left);
  const auto full_r = VertexSet::full(h, Side::Right);
  const auto check = is_eps_regular(h, full_l, full_r, make_rational(1, 4));
  EXPECT_TRUE(check.exhaustive);
  EXPECT_EQ(check.regular, oracle::eps_regular(h, full_l, full_r, make_rational(1, 4)));
  // Single vertices already deviate: d({0},{0}) = 1 vs 3/4 and d({1},{0}) = 0.
  EXPECT_FALSE(check.regular);
  ASSERT_TRUE(check.violation.has_value());
}

TEST(Regularity, MatchesBruteForce) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = oracle::random_graph(rng, 1 + rng() % 6, 1 + rng() % 6, 0.2 + 0.6 * (trial % 3) / 2.0);
    auto x = random_subset(rng, g, Side::Left);
    auto y = random_subset(rng, g, Side::Right);
    if (x.empty()) x = VertexSet::full(g, Side::Left);
    if (y.empty()) y = VertexSet::full(g, Side::Right);
    const auto eps = make_rational(static_cast<std::int64_t>(rng() % 11), 10);
    const auto check = is_eps_regular(g, x, y, eps);
    ASSERT_EQ(check.regular, oracle::eps_regular(g, x, y, eps)) << "trial " << trial;
    if (!check.regular) {
      const auto& [a, b] = *check.violation;
      EXPECT_TRUE(a.members.is_subset_of(x.members));
      EXPECT_TRUE(b.members.is_subset_of(y.members));
      // The reported pair really deviates by more than eps.
      const Rational da = Rational(edge_count_between(g, a, b)) / (a.size() * b.size());
      const Rational dx = Rational(edge_count_between(g, x, y)) / (x.size() * y.size());
      EXPECT_GT(da > dx ? da - dx : dx - da, eps);
    }
  }
}

TEST(Regularity, LargeSidesAreSampled) {
  std::mt19937_64 rng(8);
  const auto g = oracle::random_graph(rng, 40, 40, 0.5);
  const auto x = VertexSet::full(g, Side::Left);
  const auto y = VertexSet::full(g, Side::Right);
  const auto a = is_eps_regular(g, x, y, make_rational(1, 20), 512, 3);
  const auto b = is_eps_regular(g, x, y, make_rational(1, 20), 512, 3);
  EXPECT_FALSE(a.exhaustive);
  EXPECT_EQ(a.regular, b.regular);
  EXPECT_EQ(a.subsets_examined, b.subsets_examined);
  // Complete graphs are regular whatever is sampled.
  const auto k = gen_complete(30, 30);
  const auto kr = is_eps_regular(k, VertexSet::full(k, Side::Left), VertexSet::full(k, Side::Right),
                                 make_rational(1, 10), 256, 1);
  EXPECT_TRUE(kr.regular);
  EXPECT_DOUBLE_EQ(kr.violation_rate_bound, 3.0 / 256);
}

}  // namespace
}  // namespace hgw
