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

#include <cmath>
#include <random>
#include <set>

#include "hgw/error.hpp"
#include "hgw/generators.hpp"
#include "hgw/halfgraph.hpp"
#include "oracles.hpp"

namespace hgw {
namespace {

const BipartiteGraph kHg2 = gen_canonical_halfgraph(2);

TEST(VerifyWitness, Examples) {
  EXPECT_TRUE(verify_witness(kHg2, {{0, 1}, {0, 1}}));
  EXPECT_FALSE(verify_witness(kHg2, {{1, 0}, {0, 1}}));
  const auto k23 = gen_complete(2, 3);
  for (Vertex a0 = 0; a0 < 2; ++a0) {
    for (Vertex a1 = 0; a1 < 2; ++a1) {
      for (Vertex b0 = 0; b0 < 3; ++b0) {
        for (Vertex b1 = 0; b1 < 3; ++b1) EXPECT_FALSE(verify_witness(k23, {{a0, a1}, {b0, b1}}));
      }
    }
  }
}

TEST(VerifyWitness, RejectsOutOfRange) {
  try {
    verify_witness(kHg2, {{0, 2}, {0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutOfRange);
  }
}

TEST(CountNaive, Examples) {
  EXPECT_EQ(count_halfgraphs_naive(kHg2, 1), 3U);
  EXPECT_EQ(count_halfgraphs_naive(kHg2, 2), 1U);
  EXPECT_EQ(count_halfgraphs_naive(gen_complete(3, 4), 2), 0U);
  EXPECT_EQ(oracle::count_halfgraphs(kHg2, 2), 1U);
}

TEST(CountFast, Examples) {
  EXPECT_EQ(count_halfgraphs_fast(kHg2, 2), 1U);
  EXPECT_EQ(count_halfgraphs_fast(build_graph(3, 3, {}), 1), 0U);
  const auto hg3 = gen_canonical_halfgraph(3);
  EXPECT_EQ(count_halfgraphs_fast(hg3, 2), oracle::count_halfgraphs(hg3, 2));
}

TEST(CountFast, MatchesOracleOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const auto g = oracle::random_graph(rng, 1 + rng() % 5, 1 + rng() % 5, 0.2 + 0.15 * (trial % 5));
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto expected = oracle::count_halfgraphs(g, k);
      ASSERT_EQ(count_halfgraphs_naive(g, k), expected);
      ASSERT_EQ(count_halfgraphs_fast(g, k), expected);
    }
  }
}

TEST(CountFast, WordBoundaryGraphs) {
  // Sides straddling 64-bit words exercise padding handling in the kernel.
  std::mt19937_64 rng(12);
  for (std::size_t left : {63, 64, 65, 130}) {
    const auto g = oracle::random_graph(rng, left, 9, 0.5);
    EXPECT_EQ(count_halfgraphs_fast(g, 2), count_halfgraphs_naive(g, 2, std::uint64_t{1} << 30));
  }
}

TEST(CountFast, IndependentOfWorkerCount) {
  std::mt19937_64 rng(13);
  const auto g = oracle::random_graph(rng, 40, 24, 0.5);
  const auto one = count_halfgraphs_fast(g, 3, kDefaultCountBudget, 1);
  for (unsigned workers : {2U, 3U, 8U}) EXPECT_EQ(count_halfgraphs_fast(g, 3, kDefaultCountBudget, workers), one);
}

TEST(Count, BudgetsAndArguments) {
  const auto g = gen_canonical_halfgraph(20);
  try {
    count_halfgraphs_naive(g, 4, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
  EXPECT_THROW(count_halfgraphs_fast(g, 7, 1000), Error);
  EXPECT_THROW(count_halfgraphs_fast(g, 0), Error);
}

TEST(Count, CanonicalFamily) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto g = gen_canonical_halfgraph(n);
    for (std::size_t k = 1; k <= 3; ++k) EXPECT_EQ(count_halfgraphs_fast(g, k), oracle::count_halfgraphs(g, k));
  }
}

TEST(Count, OppositeRelationPreservesCount) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = oracle::random_graph(rng, 1 + rng() % 6, 1 + rng() % 6);
    const auto op = g.transposed();
    for (std::size_t k = 1; k <= 3; ++k) EXPECT_EQ(count_halfgraphs_fast(g, k), count_halfgraphs_fast(op, k));
    // Index reversal turns a witness of G into a witness of the opposite relation.
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto w = find_halfgraph(g, k);
      if (!w) continue;
      HalfGraphWitness rev;
      for (std::size_t i = k; i-- > 0;) {
        rev.a.push_back(w->b[i]);
        rev.b.push_back(w->a[i]);
      }
      EXPECT_TRUE(verify_witness(op, rev));
    }
  }
}

TEST(Density, Examples) {
  EXPECT_EQ(halfgraph_density(1, kHg2, 2, DensityMode::Total), make_rational(1, 256));
  EXPECT_EQ(halfgraph_density(3, kHg2, 1, DensityMode::Sorted), make_rational(3, 4));
  EXPECT_EQ(halfgraph_density(0, gen_complete(3, 5), 2, DensityMode::Sorted), Rational(0));
  EXPECT_EQ(halfgraph_density(6, gen_complete(2, 3), 1, DensityMode::Total), make_rational(6, 25));
}

TEST(Density, ZeroSide) {
  try {
    halfgraph_density(0, BipartiteGraph(0, 3), 1, DensityMode::Sorted);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroSide);
  }
}

TEST(FindHalfgraph, Examples) {
  EXPECT_EQ(find_halfgraph(kHg2, 2), (HalfGraphWitness{{0, 1}, {0, 1}}));
  EXPECT_FALSE(find_halfgraph(gen_complete(2, 3), 2).has_value());
  EXPECT_EQ(find_halfgraph(kHg2, 1), (HalfGraphWitness{{0}, {0}}));
}

TEST(FindHalfgraph, LexLeastAndDistinct) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 80; ++trial) {
    const auto g = oracle::random_graph(rng, 1 + rng() % 4, 1 + rng() % 4);
    for (std::size_t k = 1; k <= 2; ++k) {
      // Oracle: scan tuples in (b..., a...) lexicographic order.
      std::optional<HalfGraphWitness> expected;
      const std::size_t L = g.left_size();
      const std::size_t R = g.right_size();
      std::size_t total = 1;
      for (std::size_t i = 0; i < k; ++i) total *= L * R;
      for (std::size_t code = 0; code < total && !expected; ++code) {
        // Most significant digits are b_1..b_k, then a_1..a_k.
        std::size_t rest = code;
        HalfGraphWitness w{std::vector<Vertex>(k), std::vector<Vertex>(k)};
        for (std::size_t i = k; i-- > 0;) {
          w.a[i] = static_cast<Vertex>(rest % L);
          rest /= L;
        }
        for (std::size_t i = k; i-- > 0;) {
          w.b[i] = static_cast<Vertex>(rest % R);
          rest /= R;
        }
        if (verify_witness(g, w)) expected = w;
      }
      const auto got = find_halfgraph(g, k);
      ASSERT_EQ(got, expected);
      if (got) {
        EXPECT_EQ(std::set<Vertex>(got->a.begin(), got->a.end()).size(), k);
        EXPECT_EQ(std::set<Vertex>(got->b.begin(), got->b.end()).size(), k);
      }
    }
  }
}

TEST(LadderIndex, Examples) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto g = gen_canonical_halfgraph(n);
    EXPECT_EQ(ladder_index(g, n + 1), n);
    EXPECT_EQ(oracle::ladder(g, n + 1), n);
  }
  EXPECT_EQ(ladder_index(gen_complete(3, 2), 3), 1U);
  EXPECT_EQ(ladder_index(build_graph(3, 3, {}), 3), 0U);
  EXPECT_THROW(ladder_index(kHg2, 0), Error);
}

TEST(LadderIndex, BoundedBySmallerSide) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = oracle::random_graph(rng, 1 + rng() % 6, 1 + rng() % 6);
    const auto l = ladder_index(g, 6);
    EXPECT_LE(l, std::min(g.left_size(), g.right_size()));
    EXPECT_EQ(ladder_index(g, 3), oracle::ladder(g, 3));
  }
}

TEST(Estimate, Examples) {
  const auto k23 = gen_complete(2, 3);
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto e = estimate_halfgraph_density(k23, 2, 500, seed, DensityMode::Total);
    EXPECT_EQ(e.estimate, Rational(0));
    EXPECT_EQ(e.standard_error, 0.0);
  }
  const auto empty = estimate_halfgraph_density(build_graph(4, 4, {}), 1, 100, 9, DensityMode::Sorted);
  EXPECT_EQ(empty.hits, 0U);
  const auto e = estimate_halfgraph_density(kHg2, 1, 10000, 5, DensityMode::Sorted);
  EXPECT_NEAR(to_double(e.estimate), 0.75, 4 * e.standard_error + 1e-9);
  EXPECT_EQ(e.samples, 10000U);
}

TEST(Estimate, DeterministicPerSeed) {
  const auto g = gen_canonical_halfgraph(6);
  const auto a = estimate_halfgraph_density(g, 2, 2000, 77, DensityMode::Total);
  const auto b = estimate_halfgraph_density(g, 2, 2000, 77, DensityMode::Total);
  EXPECT_EQ(a.hits, b.hits);
  EXPECT_EQ(a.estimate, b.estimate);
}

TEST(Estimate, ConvergesToExactDensity) {
  std::mt19937_64 rng(17);
  const auto g = oracle::random_graph(rng, 5, 4, 0.6);
  for (DensityMode mode : {DensityMode::Sorted, DensityMode::Total}) {
    for (std::size_t k : {1U, 2U}) {
      const double exact = to_double(halfgraph_density(count_halfgraphs_fast(g, k), g, k, mode));
      int inside = 0;
      for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto e = estimate_halfgraph_density(g, k, 4000, seed, mode);
        if (std::abs(to_double(e.estimate) - exact) <= 4 * e.standard_error + 1e-12) ++inside;
      }
      EXPECT_GE(inside, 95) << "k=" << k;
    }
  }
}

}  // namespace
}  // namespace hgw
