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

#include "hgw/halfgraph.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <string>
#include <thread>

#include "hgw/error.hpp"
#include "hgw/random.hpp"

namespace hgw {

namespace {

void require_height(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::BadArgument, "half-graph height must be at least 1");
}

// base^exp, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(out, base, &out)) return std::numeric_limits<std::uint64_t>::max();
  }
  return out;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) return std::numeric_limits<std::uint64_t>::max();
  return out;
}

void checked_add(std::uint64_t& acc, std::uint64_t value) {
  if (__builtin_add_overflow(acc, value, &acc)) {
    throw Error(ErrorCode::BudgetExceeded, "half-graph count exceeds 64 bits");
  }
}

// Depth-first search over right tuples (b_1..b_k) maintaining the admissible-a sets.
//
// At depth t (t b's placed) frame t holds S_0..S_{t-1} restricted by b_0..b_{t-1} plus
// the running complement prefix ⋂_{j<t} ¬N(b_j).
class RightTupleSearch {
 public:
  RightTupleSearch(const BipartiteGraph& g, std::size_t k)
      : g_(g), k_(k), frames_(k + 1, Frame{std::vector<BitSet>(k, BitSet(g.left_size())), BitSet(g.left_size(), true)}),
        tuple_(k) {}

  // Visits every right tuple whose S_i are all nonempty. The visitor receives the tuple and
  // the final sets and returns false to stop the search. first_b restricts b_1.
  template <typename Visitor>
  bool run(std::size_t first_b_begin, std::size_t first_b_end, Visitor&& visit) {
    return descend(0, first_b_begin, first_b_end, visit);
  }

 private:
  struct Frame {
    std::vector<BitSet> sets;
    BitSet complement_prefix;
  };

  template <typename Visitor>
  bool descend(std::size_t t, std::size_t begin, std::size_t end, Visitor& visit) {
    if (t == k_) return visit(tuple_, frames_[t].sets);
    const Frame& cur = frames_[t];
    Frame& nxt = frames_[t + 1];
    for (std::size_t v = begin; v < end; ++v) {
      const BitSet& column = g_.col(static_cast<Vertex>(v));
      bool alive = true;
      for (std::size_t i = 0; i < t && alive; ++i) {
        nxt.sets[i] = cur.sets[i];
        nxt.sets[i] &= column;
        alive = nxt.sets[i].any();
      }
      if (!alive) continue;
      nxt.sets[t] = cur.complement_prefix;
      nxt.sets[t] &= column;
      if (nxt.sets[t].none()) continue;
      nxt.complement_prefix = cur.complement_prefix;
      nxt.complement_prefix.subtract(column);
      tuple_[t] = static_cast<Vertex>(v);
      if (!descend(t + 1, 0, g_.right_size(), visit)) return false;
    }
    return true;
  }

  const BipartiteGraph& g_;
  std::size_t k_;
  std::vector<Frame> frames_;
  std::vector<Vertex> tuple_;
};

}  // namespace

bool verify_witness(const BipartiteGraph& g, const HalfGraphWitness& w) {
  if (w.a.size() != w.b.size()) throw Error(ErrorCode::BadArgument, "witness has mismatched a/b lengths");
  require_height(w.a.size());
  for (Vertex u : w.a) {
    if (u >= g.left_size()) throw Error(ErrorCode::OutOfRange, "left vertex " + std::to_string(u) + " out of range");
  }
  for (Vertex v : w.b) {
    if (v >= g.right_size()) throw Error(ErrorCode::OutOfRange, "right vertex " + std::to_string(v) + " out of range");
  }
  const std::size_t k = w.a.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (g.has_edge(w.a[i], w.b[j]) != (i <= j)) return false;
    }
  }
  return true;
}

std::uint64_t count_halfgraphs_naive(const BipartiteGraph& g, std::size_t k, std::uint64_t budget) {
  require_height(k);
  const std::uint64_t space = saturating_mul(saturating_pow(g.left_size(), k), saturating_pow(g.right_size(), k));
  if (space > budget) {
    throw Error(ErrorCode::BudgetExceeded, "naive count needs " + std::to_string(space) + " tuples, budget " +
                                               std::to_string(budget));
  }
  if (space == 0) return 0;
  std::vector<Vertex> a(k, 0);
  std::vector<Vertex> b(k, 0);
  // Odometer increment; returns false after wrapping past the last tuple.
  auto advance = [](std::vector<Vertex>& t, std::size_t radix) {
    for (std::size_t i = t.size(); i-- > 0;) {
      if (++t[i] < radix) return true;
      t[i] = 0;
    }
    return false;
  };
  std::uint64_t count = 0;
  do {
    std::fill(a.begin(), a.end(), 0);
    do {
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        for (std::size_t j = 0; j < k && ok; ++j) ok = g.has_edge(a[i], b[j]) == (i <= j);
      }
      count += ok ? 1 : 0;
    } while (advance(a, g.left_size()));
  } while (advance(b, g.right_size()));
  return count;
}

std::uint64_t count_halfgraphs_fast(const BipartiteGraph& g, std::size_t k, std::uint64_t budget, unsigned workers) {
  require_height(k);
  const std::uint64_t space = saturating_pow(g.right_size(), k);
  if (space > budget) {
    throw Error(ErrorCode::BudgetExceeded, "fast count needs " + std::to_string(space) + " right tuples, budget " +
                                               std::to_string(budget));
  }
  if (g.left_size() == 0 || g.right_size() == 0) return 0;

  auto count_range = [&g, k](std::size_t begin, std::size_t end) {
    std::uint64_t total = 0;
    RightTupleSearch search(g, k);
    search.run(begin, end, [&](const std::vector<Vertex>&, const std::vector<BitSet>& sets) {
      std::uint64_t product = 1;
      for (const BitSet& s : sets) product *= s.count();  // disjoint subsets of U: no overflow
      checked_add(total, product);
      return true;
    });
    return total;
  };

  const std::size_t n = g.right_size();
  const std::size_t worker_count = std::clamp<std::size_t>(workers, 1, n);
  if (worker_count == 1) return count_range(0, n);

  std::vector<std::uint64_t> partial(worker_count, 0);
  std::vector<std::exception_ptr> failures(worker_count);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < worker_count; ++w) {
      pool.emplace_back([&, w] {
        try {
          partial[w] = count_range(n * w / worker_count, n * (w + 1) / worker_count);
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
  }
  std::uint64_t total = 0;
  for (std::size_t w = 0; w < worker_count; ++w) {
    if (failures[w]) std::rethrow_exception(failures[w]);
    checked_add(total, partial[w]);
  }
  return total;
}

Rational halfgraph_density(std::uint64_t count, const BipartiteGraph& g, std::size_t k, DensityMode mode) {
  require_height(k);
  BigInt denominator = 1;
  if (mode == DensityMode::Total) {
    const BigInt n = BigInt(g.left_size()) + g.right_size();
    for (std::size_t i = 0; i < 2 * k; ++i) denominator *= n;
  } else {
    for (std::size_t i = 0; i < k; ++i) denominator *= BigInt(g.left_size()) * g.right_size();
  }
  if (denominator == 0) throw Error(ErrorCode::ZeroSide, "density undefined: empty tuple space");
  return Rational(BigInt(count), denominator);
}

std::optional<HalfGraphWitness> find_halfgraph(const BipartiteGraph& g, std::size_t k) {
  require_height(k);
  if (k > g.left_size() || k > g.right_size()) return std::nullopt;
  std::optional<HalfGraphWitness> found;
  RightTupleSearch search(g, k);
  search.run(0, g.right_size(), [&](const std::vector<Vertex>& tuple, const std::vector<BitSet>& sets) {
    HalfGraphWitness w;
    w.b = tuple;
    for (const BitSet& s : sets) w.a.push_back(static_cast<Vertex>(s.first()));
    found = std::move(w);
    return false;
  });
  return found;
}

std::size_t ladder_index(const BipartiteGraph& g, std::size_t k_max) {
  if (k_max == 0) throw Error(ErrorCode::BadArgument, "k_max must be at least 1");
  // H_k nonempty implies H_{k-1} nonempty (drop the last pair), so stop at the first miss.
  std::size_t best = 0;
  for (std::size_t k = 1; k <= k_max; ++k) {
    if (!find_halfgraph(g, k)) break;
    best = k;
  }
  return best;
}

DensityEstimate estimate_halfgraph_density(const BipartiteGraph& g, std::size_t k, std::uint64_t samples,
                                           std::uint64_t seed, DensityMode mode) {
  require_height(k);
  if (samples == 0) throw Error(ErrorCode::BadArgument, "need at least one sample");
  const std::uint64_t nu = g.left_size();
  const std::uint64_t nv = g.right_size();
  if (mode == DensityMode::Sorted ? (nu == 0 || nv == 0) : (nu + nv == 0)) {
    throw Error(ErrorCode::ZeroSide, "density undefined: empty tuple space");
  }
  Rng rng(seed);
  std::vector<std::uint64_t> a(k);
  std::vector<std::uint64_t> b(k);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    bool sorted_ok = true;
    for (std::size_t i = 0; i < k; ++i) {
      if (mode == DensityMode::Sorted) {
        a[i] = uniform_below(rng, nu);
        b[i] = uniform_below(rng, nv);
      } else {
        // Coordinates range over U ⊔ V; ids below |U| are left vertices.
        a[i] = uniform_below(rng, nu + nv);
        b[i] = uniform_below(rng, nu + nv);
        sorted_ok = sorted_ok && a[i] < nu && b[i] >= nu;
        b[i] -= nu;
      }
    }
    if (!sorted_ok) continue;
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      for (std::size_t j = 0; j < k && ok; ++j) {
        ok = g.has_edge(static_cast<Vertex>(a[i]), static_cast<Vertex>(b[j])) == (i <= j);
      }
    }
    hits += ok ? 1 : 0;
  }
  DensityEstimate out;
  out.hits = hits;
  out.samples = samples;
  out.estimate = Rational(BigInt(hits), BigInt(samples));
  const double p = static_cast<double>(hits) / static_cast<double>(samples);
  out.standard_error = std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  return out;
}

}  // namespace hgw
