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

#include "hgw/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hgw/error.hpp"
#include "hgw/random.hpp"

namespace hgw {

BipartiteGraph gen_canonical_halfgraph(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::BadArgument, "half-graph size must be at least 1");
  std::vector<BitSet> rows(n, BitSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) rows[i].set(j);
  }
  return BipartiteGraph::from_rows(n, n, std::move(rows));
}

BipartiteGraph gen_complete(std::size_t left, std::size_t right) {
  return BipartiteGraph::from_rows(left, right, std::vector<BitSet>(left, BitSet(right, true)));
}

BipartiteGraph gen_biclique_union(std::span<const BlockShape> blocks, const Rational& noise, std::uint64_t seed) {
  require_unit_interval(noise, "noise");
  if (noise == 1) throw Error(ErrorCode::BadArgument, "noise must be below 1");
  std::size_t left = 0;
  std::size_t right = 0;
  for (const auto& [l, r] : blocks) {
    left += l;
    right += r;
  }
  std::vector<BitSet> rows(left, BitSet(right));
  std::size_t u0 = 0;
  std::size_t v0 = 0;
  for (const auto& [l, r] : blocks) {
    for (std::size_t u = u0; u < u0 + l; ++u) {
      for (std::size_t v = v0; v < v0 + r; ++v) rows[u].set(v);
    }
    u0 += l;
    v0 += r;
  }
  if (noise > 0) {
    Rng rng(seed);
    for (std::size_t u = 0; u < left; ++u) {
      for (std::size_t v = 0; v < right; ++v) {
        if (bernoulli(rng, noise)) rows[u].assign(v, !rows[u].test(v));
      }
    }
  }
  return BipartiteGraph::from_rows(left, right, std::move(rows));
}

RegularityPartition block_partition(const BipartiteGraph& g, std::span<const BlockShape> blocks) {
  RegularityPartition p;
  p.left_parts.push_back(VertexSet::empty(g, Side::Left));
  p.right_parts.push_back(VertexSet::empty(g, Side::Right));
  std::size_t u0 = 0;
  std::size_t v0 = 0;
  for (const auto& [l, r] : blocks) {
    if (l > 0) {
      VertexSet part = VertexSet::empty(g, Side::Left);
      for (std::size_t u = u0; u < u0 + l; ++u) part.members.set(u);
      p.left_parts.push_back(std::move(part));
    }
    if (r > 0) {
      VertexSet part = VertexSet::empty(g, Side::Right);
      for (std::size_t v = v0; v < v0 + r; ++v) part.members.set(v);
      p.right_parts.push_back(std::move(part));
    }
    u0 += l;
    v0 += r;
  }
  validate_partition(g, p);
  return p;
}

BipartiteGraph gen_random_graph(std::size_t left, std::size_t right, const Rational& density, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<BitSet> rows(left, BitSet(right));
  for (std::size_t u = 0; u < left; ++u) {
    for (std::size_t v = 0; v < right; ++v) {
      if (bernoulli(rng, density)) rows[u].set(v);
    }
  }
  return BipartiteGraph::from_rows(left, right, std::move(rows));
}

namespace {

void require_order(std::size_t order) {
  if (order == 0) throw Error(ErrorCode::BadArgument, "group order must be positive");
  if (order > kGroupOrderBudget) {
    throw Error(ErrorCode::BudgetExceeded, "group order " + std::to_string(order) + " exceeds " +
                                               std::to_string(kGroupOrderBudget));
  }
}

using Table = std::vector<std::vector<Element>>;

}  // namespace

FiniteGroup cyclic_group(std::size_t n) {
  require_order(n);
  Table t(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = static_cast<Element>((i + j) % n);
  }
  return validate_group(t);
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::BadArgument, "dihedral group needs n >= 1");
  require_order(2 * n);
  // (r^i s^a)(r^j s^b) = r^{i + (-1)^a j} s^{a+b}
  Table t(2 * n, std::vector<Element>(2 * n));
  for (std::size_t x = 0; x < 2 * n; ++x) {
    for (std::size_t y = 0; y < 2 * n; ++y) {
      const std::size_t i = x % n;
      const std::size_t a = x / n;
      const std::size_t j = y % n;
      const std::size_t b = y / n;
      const std::size_t rot = a == 0 ? (i + j) % n : (i + n - j) % n;
      t[x][y] = static_cast<Element>(rot + n * ((a + b) % 2));
    }
  }
  return validate_group(t);
}

FiniteGroup symmetric_group(std::size_t n) {
  if (n == 0 || n > 5) throw Error(ErrorCode::BudgetExceeded, "symmetric groups are limited to 1..5 points");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&perms](const std::vector<std::size_t>& q) {
    return static_cast<Element>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  Table t(perms.size(), std::vector<Element>(perms.size()));
  std::vector<std::size_t> composed(n);
  for (std::size_t x = 0; x < perms.size(); ++x) {
    for (std::size_t y = 0; y < perms.size(); ++y) {
      for (std::size_t k = 0; k < n; ++k) composed[k] = perms[x][perms[y][k]];  // (xy)(k) = x(y(k))
      t[x][y] = index_of(composed);
    }
  }
  return validate_group(t);
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t n = g.order() * h.order();
  require_order(n);
  Table t(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto x1 = static_cast<Element>(x / h.order());
      const auto x2 = static_cast<Element>(x % h.order());
      const auto y1 = static_cast<Element>(y / h.order());
      const auto y2 = static_cast<Element>(y % h.order());
      t[x][y] = static_cast<Element>(g.multiply(x1, y1) * h.order() + h.multiply(x2, y2));
    }
  }
  return validate_group(t);
}

namespace {

class GroupSpecParser {
 public:
  explicit GroupSpecParser(std::string_view text) : text_(text) {}

  FiniteGroup parse() {
    FiniteGroup g = group();
    if (pos_ != text_.size()) fail("trailing characters");
    return g;
  }

 private:
  FiniteGroup group() {
    if (accept("product(")) {
      FiniteGroup lhs = group();
      expect(',');
      FiniteGroup rhs = group();
      expect(')');
      if (lhs.order() * rhs.order() > kGroupOrderBudget) {
        throw Error(ErrorCode::BudgetExceeded, "product order exceeds " + std::to_string(kGroupOrderBudget));
      }
      return direct_product(lhs, rhs);
    }
    if (accept("cyclic:")) return cyclic_group(number());
    if (accept("dihedral:")) return dihedral_group(number());
    if (accept("symmetric:")) return symmetric_group(number());
    fail("expected cyclic:N, dihedral:N, symmetric:N or product(A,B)");
  }

  bool accept(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::size_t number() {
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > 1'000'000) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return value;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, "group spec '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                                           ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FiniteGroup gen_group(std::string_view spec) { return GroupSpecParser(spec).parse(); }

GroupSubset gen_random_subset(const FiniteGroup& g, const Rational& density, std::uint64_t seed) {
  Rng rng(seed);
  GroupSubset s = GroupSubset::empty(g);
  for (Element x = 0; x < g.order(); ++x) {
    if (bernoulli(rng, density)) s.members.set(x);
  }
  return s;
}

}  // namespace hgw
