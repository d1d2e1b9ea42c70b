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

#include "hgw/group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "hgw/error.hpp"
#include "hgw/random.hpp"

namespace hgw {

FiniteGroup validate_group(const std::vector<std::vector<Element>>& table) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::BadArgument, "empty multiplication table");
  for (const auto& row : table) {
    if (row.size() != n) throw Error(ErrorCode::BadArgument, "multiplication table is not square");
  }

  FiniteGroup g;
  g.order_ = n;
  g.table_.reserve(n * n);
  for (const auto& row : table) g.table_.insert(g.table_.end(), row.begin(), row.end());

  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (int pass = 0; pass < 2; ++pass) {  // row i, then column i
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t j = 0; j < n; ++j) {
        const Element v = pass == 0 ? g.table_[i * n + j] : g.table_[j * n + i];
        if (v >= n || seen[v]) {
          throw Error(ErrorCode::NotLatinSquare, std::string(pass == 0 ? "row " : "column ") + std::to_string(i) +
                                                     " is not a permutation of 0.." + std::to_string(n - 1));
        }
        seen[v] = 1;
      }
    }
  }

  bool found_identity = false;
  for (Element e = 0; e < n && !found_identity; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = g.multiply(e, x) == x && g.multiply(x, e) == x;
    if (ok) {
      g.identity_ = e;
      found_identity = true;
    }
  }
  if (!found_identity) throw Error(ErrorCode::NoIdentity, "no two-sided identity");

  g.inverse_.assign(n, 0);
  for (Element x = 0; x < n; ++x) {
    Element right = 0;
    while (g.multiply(x, right) != g.identity_) ++right;  // exists: rows are permutations
    if (g.multiply(right, x) != g.identity_) {
      throw Error(ErrorCode::NoInverse, "element " + std::to_string(x) + " has no two-sided inverse");
    }
    g.inverse_[x] = right;
  }

  auto associative = [&g](Element x, Element y, Element z) {
    return g.multiply(g.multiply(x, y), z) == g.multiply(x, g.multiply(y, z));
  };
  auto fail = [](Element x, Element y, Element z) {
    throw Error(ErrorCode::NotAssociative, "(" + std::to_string(x) + "·" + std::to_string(y) + ")·" +
                                               std::to_string(z) + " differs from " + std::to_string(x) + "·(" +
                                               std::to_string(y) + "·" + std::to_string(z) + ")");
  };
  if (n <= kGroupOrderBudget) {
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        for (Element z = 0; z < n; ++z) {
          if (!associative(x, y, z)) fail(x, y, z);
        }
      }
    }
  } else {
    Rng rng(0);
    for (int s = 0; s < (1 << 16); ++s) {
      const auto x = static_cast<Element>(uniform_below(rng, n));
      const auto y = static_cast<Element>(uniform_below(rng, n));
      const auto z = static_cast<Element>(uniform_below(rng, n));
      if (!associative(x, y, z)) fail(x, y, z);
    }
    g.verified_ = false;
  }
  return g;
}

GroupSubset GroupSubset::of(const FiniteGroup& g, std::span<const Element> ids) {
  GroupSubset s = empty(g);
  for (Element id : ids) {
    if (id >= g.order()) throw Error(ErrorCode::OutOfRange, "element " + std::to_string(id) + " out of range");
    s.members.set(id);
  }
  return s;
}

GroupSubset GroupSubset::of(const FiniteGroup& g, std::initializer_list<Element> ids) {
  return of(g, std::span<const Element>(ids.begin(), ids.size()));
}

std::vector<Element> GroupSubset::elements() const {
  std::vector<Element> out;
  members.for_each([&](std::size_t i) { out.push_back(static_cast<Element>(i)); });
  return out;
}

namespace {

void check_subset(const FiniteGroup& g, const GroupSubset& s) {
  if (s.members.size() != g.order()) throw Error(ErrorCode::BadArgument, "subset belongs to a different group");
}

// {x·y : x ∈ lhs, y ∈ rhs}
GroupSubset product_set(const FiniteGroup& g, const GroupSubset& lhs, const GroupSubset& rhs) {
  GroupSubset out = GroupSubset::empty(g);
  const auto right = rhs.elements();
  lhs.members.for_each([&](std::size_t x) {
    for (Element y : right) out.members.set(g.multiply(static_cast<Element>(x), y));
  });
  return out;
}

}  // namespace

bool is_subgroup(const FiniteGroup& g, const GroupSubset& h) {
  check_subset(g, h);
  if (!h.contains(g.identity())) return false;
  // Finite, nonempty and closed under products is enough.
  const auto elems = h.elements();
  for (Element x : elems) {
    for (Element y : elems) {
      if (!h.contains(g.multiply(x, y))) return false;
    }
  }
  return true;
}

bool is_normal_subgroup(const FiniteGroup& g, const GroupSubset& h) {
  if (!is_subgroup(g, h)) return false;
  const auto elems = h.elements();
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y : elems) {
      if (!h.contains(g.multiply(g.multiply(x, y), g.inverse(x)))) return false;
    }
  }
  return true;
}

GroupSubset generated_subgroup(const FiniteGroup& g, const GroupSubset& generators) {
  check_subset(g, generators);
  GroupSubset out = GroupSubset::empty(g);
  const auto gens = generators.elements();
  std::vector<Element> frontier{g.identity()};
  out.members.set(g.identity());
  while (!frontier.empty()) {
    const Element x = frontier.back();
    frontier.pop_back();
    for (Element s : gens) {
      const Element y = g.multiply(x, s);
      if (!out.contains(y)) {
        out.members.set(y);
        frontier.push_back(y);
      }
    }
  }
  return out;
}

std::vector<GroupSubset> conjugacy_classes(const FiniteGroup& g) {
  std::vector<GroupSubset> classes;
  BitSet covered(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    if (covered.test(x)) continue;
    GroupSubset cls = GroupSubset::empty(g);
    for (Element y = 0; y < g.order(); ++y) cls.members.set(g.multiply(g.multiply(y, x), g.inverse(y)));
    covered |= cls.members;
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<GroupSubset> enumerate_normal_subgroups(const FiniteGroup& g, std::size_t max_count) {
  if (g.order() > kGroupOrderBudget) {
    throw Error(ErrorCode::BudgetExceeded, "normal subgroup enumeration is limited to order " +
                                               std::to_string(kGroupOrderBudget));
  }
  std::vector<GroupSubset> closures;
  for (const GroupSubset& cls : conjugacy_classes(g)) {
    GroupSubset closure = generated_subgroup(g, cls);
    if (std::find(closures.begin(), closures.end(), closure) == closures.end()) closures.push_back(std::move(closure));
  }

  std::vector<GroupSubset> found;
  std::set<std::vector<BitSet::Word>> seen;
  std::deque<std::size_t> pending;
  auto admit = [&](GroupSubset s) {
    std::vector<BitSet::Word> key(s.members.words().begin(), s.members.words().end());
    if (!seen.insert(std::move(key)).second) return;
    if (found.size() == max_count) {
      throw Error(ErrorCode::BudgetExceeded, "more than " + std::to_string(max_count) + " normal subgroups");
    }
    found.push_back(std::move(s));
    pending.push_back(found.size() - 1);
  };
  admit(GroupSubset::of(g, {g.identity()}));
  while (!pending.empty()) {
    const std::size_t i = pending.front();
    pending.pop_front();
    for (const GroupSubset& c : closures) {
      if (c.members.is_subset_of(found[i].members)) continue;
      admit(product_set(g, found[i], c));
    }
  }
  std::sort(found.begin(), found.end(), [](const GroupSubset& x, const GroupSubset& y) {
    const std::size_t sx = x.size();
    const std::size_t sy = y.size();
    if (sx != sy) return sx < sy;
    return BitSet::member_lex_less(x.members, y.members);
  });
  return found;
}

BipartiteGraph cayley_relation(const FiniteGroup& g, const GroupSubset& a) {
  check_subset(g, a);
  const std::size_t n = g.order();
  std::vector<BitSet> rows(n, BitSet(n));
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (a.contains(g.multiply(g.inverse(x), y))) rows[x].set(y);
    }
  }
  return BipartiteGraph::from_rows(n, n, std::move(rows));
}

BipartiteGraph phi_relation(const FiniteGroup& g, const GroupSubset& a) {
  check_subset(g, a);
  const std::size_t n = g.order();
  std::vector<BitSet> rows(n, BitSet(n));
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (a.contains(g.multiply(y, x))) rows[x].set(y);
    }
  }
  return BipartiteGraph::from_rows(n, n, std::move(rows));
}

HalfGraphWitness halfgraph_bijection(const FiniteGroup& g, const GroupSubset& a, const HalfGraphWitness& w) {
  if (w.a.size() != w.b.size() || w.a.empty() || !verify_witness(cayley_relation(g, a), w)) {
    throw Error(ErrorCode::InvalidWitness, "tuple is not a half-graph of Cay(G,A)");
  }
  const std::size_t k = w.height();
  HalfGraphWitness out;
  for (std::size_t i = 0; i < k; ++i) {
    out.a.push_back(w.b[k - 1 - i]);
    out.b.push_back(g.inverse(w.a[k - 1 - i]));
  }
  return out;
}

HalfGraphWitness halfgraph_bijection_inverse(const FiniteGroup& g, const GroupSubset& a, const HalfGraphWitness& w) {
  if (w.a.size() != w.b.size() || w.a.empty() || !verify_witness(phi_relation(g, a), w)) {
    throw Error(ErrorCode::InvalidWitness, "tuple is not a half-graph of φ_A");
  }
  const std::size_t k = w.height();
  HalfGraphWitness out;
  for (std::size_t i = 0; i < k; ++i) {
    out.a.push_back(g.inverse(w.b[k - 1 - i]));
    out.b.push_back(w.a[k - 1 - i]);
  }
  return out;
}

std::vector<GroupSubset> left_cosets(const FiniteGroup& g, const GroupSubset& h) {
  check_subset(g, h);
  std::vector<GroupSubset> cosets;
  BitSet covered(g.order());
  const auto elems = h.elements();
  for (Element x = 0; x < g.order(); ++x) {
    if (covered.test(x)) continue;
    GroupSubset c = GroupSubset::empty(g);
    for (Element y : elems) c.members.set(g.multiply(x, y));
    covered |= c.members;
    cosets.push_back(std::move(c));
  }
  return cosets;
}

CosetApprox best_coset_union(const FiniteGroup& g, const GroupSubset& a, const GroupSubset& h) {
  check_subset(g, a);
  if (!is_normal_subgroup(g, h)) throw Error(ErrorCode::NotNormal, "H is not a normal subgroup");
  CosetApprox out;
  out.subgroup = h;
  out.coset_union = GroupSubset::empty(g);
  const auto cosets = left_cosets(g, h);
  out.index = cosets.size();
  for (const GroupSubset& c : cosets) {
    const std::size_t inside = c.members.intersection_count(a.members);
    const std::size_t size = c.size();
    if (2 * inside > size) out.coset_union.members |= c.members;  // exact halves stay out
    out.symdiff += std::min(inside, size - inside);
  }
  return out;
}

namespace {

bool ranks_before(const CosetApprox& x, const CosetApprox& y) {
  if (x.symdiff != y.symdiff) return x.symdiff < y.symdiff;
  const std::size_t sx = x.subgroup.size();
  const std::size_t sy = y.subgroup.size();
  if (sx != sy) return sx > sy;
  return BitSet::member_lex_less(x.subgroup.members, y.subgroup.members);
}

}  // namespace

ArithmeticSearchResult arithmetic_regularity_search(const FiniteGroup& g, const GroupSubset& a, const Rational& eps,
                                                    std::size_t max_index) {
  check_subset(g, a);
  if (eps <= 0) throw Error(ErrorCode::BadArgument, "eps must be positive");
  ArithmeticSearchResult result;
  for (const GroupSubset& h : enumerate_normal_subgroups(g)) {
    if (g.order() / h.size() > max_index) continue;
    CosetApprox candidate = best_coset_union(g, a, h);
    candidate.bound = eps * h.size();
    if (!result.best_found || ranks_before(candidate, *result.best_found)) result.best_found = candidate;
    if (candidate.within_bound() && (!result.approximation || ranks_before(candidate, *result.approximation))) {
      result.approximation = std::move(candidate);
    }
  }
  return result;
}

}  // namespace hgw
