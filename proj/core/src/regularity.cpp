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

#include "hgw/regularity.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "hgw/error.hpp"

namespace hgw {

namespace {

void validate_side(const BipartiteGraph& g, const std::vector<VertexSet>& parts, Side side, const char* name) {
  if (parts.empty()) {
    throw Error(ErrorCode::MalformedPartition, std::string(name) + " side has no parts (index 0 is required)");
  }
  BitSet covered(g.side_size(side));
  for (const VertexSet& part : parts) {
    if (part.side != side || part.members.size() != g.side_size(side)) {
      throw Error(ErrorCode::MalformedPartition, std::string(name) + " part belongs to the wrong side");
    }
    if (covered.intersects(part.members)) {
      throw Error(ErrorCode::MalformedPartition, std::string(name) + " parts overlap");
    }
    covered |= part.members;
  }
  if (!covered.all()) throw Error(ErrorCode::MalformedPartition, std::string(name) + " parts do not cover the side");
}

bool exceptional_ok(const VertexSet& part, std::size_t side_size, const Rational& delta) {
  const std::size_t size = part.size();
  return size == 0 || Rational(size) < delta * side_size;
}

}  // namespace

void validate_partition(const BipartiteGraph& g, const RegularityPartition& p) {
  validate_side(g, p.left_parts, Side::Left, "left");
  validate_side(g, p.right_parts, Side::Right, "right");
}

PartitionReport check_partition(const BipartiteGraph& g, const RegularityPartition& p, const Rational& eps,
                                const Rational& delta) {
  require_unit_interval(eps, "eps");
  require_unit_interval(delta, "delta");
  validate_partition(g, p);
  for (std::size_t i = 1; i < p.left_parts.size(); ++i) {
    if (p.left_parts[i].empty()) throw Error(ErrorCode::EmptyPart, "left part " + std::to_string(i) + " is empty");
  }
  for (std::size_t j = 1; j < p.right_parts.size(); ++j) {
    if (p.right_parts[j].empty()) throw Error(ErrorCode::EmptyPart, "right part " + std::to_string(j) + " is empty");
  }
  PartitionReport report;
  report.eps = eps;
  report.delta = delta;
  report.left_exceptional_ok = exceptional_ok(p.left_parts[0], g.left_size(), delta);
  report.right_exceptional_ok = exceptional_ok(p.right_parts[0], g.right_size(), delta);
  bool all_cells = true;
  for (std::size_t i = 1; i < p.left_parts.size(); ++i) {
    auto& row = report.grid.emplace_back();
    for (std::size_t j = 1; j < p.right_parts.size(); ++j) {
      row.push_back(is_eps_homogeneous(g, p.left_parts[i], p.right_parts[j], eps));
      all_cells = all_cells && row.back().kind != Homogeneity::Neither;
    }
  }
  report.pass = report.left_exceptional_ok && report.right_exceptional_ok && all_cells;
  return report;
}

namespace {

// Atoms of one side, keyed by membership vector; std::map orders vector<bool> ascending.
std::map<std::vector<bool>, BitSet> side_atoms(const BipartiteGraph& g, Side side, std::span<const Vertex> witnesses) {
  const std::size_t n = g.side_size(side);
  std::map<std::vector<bool>, BitSet> atoms;
  std::vector<bool> signature(witnesses.size());
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t w = 0; w < witnesses.size(); ++w) {
      signature[w] = side == Side::Left ? g.has_edge(static_cast<Vertex>(x), witnesses[w])
                                        : g.has_edge(witnesses[w], static_cast<Vertex>(x));
    }
    auto [it, inserted] = atoms.try_emplace(signature, BitSet(n));
    it->second.set(x);
  }
  return atoms;
}

std::vector<VertexSet> sweep(std::map<std::vector<bool>, BitSet> atoms, Side side, std::size_t n,
                             std::size_t min_part) {
  std::vector<VertexSet> parts{VertexSet{side, BitSet(n)}};
  for (auto& [signature, members] : atoms) {
    if (members.count() < min_part) {
      parts[0].members |= members;
    } else {
      parts.push_back(VertexSet{side, std::move(members)});
    }
  }
  return parts;
}

void check_witnesses(std::span<const Vertex> ids, std::size_t limit, const char* name) {
  for (Vertex id : ids) {
    if (id >= limit) throw Error(ErrorCode::OutOfRange, std::string(name) + " witness " + std::to_string(id) + " out of range");
  }
}

}  // namespace

RegularityPartition atom_partition(const BipartiteGraph& g, std::span<const Vertex> right_witnesses,
                                   std::span<const Vertex> left_witnesses, std::size_t min_part) {
  check_witnesses(right_witnesses, g.right_size(), "right");
  check_witnesses(left_witnesses, g.left_size(), "left");
  RegularityPartition p;
  p.left_parts = sweep(side_atoms(g, Side::Left, right_witnesses), Side::Left, g.left_size(), min_part);
  p.right_parts = sweep(side_atoms(g, Side::Right, left_witnesses), Side::Right, g.right_size(), min_part);
  return p;
}

std::size_t default_min_part(const Rational& delta, std::size_t side_size, std::size_t atom_count) {
  if (atom_count == 0) return 0;
  const Rational v = delta * side_size / (2 * atom_count);
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  return BigInt((num + den - 1) / den).convert_to<std::size_t>();
}

std::uint64_t imbalance_score(const BipartiteGraph& g, const RegularityPartition& p) {
  std::uint64_t score = 0;
  for (std::size_t i = 1; i < p.left_parts.size(); ++i) {
    const std::uint64_t ni = p.left_parts[i].size();
    for (std::size_t j = 1; j < p.right_parts.size(); ++j) {
      const std::uint64_t edges = edge_count_between(g, p.left_parts[i], p.right_parts[j]);
      score += std::min(edges, ni * p.right_parts[j].size() - edges);
    }
  }
  return score;
}

namespace {

RegularityPartition witness_partition(const BipartiteGraph& g, std::span<const Vertex> right_witnesses,
                                      std::span<const Vertex> left_witnesses, const Rational& delta) {
  auto left_atoms = side_atoms(g, Side::Left, right_witnesses);
  auto right_atoms = side_atoms(g, Side::Right, left_witnesses);
  RegularityPartition p;
  const std::size_t left_min = default_min_part(delta, g.left_size(), left_atoms.size());
  const std::size_t right_min = default_min_part(delta, g.right_size(), right_atoms.size());
  p.left_parts = sweep(std::move(left_atoms), Side::Left, g.left_size(), left_min);
  p.right_parts = sweep(std::move(right_atoms), Side::Right, g.right_size(), right_min);
  return p;
}

}  // namespace

GreedyResult greedy_regularize(const BipartiteGraph& g, const Rational& eps, const Rational& delta,
                               std::size_t max_witnesses) {
  GreedyResult result;
  while (true) {
    result.partition = witness_partition(g, result.right_witnesses, result.left_witnesses, delta);
    result.report = check_partition(g, result.partition, eps, delta);
    if (result.report.pass) return result;

    // Candidate pools from every failing cell.
    BitSet right_pool(g.right_size());
    BitSet left_pool(g.left_size());
    for (std::size_t i = 0; i < result.report.grid.size(); ++i) {
      for (std::size_t j = 0; j < result.report.grid[i].size(); ++j) {
        if (result.report.grid[i][j].kind != Homogeneity::Neither) continue;
        right_pool |= result.partition.right_parts[j + 1].members;
        left_pool |= result.partition.left_parts[i + 1].members;
      }
    }
    for (Vertex v : result.right_witnesses) right_pool.reset(v);
    for (Vertex u : result.left_witnesses) left_pool.reset(u);
    if (result.right_witnesses.size() >= max_witnesses) right_pool = BitSet(g.right_size());
    if (result.left_witnesses.size() >= max_witnesses) left_pool = BitSet(g.left_size());
    if (right_pool.none() && left_pool.none()) return result;

    struct Choice {
      std::uint64_t score;
      Vertex id;
      int side;  // 0 = right witness, 1 = left witness
      bool operator<(const Choice& o) const {
        if (score != o.score) return score < o.score;
        if (id != o.id) return id < o.id;
        return side < o.side;
      }
    };
    std::optional<Choice> best;
    auto consider = [&](Vertex id, int side) {
      auto rw = result.right_witnesses;
      auto lw = result.left_witnesses;
      (side == 0 ? rw : lw).push_back(id);
      const auto candidate = witness_partition(g, rw, lw, delta);
      // A witness that reproduces an existing neighbourhood cannot refine anything.
      if (candidate == result.partition) return;
      const Choice c{imbalance_score(g, candidate), id, side};
      if (!best || c < *best) best = c;
    };
    right_pool.for_each([&](std::size_t v) { consider(static_cast<Vertex>(v), 0); });
    left_pool.for_each([&](std::size_t u) { consider(static_cast<Vertex>(u), 1); });
    if (!best) return result;
    (best->side == 0 ? result.right_witnesses : result.left_witnesses).push_back(best->id);
  }
}

namespace {

// Set partitions of {0..n-1} into exactly `blocks` blocks, as block bitmasks, in
// restricted-growth-string order.
std::vector<std::vector<std::uint32_t>> set_partitions(std::size_t n, std::size_t blocks) {
  std::vector<std::vector<std::uint32_t>> out;
  if (n == 0) {
    if (blocks == 0) out.emplace_back();
    return out;
  }
  if (blocks == 0 || blocks > n) return out;
  std::vector<std::size_t> rgs(n, 0);
  auto emit = [&] {
    std::size_t used = *std::max_element(rgs.begin(), rgs.end()) + 1;
    if (used != blocks) return;
    std::vector<std::uint32_t> masks(blocks, 0);
    for (std::size_t i = 0; i < n; ++i) masks[rgs[i]] |= std::uint32_t{1} << i;
    out.push_back(std::move(masks));
  };
  // rgs[0] = 0; rgs[i] <= 1 + max(rgs[0..i-1]), capped at blocks - 1.
  auto rec = [&](auto&& self, std::size_t i, std::size_t max_so_far) -> void {
    if (i == n) {
      emit();
      return;
    }
    for (std::size_t v = 0; v <= std::min(max_so_far + 1, blocks - 1); ++v) {
      rgs[i] = v;
      self(self, i + 1, std::max(max_so_far, v));
    }
  };
  rgs[0] = 0;
  rec(rec, 1, 0);
  return out;
}

VertexSet mask_to_set(const BipartiteGraph& g, Side side, std::uint32_t mask) {
  VertexSet s = VertexSet::empty(g, side);
  for (std::size_t i = 0; i < g.side_size(side); ++i) {
    if ((mask >> i) & 1U) s.members.set(i);
  }
  return s;
}

}  // namespace

std::optional<MinimalPartition> exhaustive_min_partition(const BipartiteGraph& g, const Rational& eps,
                                                         const Rational& delta, std::size_t max_parts) {
  require_unit_interval(eps, "eps");
  require_unit_interval(delta, "delta");
  const std::size_t nu = g.left_size();
  const std::size_t nv = g.right_size();
  if (nu > kExhaustiveSideCap || nv > kExhaustiveSideCap || max_parts > kExhaustivePartsCap) {
    throw Error(ErrorCode::BudgetExceeded, "exhaustive partition search is limited to 8 vertices per side and 4 parts");
  }
  if (max_parts == 0) throw Error(ErrorCode::BadArgument, "max_parts must be at least 1");

  // homogeneous[umask][vmask] for all nonempty boxes.
  const std::size_t u_masks = std::size_t{1} << nu;
  const std::size_t v_masks = std::size_t{1} << nv;
  std::vector<std::uint32_t> row_mask(nu, 0);
  for (std::size_t u = 0; u < nu; ++u) {
    for (std::size_t v = 0; v < nv; ++v) {
      if (g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) row_mask[u] |= std::uint32_t{1} << v;
    }
  }
  std::vector<char> homogeneous(u_masks * v_masks, 0);
  for (std::uint32_t um = 1; um < u_masks; ++um) {
    for (std::uint32_t vm = 1; vm < v_masks; ++vm) {
      std::uint64_t edges = 0;
      for (std::size_t u = 0; u < nu; ++u) {
        if ((um >> u) & 1U) edges += static_cast<std::uint64_t>(std::popcount(row_mask[u] & vm));
      }
      const std::uint64_t box = static_cast<std::uint64_t>(std::popcount(um)) * std::popcount(vm);
      homogeneous[um * v_masks + vm] = classify_box(edges, box, eps).kind != Homogeneity::Neither;
    }
  }

  const std::size_t min_r = nu == 0 ? 0 : 1;
  const std::size_t min_s = nv == 0 ? 0 : 1;
  const std::size_t max_r = nu == 0 ? 0 : std::min(max_parts, nu);
  const std::size_t max_s = nv == 0 ? 0 : std::min(max_parts, nv);
  std::vector<char> v_ok(v_masks);
  for (std::size_t total = min_r + min_s; total <= max_r + max_s; ++total) {
    for (std::size_t r = min_r; r <= max_r; ++r) {
      if (total < r || total - r < min_s || total - r > max_s) continue;
      const std::size_t s = total - r;
      const auto left_options = set_partitions(nu, r);
      const auto right_options = set_partitions(nv, s);
      for (const auto& left : left_options) {
        for (std::uint32_t vm = 0; vm < v_masks; ++vm) {
          bool ok = true;
          for (std::uint32_t um : left) ok = ok && (vm == 0 || homogeneous[um * v_masks + vm]);
          v_ok[vm] = ok;
        }
        for (const auto& right : right_options) {
          if (!std::all_of(right.begin(), right.end(), [&](std::uint32_t vm) { return v_ok[vm] != 0; })) continue;
          MinimalPartition found;
          found.r = r;
          found.s = s;
          found.partition.left_parts.push_back(VertexSet::empty(g, Side::Left));
          for (std::uint32_t um : left) found.partition.left_parts.push_back(mask_to_set(g, Side::Left, um));
          found.partition.right_parts.push_back(VertexSet::empty(g, Side::Right));
          for (std::uint32_t vm : right) found.partition.right_parts.push_back(mask_to_set(g, Side::Right, vm));
          return found;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace hgw
