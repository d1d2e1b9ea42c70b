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

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hgw/bigraph.hpp"
#include "hgw/error.hpp"
#include "hgw/generators.hpp"
#include "hgw/group.hpp"
#include "hgw/halfgraph.hpp"
#include "hgw/io.hpp"
#include "hgw/regularity.hpp"
#include "hgw/tree.hpp"
#include "oracles.hpp"
#include "scratch_dir.hpp"
#include "workbench.hpp"

namespace hgw {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& why) {
    if (!ok && pass) {
      pass = false;
      detail = why;
    }
  }
};

using Criterion = std::function<Verdict()>;

BitSet mask_bits(std::size_t n, std::uint64_t mask) {
  BitSet b(n);
  for (std::size_t i = 0; i < n; ++i) {
    if ((mask >> i) & 1U) b.set(i);
  }
  return b;
}

// ---------------------------------------------------------------- 1
Verdict counting_equivalence() {
  Verdict v;
  const auto start = Clock::now();
  std::mt19937_64 rng(20240601);
  std::size_t cases = 0;
  auto compare = [&](const BipartiteGraph& g, std::size_t k, const std::string& label) {
    const auto fast = count_halfgraphs_fast(g, k);
    const auto naive = count_halfgraphs_naive(g, k);
    ++cases;
    v.require(fast == naive, label + " k=" + std::to_string(k) + ": fast " + std::to_string(fast) + " != naive " +
                                 std::to_string(naive));
  };
  for (int trial = 0; trial < 240; ++trial) {
    const std::size_t l = 1 + rng() % 6, r = 1 + rng() % 6;
    const double p = static_cast<double>(rng() % 101) / 100.0;
    const auto g = oracle::random_graph(rng, l, r, p);
    for (std::size_t k = 1; k <= 3; ++k) compare(g, k, "random graph " + std::to_string(trial));
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t k = 1; k <= 3; ++k) compare(gen_canonical_halfgraph(n), k, "HG_" + std::to_string(n));
  }
  for (std::size_t m = 1; m <= 5; ++m) {
    for (std::size_t n = 1; n <= 5; ++n) {
      for (std::size_t k = 1; k <= 3; ++k) {
        compare(gen_complete(m, n), k, "K_" + std::to_string(m) + "," + std::to_string(n));
        compare(BipartiteGraph(m, n), k, "empty " + std::to_string(m) + "x" + std::to_string(n));
      }
    }
  }
  const double elapsed = seconds_since(start);
  v.require(elapsed < 30.0, "took " + std::to_string(elapsed) + " s");
  if (v.pass) v.detail = std::to_string(cases) + " (graph, k) cases equal, " + std::to_string(elapsed) + " s";
  return v;
}

// ---------------------------------------------------------------- 2
Verdict tree_extraction() {
  Verdict v;
  double slowest_n3 = 0.0;
  for (int n = 1; n <= 3 && v.pass; ++n) {
    const int height = (1 << (n + 1)) - 2;
    for (std::uint64_t seed = 0; seed < 100 && v.pass; ++seed) {
      const auto start = Clock::now();
      const auto t = gen_random_tree(height, 7000 + seed);
      const auto w = extract_halfgraph(t, n);
      const double elapsed = seconds_since(start);
      if (n == 3) slowest_n3 = std::max(slowest_n3, elapsed);
      const std::string tag = "n=" + std::to_string(n) + " seed " + std::to_string(7000 + seed);
      v.require(t.height() == height && t.node_count() == (std::size_t{1} << height) - 1, tag + ": wrong tree shape");
      v.require(w.height() == static_cast<std::size_t>(n), tag + ": witness height " + std::to_string(w.height()));
      v.require(verify_witness(t.relation(), w), tag + ": witness does not verify");
      v.require(elapsed < 60.0, tag + ": took " + std::to_string(elapsed) + " s");
    }
  }
  if (v.pass) {
    v.detail = "300 trees (heights 2, 6, 14) all verified; slowest n=3 tree " + std::to_string(slowest_n3) + " s";
  }
  return v;
}

// ---------------------------------------------------------------- 3
bool class_has_subtree(const PhiTree& t, const BitSet& cls, int m) {
  std::vector<bool> flags(t.node_count());
  for (Position x = 0; x < t.node_count(); ++x) flags[x] = cls.test(x);
  return oracle::has_subtree_within(t, flags, m);
}

// Counts partitions where ramsey_split fails; also checks every returned selection.
struct SplitTally {
  std::size_t runs = 0;
  std::size_t violations = 0;
  std::size_t bad_outputs = 0;
  std::vector<std::uint64_t> violating_masks;
};

void split_once(const PhiTree& t, const BitSet& p, int hp, int hq, std::uint64_t mask, SplitTally& tally) {
  ++tally.runs;
  try {
    const auto out = ramsey_split(t, p, ~p, hp, hq);
    const BitSet cls = out.side == RamseySide::P ? p : ~p;
    bool ok = validate_subtree(t, out.selection) && out.selection.claimed_height == (out.side == RamseySide::P ? hp : hq);
    for (Position x : out.selection.positions) ok = ok && cls.test(x);
    if (!ok) ++tally.bad_outputs;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InternalLemmaViolation) {
      ++tally.bad_outputs;
      return;
    }
    // Only count as a genuine violation when the oracle agrees no class can be served.
    if (class_has_subtree(t, p, hp) || class_has_subtree(t, ~p, hq)) ++tally.bad_outputs;
    ++tally.violations;
    tally.violating_masks.push_back(mask);
  }
}

std::string mask_list(const std::vector<std::uint64_t>& masks) {
  std::set<std::uint64_t> distinct(masks.begin(), masks.end());
  std::string s;
  for (auto m : distinct) {
    std::string bits;
    for (int i = 6; i >= 0; --i) bits += ((m >> i) & 1U) ? '1' : '0';
    s += (s.empty() ? "" : ",") + std::string("0b") + bits;
  }
  return s;
}

Verdict ramsey_splits() {
  Verdict v;
  SplitTally t12, t21, t11, t23;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto t3 = gen_random_tree(3, 300 + seed);
    for (std::uint64_t mask = 0; mask < 128; ++mask) {
      split_once(t3, mask_bits(7, mask), 1, 2, mask, t12);
      split_once(t3, mask_bits(7, mask), 2, 1, mask, t21);
    }
    const auto t2 = gen_random_tree(2, 200 + seed);
    for (std::uint64_t mask = 0; mask < 8; ++mask) split_once(t2, mask_bits(3, mask), 1, 1, mask, t11);
  }
  std::mt19937_64 rng(55);
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto t5 = gen_random_tree(5, 500 + seed);
    for (int trial = 0; trial < 300; ++trial) {
      BitSet p(t5.node_count());
      for (Position x = 0; x < t5.node_count(); ++x) {
        if (rng() & 1U) p.set(x);
      }
      split_once(t5, p, 2, 3, 0, t23);
    }
  }
  const std::size_t bad = t12.bad_outputs + t21.bad_outputs + t11.bad_outputs + t23.bad_outputs;
  v.require(bad == 0, std::to_string(bad) + " splits returned an invalid selection or a spurious violation");
  const std::size_t violations = t12.violations + t21.violations + t11.violations + t23.violations;
  v.require(violations == 0,
            "INTERNAL_LEMMA_VIOLATION reached on " + std::to_string(violations) + " partitions; (1,2): " +
                std::to_string(t12.violations) + "/" + std::to_string(t12.runs) + " [P masks " +
                mask_list(t12.violating_masks) + " = internal nodes], (2,1): " + std::to_string(t21.violations) + "/" +
                std::to_string(t21.runs) + " [P masks " + mask_list(t21.violating_masks) + " = leaves], (1,1): " +
                std::to_string(t11.violations) + "/" + std::to_string(t11.runs) + ", (2,3): " +
                std::to_string(t23.violations) + "/" + std::to_string(t23.runs) +
                "; the oracle confirms neither class holds its subtree in each case");
  if (v.pass) v.detail = std::to_string(t12.runs + t21.runs + t11.runs + t23.runs) + " splits all valid";
  return v;
}

// ---------------------------------------------------------------- 4
Verdict subtree_structure() {
  Verdict v;
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto t = gen_random_tree(4, 400 + seed);
    for (int m = 1; m <= 3; ++m) {
      for (const auto& s : oracle::all_subtrees(t, m)) {
        ++checked;
        const SubtreeSelection sel{std::vector<Position>(s.positions.begin(), s.positions.end()), m, s.root};
        const std::string tag = "seed " + std::to_string(400 + seed) + " m=" + std::to_string(m);
        v.require(validate_subtree(t, sel), tag + ": enumerated subtree rejected by validate_subtree");
        std::vector<Position> leaves;
        for (Position p : s.positions) {
          if (t.is_leaf(p)) leaves.push_back(p);
        }
        v.require(leaves.size() == (std::size_t{1} << (m - 1)), tag + ": wrong leaf count");
        for (std::size_t i = 0; i < leaves.size(); ++i) {
          for (std::size_t j = i + 1; j < leaves.size(); ++j) {
            v.require(s.positions.count(oracle::meet(leaves[i], leaves[j])) == 1, tag + ": leaf meet missing");
          }
        }
        const auto completed = complete_subtree(t, sel);
        v.require(completed.height() == m && validate_tree(completed), tag + ": completion is not a valid tree");
      }
    }
  }
  if (v.pass) v.detail = std::to_string(checked) + " subtrees: leaf meets closed, completions valid";
  return v;
}

// ---------------------------------------------------------------- 5
std::vector<HalfGraphWitness> enumerate_witnesses(const BipartiteGraph& g, std::size_t k) {
  std::vector<HalfGraphWitness> out;
  const std::size_t n = g.left_size();
  std::vector<Vertex> flat(2 * k, 0);
  while (true) {
    HalfGraphWitness w;
    for (std::size_t i = 0; i < k; ++i) {
      w.a.push_back(flat[2 * i]);
      w.b.push_back(flat[2 * i + 1]);
    }
    if (verify_witness(g, w)) out.push_back(std::move(w));
    std::size_t pos = 0;
    while (pos < flat.size() && ++flat[pos] == n) flat[pos++] = 0;
    if (pos == flat.size()) break;
  }
  return out;
}

Verdict cayley_bijection() {
  Verdict v;
  std::vector<std::pair<std::string, FiniteGroup>> groups;
  for (std::size_t n = 2; n <= 8; ++n) groups.emplace_back("Z_" + std::to_string(n), cyclic_group(n));
  groups.emplace_back("Klein", direct_product(cyclic_group(2), cyclic_group(2)));
  groups.emplace_back("S_3", symmetric_group(3));
  groups.emplace_back("D_4", dihedral_group(4));
  std::size_t mapped = 0;
  for (const auto& [name, g] : groups) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto a = gen_random_subset(g, Rational(1, 2), 900 + seed);
      const auto cay = cayley_relation(g, a);
      const auto phi = phi_relation(g, a);
      for (std::size_t k = 1; k <= 2; ++k) {
        const std::string tag = name + " seed " + std::to_string(900 + seed) + " k=" + std::to_string(k);
        const auto ccount = count_halfgraphs_fast(cay, k);
        v.require(ccount == count_halfgraphs_fast(phi, k), tag + ": counts differ");
        const auto witnesses = enumerate_witnesses(cay, k);
        v.require(witnesses.size() == ccount, tag + ": enumeration disagrees with count");
        std::set<std::pair<std::vector<Vertex>, std::vector<Vertex>>> images;
        for (const auto& w : witnesses) {
          const auto image = halfgraph_bijection(g, a, w);
          v.require(verify_witness(phi, image), tag + ": image does not verify on phi");
          v.require(halfgraph_bijection_inverse(g, a, image) == w, tag + ": inverse does not round-trip");
          images.emplace(image.a, image.b);
          ++mapped;
        }
        v.require(images.size() == witnesses.size(), tag + ": map is not injective");
      }
    }
  }
  if (v.pass) v.detail = std::to_string(mapped) + " witnesses mapped injectively onto equal-size phi witness sets";
  return v;
}

// ---------------------------------------------------------------- 6
std::vector<GroupSubset> all_subgroups(const FiniteGroup& g) {
  std::vector<GroupSubset> found;
  std::set<std::vector<Element>> seen;
  auto add = [&](GroupSubset h) {
    if (seen.insert(h.elements()).second) found.push_back(std::move(h));
  };
  for (Element x = 0; x < g.order(); ++x) add(generated_subgroup(g, GroupSubset::of(g, {x})));
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      GroupSubset joined{found[i].members | found[j].members};
      add(generated_subgroup(g, joined));
    }
  }
  return found;
}

Verdict coset_structure() {
  Verdict v;
  const auto z12 = cyclic_group(12);
  std::size_t unions = 0;
  for (const auto& h : all_subgroups(z12)) {
    const auto cosets = left_cosets(z12, h);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cosets.size()); ++mask) {
      GroupSubset a = GroupSubset::empty(z12);
      for (std::size_t c = 0; c < cosets.size(); ++c) {
        if ((mask >> c) & 1U) a.members |= cosets[c].members;
      }
      const auto r = arithmetic_regularity_search(z12, a, Rational(1, 2), 12);
      ++unions;
      v.require(r.approximation && r.approximation->symdiff == 0,
                "|H|=" + std::to_string(h.size()) + " union mask " + std::to_string(mask) + ": symdiff not 0");
    }
  }
  std::vector<std::pair<std::string, FiniteGroup>> corpus;
  for (std::size_t n = 1; n <= 12; ++n) corpus.emplace_back("Z_" + std::to_string(n), cyclic_group(n));
  for (std::size_t n = 3; n <= 6; ++n) corpus.emplace_back("D_" + std::to_string(n), dihedral_group(n));
  corpus.emplace_back("Klein", gen_group("product(cyclic:2,cyclic:2)"));
  corpus.emplace_back("Z_2^3", gen_group("product(cyclic:2,product(cyclic:2,cyclic:2))"));
  corpus.emplace_back("S_3", symmetric_group(3));
  corpus.emplace_back("S_4", symmetric_group(4));
  corpus.emplace_back("Z_3xS_3", gen_group("product(cyclic:3,symmetric:3)"));
  std::size_t subgroups = 0;
  for (const auto& [name, g] : corpus) {
    for (const auto& h : all_subgroups(g)) {
      ++subgroups;
      v.require(ladder_index(cayley_relation(g, h), 2) <= 1, name + ": subgroup of order " +
                                                                  std::to_string(h.size()) + " has a height-2 half-graph");
    }
  }
  if (v.pass) {
    v.detail = std::to_string(unions) + " coset unions of Z_12 recovered exactly; " + std::to_string(subgroups) +
               " corpus subgroups have ladder index <= 1";
  }
  return v;
}

// ---------------------------------------------------------------- 7
Verdict planted_blocks() {
  Verdict v;
  std::mt19937_64 rng(77);
  std::size_t instances = 0;
  for (std::size_t count = 1; count <= 4; ++count) {
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<BlockShape> blocks;
      for (std::size_t b = 0; b < count; ++b) blocks.emplace_back(1 + rng() % 8, 1 + rng() % 8);
      const auto g = gen_biclique_union(blocks, Rational(0), rng());
      ++instances;
      std::string tag = std::to_string(count) + " blocks";
      for (const auto& [l, r] : blocks) tag += " " + std::to_string(l) + "x" + std::to_string(r);
      const auto greedy = greedy_regularize(g, Rational(1, 10), Rational(0), count);
      v.require(greedy.report.pass, tag + ": greedy_regularize did not pass");
      v.require(greedy.right_witnesses.size() <= count && greedy.left_witnesses.size() <= count,
                tag + ": used more witnesses than blocks");
      const auto planted = check_partition(g, block_partition(g, blocks), Rational(1, 10), Rational(0));
      v.require(planted.pass, tag + ": planted partition fails");
      for (const auto& row : planted.grid) {
        for (const auto& cell : row) v.require(cell.kind != Homogeneity::Neither, tag + ": planted cell is NEITHER");
      }
    }
  }
  if (v.pass) v.detail = std::to_string(instances) + " planted instances regularized within the block budget";
  return v;
}

// ---------------------------------------------------------------- 8
Verdict threshold_exactness() {
  Verdict v;
  const auto hg = gen_canonical_halfgraph(2);
  const auto verdict = is_eps_homogeneous(hg, VertexSet::full(hg, Side::Left), VertexSet::full(hg, Side::Right),
                                          Rational(1, 10));
  v.require(verdict.kind == Homogeneity::Neither, "HG_2 is not NEITHER");
  v.require(verdict.edge_count == 3 && verdict.box_size == 4, "HG_2 counts wrong");
  v.require(verdict.threshold == Rational(81, 25), "threshold is " + to_string(verdict.threshold));

  // 5x5 box at eps=1/5: threshold (4/5)^2 * 25 = 16 exactly.
  std::vector<Edge> edges;
  for (Vertex u = 0; u < 5; ++u) {
    for (Vertex w = 0; w < 5; ++w) {
      if (edges.size() < 16) edges.push_back({u, w});
    }
  }
  const auto at = build_graph(5, 5, edges);
  const auto on = is_eps_homogeneous(at, VertexSet::full(at, Side::Left), VertexSet::full(at, Side::Right),
                                     Rational(1, 5));
  v.require(on.threshold == Rational(16) && on.edge_count == 16, "boundary instance miscounted");
  v.require(on.kind == Homogeneity::EdgeDense, "|E| equal to the threshold is not EDGE_DENSE");
  edges.pop_back();
  const auto below = build_graph(5, 5, edges);
  const auto off = is_eps_homogeneous(below, VertexSet::full(below, Side::Left), VertexSet::full(below, Side::Right),
                                      Rational(1, 5));
  v.require(off.kind == Homogeneity::Neither, "one edge below the threshold is not NEITHER");
  v.require(classify_box(9, 16, Rational(1, 4)).kind == Homogeneity::EdgeDense &&
                classify_box(7, 16, Rational(1, 4)).kind == Homogeneity::NonEdgeDense,
            "classify_box boundary at 9/16 wrong");
  if (v.pass) v.detail = "HG_2: NEITHER, 3/4 edges, threshold 81/25; equality boundary is EDGE_DENSE";
  return v;
}

// ---------------------------------------------------------------- 9
Verdict small_contrapositive() {
  Verdict v;
  const auto start = Clock::now();
  std::size_t trees = 0;
  for (std::uint32_t mask = 0; mask < 512; ++mask) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 9; ++i) {
      if ((mask >> i) & 1U) edges.push_back({i / 3, i % 3});
    }
    const auto g = build_graph(3, 3, edges);
    const auto grown = grow_tree(g, 2);
    v.require(grown.exhaustive, "graph " + std::to_string(mask) + ": search not exhaustive");
    if (grown.tree) {
      ++trees;
      v.require(validate_tree(*grown.tree), "graph " + std::to_string(mask) + ": invalid tree");
      v.require(find_halfgraph(g, 1).has_value(), "graph " + std::to_string(mask) + ": tree but no half-graph");
    }
  }
  const double elapsed = seconds_since(start);
  v.require(elapsed < 10.0, "took " + std::to_string(elapsed) + " s");
  if (v.pass) {
    v.detail = "512 graphs, " + std::to_string(trees) + " height-2 trees (a height-2 tree needs 4 distinct left "
               "vertices), " + std::to_string(elapsed) + " s";
  }
  return v;
}

// ---------------------------------------------------------------- 10
Verdict cli_determinism() {
  Verdict v;
  testing::ScratchDir dir("accept");
  auto run = [&](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run_cli(args, out, err);
    return std::make_pair(code, out.str() + "\x1f" + err.str());
  };
  auto write_via = [&](const std::vector<std::string>& args, const std::string& path) {
    auto full = args;
    full.insert(full.end(), {"--out", path});
    run(full);
    return testing::ScratchDir::slurp(path);
  };

  const auto group = dir.file("g.grp");
  run({"gen", "group", "--spec", "product(cyclic:2,dihedral:4)", "--out", group});
  const auto graph = dir.file("r.txt");
  run({"gen", "random-graph", "--left", "9", "--right", "8", "--density", "1/2", "--seed", "4", "--out", graph});
  const auto subset = dir.file("s.txt");
  run({"gen", "subset", "--group", group, "--density", "1/3", "--seed", "4", "--out", subset});
  const auto tree = dir.file("t.json");
  run({"gen", "tree", "--height", "6", "--seed", "4", "--out", tree});

  const std::vector<std::vector<std::string>> to_stdout{
      {"gen", "random-graph", "--left", "12", "--right", "10", "--density", "3/7", "--seed", "17"},
      {"gen", "biclique", "--blocks", "3x2,2x4,1x1", "--noise", "1/10", "--seed", "17"},
      {"gen", "subset", "--group", group, "--density", "1/2", "--seed", "17"},
      {"gen", "tree", "--height", "5", "--seed", "17", "--padding", "3"},
      {"estimate", "--graph", graph, "--k", "2", "--samples", "4000", "--seed", "17", "--json"},
      {"estimate", "--graph", graph, "--k", "3", "--samples", "4000", "--seed", "17", "--mode", "sorted", "--csv"},
      {"count", "--graph", graph, "--k", "3", "--workers", "1", "--json"},
      {"regularize", "--graph", graph, "--eps", "1/4", "--delta", "1/4", "--max-witnesses", "4", "--json"},
      {"tree-extract", "--tree", tree, "--n", "2", "--json"},
      {"tree-grow", "--graph", graph, "--height", "2", "--json"},
      {"group-normals", "--group", group, "--json"},
      {"group-regularity", "--group", group, "--subset", subset, "--eps", "1/2", "--max-index", "8", "--json"},
  };
  std::size_t compared = 0;
  for (const auto& args : to_stdout) {
    std::string joined;
    for (const auto& a : args) joined += a + " ";
    const auto first = run(args);
    const auto second = run(args);
    ++compared;
    v.require(first.first != cli::kUsageError && first.second.size() > 1, "failed to run: " + joined + first.second);
    v.require(first == second, "output differs across reruns: " + joined);
  }
  const std::vector<std::string> file_gen{"gen", "biclique", "--blocks", "4x4,2x2", "--noise", "1/5", "--seed", "3"};
  v.require(write_via(file_gen, dir.file("a.txt")) == write_via(file_gen, dir.file("b.txt")),
            "written biclique files differ");
  const auto one = run({"count", "--graph", graph, "--k", "3", "--workers", "1"});
  const auto four = run({"count", "--graph", graph, "--k", "3", "--workers", "4"});
  v.require(one == four, "count output depends on worker count");
  compared += 2;
  if (v.pass) v.detail = std::to_string(compared) + " seeded CLI invocations byte-identical on rerun";
  return v;
}

}  // namespace
}  // namespace hgw

int main() {
  using hgw::Verdict;
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"counting oracle equivalence", hgw::counting_equivalence},
      {"tree extraction at height 2^(n+1)-2", hgw::tree_extraction},
      {"tree Ramsey split", hgw::ramsey_splits},
      {"subtree leaf meets and completion", hgw::subtree_structure},
      {"Cayley / phi half-graph bijection", hgw::cayley_bijection},
      {"coset unions and subgroup stability", hgw::coset_structure},
      {"planted block regularization", hgw::planted_blocks},
      {"exact homogeneity thresholds", hgw::threshold_exactness},
      {"tree implies half-graph on 3x3 graphs", hgw::small_contrapositive},
      {"CLI determinism", hgw::cli_determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("uncaught exception: ") + e.what();
    }
    if (!v.pass) ++failures;
    std::printf("%s criterion %2zu: %s -- %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failures), criteria.size());
  return failures == 0 ? 0 : 1;
}
