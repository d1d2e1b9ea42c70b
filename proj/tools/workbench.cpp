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

#include "workbench.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hgw/error.hpp"
#include "hgw/generators.hpp"
#include "hgw/group.hpp"
#include "hgw/halfgraph.hpp"
#include "hgw/io.hpp"
#include "hgw/rational.hpp"
#include "hgw/regularity.hpp"
#include "hgw/tree.hpp"

namespace hgw::cli {

namespace {

struct Output {
  std::ostream& out;
  bool json = false;

  void emit(const Json& j) const {
    if (json) {
      out << j.dump(2) << '\n';
      return;
    }
    if (!j.is_object()) {
      out << render(j) << '\n';
      return;
    }
    std::size_t width = 0;
    for (const auto& [key, value] : j.items()) width = std::max(width, key.size());
    for (const auto& [key, value] : j.items()) out << std::left << std::setw(static_cast<int>(width + 2)) << key << render(value) << '\n';
  }

  static std::string render(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }
};

// Budgets default to the library values; HW_BUDGET overrides every enumeration budget.
std::optional<std::uint64_t> budget_override() {
  const char* raw = std::getenv("HW_BUDGET");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  std::uint64_t value = 0;
  const std::string_view text(raw);
  for (char c : text) {
    if (c < '0' || c > '9') throw Error(ErrorCode::BadArgument, "HW_BUDGET must be a positive integer, got '" + std::string(text) + "'");
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
  }
  if (value == 0) throw Error(ErrorCode::BadArgument, "HW_BUDGET must be positive");
  return value;
}

std::uint64_t budget_or(std::uint64_t fallback) { return budget_override().value_or(fallback); }

DensityMode parse_mode(const std::string& mode) { return mode == "sorted" ? DensityMode::Sorted : DensityMode::Total; }

std::string decimal(double x) {
  std::ostringstream s;
  s << std::setprecision(6) << x;
  return s.str();
}

std::vector<BlockShape> parse_blocks(const std::string& text) {
  std::vector<BlockShape> blocks;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto x = item.find('x');
    if (x == std::string::npos || x == 0 || x + 1 == item.size() ||
        item.find_first_not_of("0123456789x") != std::string::npos) {
      throw Error(ErrorCode::ParseError, "block '" + item + "' must look like <left>x<right>");
    }
    blocks.emplace_back(std::stoul(item.substr(0, x)), std::stoul(item.substr(x + 1)));
  }
  if (blocks.empty()) throw Error(ErrorCode::ParseError, "--blocks needs at least one <left>x<right> entry");
  return blocks;
}

void write_text_file(const std::string& path, const std::function<void(std::ostream&)>& writer) {
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::BadArgument, "cannot write " + path);
  writer(file);
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAssociative:
    case ErrorCode::NoIdentity:
    case ErrorCode::NoInverse:
    case ErrorCode::NotLatinSquare:
    case ErrorCode::InvalidTree:
    case ErrorCode::InvalidWitness:
    case ErrorCode::InternalLemmaViolation:
      return kVerificationFailed;
    default:
      return kUsageError;
  }
}

Json witness_or_none(const std::optional<HalfGraphWitness>& w) { return w ? witness_to_json(*w) : Json("NONE"); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Half-graph workbench: counting, regularity partitions, tree extraction, coset approximations", "hgw"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every command");

  bool json = false;
  app.add_flag("--json", json, "Emit JSON instead of aligned text")->configurable(false);

  std::function<int()> action;
  auto add = [&](const std::string& name, const std::string& about, std::function<int()> run) {
    CLI::App* sub = app.add_subcommand(name, about);
    sub->add_flag("--json", json, "Emit JSON instead of aligned text");
    sub->callback([&action, run] { action = run; });
    return sub;
  };

  // Shared option storage; each command reads the fields it registered.
  std::string graph_path, group_path, subset_path, tree_path, partition_path, out_path, partition_out;
  std::string eps_text, delta_text, density_text = "1/2", noise_text = "0", mode = "total", algo = "fast";
  std::string relation = "cayley", blocks_text, group_spec, fill = "random";
  std::size_t k = 0, k_max = 0, n = 0, height = 0, max_witnesses = 8, max_index = 0, left = 0, right = 0;
  std::size_t padding = 0;
  std::uint64_t samples = 10000, seed = 0;
  unsigned workers = 1;
  bool csv = false;

  const auto existing = CLI::ExistingFile;
  const auto modes = CLI::IsMember({"total", "sorted"});

  // ---------------------------------------------------------------- halfgraph
  auto* count = add("count", "Exact half-graph count and density", [&]() -> int {
    const auto g = read_graph_file(graph_path);
    const std::uint64_t budget = budget_or(kDefaultCountBudget);
    const std::uint64_t c = algo == "naive" ? count_halfgraphs_naive(g, k, budget)
                                            : count_halfgraphs_fast(g, k, budget, workers);
    const Rational d = halfgraph_density(c, g, k, parse_mode(mode));
    if (csv) {
      out << "left_size,right_size,k,mode,count,density\n";
      out << g.left_size() << ',' << g.right_size() << ',' << k << ',' << mode << ',' << c << ',' << to_string(d) << '\n';
      return kOk;
    }
    Json j;
    j["left_size"] = g.left_size();
    j["right_size"] = g.right_size();
    j["k"] = k;
    j["mode"] = mode;
    j["count"] = c;
    j["density"] = to_string(d);
    Output{out, json}.emit(j);
    return kOk;
  });
  count->add_option("--graph", graph_path, "Graph text file")->required()->check(existing);
  count->add_option("--k", k, "Half-graph height")->required()->check(CLI::PositiveNumber);
  count->add_option("--mode", mode, "Density normalisation: total or sorted")->check(modes);
  count->add_option("--algo", algo, "fast (default) or naive")->check(CLI::IsMember({"fast", "naive"}));
  count->add_option("--workers", workers, "Worker threads for the fast kernel")->check(CLI::Range(1U, 256U));
  count->add_flag("--csv", csv, "Emit a CSV header and row");

  auto* estimate = add("estimate", "Monte Carlo half-graph density", [&]() -> int {
    const auto g = read_graph_file(graph_path);
    const auto e = estimate_halfgraph_density(g, k, samples, seed, parse_mode(mode));
    if (csv) {
      out << "left_size,right_size,k,mode,samples,seed,hits,estimate,stderr\n";
      out << g.left_size() << ',' << g.right_size() << ',' << k << ',' << mode << ',' << samples << ',' << seed << ','
          << e.hits << ',' << to_string(e.estimate) << ',' << decimal(e.standard_error) << '\n';
      return kOk;
    }
    Json j;
    j["k"] = k;
    j["mode"] = mode;
    j["samples"] = e.samples;
    j["seed"] = seed;
    j["hits"] = e.hits;
    j["estimate"] = to_string(e.estimate);
    j["estimate_decimal"] = decimal(to_double(e.estimate));
    j["stderr"] = decimal(e.standard_error);
    Output{out, json}.emit(j);
    return kOk;
  });
  estimate->add_option("--graph", graph_path, "Graph text file")->required()->check(existing);
  estimate->add_option("--k", k, "Half-graph height")->required()->check(CLI::PositiveNumber);
  estimate->add_option("--samples", samples, "Number of sampled tuples")->check(CLI::PositiveNumber);
  estimate->add_option("--seed", seed, "Random seed (required)")->required();
  estimate->add_option("--mode", mode, "total or sorted")->check(modes);
  estimate->add_flag("--csv", csv, "Emit a CSV header and row");

  auto* ladder = add("ladder", "Largest realised half-graph height up to --k-max", [&]() -> int {
    const auto g = read_graph_file(graph_path);
    Json j;
    j["k_max"] = k_max;
    j["ladder_index"] = ladder_index(g, k_max);
    Output{out, json}.emit(j);
    return kOk;
  });
  ladder->add_option("--graph", graph_path, "Graph text file")->required()->check(existing);
  ladder->add_option("--k-max", k_max, "Largest height to try")->required()->check(CLI::PositiveNumber);

  auto* find = add("find", "Lexicographically least half-graph of height k", [&]() -> int {
    const auto g = read_graph_file(graph_path);
    const auto w = find_halfgraph(g, k);
    Json j;
    j["k"] = k;
    j["witness"] = witness_or_none(w);
    Output{out, json}.emit(j);
    return w ? kOk : kVerificationFailed;
  });
  find->add_option("--graph", graph_path, "Graph text file")->required()->check(existing);
  find->add_option("--k", k, "Half-graph height")->required()->check(CLI::PositiveNumber);

  // ---------------------------------------------------------------- regularity
  auto* check = add("check-partition", "Verify an eps-homogeneous partition", [&]() -> int {
    const auto g = read_graph_file(graph_path);
    const auto p = partition_from_json(read_json_file(partition_path), g);
    const auto report = check_partition(g, p, parse_rational(eps_text), parse_rational(delta_text));
    Output{out, json}.emit(report_to_json(report));
    return report.pass ? kOk : kVerificationFailed;
  });
  check->add_option("--graph", graph_path, "Graph text file")->required()->check(existing);
  check->add_option("--partition", partition_path, "Partition JSON")->required()->check(existing);
  check->add_option("--eps", eps_text, "Homogeneity tolerance p/q")->required();
  check->add_option("--delta", delta_text, "Exceptional-part fraction p/q")->required();

  auto* regularize = add("regularize", "Greedy neighbourhood-atom partition search", [&]() -> int {
    const auto g = read_graph_file(graph_path);
    const auto r = greedy_regularize(g, parse_rational(eps_text), parse_rational(delta_text), max_witnesses);
    if (!partition_out.empty()) {
      write_text_file(partition_out, [&](std::ostream& f) { f << partition_to_json(r.partition).dump() << '\n'; });
    }
    Json j;
    j["right_witnesses"] = r.right_witnesses;
    j["left_witnesses"] = r.left_witnesses;
    j["left_parts"] = r.partition.left_count();
    j["right_parts"] = r.partition.right_count();
    j["partition"] = partition_to_json(r.partition);
    j["report"] = report_to_json(r.report);
    j["pass"] = r.report.pass;
    Output{out, json}.emit(j);
    return r.report.pass ? kOk : kVerificationFailed;
  });
  regularize->add_option("--graph", graph_path, "Graph text file")->required()->check(existing);
  regularize->add_option("--eps", eps_text, "Homogeneity tolerance p/q")->required();
  regularize->add_option("--delta", delta_text, "Exceptional-part fraction p/q")->required();
  regularize->add_option("--max-witnesses", max_witnesses, "Witness budget per side");
  regularize->add_option("--partition-out", partition_out, "Write the partition JSON here");

  // ---------------------------------------------------------------- trees
  auto* tree_validate = add("tree-validate", "Check the branch/node pattern of a tree", [&]() -> int {
    const auto t = read_tree_file(tree_path);
    const bool ok = validate_tree(t);
    Json j;
    j["height"] = t.height();
    j["valid"] = ok;
    Output{out, json}.emit(j);
    return ok ? kOk : kVerificationFailed;
  });
  tree_validate->add_option("--tree", tree_path, "Tree JSON")->required()->check(existing);

  auto* extract = add("tree-extract", "Extract a height-n half-graph from a tree of height 2^(n+1)-2", [&]() -> int {
    const auto t = read_tree_file(tree_path);
    const auto x = extract_halfgraph_traced(t, static_cast<int>(n));
    const bool ok = verify_witness(t.relation(), x.witness);
    Json steps = Json::array();
    for (const auto& s : x.steps) steps.push_back({{"r", s.r}, {"case", s.branch_case ? "branch" : "split"}});
    Json j;
    j["n"] = n;
    j["witness"] = witness_to_json(x.witness);
    j["steps"] = std::move(steps);
    j["verified"] = ok;
    Output{out, json}.emit(j);
    return ok ? kOk : kVerificationFailed;
  });
  extract->alias("extract");
  extract->add_option("--tree", tree_path, "Tree JSON")->required()->check(existing);
  extract->add_option("--n", n, "Witness height")->required()->check(CLI::Range(1, 3));

  auto* grow = add("tree-grow", "Search for a tree of the given height inside a graph", [&]() -> int {
    const auto g = read_graph_file(graph_path);
    const auto r = grow_tree(g, static_cast<int>(height), budget_or(kDefaultGrowBudget));
    if (r.tree && !out_path.empty()) {
      write_text_file(out_path, [&](std::ostream& f) { f << tree_to_json(*r.tree).dump() << '\n'; });
    }
    Json j;
    j["height"] = height;
    j["found"] = r.tree.has_value();
    j["exhaustive"] = r.exhaustive;
    j["result"] = r.tree ? "TREE" : (r.exhaustive ? "NONE" : "NONE_FOUND");
    if (r.tree) {
      j["branches"] = std::vector<Vertex>(r.tree->branches().begin(), r.tree->branches().end());
      j["nodes"] = std::vector<Vertex>(r.tree->nodes().begin(), r.tree->nodes().end());
    }
    Output{out, json}.emit(j);
    return r.tree ? kOk : kVerificationFailed;
  });
  grow->add_option("--graph", graph_path, "Graph text file")->required()->check(existing);
  grow->add_option("--height", height, "Target tree height")->required()->check(CLI::Range(1, kMaxTreeHeight));
  grow->add_option("--out", out_path, "Write the tree JSON here");

  // ---------------------------------------------------------------- groups
  auto* group_validate = add("group-validate", "Validate a multiplication table", [&]() -> int {
    const auto g = read_group_file(group_path);
    Json j;
    j["order"] = g.order();
    j["identity"] = g.identity();
    j["associativity"] = g.associativity_verified() ? "VERIFIED" : "UNVERIFIED";
    j["valid"] = true;
    Output{out, json}.emit(j);
    return kOk;
  });
  group_validate->add_option("--group", group_path, "Group table file")->required()->check(existing);

  auto* normals = add("group-normals", "List every normal subgroup", [&]() -> int {
    const auto g = read_group_file(group_path);
    const auto subs = enumerate_normal_subgroups(g);
    Json list = Json::array();
    for (const auto& h : subs) list.push_back(subset_to_json(h));
    Json j;
    j["order"] = g.order();
    j["count"] = subs.size();
    j["subgroups"] = std::move(list);
    Output{out, json}.emit(j);
    return kOk;
  });
  normals->add_option("--group", group_path, "Group table file")->required()->check(existing);

  auto* cayley = add("cayley", "Build Cay(G,A) or the relation y*x in A as a graph file", [&]() -> int {
    const auto g = read_group_file(group_path);
    const auto a = read_subset_file(subset_path, g);
    const auto rel = relation == "phi" ? phi_relation(g, a) : cayley_relation(g, a);
    if (out_path.empty()) {
      write_graph(out, rel);
      return kOk;
    }
    write_text_file(out_path, [&](std::ostream& f) { write_graph(f, rel); });
    Json j;
    j["relation"] = relation;
    j["left_size"] = rel.left_size();
    j["right_size"] = rel.right_size();
    j["edges"] = rel.edge_count();
    j["written"] = out_path;
    Output{out, json}.emit(j);
    return kOk;
  });
  cayley->add_option("--group", group_path, "Group table file")->required()->check(existing);
  cayley->add_option("--subset", subset_path, "Subset file")->required()->check(existing);
  cayley->add_option("--relation", relation, "cayley (g^-1 h in A) or phi (y x in A)")
      ->check(CLI::IsMember({"cayley", "phi"}));
  cayley->add_option("--out", out_path, "Write the graph here instead of stdout");

  auto* arith = add("group-regularity", "Approximate a subset by a union of cosets", [&]() -> int {
    const auto g = read_group_file(group_path);
    const auto a = read_subset_file(subset_path, g);
    const auto r = arithmetic_regularity_search(g, a, parse_rational(eps_text), max_index);
    Json j;
    j["eps"] = to_string(parse_rational(eps_text));
    j["max_index"] = max_index;
    j["result"] = r.approximation ? "FOUND" : "NONE";
    j["approximation"] = r.approximation ? coset_approx_to_json(*r.approximation) : Json(nullptr);
    j["best_found"] = r.best_found ? coset_approx_to_json(*r.best_found) : Json(nullptr);
    Output{out, json}.emit(j);
    return r.approximation ? kOk : kVerificationFailed;
  });
  arith->add_option("--group", group_path, "Group table file")->required()->check(existing);
  arith->add_option("--subset", subset_path, "Subset file")->required()->check(existing);
  arith->add_option("--eps", eps_text, "Tolerance p/q, compared against eps*|H|")->required();
  arith->add_option("--max-index", max_index, "Largest subgroup index to consider")->required()->check(CLI::PositiveNumber);

  // ---------------------------------------------------------------- generators
  CLI::App* gen = app.add_subcommand("gen", "Generate graphs, groups, subsets and trees");
  gen->require_subcommand(1);
  auto add_gen = [&](const std::string& name, const std::string& about, std::function<void(std::ostream&)> write) {
    CLI::App* sub = gen->add_subcommand(name, about);
    sub->add_option("--out", out_path, "Write here instead of stdout");
    sub->callback([&action, &out_path, &out, write] {
      action = [&out_path, &out, write]() -> int {
        if (out_path.empty()) {
          write(out);
        } else {
          write_text_file(out_path, write);
        }
        return kOk;
      };
    });
    return sub;
  };

  auto* gen_hg = add_gen("halfgraph", "Canonical half-graph HG_n", [&](std::ostream& f) {
    write_graph(f, gen_canonical_halfgraph(n));
  });
  gen_hg->add_option("--n", n, "Size")->required()->check(CLI::PositiveNumber);

  auto* gen_bi = add_gen("biclique", "Union of complete blocks with seeded noise", [&](std::ostream& f) {
    const auto blocks = parse_blocks(blocks_text);
    const auto g = gen_biclique_union(blocks, parse_rational(noise_text), seed);
    if (!partition_out.empty()) {
      write_text_file(partition_out,
                      [&](std::ostream& p) { p << partition_to_json(block_partition(g, blocks)).dump() << '\n'; });
    }
    write_graph(f, g);
  });
  gen_bi->add_option("--blocks", blocks_text, "Comma-separated <left>x<right> block sizes")->required();
  gen_bi->add_option("--noise", noise_text, "Flip probability p/q in [0,1)");
  gen_bi->add_option("--seed", seed, "Random seed (required)")->required();
  gen_bi->add_option("--partition-out", partition_out, "Also write the planted block partition");

  auto* gen_rg = add_gen("random-graph", "Each pair present with probability --density", [&](std::ostream& f) {
    write_graph(f, gen_random_graph(left, right, parse_rational(density_text), seed));
  });
  gen_rg->add_option("--left", left, "Left side size")->required();
  gen_rg->add_option("--right", right, "Right side size")->required();
  gen_rg->add_option("--density", density_text, "Edge probability p/q");
  gen_rg->add_option("--seed", seed, "Random seed (required)")->required();

  auto* gen_gr = add_gen("group", "cyclic:N | dihedral:N | symmetric:N | product(A,B)", [&](std::ostream& f) {
    write_group(f, gen_group(group_spec));
  });
  gen_gr->add_option("--spec", group_spec, "Group description")->required();

  auto* gen_sub = add_gen("subset", "Random subset of a group", [&](std::ostream& f) {
    write_subset(f, gen_random_subset(read_group_file(group_path), parse_rational(density_text), seed));
  });
  gen_sub->add_option("--group", group_path, "Group table file")->required()->check(existing);
  gen_sub->add_option("--density", density_text, "Membership probability p/q");
  gen_sub->add_option("--seed", seed, "Random seed (required)")->required();

  auto* gen_tree = add_gen("tree", "Random valid tree with a synthesised relation", [&](std::ostream& f) {
    const TreeFill how = fill == "none" ? TreeFill::None : fill == "all" ? TreeFill::All : TreeFill::Random;
    f << tree_to_json(gen_random_tree(static_cast<int>(height), seed, padding, how)).dump() << '\n';
  });
  gen_tree->add_option("--height", height, "Tree height")->required()->check(CLI::Range(1, kMaxRandomTreeHeight));
  gen_tree->add_option("--seed", seed, "Random seed (required)")->required();
  gen_tree->add_option("--padding", padding, "Extra unused elements per side");
  gen_tree->add_option("--fill", fill, "Unconstrained pairs: random, none or all")
      ->check(CLI::IsMember({"random", "none", "all"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    while (true) {
      const auto subs = target->get_subcommands();
      if (subs.empty()) break;
      target = subs.front();
    }
    out << target->help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\nrun 'hgw --help' for usage\n";
    return kUsageError;
  }

  if (!action) {
    err << "error: no command given\n";
    return kUsageError;
  }
  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace hgw::cli
