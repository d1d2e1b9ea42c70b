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

// Text and JSON formats shared by the command-line tools and tests.
//
//   graph:     "u <U> v <V>" then one "<u> <v>" pair per line
//   group:     "order <n>" then n rows of n ids
//   subset:    "subset <id>,<id>,..."
//   tree:      {"height", "nodes": {bits: id}, "branches": {bits: id}, "relation": [[u,v],...] | "graph.txt"}
//   partition: {"left": [[ids],...], "right": [[ids],...]}, index 0 exceptional
//
// Blank lines and '#' comments are ignored in the text formats.

#include <filesystem>
#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "hgw/bigraph.hpp"
#include "hgw/group.hpp"
#include "hgw/halfgraph.hpp"
#include "hgw/regularity.hpp"
#include "hgw/tree.hpp"

namespace hgw {

using Json = nlohmann::ordered_json;

BipartiteGraph parse_graph(std::istream& in);
void write_graph(std::ostream& out, const BipartiteGraph& g);

FiniteGroup parse_group(std::istream& in);
void write_group(std::ostream& out, const FiniteGroup& g);

GroupSubset parse_subset(std::istream& in, const FiniteGroup& g);
void write_subset(std::ostream& out, const GroupSubset& s);

/// `base_dir` resolves a relation given as a graph file path.
PhiTree tree_from_json(const Json& j, const std::filesystem::path& base_dir = {});
Json tree_to_json(const PhiTree& t);

RegularityPartition partition_from_json(const Json& j, const BipartiteGraph& g);
Json partition_to_json(const RegularityPartition& p);
Json report_to_json(const PartitionReport& r);

Json witness_to_json(const HalfGraphWitness& w);
HalfGraphWitness witness_from_json(const Json& j);

Json subset_to_json(const GroupSubset& s);
Json coset_approx_to_json(const CosetApprox& c);

std::string to_string(Homogeneity h);

BipartiteGraph read_graph_file(const std::filesystem::path& path);
FiniteGroup read_group_file(const std::filesystem::path& path);
GroupSubset read_subset_file(const std::filesystem::path& path, const FiniteGroup& g);
Json read_json_file(const std::filesystem::path& path);
PhiTree read_tree_file(const std::filesystem::path& path);

}  // namespace hgw
