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

#include "hgw/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "hgw/error.hpp"

namespace hgw {

namespace {

// Splits the stream into meaningful lines with comments stripped.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++number_;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      const auto first = raw.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      const auto last = raw.find_last_not_of(" \t\r");
      line = raw.substr(first, last - first + 1);
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(number_) + ": " + why);
  }

  std::size_t number() const { return number_; }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

std::vector<std::string_view> split_tokens(std::string_view line, char extra_sep = ' ') {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto is_sep = [extra_sep](char c) { return c == ' ' || c == '\t' || c == extra_sep; };
  while (i < line.size()) {
    while (i < line.size() && is_sep(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_sep(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

bool parse_count(std::string_view token, std::uint64_t& value) {
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  return ec == std::errc() && ptr == end;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  return in;
}

}  // namespace

BipartiteGraph parse_graph(std::istream& in) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw Error(ErrorCode::ParseError, "empty graph file");
  const auto header = split_tokens(line);
  std::uint64_t left = 0;
  std::uint64_t right = 0;
  if (header.size() != 4 || header[0] != "u" || header[2] != "v" || !parse_count(header[1], left) ||
      !parse_count(header[3], right)) {
    reader.fail("expected 'u <U> v <V>'");
  }
  std::vector<Edge> edges;
  while (reader.next(line)) {
    const auto tokens = split_tokens(line);
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    if (tokens.size() != 2 || !parse_count(tokens[0], u) || !parse_count(tokens[1], v)) {
      reader.fail("expected '<u> <v>'");
    }
    if (u >= left || v >= right) reader.fail("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return build_graph(left, right, std::span<const Edge>(edges));
}

void write_graph(std::ostream& out, const BipartiteGraph& g) {
  out << "u " << g.left_size() << " v " << g.right_size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

FiniteGroup parse_group(std::istream& in) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw Error(ErrorCode::ParseError, "empty group file");
  const auto header = split_tokens(line);
  std::uint64_t order = 0;
  if (header.size() != 2 || header[0] != "order" || !parse_count(header[1], order) || order == 0) {
    reader.fail("expected 'order <n>'");
  }
  if (order > 4096) reader.fail("order " + std::to_string(order) + " too large");
  std::vector<std::vector<Element>> table;
  while (reader.next(line)) {
    if (table.size() == order) reader.fail("more than " + std::to_string(order) + " rows");
    std::vector<Element> row;
    for (auto token : split_tokens(line)) {
      std::uint64_t value = 0;
      if (!parse_count(token, value) || value >= order) reader.fail("bad table entry '" + std::string(token) + "'");
      row.push_back(static_cast<Element>(value));
    }
    if (row.size() != order) reader.fail("row needs " + std::to_string(order) + " entries");
    table.push_back(std::move(row));
  }
  if (table.size() != order) reader.fail("expected " + std::to_string(order) + " rows");
  return validate_group(table);
}

void write_group(std::ostream& out, const FiniteGroup& g) {
  out << "order " << g.order() << '\n';
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = 0; y < g.order(); ++y) out << (y ? " " : "") << g.multiply(x, y);
    out << '\n';
  }
}

GroupSubset parse_subset(std::istream& in, const FiniteGroup& g) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw Error(ErrorCode::ParseError, "empty subset file");
  std::string_view view(line);
  if (view.substr(0, 6) != "subset") reader.fail("expected 'subset <ids>'");
  GroupSubset s = GroupSubset::empty(g);
  for (auto token : split_tokens(view.substr(6), ',')) {
    std::uint64_t value = 0;
    if (!parse_count(token, value)) reader.fail("bad element '" + std::string(token) + "'");
    if (value >= g.order()) reader.fail("element " + std::to_string(value) + " outside the group");
    s.members.set(value);
  }
  if (reader.next(line)) reader.fail("unexpected content after subset line");
  return s;
}

void write_subset(std::ostream& out, const GroupSubset& s) {
  out << "subset ";
  bool first = true;
  s.members.for_each([&](std::size_t x) {
    out << (first ? "" : ",") << x;
    first = false;
  });
  out << '\n';
}

namespace {

Vertex json_vertex(const Json& value, const char* what) {
  if (!value.is_number_unsigned()) {
    throw Error(ErrorCode::ParseError, std::string(what) + " must be a non-negative integer");
  }
  const auto v = value.get<std::uint64_t>();
  if (v >= kMissing) throw Error(ErrorCode::OutOfRange, std::string(what) + " too large");
  return static_cast<Vertex>(v);
}

std::uint32_t branch_from_bits(std::string_view bits, int height) {
  if (bits.size() != static_cast<std::size_t>(height)) {
    throw Error(ErrorCode::ParseError, "branch '" + std::string(bits) + "' must have length " + std::to_string(height));
  }
  std::uint32_t sigma = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw Error(ErrorCode::ParseError, "bad branch '" + std::string(bits) + "'");
    sigma = (sigma << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return sigma;
}

std::string branch_to_bits(std::uint32_t sigma, int height) {
  std::string out(static_cast<std::size_t>(height), '0');
  for (int i = 0; i < height; ++i) {
    if ((sigma >> (height - 1 - i)) & 1U) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

const Json& require_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

PhiTree tree_from_json(const Json& j, const std::filesystem::path& base_dir) {
  const Json& height_field = require_field(j, "height");
  if (!height_field.is_number_integer()) throw Error(ErrorCode::ParseError, "height must be an integer");
  const auto height = height_field.get<std::int64_t>();
  if (height < 1 || height > kMaxTreeHeight) {
    throw Error(ErrorCode::BadHeight, "tree height " + std::to_string(height) + " outside [1," +
                                          std::to_string(kMaxTreeHeight) + "]");
  }
  const int n = static_cast<int>(height);
  std::vector<Vertex> branches(std::size_t{1} << n, kMissing);
  std::vector<Vertex> nodes((std::size_t{1} << n) - 1, kMissing);

  const Json& node_map = require_field(j, "nodes");
  const Json& branch_map = require_field(j, "branches");
  if (!node_map.is_object() || !branch_map.is_object()) {
    throw Error(ErrorCode::ParseError, "nodes and branches must be objects keyed by bit strings");
  }
  for (const auto& [bits, value] : node_map.items()) {
    if (bits.size() >= static_cast<std::size_t>(n)) {
      throw Error(ErrorCode::ParseError, "node '" + bits + "' deeper than the tree");
    }
    nodes[position_from_bits(bits)] = json_vertex(value, "node element");
  }
  for (const auto& [bits, value] : branch_map.items()) {
    branches[branch_from_bits(bits, n)] = json_vertex(value, "branch element");
  }

  const Json& rel = require_field(j, "relation");
  std::shared_ptr<const BipartiteGraph> relation;
  if (rel.is_string()) {
    std::filesystem::path path = rel.get<std::string>();
    if (path.is_relative()) path = base_dir / path;
    relation = std::make_shared<const BipartiteGraph>(read_graph_file(path));
  } else if (rel.is_array()) {
    std::vector<Edge> edges;
    std::size_t left = 0;
    std::size_t right = 0;
    for (const Json& pair : rel) {
      if (!pair.is_array() || pair.size() != 2) throw Error(ErrorCode::ParseError, "relation pairs must be [a, b]");
      const Vertex a = json_vertex(pair[0], "relation element");
      const Vertex b = json_vertex(pair[1], "relation element");
      edges.emplace_back(a, b);
      left = std::max<std::size_t>(left, a + std::size_t{1});
      right = std::max<std::size_t>(right, b + std::size_t{1});
    }
    for (Vertex a : branches) {
      if (a != kMissing) left = std::max<std::size_t>(left, a + std::size_t{1});
    }
    for (Vertex b : nodes) {
      if (b != kMissing) right = std::max<std::size_t>(right, b + std::size_t{1});
    }
    if (j.contains("left_size")) left = std::max<std::size_t>(left, json_vertex(j.at("left_size"), "left_size"));
    if (j.contains("right_size")) right = std::max<std::size_t>(right, json_vertex(j.at("right_size"), "right_size"));
    relation = std::make_shared<const BipartiteGraph>(build_graph(left, right, std::span<const Edge>(edges)));
  } else {
    throw Error(ErrorCode::ParseError, "relation must be a pair list or a graph file path");
  }
  return PhiTree(n, std::move(branches), std::move(nodes), std::move(relation));
}

Json tree_to_json(const PhiTree& t) {
  Json j;
  j["height"] = t.height();
  Json nodes = Json::object();
  for (Position p = 0; p < t.node_count(); ++p) {
    if (t.node(p) != kMissing) nodes[position_to_bits(p)] = t.node(p);
  }
  Json branches = Json::object();
  for (std::uint32_t sigma = 0; sigma < t.branch_count(); ++sigma) {
    if (t.branch(sigma) != kMissing) branches[branch_to_bits(sigma, t.height())] = t.branch(sigma);
  }
  j["nodes"] = std::move(nodes);
  j["branches"] = std::move(branches);
  j["left_size"] = t.relation().left_size();
  j["right_size"] = t.relation().right_size();
  Json rel = Json::array();
  for (const auto& [u, v] : t.relation().edges()) rel.push_back({u, v});
  j["relation"] = std::move(rel);
  return j;
}

RegularityPartition partition_from_json(const Json& j, const BipartiteGraph& g) {
  RegularityPartition p;
  auto read_side = [&](const char* key, Side side, std::vector<VertexSet>& parts) {
    const Json& list = require_field(j, key);
    if (!list.is_array() || list.empty()) {
      throw Error(ErrorCode::MalformedPartition, std::string(key) + " must list the exceptional part first");
    }
    for (const Json& part : list) {
      if (!part.is_array()) throw Error(ErrorCode::ParseError, "parts must be id arrays");
      VertexSet set = VertexSet::empty(g, side);
      for (const Json& id : part) {
        const Vertex v = json_vertex(id, "part member");
        if (v >= g.side_size(side)) throw Error(ErrorCode::OutOfRange, "part member " + std::to_string(v) + " out of range");
        if (set.members.test(v)) throw Error(ErrorCode::MalformedPartition, "vertex listed twice in a part");
        set.members.set(v);
      }
      parts.push_back(std::move(set));
    }
  };
  read_side("left", Side::Left, p.left_parts);
  read_side("right", Side::Right, p.right_parts);
  validate_partition(g, p);
  return p;
}

Json partition_to_json(const RegularityPartition& p) {
  auto side = [](const std::vector<VertexSet>& parts) {
    Json out = Json::array();
    for (const VertexSet& part : parts) out.push_back(part.members.members());
    return out;
  };
  Json j;
  j["left"] = side(p.left_parts);
  j["right"] = side(p.right_parts);
  return j;
}

std::string to_string(Homogeneity h) {
  switch (h) {
    case Homogeneity::EdgeDense: return "EDGE_DENSE";
    case Homogeneity::NonEdgeDense: return "NON_EDGE_DENSE";
    case Homogeneity::Neither: return "NEITHER";
  }
  return "NEITHER";
}

Json report_to_json(const PartitionReport& r) {
  Json j;
  j["eps"] = to_string(r.eps);
  j["delta"] = to_string(r.delta);
  j["left_exceptional_ok"] = r.left_exceptional_ok;
  j["right_exceptional_ok"] = r.right_exceptional_ok;
  Json grid = Json::array();
  for (const auto& row : r.grid) {
    Json cells = Json::array();
    for (const HomogeneityVerdict& v : row) {
      cells.push_back({{"kind", to_string(v.kind)},
                       {"edge_count", v.edge_count},
                       {"box_size", v.box_size},
                       {"threshold", to_string(v.threshold)}});
    }
    grid.push_back(std::move(cells));
  }
  j["grid"] = std::move(grid);
  j["pass"] = r.pass;
  return j;
}

Json witness_to_json(const HalfGraphWitness& w) {
  Json j;
  j["height"] = w.height();
  j["a"] = w.a;
  j["b"] = w.b;
  return j;
}

HalfGraphWitness witness_from_json(const Json& j) {
  HalfGraphWitness w;
  for (const Json& x : require_field(j, "a")) w.a.push_back(json_vertex(x, "witness element"));
  for (const Json& x : require_field(j, "b")) w.b.push_back(json_vertex(x, "witness element"));
  return w;
}

Json subset_to_json(const GroupSubset& s) { return Json(s.elements()); }

Json coset_approx_to_json(const CosetApprox& c) {
  Json j;
  j["subgroup"] = subset_to_json(c.subgroup);
  j["index"] = c.index;
  j["coset_union"] = subset_to_json(c.coset_union);
  j["symdiff"] = c.symdiff;
  j["bound"] = c.bound ? Json(to_string(*c.bound)) : Json(nullptr);
  j["within_bound"] = c.within_bound();
  return j;
}

BipartiteGraph read_graph_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_graph(in);
}

FiniteGroup read_group_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_group(in);
}

GroupSubset read_subset_file(const std::filesystem::path& path, const FiniteGroup& g) {
  auto in = open_input(path);
  return parse_subset(in, g);
}

Json read_json_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

PhiTree read_tree_file(const std::filesystem::path& path) {
  return tree_from_json(read_json_file(path), path.parent_path());
}

}  // namespace hgw
