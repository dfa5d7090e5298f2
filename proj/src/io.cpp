// Copyright 2026 The gdma Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gdma/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "gdma/errors.hpp"

namespace gdma {

using nlohmann::json;

nlohmann::json to_json(const GroupSpec& spec) { return json{{"moduli", spec.moduli()}}; }

nlohmann::json to_json(const Graph& g) {
  json j{{"n", g.n}, {"adj", g.adj}};
  if (!g.tags.empty()) j["tags"] = g.tags;
  return j;
}

nlohmann::json to_json(const Labelling& f) {
  return json{{"group", to_json(f.spec)}, {"values", f.values}};
}

nlohmann::json to_json(const VerificationReport& r) {
  json j;
  j["weights"] = r.weights;
  j["antimagic"] = r.antimagic;
  j["balanced"] = r.balanced;
  j["magic"] = r.magic ? json(*r.magic) : json(nullptr);
  j["duplicate_witness"] =
      r.duplicate_witness ? json{r.duplicate_witness->first, r.duplicate_witness->second} : json(nullptr);
  return j;
}

nlohmann::json to_json(const Claim& c) {
  json j;
  j["antimagic"] = c.antimagic;
  j["balanced"] = c.balanced;
  j["magic"] = c.magic ? json(*c.magic) : json(nullptr);
  return j;
}

nlohmann::json to_json(const ConstructionResult& r) {
  json j;
  j["theorem_tag"] = r.theorem_tag;
  j["graph"] = to_json(r.graph);
  j["labelling"] = to_json(r.labelling);
  j["weights"] = r.report.weights;
  j["claim"] = to_json(r.claim);
  j["report"] = to_json(r.report);
  if (r.grid_rows > 0) j["grid"] = json{{"rows", r.grid_rows}, {"cols", r.grid_cols}};
  return j;
}

nlohmann::json to_json(const SearchOutcome& o) {
  json j;
  switch (o.status) {
    case SearchStatus::Found: j["status"] = "found"; break;
    case SearchStatus::ExhaustedNone: j["status"] = "exhausted-none"; break;
    case SearchStatus::BudgetExceeded: j["status"] = "budget-exceeded"; break;
  }
  j["nodes_expanded"] = o.nodes_expanded;
  j["witness"] = o.witness ? to_json(*o.witness) : json(nullptr);
  return j;
}

nlohmann::json to_json(const Obstruction& o) {
  return json{{"kind", o.kind}, {"citation", o.citation}, {"narrative", o.narrative}};
}

GroupSpec group_from_json(const json& j) {
  std::vector<std::int64_t> moduli = j.at("moduli").get<std::vector<std::int64_t>>();
  return GroupSpec(std::move(moduli));
}

Graph graph_from_json(const json& j) {
  Graph g;
  g.n = j.at("n").get<int>();
  g.adj = j.at("adj").get<std::vector<std::vector<int>>>();
  if (static_cast<int>(g.adj.size()) != g.n) throw StructuralError("graph json: adj size differs from n");
  if (j.contains("tags") && !j.at("tags").is_null())
    g.tags = j.at("tags").get<std::vector<std::vector<std::int64_t>>>();
  // normalize and validate
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < g.n; ++v)
    for (int u : g.adj[v])
      if (u > v) edges.emplace_back(v, u);
  Graph checked = graph_from_edges(g.n, edges);
  for (int v = 0; v < g.n; ++v) {
    auto sorted = g.adj[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != checked.adj[v]) throw StructuralError("graph json: adjacency is not symmetric");
  }
  checked.tags = std::move(g.tags);
  return checked;
}

Labelling labelling_from_json(const json& j) {
  Labelling f{group_from_json(j.at("group")), {}};
  for (const auto& v : j.at("values")) {
    GroupElement e = v.get<GroupElement>();
    f.values.push_back(std::move(e));
  }
  return f;
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return graph_from_json(json::parse(text));
  // edge list: "u v" per line, vertex count = max index + 1
  std::vector<std::pair<int, int>> edges;
  int max_v = -1;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    std::stringstream ls(line);
    int u, v;
    if (!(ls >> u)) continue;  // blank line
    if (!(ls >> v)) throw ParameterError("edge list line '" + line + "' needs two endpoints");
    edges.emplace_back(u, v);
    max_v = std::max({max_v, u, v});
  }
  return graph_from_edges(max_v + 1, edges);
}

// ---------------------------------------------------------------------
// expression parsing

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw ParameterError("expected '" + std::string(1, c) + "' at position " + std::to_string(pos) +
                           " in '" + text + "'");
  }
  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' || text[pos] == '-'))
      ++pos;
    if (start == pos) throw ParameterError("expected a name at position " + std::to_string(start) +
                                           " in '" + text + "'");
    std::string s = text.substr(start, pos - start);
    for (auto& ch : s)
      if (ch == '-') ch = '_';
    return s;
  }
  std::int64_t integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParameterError("expected an integer at position " + std::to_string(start));
    return std::stoll(text.substr(start, pos - start));
  }
  std::vector<std::int64_t> int_list() {
    expect('[');
    std::vector<std::int64_t> out;
    if (!peek(']')) {
      out.push_back(integer());
      while (eat(',')) out.push_back(integer());
    }
    expect(']');
    return out;
  }
};

Graph parse_graph(Parser& p);

std::vector<Graph> parse_graph_args(Parser& p, std::size_t min_count) {
  p.expect('(');
  std::vector<Graph> out;
  out.push_back(parse_graph(p));
  while (p.eat(',')) out.push_back(parse_graph(p));
  p.expect(')');
  if (out.size() < min_count) throw ParameterError("builder needs at least two factors");
  return out;
}

Graph parse_graph(Parser& p) {
  std::string name = p.ident();
  if (name == "cycle" || name == "complete" || name == "prism" || name == "hypercube") {
    p.expect('(');
    std::int64_t n = p.integer();
    p.expect(')');
    if (name == "cycle") return cycle(static_cast<int>(n));
    if (name == "complete") return complete(static_cast<int>(n));
    if (name == "prism") return prism(static_cast<int>(n));
    return hypercube(static_cast<int>(n));
  }
  if (name == "hamming") {
    p.expect('(');
    std::int64_t d = p.integer();
    p.expect(',');
    std::int64_t q = p.integer();
    p.expect(')');
    return hamming(static_cast<int>(d), q);
  }
  if (name == "hamming_mixed") {
    p.expect('(');
    std::vector<std::int64_t> qs;
    qs.push_back(p.integer());
    while (p.eat(',')) qs.push_back(p.integer());
    p.expect(')');
    return hamming_mixed(qs);
  }
  if (name == "circulant") {
    p.expect('(');
    std::int64_t n = p.integer();
    std::vector<std::int64_t> s;
    while (p.eat(',')) s.push_back(p.integer());
    p.expect(')');
    return circulant(n, s);
  }
  if (name == "cayley") {
    p.expect('(');
    GroupSpec spec(p.int_list());
    std::vector<GroupElement> elems;
    while (p.eat(',')) {
      auto vals = p.int_list();
      elems.push_back(GroupElement(vals.begin(), vals.end()));
    }
    p.expect(')');
    return cayley(spec, ConnectionSet(spec, std::move(elems)));
  }
  if (name == "cartesian" || name == "direct" || name == "strong") {
    auto factors = parse_graph_args(p, 2);
    Graph g = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i)
      g = name == "cartesian" ? cartesian(g, factors[i])
                              : (name == "direct" ? direct(g, factors[i]) : strong(g, factors[i]));
    return g;
  }
  throw ParameterError("unknown graph builder '" + name + "'");
}

ConstructionResult parse_construction(Parser& p);

std::vector<ConstructionResult> parse_construction_args(Parser& p) {
  p.expect('(');
  std::vector<ConstructionResult> out;
  out.push_back(parse_construction(p));
  while (p.eat(',')) out.push_back(parse_construction(p));
  p.expect(')');
  return out;
}

ConstructionResult parse_construction(Parser& p) {
  std::string name = p.ident();
  if (name == "cycle") {
    p.expect('(');
    std::int64_t n = p.integer();
    p.expect(')');
    return label_cycle_sequential(static_cast<int>(n));
  }
  if (name == "complete") {
    p.expect('(');
    std::int64_t n = p.integer();
    p.expect(')');
    return label_complete_balanced(static_cast<int>(n));
  }
  if (name == "prism") {
    p.expect('(');
    std::int64_t n = p.integer();
    p.expect(')');
    return label_prism(static_cast<int>(n));
  }
  if (name == "hypercube") {
    p.expect('(');
    std::int64_t d = p.integer();
    p.expect(')');
    return label_hypercube_antimagic(static_cast<int>(d));
  }
  if (name == "hamming_cyclic" || name == "hamming_magic") {
    p.expect('(');
    std::int64_t d = p.integer();
    p.expect(',');
    std::int64_t q = p.integer();
    p.expect(')');
    return name == "hamming_cyclic" ? label_hamming_cyclic(static_cast<int>(d), q)
                                    : label_hamming_elementary_magic(static_cast<int>(d), q);
  }
  if (name == "circulant") {
    p.expect('(');
    std::int64_t n = p.integer();
    std::vector<std::int64_t> s;
    while (p.eat(',')) s.push_back(p.integer());
    p.expect(')');
    return label_circulant(n, s);
  }
  if (name == "cayley_identity") {
    p.expect('(');
    GroupSpec spec(p.int_list());
    std::vector<GroupElement> elems;
    while (p.eat(',')) {
      auto vals = p.int_list();
      elems.push_back(GroupElement(vals.begin(), vals.end()));
    }
    p.expect(')');
    return label_cayley_by_automorphism(spec, ConnectionSet(spec, std::move(elems)),
                                        GroupAutomorphism::identity(spec));
  }
  if (name == "cartesian_group") return combine_cartesian_product_group(parse_construction_args(p));
  if (name == "direct_group") return combine_direct_product_group(parse_construction_args(p));
  if (name == "cartesian_cyclic") return combine_cartesian_cyclic(parse_construction_args(p));
  if (name == "direct_cyclic")
    return combine_direct_cyclic(parse_construction_args(p), DirectCyclicMode::Antimagic);
  if (name == "direct_cyclic_magic")
    return combine_direct_cyclic(parse_construction_args(p), DirectCyclicMode::Magic);
  if (name == "strong_cyclic") {
    auto args = parse_construction_args(p);
    if (args.size() != 2) throw ParameterError("strong_cyclic takes exactly two factors");
    return combine_strong_cyclic(args[0], args[1], StrongCyclicMode::BalancedPair);
  }
  if (name == "strong_cyclic_magic") {
    auto args = parse_construction_args(p);
    if (args.size() != 2) throw ParameterError("strong_cyclic_magic takes exactly two factors");
    return combine_strong_cyclic(args[0], args[1], StrongCyclicMode::MagicPair);
  }
  if (name == "balanced_strong") {
    auto args = parse_construction_args(p);
    if (args.size() != 2) throw ParameterError("balanced_strong takes exactly two factors");
    return balanced_strong_product(args[0], args[1]);
  }
  if (name == "cartesian_mixed") {
    p.expect('(');
    std::vector<ConstructionResult> I, J, L;
    bool first = true;
    while (first || p.eat(',')) {
      first = false;
      std::string part = p.ident();
      auto args = parse_construction_args(p);
      if (part == "I")
        I.insert(I.end(), args.begin(), args.end());
      else if (part == "J")
        J.insert(J.end(), args.begin(), args.end());
      else if (part == "L")
        L.insert(L.end(), args.begin(), args.end());
      else
        throw ParameterError("cartesian_mixed parts are I(...), J(...), L(...)");
      if (p.peek(')')) break;
    }
    p.expect(')');
    return combine_cartesian_mixed(I, J, L);
  }
  if (name == "complete_strong") {
    p.expect('(');
    std::int64_t n = p.integer();
    p.expect(',');
    Graph g = parse_graph(p);
    p.expect(')');
    return label_complete_strong_regular(static_cast<int>(n), g);
  }
  throw ParameterError("unknown construction '" + name + "'");
}

}  // namespace

Graph parse_graph_expr(const std::string& expr) {
  Parser p(expr);
  Graph g = parse_graph(p);
  if (!p.at_end()) throw ParameterError("trailing input in graph expression '" + expr + "'");
  return g;
}

Graph resolve_graph_arg(const std::string& arg) {
  // Builder expressions always contain '('; bare words are paths.
  if (arg.find('(') != std::string::npos) return parse_graph_expr(arg);
  return load_graph(arg);
}

ConstructionResult parse_construction_expr(const std::string& expr) {
  Parser p(expr);
  ConstructionResult r = parse_construction(p);
  if (!p.at_end()) throw ParameterError("trailing input in construction expression '" + expr + "'");
  return r;
}

std::string format_element(const GroupElement& e) {
  if (e.size() == 1) return std::to_string(e[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(e[i]);
  }
  out += ")";
  return out;
}

}  // namespace gdma
