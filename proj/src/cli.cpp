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

#include "gdma/cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"

#include "gdma/errors.hpp"
#include "gdma/io.hpp"

namespace gdma::cli {

namespace {

using nlohmann::json;

void print_grid(std::ostream& out, const std::vector<std::string>& cells, int rows, int cols) {
  std::size_t width = 0;
  for (const auto& c : cells) width = std::max(width, c.size());
  for (int r = 0; r < rows; ++r) {
    out << "  ";
    for (int c = 0; c < cols; ++c) out << std::setw(static_cast<int>(width) + 2) << cells[r * cols + c];
    out << '\n';
  }
}

void print_labelled_tables(std::ostream& out, const Graph& g, const Labelling& f,
                           const std::vector<GroupElement>& weights, int grid_rows, int grid_cols) {
  std::vector<std::string> labels, ws;
  for (int v = 0; v < g.n; ++v) {
    labels.push_back(format_element(f.values[v]));
    ws.push_back(format_element(weights[v]));
  }
  if (grid_rows > 0 && grid_rows * grid_cols == g.n) {
    out << "labels (row-major " << grid_rows << "x" << grid_cols << "):\n";
    print_grid(out, labels, grid_rows, grid_cols);
    out << "weights:\n";
    print_grid(out, ws, grid_rows, grid_cols);
  } else {
    out << "  vertex  label  weight\n";
    for (int v = 0; v < g.n; ++v)
      out << "  " << std::setw(6) << v << "  " << std::setw(5) << labels[v] << "  " << ws[v] << '\n';
  }
}

std::string claim_text(const ConstructionResult& r) {
  std::string group = "Z_" + r.labelling.spec.to_string();
  std::vector<std::string> parts;
  if (r.claim.magic) parts.push_back("magic with constant " + format_element(*r.claim.magic));
  if (r.claim.antimagic) parts.push_back("antimagic");
  if (r.claim.balanced) parts.push_back("balanced");
  std::string joined;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) joined += " + ";
    joined += parts[i];
  }
  return joined + " over " + group;
}

struct Options {
  bool json = false;
  std::string out_path;
  std::string graph_arg;
  std::string group_arg;
  std::string labels_arg = "-";
  std::string expr;
  std::string name;
  std::string s_arg;
  std::string mode = "antimagic";
  std::int64_t n = 0, d = 0, q = 0, m = 0;
  std::int64_t budget = 50'000'000;
  std::int64_t limit = 1000;
  bool no_symmetry = false;
  bool all = false;
};

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoll(tok));
  }
  return out;
}

ConstructionResult run_named_construct(const Options& opt) {
  const std::string& name = opt.name;
  if (name == "cycle") return label_cycle_sequential(static_cast<int>(opt.n));
  if (name == "complete") return label_complete_balanced(static_cast<int>(opt.n));
  if (name == "prism") return label_prism(static_cast<int>(opt.n));
  if (name == "hypercube") return label_hypercube_antimagic(static_cast<int>(opt.d ? opt.d : opt.n));
  if (name == "hamming-cyclic") return label_hamming_cyclic(static_cast<int>(opt.d), opt.q);
  if (name == "hamming-magic") return label_hamming_elementary_magic(static_cast<int>(opt.d), opt.q);
  if (name == "circulant") return label_circulant(opt.n, parse_int_list(opt.s_arg));
  if (name == "cayley") {
    GroupSpec spec = GroupSpec::parse(opt.group_arg);
    std::vector<GroupElement> elems;
    std::stringstream ss(opt.s_arg);
    std::string tok;
    while (std::getline(ss, tok, ';'))
      if (!tok.empty()) elems.push_back(parse_element(spec, tok));
    return label_cayley_by_automorphism(spec, ConnectionSet(spec, std::move(elems)),
                                        GroupAutomorphism::identity(spec));
  }
  if (name.find('(') != std::string::npos) return parse_construction_expr(name);
  throw ParameterError("unknown construction '" + name +
                       "' (use --expr for combinators, or one of cycle, complete, prism, hypercube, "
                       "hamming-cyclic, hamming-magic, circulant, cayley, magic-rectangle)");
}

int dispatch(const std::string& sub, const Options& opt, std::ostream& out_stream, std::istream& in) {
  std::ofstream file_out;
  std::ostream* sink = &out_stream;
  if (!opt.out_path.empty()) {
    file_out.open(opt.out_path);
    if (!file_out) throw ParameterError("cannot open output file '" + opt.out_path + "'");
    sink = &file_out;
  }
  std::ostream& out = *sink;

  if (sub == "graph") {
    Graph g = parse_graph_expr(opt.expr);
    out << to_json(g).dump(opt.json ? -1 : 2) << '\n';
    return 0;
  }

  if (sub == "construct") {
    if (opt.name == "magic-rectangle") {
      auto rect = magic_rectangle(opt.m, opt.n);
      if (opt.json) {
        out << json{{"rectangle", rect},
                    {"row_sum", opt.n * (opt.m * opt.n + 1) / 2},
                    {"col_sum", opt.m * (opt.m * opt.n + 1) / 2}}
                   .dump()
            << '\n';
      } else {
        std::vector<std::string> cells;
        for (const auto& row : rect)
          for (auto v : row) cells.push_back(std::to_string(v));
        out << "magic " << opt.m << "x" << opt.n << " rectangle (row sum "
            << opt.n * (opt.m * opt.n + 1) / 2 << ", column sum " << opt.m * (opt.m * opt.n + 1) / 2
            << "):\n";
        print_grid(out, cells, static_cast<int>(opt.m), static_cast<int>(opt.n));
      }
      return 0;
    }
    ConstructionResult r = !opt.expr.empty() ? parse_construction_expr(opt.expr) : run_named_construct(opt);
    if (opt.json) {
      out << to_json(r).dump() << '\n';
    } else {
      out << "construction: " << r.theorem_tag << '\n';
      out << "verified: " << claim_text(r) << '\n';
      print_labelled_tables(out, r.graph, r.labelling, r.report.weights, r.grid_rows, r.grid_cols);
    }
    return 0;
  }

  if (sub == "verify") {
    json doc;
    if (opt.labels_arg == "-") {
      doc = json::parse(in);
    } else {
      std::ifstream f(opt.labels_arg);
      if (!f) throw ParameterError("cannot open labels file '" + opt.labels_arg + "'");
      doc = json::parse(f);
    }
    Labelling f = doc.contains("labelling") ? labelling_from_json(doc.at("labelling"))
                                            : labelling_from_json(doc);
    Graph g;
    if (!opt.graph_arg.empty()) {
      g = resolve_graph_arg(opt.graph_arg);
    } else if (doc.contains("graph")) {
      g = graph_from_json(doc.at("graph"));
    } else {
      throw ParameterError("verify needs --graph or a bundle containing the graph");
    }
    VerificationReport report = verify(g, f);
    if (opt.json) {
      out << to_json(report).dump() << '\n';
    } else {
      out << "antimagic: " << (report.antimagic ? "yes" : "no") << '\n';
      out << "magic: " << (report.magic ? format_element(*report.magic) : std::string("no")) << '\n';
      out << "balanced: " << (report.balanced ? "yes" : "no") << '\n';
      if (report.duplicate_witness)
        out << "duplicate weight at vertices " << report.duplicate_witness->first << " and "
            << report.duplicate_witness->second << '\n';
      print_labelled_tables(out, g, f, report.weights, 0, 0);
    }
    return 0;
  }

  if (sub == "check") {
    Graph g = resolve_graph_arg(opt.graph_arg);
    GroupSpec a = GroupSpec::parse(opt.group_arg);
    auto obs = antimagic_obstruction(g, a);
    if (opt.json) {
      out << json{{"obstruction", obs ? to_json(*obs) : json(nullptr)}}.dump() << '\n';
    } else {
      out << (obs ? "obstruction: " + obs->narrative
                  : std::string("no obstruction found (existence remains open)"))
          << '\n';
    }
    return obs ? 3 : 0;
  }

  if (sub == "search") {
    Graph g = resolve_graph_arg(opt.graph_arg);
    GroupSpec a = GroupSpec::parse(opt.group_arg);
    SearchConfig cfg;
    cfg.mode = opt.mode == "magic" ? SearchMode::Magic : SearchMode::Antimagic;
    cfg.budget = opt.budget;
    if (opt.no_symmetry) {
      cfg.fix_first_vertex = false;
      cfg.use_negation = false;
    }
    if (opt.all) {
      auto sols = enumerate_all(g, a, cfg.mode, static_cast<std::size_t>(opt.limit), cfg);
      if (opt.json) {
        json arr = json::array();
        for (const auto& s : sols) arr.push_back(to_json(s));
        out << json{{"count", sols.size()}, {"solutions", arr}}.dump() << '\n';
      } else {
        out << sols.size() << " solution(s) up to the enabled symmetries\n";
      }
      return 0;
    }
    SearchOutcome o = search(g, a, cfg);
    if (opt.json) {
      out << to_json(o).dump() << '\n';
    } else {
      switch (o.status) {
        case SearchStatus::Found: {
          out << "found after " << o.nodes_expanded << " nodes\n";
          auto report = verify(g, *o.witness);
          print_labelled_tables(out, g, *o.witness, report.weights, 0, 0);
          break;
        }
        case SearchStatus::ExhaustedNone:
          out << "exhausted-none: no labelling exists (searched " << o.nodes_expanded << " nodes)\n";
          break;
        case SearchStatus::BudgetExceeded:
          out << "budget-exceeded after " << o.nodes_expanded << " nodes\n";
          break;
      }
    }
    return o.status == SearchStatus::BudgetExceeded ? 4 : 0;
  }

  throw ParameterError("unknown subcommand '" + sub + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"group distance magic and antimagic labellings over finite Abelian groups"};
  app.require_subcommand(1);
  Options opt;

  auto* graph_cmd = app.add_subcommand("graph", "build a graph from a builder expression, emit JSON");
  graph_cmd->add_option("expr", opt.expr, "builder expression, e.g. cartesian(cycle(3),cycle(5))")
      ->required();
  graph_cmd->add_flag("--json", opt.json, "compact JSON output");
  graph_cmd->add_option("--out", opt.out_path, "write to file instead of stdout");

  auto* construct_cmd = app.add_subcommand("construct", "run a constructive labelling and certify it");
  construct_cmd->add_option("name", opt.name, "constructor name or inline expression");
  construct_cmd->add_option("--expr", opt.expr, "construction expression for combinators");
  construct_cmd->add_option("--n", opt.n);
  construct_cmd->add_option("--d", opt.d);
  construct_cmd->add_option("--q", opt.q);
  construct_cmd->add_option("--m", opt.m);
  construct_cmd->add_option("--s", opt.s_arg, "connection set, e.g. \"1,7,4\" or \"0,1;1,0\"");
  construct_cmd->add_option("--group", opt.group_arg, "group moduli, e.g. \"2,2\"");
  construct_cmd->add_flag("--json", opt.json);
  construct_cmd->add_option("--out", opt.out_path);

  auto* verify_cmd = app.add_subcommand("verify", "verify a labelling (JSON from stdin or --labels)");
  verify_cmd->add_option("--graph", opt.graph_arg, "builder expression or file path");
  verify_cmd->add_option("--labels", opt.labels_arg, "labelling/bundle JSON path, '-' for stdin");
  verify_cmd->add_flag("--json", opt.json);
  verify_cmd->add_option("--out", opt.out_path);

  auto* check_cmd = app.add_subcommand("check", "screen for proven non-existence obstructions");
  check_cmd->add_option("--graph", opt.graph_arg)->required();
  check_cmd->add_option("--group", opt.group_arg)->required();
  check_cmd->add_flag("--json", opt.json);
  check_cmd->add_option("--out", opt.out_path);

  auto* search_cmd = app.add_subcommand("search", "exhaustive backtracking search");
  search_cmd->add_option("--graph", opt.graph_arg)->required();
  search_cmd->add_option("--group", opt.group_arg)->required();
  search_cmd->add_option("--mode", opt.mode, "magic | antimagic")
      ->check(CLI::IsMember({"magic", "antimagic"}));
  search_cmd->add_option("--budget", opt.budget, "node expansion cap");
  search_cmd->add_flag("--no-symmetry", opt.no_symmetry, "disable symmetry reduction");
  search_cmd->add_flag("--all", opt.all, "enumerate all solutions up to symmetry");
  search_cmd->add_option("--limit", opt.limit, "cap for --all");
  search_cmd->add_flag("--json", opt.json);
  search_cmd->add_option("--out", opt.out_path);

  std::vector<std::string> argv_store;
  argv_store.push_back("gdma");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  std::string sub = app.get_subcommands().front()->get_name();
  try {
    return dispatch(sub, opt, out, in);
  } catch (const HypothesisNotMet& e) {
    err << "hypothesis not met: " << e.what() << '\n';
    if (opt.json) out << json{{"error", "hypothesis-not-met"}, {"reason", e.what()}}.dump() << '\n';
    return 2;
  } catch (const ObstructionError& e) {
    err << "obstruction: " << e.narrative << '\n';
    if (opt.json)
      out << json{{"error", "obstruction"},
                  {"obstruction", to_json(Obstruction{e.kind, e.citation, e.narrative})}}
                 .dump()
          << '\n';
    return 3;
  } catch (const UnsupportedConstruction& e) {
    err << "no known construction: " << e.what() << '\n';
    if (opt.json) out << json{{"error", "unsupported"}, {"reason", e.what()}}.dump() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "bad JSON input: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace gdma::cli
