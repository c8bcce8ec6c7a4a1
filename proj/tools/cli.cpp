// Copyright 2026 The ssw-kernels Authors
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

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "ssw/ssw.hpp"

namespace ssw::cli {
namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), {}};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<Vertex> parse_list(const std::string& text, const char* flag) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || item.front() == '-') {
      throw CLI::ValidationError(flag, "expected a comma-separated vertex list");
    }
    out.push_back(static_cast<Vertex>(value));
  }
  return out;
}

VertexSet to_vertex_set(const TwoColoredDigraph& g,
                        const std::vector<Vertex>& members) {
  for (Vertex v : members) {
    if (!g.universe().contains(v)) {
      throw PreconditionViolation("vertex " + std::to_string(v) +
                                  " outside the graph");
    }
  }
  return VertexSet(g.universe(), members);
}

// Text rendering of a JSON document: one "key: value" line per leaf.
void flatten(const nlohmann::json& node, const std::string& key,
             std::ostream& out);

std::string scalar_text(const nlohmann::json& v) {
  if (v.is_null()) return "none";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += scalar_text(v[i]);
    }
    return s + "]";
  }
  return v.dump();
}

bool is_flat(const nlohmann::json& v) {
  return std::none_of(v.begin(), v.end(),
                      [](const nlohmann::json& e) { return e.is_object(); });
}

void flatten(const nlohmann::json& node, const std::string& key,
             std::ostream& out) {
  if (node.is_object()) {
    for (const auto& [k, v] : node.items()) {
      flatten(v, key.empty() ? k : key + "." + k, out);
    }
    return;
  }
  if (node.is_array() && !is_flat(node)) {
    for (std::size_t i = 0; i < node.size(); ++i) {
      flatten(node[i], key + "." + std::to_string(i), out);
    }
    return;
  }
  out << key << ':';
  if (node.is_array()) {
    for (const auto& e : node) out << ' ' << scalar_text(e);
  } else {
    out << ' ' << scalar_text(node);
  }
  out << '\n';
}

void emit(const nlohmann::json& doc, bool json, std::ostream& out) {
  if (json) {
    out << doc.dump(2) << '\n';
  } else {
    flatten(doc, "", out);
  }
}

struct Options {
  std::string graph_path;
  std::string set;
  std::string path;
  std::string color = "blue";
  std::size_t n = 0;
  double blue = 0.3;
  double red = 0.3;
  std::uint64_t seed = 0;
  bool json = false;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Monochromatic-path absorbing independent sets"};
  app.require_subcommand(1);
  Options opt;

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("graph", opt.graph_path, "graph file ('-' for stdin)")
        ->required();
  };
  auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", opt.json, "emit JSON instead of key: value text");
  };

  auto* solve_cmd = app.add_subcommand("solve", "compute an absorbing set");
  add_graph(solve_cmd);
  add_json(solve_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "check a candidate set");
  add_graph(verify_cmd);
  verify_cmd->add_option("--set", opt.set, "comma-separated vertices")
      ->required();
  add_json(verify_cmd);

  auto* oracle_cmd =
      app.add_subcommand("oracle", "enumerate every subset (n <= 20)");
  add_graph(oracle_cmd);
  add_json(oracle_cmd);

  auto* gen_cmd = app.add_subcommand("gen", "write a random graph file");
  gen_cmd->add_option("--n", opt.n, "vertex count")->required();
  gen_cmd->add_option("--blue", opt.blue, "blue edge probability")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--red", opt.red, "red edge probability")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", opt.seed, "random seed");

  auto* hyp_cmd = app.add_subcommand("check-hypotheses",
                                     "cycle checks on colors and closures");
  add_graph(hyp_cmd);
  add_json(hyp_cmd);

  auto* closure_cmd =
      app.add_subcommand("closure", "print E_b+, E_r+ and M as pair lists");
  add_graph(closure_cmd);
  add_json(closure_cmd);

  auto* expand_cmd = app.add_subcommand(
      "expand-path", "turn a path of the asymmetric closure into a simple path");
  add_graph(expand_cmd);
  expand_cmd->add_option("--path", opt.path, "comma-separated vertices")
      ->required();
  expand_cmd->add_option("--color", opt.color, "blue or red")
      ->check(CLI::IsMember({"blue", "red", "b", "r"}));
  add_json(expand_cmd);

  auto* dot_cmd = app.add_subcommand("export-dot", "write Graphviz text");
  add_graph(dot_cmd);
  dot_cmd->add_option("--set", opt.set, "vertices to highlight");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) {
      out << render_graph(random_graph(opt.n, opt.blue, opt.red, opt.seed));
      return kExitOk;
    }

    const TwoColoredDigraph g = parse_graph(read_input(opt.graph_path));

    if (solve_cmd->parsed()) {
      if (g.universe().empty()) {
        err << "error: empty vertex set; a solution needs at least one "
               "vertex\n";
        return kExitDomainError;
      }
      const SolveTrace trace = solve(g);
      emit(to_json(make_result_document(g, trace)), opt.json, out);
      err << "independent set of size " << trace.result.size() << " after "
          << trace.iterations << " growth step(s)\n";
    } else if (verify_cmd->parsed()) {
      const VertexSet s = to_vertex_set(g, parse_list(opt.set, "--set"));
      const bool solution = is_solution(g, s);
      emit({{"set", to_json(s)},
            {"is_solution", solution},
            {"is_in_family_S", is_in_family_S(g, s)},
            {"is_kernel", is_kernel(g, s)}},
           opt.json, out);
      err << (solution ? "set is a solution\n" : "set is not a solution\n");
    } else if (oracle_cmd->parsed()) {
      const OracleReport report = enumerate_solutions(g);
      emit(to_json(report), opt.json, out);
      err << report.valid_solutions.size() << " valid solution(s)\n";
    } else if (hyp_cmd->parsed()) {
      emit(to_json(check_hypotheses(g)), opt.json, out);
    } else if (closure_cmd->parsed()) {
      emit({{"blue_closure", to_json(g.closure(Color::kBlue))},
            {"red_closure", to_json(g.closure(Color::kRed))},
            {"mono", to_json(g.mono())}},
           opt.json, out);
    } else if (expand_cmd->parsed()) {
      const Color c =
          (opt.color == "red" || opt.color == "r") ? Color::kRed : Color::kBlue;
      const Path w = parse_list(opt.path, "--path");
      const Path expanded = expand_asym_path(g.edges(c), w);
      emit({{"color", std::string(color_tag(c))},
            {"input", w},
            {"path", expanded}},
           opt.json, out);
    } else if (dot_cmd->parsed()) {
      std::optional<VertexSet> marked;
      if (!opt.set.empty()) {
        marked = to_vertex_set(g, parse_list(opt.set, "--set"));
      }
      out << render_dot(g, marked);
    }
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace ssw::cli
