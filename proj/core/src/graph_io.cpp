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

#include "ssw/graph_io.hpp"

#include <charconv>
#include <sstream>

#include "ssw/errors.hpp"
#include "ssw/path_surgery.hpp"

namespace ssw {
namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r') {
      ++i;
    }
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

std::size_t parse_count(std::string_view word, std::size_t line_no) {
  std::size_t value = 0;
  const auto* end = word.data() + word.size();
  auto [ptr, ec] = std::from_chars(word.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line_no, "expected a non-negative integer, got '" +
                                  std::string(word) + "'");
  }
  return value;
}

}  // namespace

TwoColoredDigraph parse_graph(std::string_view text) {
  std::optional<Universe> universe;
  Relation blue;
  Relation red;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto words = split_words(line);
    if (words.empty()) continue;

    if (!universe) {
      if (words.size() != 2 || words[0] != "n") {
        throw ParseError(line_no, "expected header 'n <count>'");
      }
      universe = Universe(parse_count(words[1], line_no));
      blue = Relation(*universe);
      red = Relation(*universe);
      continue;
    }
    if (words.size() != 3 || (words[0] != "b" && words[0] != "r")) {
      throw ParseError(line_no, "expected 'b <u> <v>' or 'r <u> <v>'");
    }
    const Vertex u = parse_count(words[1], line_no);
    const Vertex v = parse_count(words[2], line_no);
    if (!universe->contains(u) || !universe->contains(v)) {
      throw ParseError(line_no, "vertex out of range for n = " +
                                    std::to_string(universe->size()));
    }
    (words[0] == "b" ? blue : red).insert(u, v);
  }
  if (!universe) throw ParseError(line_no, "missing header 'n <count>'");
  return TwoColoredDigraph(std::move(blue), std::move(red));
}

std::string render_graph(const TwoColoredDigraph& g) {
  std::ostringstream out;
  out << "n " << g.universe().size() << '\n';
  for (const auto& [u, v] : g.blue().pairs()) out << "b " << u << ' ' << v << '\n';
  for (const auto& [u, v] : g.red().pairs()) out << "r " << u << ' ' << v << '\n';
  return out.str();
}

std::string render_dot(const TwoColoredDigraph& g,
                       const std::optional<VertexSet>& marked) {
  if (marked && marked->universe() != g.universe()) throw UniverseMismatch();
  std::ostringstream out;
  out << "digraph G {\n";
  for (Vertex v = 0; v < g.universe().size(); ++v) {
    out << "  " << v;
    if (marked && marked->contains(v)) {
      out << " [style=filled, fillcolor=gold]";
    }
    out << ";\n";
  }
  for (const auto& [u, v] : g.blue().pairs()) {
    out << "  " << u << " -> " << v << " [color=blue];\n";
  }
  for (const auto& [u, v] : g.red().pairs()) {
    out << "  " << u << " -> " << v << " [color=red];\n";
  }
  out << "}\n";
  return out.str();
}

std::string_view color_tag(Color c) {
  return c == Color::kBlue ? "blue" : "red";
}

std::vector<Certificate> make_certificates(const TwoColoredDigraph& g,
                                           const VertexSet& s) {
  std::vector<Certificate> certs;
  const VertexSet outside = s.complement();
  for (auto x = outside.first(); x; x = outside.next(*x)) {
    std::optional<Certificate> cert;
    for (Color c : {Color::kBlue, Color::kRed}) {
      const VertexSet targets = g.closure(c).row(*x) & s;
      if (auto target = targets.first()) {
        auto path = find_simple_path(g.edges(c), *x, *target);
        if (path) cert = Certificate{*x, c, std::move(*path)};
        break;
      }
    }
    if (!cert) {
      throw InvariantViolation("vertex " + std::to_string(*x) +
                               " is not absorbed by the set");
    }
    if (!all_l(g.edges(cert->color), cert->path) ||
        cert->path.front() != *x || !s.contains(cert->path.back())) {
      throw InvariantViolation("certificate failed re-verification");
    }
    certs.push_back(std::move(*cert));
  }
  return certs;
}

ResultDocument make_result_document(const TwoColoredDigraph& g,
                                    const SolveTrace& trace) {
  ResultDocument doc;
  doc.independent_set = trace.result.members();
  doc.certificates = make_certificates(g, trace.result);
  doc.iterations = trace.iterations;
  for (const auto& s : trace.chain.sets) doc.chain_sizes.push_back(s.size());
  doc.hypotheses = check_hypotheses(g);
  return doc;
}

nlohmann::json to_json(const VertexSet& s) { return s.members(); }

nlohmann::json to_json(const Relation& r) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [x, y] : r.pairs()) pairs.push_back({x, y});
  return pairs;
}

nlohmann::json to_json(const HypothesisReport& report) {
  auto cycle = [](const std::optional<Path>& p) -> nlohmann::json {
    if (!p) return nullptr;
    return *p;
  };
  return {
      {"nonempty", report.nonempty},
      {"blue_asym_acyclic", report.blue_asym_acyclic},
      {"red_asym_acyclic", report.red_asym_acyclic},
      {"blue_has_cycle", cycle(report.blue_has_cycle)},
      {"red_has_cycle", cycle(report.red_has_cycle)},
  };
}

nlohmann::json to_json(const ResultDocument& doc) {
  nlohmann::json certs = nlohmann::json::array();
  for (const auto& c : doc.certificates) {
    certs.push_back({{"vertex", c.vertex},
                     {"color", std::string(color_tag(c.color))},
                     {"path", c.path}});
  }
  return {
      {"independent_set", doc.independent_set},
      {"certificates", std::move(certs)},
      {"trace", {{"iterations", doc.iterations},
                 {"chain_sizes", doc.chain_sizes}}},
      {"hypotheses", to_json(doc.hypotheses)},
  };
}

nlohmann::json to_json(const OracleReport& report) {
  auto list = [](const std::vector<VertexSet>& sets) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& s : sets) out.push_back(to_json(s));
    return out;
  };
  return {
      {"valid_solutions", list(report.valid_solutions)},
      {"family_S_members", list(report.family_S_members)},
      {"kernel_sets", list(report.kernel_sets)},
  };
}

}  // namespace ssw
