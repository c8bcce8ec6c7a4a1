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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ssw/colored_graph.hpp"
#include "ssw/oracle.hpp"
#include "ssw/solver.hpp"

namespace ssw {

/// Parses the line-oriented graph format:
///
///   n <count>
///   b <u> <v>      blue edge u -> v
///   r <u> <v>      red edge u -> v
///
/// Blank lines and text after '#' are ignored; repeated edges collapse.
/// Throws ParseError carrying the 1-based line number.
TwoColoredDigraph parse_graph(std::string_view text);

/// Inverse of parse_graph: header, then blue edges, then red edges, each in
/// (tail, head) order.
std::string render_graph(const TwoColoredDigraph& g);

/// Graphviz text. Members of `marked`, when given, are drawn filled.
std::string render_dot(const TwoColoredDigraph& g,
                       const std::optional<VertexSet>& marked = std::nullopt);

std::string_view color_tag(Color c);

/// Why `vertex` is absorbed: a simple path in `color` ending in the set.
struct Certificate {
  Vertex vertex = 0;
  Color color = Color::kBlue;
  Path path;
};

struct ResultDocument {
  std::vector<Vertex> independent_set;
  std::vector<Certificate> certificates;
  std::size_t iterations = 0;
  std::vector<std::size_t> chain_sizes;
  HypothesisReport hypotheses;
};

/// One certificate per vertex outside `s`, preferring blue, then the lowest
/// target. Every path is re-checked before it is returned; a failing check
/// throws InvariantViolation.
std::vector<Certificate> make_certificates(const TwoColoredDigraph& g,
                                           const VertexSet& s);

ResultDocument make_result_document(const TwoColoredDigraph& g,
                                    const SolveTrace& trace);

nlohmann::json to_json(const ResultDocument& doc);
nlohmann::json to_json(const HypothesisReport& report);
nlohmann::json to_json(const OracleReport& report);
nlohmann::json to_json(const VertexSet& s);
nlohmann::json to_json(const Relation& r);

}  // namespace ssw
