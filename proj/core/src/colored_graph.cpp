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

#include "ssw/colored_graph.hpp"

#include <utility>

#include "ssw/errors.hpp"

namespace ssw {
namespace {

void require_same(Universe a, Universe b) {
  if (a != b) throw UniverseMismatch();
}

}  // namespace

TwoColoredDigraph::TwoColoredDigraph(Relation blue, Relation red)
    : blue_(std::move(blue)), red_(std::move(red)) {
  require_same(blue_.universe(), red_.universe());
  blue_plus_ = transitive_closure(blue_);
  red_plus_ = transitive_closure(red_);
  blue_asym_ = asym_part(blue_plus_);
  red_asym_ = asym_part(red_plus_);
  mono_ = union_of(blue_plus_, red_plus_);
}

Relation mono(const TwoColoredDigraph& g) { return g.mono(); }

HypothesisReport check_hypotheses(const TwoColoredDigraph& g) {
  HypothesisReport report;
  report.blue_asym_acyclic = !has_cycle(g.asym_closure(Color::kBlue));
  report.red_asym_acyclic = !has_cycle(g.asym_closure(Color::kRed));
  report.blue_has_cycle = has_cycle(g.blue());
  report.red_has_cycle = has_cycle(g.red());
  report.nonempty = !g.universe().empty();
  return report;
}

bool is_in_family_S(const TwoColoredDigraph& g, const VertexSet& s) {
  require_same(g.universe(), s.universe());
  if (s.empty()) return false;
  if (!is_independent(g.mono(), s)) return false;
  return afterset(s, g.closure(Color::kRed))
      .is_subset_of(foreset(g.mono(), s));
}

VertexSet absorbed_complement(const TwoColoredDigraph& g, const VertexSet& s) {
  require_same(g.universe(), s.universe());
  return (s | foreset(g.mono(), s)).complement();
}

bool is_solution(const TwoColoredDigraph& g, const VertexSet& s) {
  require_same(g.universe(), s.universe());
  if (s.empty()) return false;
  return is_independent(g.mono(), s) && absorbed_complement(g, s).empty();
}

bool is_kernel(const TwoColoredDigraph& g, const VertexSet& s) {
  require_same(g.universe(), s.universe());
  const Relation edges = union_of(g.blue(), g.red());
  if (!is_independent(edges, s)) return false;
  return (s | foreset(edges, s)).complement().empty();
}

}  // namespace ssw
