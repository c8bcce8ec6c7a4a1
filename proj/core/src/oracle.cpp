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

#include "ssw/oracle.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "ssw/errors.hpp"

namespace ssw {
namespace {

void require_density(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw PreconditionViolation("density must lie in [0, 1]");
  }
}

Relation draw_relation(std::size_t n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  Relation r{Universe(n)};
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (coin(rng)) r.insert(x, y);
    }
  }
  return r;
}

}  // namespace

OracleReport enumerate_solutions(const TwoColoredDigraph& g) {
  const std::size_t n = g.universe().size();
  if (n > kOracleCap) throw PreconditionViolation("oracle cap exceeded");

  OracleReport report;
  const unsigned long long count = 1ULL << n;
  for (unsigned long long mask = 0; mask < count; ++mask) {
    const VertexSet s = VertexSet::from_mask(g.universe(), mask);
    if (is_solution(g, s)) report.valid_solutions.push_back(s);
    if (is_in_family_S(g, s)) report.family_S_members.push_back(s);
    if (is_kernel(g, s)) report.kernel_sets.push_back(s);
  }
  for (auto* list : {&report.valid_solutions, &report.family_S_members,
                     &report.kernel_sets}) {
    std::sort(list->begin(), list->end(), canonical_less);
  }
  return report;
}

Relation reachability_oracle(const Relation& r) {
  const std::size_t n = r.universe().size();
  std::vector<std::vector<Vertex>> adjacency(n);
  for (const auto& [x, y] : r.pairs()) adjacency[x].push_back(y);

  Relation out(r.universe());
  for (Vertex source = 0; source < n; ++source) {
    std::vector<bool> seen(n, false);
    std::deque<Vertex> queue;
    for (Vertex y : adjacency[source]) {
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      out.insert(source, v);
      for (Vertex y : adjacency[v]) {
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
  }
  return out;
}

TwoColoredDigraph random_graph(std::size_t n, double blue_density,
                               double red_density, std::uint64_t seed) {
  require_density(blue_density);
  require_density(red_density);
  std::mt19937_64 rng(seed);
  Relation blue = draw_relation(n, blue_density, rng);
  Relation red = draw_relation(n, red_density, rng);
  return TwoColoredDigraph(std::move(blue), std::move(red));
}

Relation random_relation(std::size_t n, double density, std::uint64_t seed) {
  require_density(density);
  std::mt19937_64 rng(seed);
  return draw_relation(n, density, rng);
}

}  // namespace ssw
