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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ssw/colored_graph.hpp"
#include "ssw/relation.hpp"

namespace ssw {

/// Largest universe `enumerate_solutions` accepts (2^20 subsets).
inline constexpr std::size_t kOracleCap = 20;

/// Exhaustive classification of every vertex subset. Each list is sorted by
/// `canonical_less`.
struct OracleReport {
  std::vector<VertexSet> valid_solutions;
  std::vector<VertexSet> family_S_members;
  std::vector<VertexSet> kernel_sets;
};

/// Scans all 2^n subsets. Throws PreconditionViolation("oracle cap
/// exceeded") when n > kOracleCap.
OracleReport enumerate_solutions(const TwoColoredDigraph& g);

/// One-or-more-step reachability by breadth-first search from every vertex.
/// Shares no code with transitive_closure.
Relation reachability_oracle(const Relation& r);

/// Every ordered pair (loops included) is blue with probability
/// `blue_density` and, independently, red with probability `red_density`.
/// Deterministic in `seed`.
TwoColoredDigraph random_graph(std::size_t n, double blue_density,
                               double red_density, std::uint64_t seed);

/// Single-color counterpart of random_graph.
Relation random_relation(std::size_t n, double density, std::uint64_t seed);

}  // namespace ssw
