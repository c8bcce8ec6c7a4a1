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
#include <vector>

#include "ssw/colored_graph.hpp"
#include "ssw/relation.hpp"

namespace ssw {

/// A sequence of sets meant to ascend strictly under the order
/// A <= B  iff  A is contained in B together with its Asym(E_b+)-foreset.
/// The invariants are not enforced on construction; see `is_chain`.
struct Chain {
  TwoColoredDigraph graph;
  std::vector<VertexSet> sets;
};

struct SolveTrace {
  std::size_t iterations = 0;
  Chain chain;
  VertexSet result;
};

/// The set order used throughout the construction, over Asym(E_b+).
bool le_blue(const TwoColoredDigraph& g, const VertexSet& a,
             const VertexSet& b);

/// Every member is in the family, and members strictly ascend.
bool is_chain(const Chain& chain);

/// {v} for the lowest-index vertex v with no Asym(E_r+) successor.
/// Throws PreconditionViolation on an empty universe.
VertexSet seed(const TwoColoredDigraph& g);

/// Members of `sm` that lie strictly below `x` in Asym(E_b+). Requires x to
/// be outside `sm` and not absorbed by it.
VertexSet t_m(const TwoColoredDigraph& g, const VertexSet& sm, Vertex x);

/// One growth step. Picks the lowest-index unabsorbed vertex x with no
/// Asym(E_r+) successor among the unabsorbed vertices, and returns
/// (sm - t_m(x)) | {x}. Membership of the result in the family and strict
/// ascent are re-checked; a failure throws InvariantViolation.
VertexSet grow_step(const TwoColoredDigraph& g, const VertexSet& sm);

/// Seeds, then grows until every vertex is absorbed. The chain of iterates
/// is recorded in the trace.
SolveTrace solve(const TwoColoredDigraph& g);

/// The vertices that belong to every member of the chain from some member
/// on (evaluated literally against the set order).
VertexSet s_infinity(const Chain& chain);

/// Union of all members.
VertexSet chain_support(const Chain& chain);

/// Diag(S_inf) | Diag(complement of S_inf) ; Asym(E_b+), restricted to pairs
/// whose endpoints both lie in the chain support.
Relation rc_relation(const Chain& chain);

/// Every vertex of `domain` has at least one successor in `r`.
bool is_left_total(const Relation& r, const VertexSet& domain);

/// S_inf is nonempty, belongs to the family and bounds every member from
/// above. Returns false (not an error) when any member of the chain has
/// dropped out of the family. Throws on an empty chain.
bool upper_bound_check(const Chain& chain);

}  // namespace ssw
