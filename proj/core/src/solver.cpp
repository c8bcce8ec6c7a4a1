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

#include "ssw/solver.hpp"

#include <limits>
#include <string>

#include "ssw/errors.hpp"

namespace ssw {
namespace {

void require_nonempty(const Chain& chain) {
  if (chain.sets.empty()) throw PreconditionViolation("empty chain");
}

// Lowest member of `candidates` with no `order`-successor inside
// `candidates`. The order is acyclic, so one always exists.
std::optional<Vertex> lowest_sink(const Relation& order,
                                  const VertexSet& candidates) {
  for (auto v = candidates.first(); v; v = candidates.next(*v)) {
    if (!order.row(*v).intersects(candidates)) return v;
  }
  return std::nullopt;
}

std::size_t iteration_budget(std::size_t n) {
  if (n >= std::numeric_limits<std::size_t>::digits) {
    return std::numeric_limits<std::size_t>::max();
  }
  return std::size_t{1} << n;
}

}  // namespace

bool le_blue(const TwoColoredDigraph& g, const VertexSet& a,
             const VertexSet& b) {
  return le_set(g.asym_closure(Color::kBlue), a, b);
}

bool is_chain(const Chain& chain) {
  for (const auto& s : chain.sets) {
    if (!is_in_family_S(chain.graph, s)) return false;
  }
  for (std::size_t i = 0; i < chain.sets.size(); ++i) {
    for (std::size_t j = i + 1; j < chain.sets.size(); ++j) {
      if (chain.sets[i] == chain.sets[j]) return false;
      if (!le_blue(chain.graph, chain.sets[i], chain.sets[j])) return false;
    }
  }
  return true;
}

VertexSet seed(const TwoColoredDigraph& g) {
  if (g.universe().empty()) {
    throw PreconditionViolation(
        "empty vertex set: a solution needs at least one vertex");
  }
  const auto v = lowest_sink(g.asym_closure(Color::kRed),
                             VertexSet::full(g.universe()));
  if (!v) throw InvariantViolation("Asym(E_r+) has no sink");
  VertexSet s = VertexSet::singleton(g.universe(), *v);
  if (!is_in_family_S(g, s)) {
    throw InvariantViolation("construction invariant violated: seed");
  }
  return s;
}

VertexSet t_m(const TwoColoredDigraph& g, const VertexSet& sm, Vertex x) {
  if (sm.universe() != g.universe()) throw UniverseMismatch();
  if (!g.universe().contains(x)) {
    throw PreconditionViolation("vertex outside universe");
  }
  if (!absorbed_complement(g, sm).contains(x)) {
    throw PreconditionViolation("t_m: vertex " + std::to_string(x) +
                                " is in S or already absorbed");
  }
  return sm & foreset(g.asym_closure(Color::kBlue),
                      VertexSet::singleton(g.universe(), x));
}

VertexSet grow_step(const TwoColoredDigraph& g, const VertexSet& sm) {
  if (!is_in_family_S(g, sm)) {
    throw PreconditionViolation("grow_step: set is not in the family");
  }
  const VertexSet unabsorbed = absorbed_complement(g, sm);
  if (unabsorbed.empty()) {
    throw PreconditionViolation("grow_step: every vertex is absorbed");
  }
  const auto x = lowest_sink(g.asym_closure(Color::kRed), unabsorbed);
  if (!x) throw InvariantViolation("Asym(E_r+) has no sink");

  VertexSet next = sm - t_m(g, sm, *x);
  next.insert(*x);

  if (!is_in_family_S(g, next) || !le_blue(g, sm, next) || next == sm) {
    throw InvariantViolation("construction invariant violated");
  }
  return next;
}

SolveTrace solve(const TwoColoredDigraph& g) {
  SolveTrace trace;
  trace.chain.graph = g;
  VertexSet current = seed(g);
  trace.chain.sets.push_back(current);

  const std::size_t budget = iteration_budget(g.universe().size());
  while (!absorbed_complement(g, current).empty()) {
    if (trace.iterations >= budget) {
      throw InvariantViolation("non-termination (should be unreachable)");
    }
    current = grow_step(g, current);
    trace.chain.sets.push_back(current);
    ++trace.iterations;
  }
  trace.result = std::move(current);
  return trace;
}

VertexSet s_infinity(const Chain& chain) {
  require_nonempty(chain);
  const Universe u = chain.graph.universe();
  VertexSet out(u);
  for (const auto& s : chain.sets) {
    // Vertices present in every member U with s <= U.
    VertexSet eventually = VertexSet::full(u);
    for (const auto& upper : chain.sets) {
      if (le_blue(chain.graph, s, upper)) eventually = eventually & upper;
    }
    out |= eventually;
  }
  return out;
}

VertexSet chain_support(const Chain& chain) {
  VertexSet out(chain.graph.universe());
  for (const auto& s : chain.sets) out |= s;
  return out;
}

Relation rc_relation(const Chain& chain) {
  const VertexSet limit = s_infinity(chain);
  const VertexSet support = chain_support(chain);
  const Relation rc =
      union_of(diagonal(limit), compose(diagonal(limit.complement()),
                                        chain.graph.asym_closure(Color::kBlue)));
  const Relation domain = compose(diagonal(support),
                                  compose(Relation::full(support.universe()),
                                          diagonal(support)));
  return intersection_of(rc, domain);
}

bool is_left_total(const Relation& r, const VertexSet& domain) {
  if (r.universe() != domain.universe()) throw UniverseMismatch();
  for (auto x = domain.first(); x; x = domain.next(*x)) {
    if (r.row(*x).empty()) return false;
  }
  return true;
}

bool upper_bound_check(const Chain& chain) {
  require_nonempty(chain);
  for (const auto& s : chain.sets) {
    if (!is_in_family_S(chain.graph, s)) return false;
  }
  const VertexSet limit = s_infinity(chain);
  if (limit.empty() || !is_in_family_S(chain.graph, limit)) return false;
  for (const auto& s : chain.sets) {
    if (!le_blue(chain.graph, s, limit)) return false;
  }
  return true;
}

}  // namespace ssw
