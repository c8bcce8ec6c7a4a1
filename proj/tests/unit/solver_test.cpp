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

#include <gtest/gtest.h>

#include <random>

#include "brute_force.hpp"
#include "ssw/errors.hpp"
#include "ssw/oracle.hpp"

namespace ssw {
namespace {

using testing::relation_from_bits;

TwoColoredDigraph bidirectional_blue_chain(std::size_t n) {
  Relation blue{Universe(n)};
  for (Vertex v = 0; v + 1 < n; ++v) {
    blue.insert(v, v + 1);
    blue.insert(v + 1, v);
  }
  return TwoColoredDigraph(std::move(blue), Relation(Universe(n)));
}

// Max element of a chain under the set order, found by pairwise comparison.
VertexSet chain_maximum(const Chain& c) {
  for (const auto& candidate : c.sets) {
    bool top = true;
    for (const auto& other : c.sets) {
      top = top && le_blue(c.graph, other, candidate);
    }
    if (top) return candidate;
  }
  throw std::logic_error("chain has no maximum");
}

// rc_relation recomputed pair by pair from the case split.
Relation rc_by_cases(const Chain& c) {
  const VertexSet limit = s_infinity(c);
  const VertexSet support = chain_support(c);
  const Relation& order = c.graph.asym_closure(Color::kBlue);
  Relation out(c.graph.universe());
  for (Vertex x : support.members()) {
    for (Vertex y : support.members()) {
      const bool related =
          limit.contains(x) ? x == y : order.contains(x, y);
      if (related) out.insert(x, y);
    }
  }
  return out;
}

TEST(SeedTest, Examples) {
  const Universe one(1);
  EXPECT_EQ(seed(TwoColoredDigraph(Relation(one), Relation(one))),
            VertexSet(one, {0}));

  const Universe u(3);
  EXPECT_EQ(seed(TwoColoredDigraph(Relation(u), Relation(u, {{0, 1}, {1, 2}}))),
            VertexSet(u, {2}));

  const Universe two(2);
  EXPECT_EQ(seed(TwoColoredDigraph(Relation(two),
                                   Relation(two, {{0, 1}, {1, 0}}))),
            VertexSet(two, {0}));

  EXPECT_THROW(seed(TwoColoredDigraph()), PreconditionViolation);
}

TEST(TmTest, Examples) {
  const Universe u(3);
  // Vertex 2 unrelated to S = {0}.
  const TwoColoredDigraph loose(Relation(u, {{1, 0}}), Relation(u));
  EXPECT_TRUE(t_m(loose, VertexSet(u, {0}), 2).empty());

  const TwoColoredDigraph one_way(Relation(u, {{0, 2}}), Relation(u));
  EXPECT_EQ(t_m(one_way, VertexSet(u, {0}), 2), VertexSet(u, {0}));

  // 0 <-> 2: vertex 2 is absorbed by {0}, so it is not a valid argument.
  const TwoColoredDigraph both(Relation(u, {{0, 2}, {2, 0}}), Relation(u));
  EXPECT_THROW(t_m(both, VertexSet(u, {0}), 2), PreconditionViolation);
  EXPECT_THROW(t_m(both, VertexSet(u, {0}), 0), PreconditionViolation);
}

TEST(GrowStepTest, DisjointComponents) {
  const Universe u(2);
  const TwoColoredDigraph g{Relation(u), Relation(u)};
  EXPECT_EQ(grow_step(g, VertexSet(u, {0})), VertexSet(u, {0, 1}));
}

TEST(GrowStepTest, ReplacesBlueDominatedMember) {
  // Blue 0 -> 1 only; {0} is in the family but leaves 1 unabsorbed.
  const Universe u(2);
  const TwoColoredDigraph g(Relation(u, {{0, 1}}), Relation(u));
  EXPECT_EQ(grow_step(g, VertexSet(u, {0})), VertexSet(u, {1}));
}

TEST(GrowStepTest, RejectsBadInput) {
  const auto chain = bidirectional_blue_chain(10);
  // {0} already absorbs everything.
  EXPECT_THROW(grow_step(chain, VertexSet(Universe(10), {0})),
               PreconditionViolation);
  // {0, 5} is not independent.
  EXPECT_THROW(grow_step(chain, VertexSet(Universe(10), {0, 5})),
               PreconditionViolation);
}

TEST(GrowStepTest, ExhaustiveSmallGraphs) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::uint64_t pairs = n * n;
    std::uint64_t step = n == 3 ? 7 : 1;  // every 7th coloring at n = 3
    for (std::uint64_t b = 0; b < (1ULL << pairs); b += step) {
      for (std::uint64_t r = 0; r < (1ULL << pairs); ++r) {
        const TwoColoredDigraph g(relation_from_bits(n, b),
                                  relation_from_bits(n, r));
        for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
          const auto s = VertexSet::from_mask(g.universe(), mask);
          if (!is_in_family_S(g, s) || absorbed_complement(g, s).empty()) {
            continue;
          }
          const VertexSet next = grow_step(g, s);
          ASSERT_TRUE(is_in_family_S(g, next));
          ASSERT_TRUE(le_blue(g, s, next));
          ASSERT_NE(next, s);
        }
      }
    }
  }
}

TEST(SolveTest, SingleVertex) {
  const Universe one(1);
  const auto trace = solve(TwoColoredDigraph(Relation(one), Relation(one)));
  EXPECT_EQ(trace.result, VertexSet(one, {0}));
  EXPECT_EQ(trace.iterations, 0u);
  EXPECT_EQ(trace.chain.sets.size(), 1u);
}

TEST(SolveTest, BidirectionalChain) {
  const auto g = bidirectional_blue_chain(10);
  const auto trace = solve(g);
  EXPECT_TRUE(is_solution(g, trace.result));
  EXPECT_EQ(trace.result, VertexSet(Universe(10), {0}));
}

TEST(SolveTest, EmptyUniverse) {
  EXPECT_THROW(solve(TwoColoredDigraph()), PreconditionViolation);
}

TEST(SolveTest, Deterministic) {
  const auto g = random_graph(9, 0.2, 0.2, 99);
  const auto a = solve(g);
  const auto b = solve(g);
  EXPECT_EQ(a.result, b.result);
  EXPECT_EQ(a.chain.sets, b.chain.sets);
  EXPECT_EQ(a.iterations, b.iterations);
}

TEST(SolveTest, RandomGraphsProduceSolutionsAndChains) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const double density = std::array{0.1, 0.3, 0.6}[trial % 3];
    const auto g = random_graph(n, density, density, rng());
    const auto trace = solve(g);
    ASSERT_TRUE(is_solution(g, trace.result));
    ASSERT_TRUE(is_chain(trace.chain));
    ASSERT_EQ(trace.chain.sets.back(), trace.result);
    ASSERT_EQ(trace.chain.sets.size(), trace.iterations + 1);
    EXPECT_EQ(s_infinity(trace.chain), chain_maximum(trace.chain));
    EXPECT_TRUE(upper_bound_check(trace.chain));
    const Relation rc = rc_relation(trace.chain);
    EXPECT_EQ(rc, rc_by_cases(trace.chain));
    EXPECT_TRUE(is_left_total(rc, chain_support(trace.chain)));
  }
}

TEST(ChainTest, SingletonChain) {
  const Universe u(3);
  const TwoColoredDigraph g{Relation(u), Relation(u)};
  const Chain c{g, {VertexSet(u, {1})}};
  EXPECT_EQ(s_infinity(c), VertexSet(u, {1}));
  EXPECT_EQ(rc_relation(c), diagonal(VertexSet(u, {1})));
  EXPECT_TRUE(upper_bound_check(c));
  EXPECT_THROW(s_infinity(Chain{g, {}}), PreconditionViolation);
  EXPECT_THROW(rc_relation(Chain{g, {}}), PreconditionViolation);
  EXPECT_THROW(upper_bound_check(Chain{g, {}}), PreconditionViolation);
}

TEST(ChainTest, RcWitnessOutsideLimit) {
  // Blue 0 -> 1: solve goes {0} then {1}; vertex 0 drops out and must be
  // related to 1 by Asym(E_b+).
  const Universe u(2);
  const TwoColoredDigraph g(Relation(u, {{0, 1}}), Relation(u));
  const auto trace = solve(g);
  ASSERT_EQ(trace.chain.sets,
            (std::vector<VertexSet>{VertexSet(u, {0}), VertexSet(u, {1})}));
  EXPECT_EQ(s_infinity(trace.chain), VertexSet(u, {1}));
  EXPECT_EQ(rc_relation(trace.chain), Relation(u, {{0, 1}, {1, 1}}));
}

TEST(ChainTest, LeftTotality) {
  const Universe u(3);
  const VertexSet dom(u, {0, 2});
  EXPECT_TRUE(is_left_total(diagonal(dom), dom));
  EXPECT_FALSE(is_left_total(Relation(u), dom));
  EXPECT_TRUE(is_left_total(Relation(u), VertexSet(u)));
  EXPECT_THROW(is_left_total(Relation(u), VertexSet(Universe(2))),
               UniverseMismatch);
}

TEST(ChainTest, MutatedGraphBreaksUpperBound) {
  // Blue 0 -> 1 with vertex 2 isolated: the chain is {0}, {1}, {1, 2}.
  // Adding red 2 -> 1 makes {1, 2} dependent.
  const Universe u(3);
  const TwoColoredDigraph g(Relation(u, {{0, 1}}), Relation(u));
  const auto trace = solve(g);
  ASSERT_EQ(trace.chain.sets,
            (std::vector<VertexSet>{VertexSet(u, {0}), VertexSet(u, {1}),
                                    VertexSet(u, {1, 2})}));
  ASSERT_TRUE(upper_bound_check(trace.chain));
  Chain mutated = trace.chain;
  mutated.graph = TwoColoredDigraph(g.blue(), Relation(u, {{2, 1}}));
  EXPECT_FALSE(is_chain(mutated));
  EXPECT_FALSE(upper_bound_check(mutated));
}

}  // namespace
}  // namespace ssw
