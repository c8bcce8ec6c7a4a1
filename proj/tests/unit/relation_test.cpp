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

#include "ssw/relation.hpp"

#include <gtest/gtest.h>

#include <random>

#include "brute_force.hpp"
#include "ssw/errors.hpp"
#include "ssw/oracle.hpp"

namespace ssw {
namespace {

using testing::brute_compose;
using testing::brute_independent;
using testing::brute_reach;
using testing::from_matrix;
using testing::to_matrix;

const Universe k2{2};
const Universe k3{3};
const Universe k4{4};

TEST(VertexSetTest, BasicMembership) {
  VertexSet s(k4, {0, 2});
  EXPECT_TRUE(s.contains(0));
  EXPECT_FALSE(s.contains(1));
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.members(), (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(s.complement(), VertexSet(k4, {1, 3}));
  EXPECT_THROW(s.contains(4), PreconditionViolation);
  EXPECT_THROW(s | VertexSet(k3), UniverseMismatch);
}

TEST(VertexSetTest, CanonicalOrder) {
  EXPECT_TRUE(canonical_less(VertexSet(k4, {3}), VertexSet(k4, {0, 1})));
  EXPECT_TRUE(canonical_less(VertexSet(k4, {0, 2}), VertexSet(k4, {1, 2})));
  EXPECT_FALSE(canonical_less(VertexSet(k4, {1}), VertexSet(k4, {1})));
}

TEST(RelationTest, EqualityIsExtensional) {
  Relation a(k3, {{0, 1}, {1, 2}});
  Relation b(k3, {{1, 2}, {0, 1}, {0, 1}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.pair_count(), 2u);
  EXPECT_THROW(a.insert(3, 0), PreconditionViolation);
}

TEST(BooleanOpsTest, Examples) {
  EXPECT_EQ(boolean_op(BoolOp::kConverse, Relation(k2, {{0, 1}})),
            Relation(k2, {{1, 0}}));
  EXPECT_EQ(boolean_op(BoolOp::kComplement, Relation::full(k2)), Relation(k2));
  EXPECT_EQ(boolean_op(BoolOp::kUnion, Relation(k3, {{0, 1}}),
                       Relation(k3, {{1, 2}})),
            Relation(k3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(boolean_op(BoolOp::kIntersection, Relation(k3, {{0, 1}, {1, 2}}),
                       Relation(k3, {{1, 2}})),
            Relation(k3, {{1, 2}}));
}

TEST(BooleanOpsTest, Errors) {
  EXPECT_THROW(union_of(Relation(k2), Relation(k3)), UniverseMismatch);
  EXPECT_THROW(boolean_op(BoolOp::kUnion, Relation(k2)), PreconditionViolation);
  EXPECT_THROW(boolean_op(BoolOp::kConverse, Relation(k2), Relation(k2)),
               PreconditionViolation);
}

TEST(ComposeTest, Examples) {
  EXPECT_EQ(compose(Relation(k3, {{0, 1}}), Relation(k3, {{1, 2}})),
            Relation(k3, {{0, 2}}));
  EXPECT_EQ(compose(Relation(k3, {{0, 1}, {1, 2}}), Relation(k3)), Relation(k3));
  // Frozen from brute_compose (witness enumeration).
  const Relation r(k4, {{0, 1}, {0, 2}});
  const Relation r2(k4, {{1, 3}, {2, 3}});
  EXPECT_EQ(from_matrix(brute_compose(to_matrix(r), to_matrix(r2))),
            Relation(k4, {{0, 3}}));
  EXPECT_EQ(compose(r, r2), Relation(k4, {{0, 3}}));
  EXPECT_THROW(compose(Relation(k2), Relation(k3)), UniverseMismatch);
}

TEST(PowerTest, Examples) {
  const Relation chain(k3, {{0, 1}, {1, 2}});
  EXPECT_EQ(power(chain, 2), Relation(k3, {{0, 2}}));
  EXPECT_EQ(power(chain, 1), chain);
  const Relation cycle(k3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(power(cycle, 3), diagonal(VertexSet::full(k3)));
  EXPECT_THROW(power(chain, 0), PreconditionViolation);
}

TEST(ClosureTest, Examples) {
  EXPECT_EQ(transitive_closure(Relation(k3)), Relation(k3));
  const Relation order(k3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(transitive_closure(order), order);
  EXPECT_EQ(transitive_closure(Relation(k3, {{0, 1}, {1, 2}})), order);

  EXPECT_EQ(reflexive_transitive_closure(Relation(k2)),
            Relation(k2, {{0, 0}, {1, 1}}));
  EXPECT_EQ(reflexive_transitive_closure(Relation(k2, {{0, 1}})),
            Relation(k2, {{0, 0}, {1, 1}, {0, 1}}));
}

TEST(ClosureTest, EmptyUniverse) {
  const Universe none{0};
  EXPECT_EQ(transitive_closure(Relation(none)), Relation(none));
  EXPECT_TRUE(foreset(Relation(none), VertexSet(none)).empty());
  EXPECT_FALSE(has_cycle(Relation(none)));
}

TEST(DiagonalTest, Examples) {
  EXPECT_EQ(diagonal(VertexSet(k3)), Relation(k3));
  EXPECT_EQ(diagonal(VertexSet(k3, {0, 1})), Relation(k3, {{0, 0}, {1, 1}}));
  EXPECT_EQ(diagonal(VertexSet::full(k2)), Relation(k2, {{0, 0}, {1, 1}}));
}

TEST(ForesetAftersetTest, Examples) {
  EXPECT_TRUE(foreset(Relation::full(k3), VertexSet(k3)).empty());
  EXPECT_EQ(foreset(Relation(k2, {{0, 1}}), VertexSet(k2, {1})),
            VertexSet(k2, {0}));
  const Relation four_cycle =
      transitive_closure(Relation(k4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
  EXPECT_EQ(foreset(four_cycle, VertexSet(k4, {0})), VertexSet::full(k4));

  EXPECT_TRUE(afterset(VertexSet(k3), Relation::full(k3)).empty());
  EXPECT_EQ(afterset(VertexSet(k2, {0}), Relation(k2, {{0, 1}})),
            VertexSet(k2, {1}));
  EXPECT_EQ(afterset(VertexSet(k4, {0, 2}),
                     Relation(k4, {{0, 1}, {2, 3}, {1, 3}})),
            VertexSet(k4, {1, 3}));
  EXPECT_THROW(foreset(Relation(k2), VertexSet(k3)), UniverseMismatch);
}

TEST(AsymPartTest, Examples) {
  const Relation sym(k3, {{0, 1}, {1, 0}, {2, 2}});
  EXPECT_TRUE(asym_part(sym).empty());
  EXPECT_EQ(asym_part(Relation(k3, {{0, 1}, {1, 0}, {0, 2}})),
            Relation(k3, {{0, 2}}));

  const Universe ten{10};
  Relation chain(ten);
  for (Vertex v = 0; v + 1 < 10; ++v) {
    chain.insert(v, v + 1);
    chain.insert(v + 1, v);
  }
  EXPECT_TRUE(asym_part(transitive_closure(chain)).empty());
}

TEST(IndependenceTest, Examples) {
  EXPECT_TRUE(is_independent(Relation(k3, {{1, 1}}), VertexSet(k3, {1})));
  EXPECT_FALSE(is_independent(Relation(k2, {{0, 1}}), VertexSet(k2, {0, 1})));
  EXPECT_TRUE(is_independent(Relation::full(k3), VertexSet(k3)));
}

TEST(IndependenceTest, AgreesWithPairScan) {
  std::mt19937_64 rng(7);
  for (std::size_t n = 0; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const Relation r = random_relation(n, 0.25, rng());
      const auto m = to_matrix(r);
      for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        EXPECT_EQ(is_independent(r, VertexSet::from_mask(Universe(n), mask)),
                  brute_independent(m, mask));
      }
    }
  }
}

TEST(LeSetTest, Examples) {
  EXPECT_TRUE(le_set(Relation(k3), VertexSet(k3, {0}), VertexSet(k3, {0, 1})));
  EXPECT_TRUE(le_set(Relation(k2, {{0, 1}}), VertexSet(k2, {0}),
                     VertexSet(k2, {1})));
  EXPECT_FALSE(le_set(Relation(k2), VertexSet(k2, {0}), VertexSet(k2, {1})));
}

TEST(SporderTest, Examples) {
  EXPECT_EQ(sporder_check(diagonal(VertexSet::full(k3))),
            (SporderReport{false, true}));
  EXPECT_EQ(sporder_check(Relation(k3, {{0, 1}, {1, 2}})),
            (SporderReport{true, false}));
}

TEST(HasCycleTest, Examples) {
  EXPECT_FALSE(has_cycle(Relation(k3, {{0, 1}, {1, 2}, {0, 2}})));
  EXPECT_EQ(has_cycle(Relation(Universe(1), {{0, 0}})), (Path{0, 0}));
  EXPECT_EQ(has_cycle(Relation(k3, {{0, 1}, {1, 2}, {2, 0}})),
            (Path{0, 1, 2, 0}));
  // The witness need not start at vertex 0.
  EXPECT_EQ(has_cycle(Relation(k4, {{0, 1}, {1, 2}, {2, 1}})),
            (Path{1, 2, 1}));
}

// Property sweeps over random relations.

TEST(RelationPropertyTest, ClosureIsUnionOfPowers) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 32;
    const double density = (trial % 3 + 1) * 0.04;
    const Relation r = random_relation(n, density, rng());
    Relation acc = r;
    Relation p = r;
    for (std::size_t k = 2; k <= n; ++k) {
      p = compose(p, r);
      acc = union_of(acc, p);
    }
    const Relation plus = transitive_closure(r);
    EXPECT_EQ(plus, acc);
    EXPECT_EQ(transitive_closure(plus), plus);
    EXPECT_EQ(plus, from_matrix(brute_reach(to_matrix(r))));
  }
}

TEST(RelationPropertyTest, AlgebraicLaws) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const Universe u(n);
    const Relation a = random_relation(n, 0.3, rng());
    const Relation b = random_relation(n, 0.3, rng());
    const Relation c = random_relation(n, 0.3, rng());
    EXPECT_EQ(converse(converse(a)), a);
    EXPECT_EQ(complement(complement(a)), a);
    EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
    EXPECT_EQ(compose(a, b), from_matrix(brute_compose(to_matrix(a),
                                                       to_matrix(b))));

    VertexSet s(u);
    VertexSet t(u);
    for (Vertex v = 0; v < n; ++v) {
      if (rng() % 2) s.insert(v);
      if (rng() % 2) t.insert(v);
    }
    EXPECT_EQ(foreset(a, s), afterset(s, converse(a)));
    if (s.is_subset_of(t)) {
      EXPECT_TRUE(le_set(a, s, t));
    }
    EXPECT_TRUE(le_set(a, s & t, t));
    EXPECT_TRUE(transitive_closure(a).is_subset_of(
        reflexive_transitive_closure(a)));
  }
}

TEST(RelationPropertyTest, AsymOfClosureIsAcyclicSporder) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 32;
    const Relation r = random_relation(n, 0.02 + 0.2 * (trial % 5) / 4, rng());
    const Relation order = asym_part(transitive_closure(r));
    EXPECT_TRUE(sporder_check(order).is_sporder());
    EXPECT_FALSE(has_cycle(order));
  }
}

TEST(RelationPropertyTest, CycleWitnessIsValid) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const Relation r = random_relation(n, 0.15, rng());
    const auto cycle = has_cycle(r);
    // A cycle exists iff some (v, v) is in r+.
    const Relation plus = transitive_closure(r);
    bool expect = false;
    for (Vertex v = 0; v < n; ++v) expect = expect || plus.contains(v, v);
    ASSERT_EQ(cycle.has_value(), expect);
    if (!cycle) continue;
    ASSERT_GE(cycle->size(), 2u);
    EXPECT_EQ(cycle->front(), cycle->back());
    for (std::size_t i = 0; i + 1 < cycle->size(); ++i) {
      EXPECT_TRUE(r.contains((*cycle)[i], (*cycle)[i + 1]));
      for (std::size_t j = i + 1; j + 1 < cycle->size(); ++j) {
        EXPECT_NE((*cycle)[i], (*cycle)[j]);
      }
    }
  }
}

TEST(RelationPropertyTest, SetOrderIsPartialOrderOnIndependentSets) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const Universe u(n);
    const Relation order =
        asym_part(transitive_closure(random_relation(n, 0.35, rng())));
    ASSERT_TRUE(sporder_check(order).is_sporder());
    std::vector<VertexSet> independent;
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
      VertexSet s = VertexSet::from_mask(u, mask);
      if (is_independent(order, s)) independent.push_back(std::move(s));
    }
    for (const auto& a : independent) {
      EXPECT_TRUE(le_set(order, a, a));
      for (const auto& b : independent) {
        if (le_set(order, a, b) && le_set(order, b, a)) {
          EXPECT_EQ(a, b);
        }
        for (const auto& c : independent) {
          if (le_set(order, a, b) && le_set(order, b, c)) {
            EXPECT_TRUE(le_set(order, a, c));
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace ssw
