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
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace ssw {

using Vertex = std::size_t;

/// A finite sequence of vertices. Used both for walks and for simple paths.
using Path = std::vector<Vertex>;

/// The ground set {0, ..., n-1}. The empty universe is legal.
class Universe {
 public:
  constexpr Universe() = default;
  constexpr explicit Universe(std::size_t n) : n_(n) {}

  constexpr std::size_t size() const noexcept { return n_; }
  constexpr bool empty() const noexcept { return n_ == 0; }
  constexpr bool contains(Vertex v) const noexcept { return v < n_; }

  friend constexpr bool operator==(Universe, Universe) = default;

 private:
  std::size_t n_ = 0;
};

/// A subset of a universe, stored as a bitset.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(Universe u);
  VertexSet(Universe u, std::initializer_list<Vertex> members);
  VertexSet(Universe u, std::span<const Vertex> members);

  static VertexSet full(Universe u);
  static VertexSet singleton(Universe u, Vertex v);
  /// Members are the set bits of `mask` (universes of at most 64 vertices).
  static VertexSet from_mask(Universe u, unsigned long long mask);

  Universe universe() const noexcept { return universe_; }
  bool contains(Vertex v) const;
  std::size_t size() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }

  /// Lowest member, if any.
  std::optional<Vertex> first() const;
  std::optional<Vertex> next(Vertex after) const;
  std::vector<Vertex> members() const;

  void insert(Vertex v);
  void erase(Vertex v);

  VertexSet operator|(const VertexSet& other) const;
  VertexSet operator&(const VertexSet& other) const;
  VertexSet operator-(const VertexSet& other) const;
  VertexSet complement() const;
  VertexSet& operator|=(const VertexSet& other);

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  const boost::dynamic_bitset<>& bits() const noexcept { return bits_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Canonical order: by size, then lexicographically by sorted members.
  friend bool canonical_less(const VertexSet& a, const VertexSet& b);

 private:
  VertexSet(Universe u, boost::dynamic_bitset<> bits)
      : universe_(u), bits_(std::move(bits)) {}
  void check_same(const VertexSet& other) const;

  Universe universe_;
  boost::dynamic_bitset<> bits_;
};

bool canonical_less(const VertexSet& a, const VertexSet& b);

/// A set of ordered pairs over a universe, stored as a dense boolean matrix
/// (one bitset row per tail vertex). Equality is extensional.
class Relation {
 public:
  Relation() = default;
  explicit Relation(Universe u);
  Relation(Universe u, std::initializer_list<std::pair<Vertex, Vertex>> pairs);
  Relation(Universe u, std::span<const std::pair<Vertex, Vertex>> pairs);

  static Relation full(Universe u);

  Universe universe() const noexcept { return universe_; }
  bool contains(Vertex tail, Vertex head) const;
  void insert(Vertex tail, Vertex head);
  void erase(Vertex tail, Vertex head);

  /// Successors of `tail`, i.e. the afterset of {tail}.
  const VertexSet& row(Vertex tail) const;
  VertexSet& mutable_row(Vertex tail);

  std::size_t pair_count() const noexcept;
  bool empty() const noexcept { return pair_count() == 0; }
  /// All pairs in (tail, head) lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> pairs() const;

  bool is_subset_of(const Relation& other) const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  Universe universe_;
  std::vector<VertexSet> rows_;
};

enum class BoolOp { kUnion, kIntersection, kComplement, kConverse };

/// Applies a unary connective (complement, converse).
Relation boolean_op(BoolOp kind, const Relation& r);
/// Applies a binary connective (union, intersection).
Relation boolean_op(BoolOp kind, const Relation& r, const Relation& r2);

Relation union_of(const Relation& r, const Relation& r2);
Relation intersection_of(const Relation& r, const Relation& r2);
Relation complement(const Relation& r);
Relation converse(const Relation& r);

/// (x, z) is in the result iff some y has (x, y) in `r` and (y, z) in `r2`.
Relation compose(const Relation& r, const Relation& r2);

/// k-fold composition, k >= 1. The zeroth power is not provided here; use
/// `reflexive_transitive_closure` or `diagonal`.
Relation power(const Relation& r, std::size_t k);

/// R+, the smallest transitive relation containing `r` (row-wise Warshall).
Relation transitive_closure(const Relation& r);

/// R* = R+ together with the full diagonal.
Relation reflexive_transitive_closure(const Relation& r);

/// {(x, x) : x in b}.
Relation diagonal(const VertexSet& b);

/// R C = {x : x R c for some c in C}.
VertexSet foreset(const Relation& r, const VertexSet& c);

/// B R = {y : b R y for some b in B}.
VertexSet afterset(const VertexSet& b, const Relation& r);

/// Pairs of `r` whose reverse is not in `r`.
Relation asym_part(const Relation& r);

/// No two distinct members of `s` are related by `r`. Loops are ignored.
bool is_independent(const Relation& r, const VertexSet& s);

/// a <=_R b, i.e. a is contained in b together with its R-foreset.
bool le_set(const Relation& r, const VertexSet& a, const VertexSet& b);

struct SporderReport {
  bool irreflexive = false;
  bool transitive = false;

  bool is_sporder() const noexcept { return irreflexive && transitive; }
  friend bool operator==(const SporderReport&, const SporderReport&) = default;
};

SporderReport sporder_check(const Relation& r);

/// Finds a cycle v0, ..., vk (k >= 1, v0 == vk, v0..v(k-1) distinct) if one
/// exists. Depth-first search from the lowest vertex, successors in
/// increasing order, so the witness is reproducible.
std::optional<Path> has_cycle(const Relation& r);

}  // namespace ssw
