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

#include <algorithm>
#include <string>

#include "ssw/errors.hpp"

namespace ssw {
namespace {

void require_vertex(Universe u, Vertex v) {
  if (!u.contains(v)) {
    throw PreconditionViolation("vertex " + std::to_string(v) +
                                " outside universe of size " +
                                std::to_string(u.size()));
  }
}

void require_same(Universe a, Universe b) {
  if (a != b) throw UniverseMismatch();
}

}  // namespace

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(Universe u) : universe_(u), bits_(u.size()) {}

VertexSet::VertexSet(Universe u, std::initializer_list<Vertex> members)
    : VertexSet(u, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet::VertexSet(Universe u, std::span<const Vertex> members)
    : VertexSet(u) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(Universe u) {
  VertexSet s(u);
  s.bits_.set();
  return s;
}

VertexSet VertexSet::singleton(Universe u, Vertex v) {
  VertexSet s(u);
  s.insert(v);
  return s;
}

VertexSet VertexSet::from_mask(Universe u, unsigned long long mask) {
  if (u.size() > 64) throw PreconditionViolation("mask universe exceeds 64");
  VertexSet s(u);
  for (Vertex v = 0; v < u.size(); ++v) {
    if ((mask >> v) & 1ULL) s.bits_.set(v);
  }
  if (u.size() < 64 && (mask >> u.size()) != 0) {
    throw PreconditionViolation("mask has bits outside the universe");
  }
  return s;
}

bool VertexSet::contains(Vertex v) const {
  require_vertex(universe_, v);
  return bits_.test(v);
}

std::optional<Vertex> VertexSet::first() const {
  auto pos = bits_.find_first();
  if (pos == boost::dynamic_bitset<>::npos) return std::nullopt;
  return pos;
}

std::optional<Vertex> VertexSet::next(Vertex after) const {
  auto pos = bits_.find_next(after);
  if (pos == boost::dynamic_bitset<>::npos) return std::nullopt;
  return pos;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (auto pos = bits_.find_first(); pos != boost::dynamic_bitset<>::npos;
       pos = bits_.find_next(pos)) {
    out.push_back(pos);
  }
  return out;
}

void VertexSet::insert(Vertex v) {
  require_vertex(universe_, v);
  bits_.set(v);
}

void VertexSet::erase(Vertex v) {
  require_vertex(universe_, v);
  bits_.reset(v);
}

void VertexSet::check_same(const VertexSet& other) const {
  require_same(universe_, other.universe_);
}

VertexSet VertexSet::operator|(const VertexSet& other) const {
  check_same(other);
  return VertexSet(universe_, bits_ | other.bits_);
}

VertexSet VertexSet::operator&(const VertexSet& other) const {
  check_same(other);
  return VertexSet(universe_, bits_ & other.bits_);
}

VertexSet VertexSet::operator-(const VertexSet& other) const {
  check_same(other);
  return VertexSet(universe_, bits_ - other.bits_);
}

VertexSet VertexSet::complement() const { return VertexSet(universe_, ~bits_); }

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same(other);
  bits_ |= other.bits_;
  return *this;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same(other);
  return bits_.is_subset_of(other.bits_);
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_same(other);
  return bits_.intersects(other.bits_);
}

bool canonical_less(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto am = a.members();
  const auto bm = b.members();
  return std::lexicographical_compare(am.begin(), am.end(), bm.begin(),
                                      bm.end());
}

// ---------------------------------------------------------------------------
// Relation

Relation::Relation(Universe u) : universe_(u), rows_(u.size(), VertexSet(u)) {}

Relation::Relation(Universe u,
                   std::initializer_list<std::pair<Vertex, Vertex>> pairs)
    : Relation(u, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(),
                                                             pairs.size())) {}

Relation::Relation(Universe u,
                   std::span<const std::pair<Vertex, Vertex>> pairs)
    : Relation(u) {
  for (const auto& [x, y] : pairs) insert(x, y);
}

Relation Relation::full(Universe u) {
  Relation r(u);
  for (auto& row : r.rows_) row = VertexSet::full(u);
  return r;
}

bool Relation::contains(Vertex tail, Vertex head) const {
  require_vertex(universe_, tail);
  return rows_[tail].contains(head);
}

void Relation::insert(Vertex tail, Vertex head) {
  require_vertex(universe_, tail);
  rows_[tail].insert(head);
}

void Relation::erase(Vertex tail, Vertex head) {
  require_vertex(universe_, tail);
  rows_[tail].erase(head);
}

const VertexSet& Relation::row(Vertex tail) const {
  require_vertex(universe_, tail);
  return rows_[tail];
}

VertexSet& Relation::mutable_row(Vertex tail) {
  require_vertex(universe_, tail);
  return rows_[tail];
}

std::size_t Relation::pair_count() const noexcept {
  std::size_t total = 0;
  for (const auto& row : rows_) total += row.size();
  return total;
}

std::vector<std::pair<Vertex, Vertex>> Relation::pairs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex x = 0; x < rows_.size(); ++x) {
    for (Vertex y : rows_[x].members()) out.emplace_back(x, y);
  }
  return out;
}

bool Relation::is_subset_of(const Relation& other) const {
  require_same(universe_, other.universe_);
  for (Vertex x = 0; x < rows_.size(); ++x) {
    if (!rows_[x].is_subset_of(other.rows_[x])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Connectives

Relation boolean_op(BoolOp kind, const Relation& r) {
  switch (kind) {
    case BoolOp::kComplement:
      return complement(r);
    case BoolOp::kConverse:
      return converse(r);
    default:
      throw PreconditionViolation("binary connective needs two operands");
  }
}

Relation boolean_op(BoolOp kind, const Relation& r, const Relation& r2) {
  switch (kind) {
    case BoolOp::kUnion:
      return union_of(r, r2);
    case BoolOp::kIntersection:
      return intersection_of(r, r2);
    default:
      throw PreconditionViolation("unary connective takes one operand");
  }
}

Relation union_of(const Relation& r, const Relation& r2) {
  require_same(r.universe(), r2.universe());
  Relation out = r;
  for (Vertex x = 0; x < r.universe().size(); ++x) {
    out.mutable_row(x) |= r2.row(x);
  }
  return out;
}

Relation intersection_of(const Relation& r, const Relation& r2) {
  require_same(r.universe(), r2.universe());
  Relation out(r.universe());
  for (Vertex x = 0; x < r.universe().size(); ++x) {
    out.mutable_row(x) = r.row(x) & r2.row(x);
  }
  return out;
}

Relation complement(const Relation& r) {
  Relation out(r.universe());
  for (Vertex x = 0; x < r.universe().size(); ++x) {
    out.mutable_row(x) = r.row(x).complement();
  }
  return out;
}

Relation converse(const Relation& r) {
  Relation out(r.universe());
  for (Vertex x = 0; x < r.universe().size(); ++x) {
    for (Vertex y : r.row(x).members()) out.insert(y, x);
  }
  return out;
}

Relation compose(const Relation& r, const Relation& r2) {
  require_same(r.universe(), r2.universe());
  Relation out(r.universe());
  for (Vertex x = 0; x < r.universe().size(); ++x) {
    auto& row = out.mutable_row(x);
    for (Vertex y : r.row(x).members()) row |= r2.row(y);
  }
  return out;
}

Relation power(const Relation& r, std::size_t k) {
  if (k == 0) {
    throw PreconditionViolation(
        "power requires k >= 1; use diagonal for the identity");
  }
  Relation out = r;
  for (std::size_t i = 1; i < k; ++i) out = compose(r, out);
  return out;
}

Relation transitive_closure(const Relation& r) {
  Relation out = r;
  const std::size_t n = r.universe().size();
  for (Vertex k = 0; k < n; ++k) {
    const VertexSet through = out.row(k);
    for (Vertex i = 0; i < n; ++i) {
      if (out.row(i).contains(k)) out.mutable_row(i) |= through;
    }
  }
  return out;
}

Relation reflexive_transitive_closure(const Relation& r) {
  return union_of(transitive_closure(r),
                  diagonal(VertexSet::full(r.universe())));
}

Relation diagonal(const VertexSet& b) {
  Relation out(b.universe());
  for (Vertex x : b.members()) out.insert(x, x);
  return out;
}

VertexSet foreset(const Relation& r, const VertexSet& c) {
  require_same(r.universe(), c.universe());
  VertexSet out(r.universe());
  for (Vertex x = 0; x < r.universe().size(); ++x) {
    if (r.row(x).intersects(c)) out.insert(x);
  }
  return out;
}

VertexSet afterset(const VertexSet& b, const Relation& r) {
  require_same(r.universe(), b.universe());
  VertexSet out(r.universe());
  for (Vertex x : b.members()) out |= r.row(x);
  return out;
}

Relation asym_part(const Relation& r) {
  const Relation back = converse(r);
  Relation out(r.universe());
  for (Vertex x = 0; x < r.universe().size(); ++x) {
    out.mutable_row(x) = r.row(x) - back.row(x);
  }
  return out;
}

bool is_independent(const Relation& r, const VertexSet& s) {
  require_same(r.universe(), s.universe());
  for (Vertex x : s.members()) {
    VertexSet others = s;
    others.erase(x);
    if (r.row(x).intersects(others)) return false;
  }
  return true;
}

bool le_set(const Relation& r, const VertexSet& a, const VertexSet& b) {
  require_same(r.universe(), a.universe());
  require_same(r.universe(), b.universe());
  return a.is_subset_of(b | foreset(r, b));
}

SporderReport sporder_check(const Relation& r) {
  SporderReport report;
  report.irreflexive = true;
  for (Vertex x = 0; x < r.universe().size(); ++x) {
    if (r.contains(x, x)) {
      report.irreflexive = false;
      break;
    }
  }
  report.transitive = compose(r, r).is_subset_of(r);
  return report;
}

std::optional<Path> has_cycle(const Relation& r) {
  enum class Mark : unsigned char { kFresh, kOnStack, kDone };
  const std::size_t n = r.universe().size();
  std::vector<Mark> mark(n, Mark::kFresh);

  struct Frame {
    Vertex v;
    std::optional<Vertex> next;
  };

  for (Vertex start = 0; start < n; ++start) {
    if (mark[start] != Mark::kFresh) continue;
    std::vector<Frame> stack{{start, r.row(start).first()}};
    mark[start] = Mark::kOnStack;
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (!top.next) {
        mark[top.v] = Mark::kDone;
        stack.pop_back();
        continue;
      }
      const Vertex succ = *top.next;
      top.next = r.row(top.v).next(succ);
      if (mark[succ] == Mark::kOnStack) {
        auto it = std::find_if(stack.begin(), stack.end(),
                               [succ](const Frame& f) { return f.v == succ; });
        Path cycle;
        for (; it != stack.end(); ++it) cycle.push_back(it->v);
        cycle.push_back(succ);
        return cycle;
      }
      if (mark[succ] == Mark::kFresh) {
        mark[succ] = Mark::kOnStack;
        stack.push_back({succ, r.row(succ).first()});
      }
    }
  }
  return std::nullopt;
}

}  // namespace ssw
