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

#include "ssw/relation.hpp"

namespace ssw {

/// Every consecutive pair of `p` is in `r`. Throws on an empty path.
bool all_l(const Relation& r, const Path& p);

/// No vertex occurs twice.
bool is_duplicate_free(const Path& p);

/// A shortest (hence duplicate-free) r-path from x to y, or nothing when
/// (x, y) is not in r+. Ties go to the lowest vertex index. x == y is
/// rejected: membership of (x, x) in r+ is a cycle question, see has_cycle.
std::optional<Path> find_simple_path(const Relation& r, Vertex x, Vertex y);

struct SpliceResult {
  /// Interior vertices kept from the x -> y path, in order.
  Path x_part;
  Vertex y_new = 0;
  /// Vertices between y_new and z.
  Path y_part;

  /// x, x_part..., y_new, y_part..., z.
  Path joined(Vertex x, Vertex z) const;

  friend bool operator==(const SpliceResult&, const SpliceResult&) = default;
};

/// Given simple r-paths px = [x, ..., y] and py = [y, ..., z] with
/// x Asym(r+) y and y Asym(r+) z, rebuilds a duplicate-free r-path
/// x, x_part, y_new, y_part, z where x_part is a subsequence of px's
/// interior and x Asym(r+) y_new Asym(r+) z.
///
/// The two paths can only collide on interior vertices. Each collision
/// vertex c = px[i] = py[j] is a candidate waypoint: keep px up to c, then
/// follow py after c. The candidates together with the untouched
/// concatenation are filtered for duplicate-freeness, and the shortest is
/// returned (ties broken lexicographically on the joined sequence).
SpliceResult splice(const Relation& r, Vertex x, Vertex y, Vertex z,
                    const Path& px, const Path& py);

/// Same, with `order` = asym_part(transitive_closure(r)) supplied by the
/// caller.
SpliceResult splice(const Relation& r, const Relation& order, Vertex x,
                    Vertex y, Vertex z, const Path& px, const Path& py);

/// Turns a duplicate-free path w in Asym(r+) into a duplicate-free r-path
/// that starts at w.front() and has at least w.size() vertices. Built by
/// walking w and splicing each consecutive pair of r-segments. The end
/// vertex is not guaranteed to be w.back().
Path expand_asym_path(const Relation& r, const Path& w);

}  // namespace ssw
