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

#include "ssw/path_surgery.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

#include "ssw/errors.hpp"

namespace ssw {
namespace {

void require_vertex(const Relation& r, Vertex v) {
  if (!r.universe().contains(v)) {
    throw PreconditionViolation("vertex " + std::to_string(v) +
                                " outside universe");
  }
}

Path join(Vertex x, const Path& x_part, Vertex y_new, const Path& y_part,
          Vertex z) {
  Path out;
  out.reserve(x_part.size() + y_part.size() + 3);
  out.push_back(x);
  out.insert(out.end(), x_part.begin(), x_part.end());
  out.push_back(y_new);
  out.insert(out.end(), y_part.begin(), y_part.end());
  out.push_back(z);
  return out;
}

// Splice against a precomputed Asym(r+).
SpliceResult splice_with(const Relation& r, const Relation& order, Vertex x,
                         Vertex y, Vertex z, const Path& px, const Path& py) {
  for (Vertex v : {x, y, z}) require_vertex(r, v);
  if (px.size() < 2 || px.front() != x || px.back() != y) {
    throw PreconditionViolation("splice: px must run from x to y");
  }
  if (py.size() < 2 || py.front() != y || py.back() != z) {
    throw PreconditionViolation("splice: py must run from y to z");
  }
  if (!all_l(r, px) || !all_l(r, py)) {
    throw PreconditionViolation("splice: paths must follow the relation");
  }
  if (!is_duplicate_free(px) || !is_duplicate_free(py)) {
    throw PreconditionViolation("splice: paths must be duplicate-free");
  }
  if (!order.contains(x, y) || !order.contains(y, z)) {
    throw PreconditionViolation("splice: endpoints must ascend in Asym(r+)");
  }

  const Path x_inner(px.begin() + 1, px.end() - 1);
  const Path y_inner(py.begin() + 1, py.end() - 1);

  std::vector<SpliceResult> candidates;
  candidates.push_back({x_inner, y, y_inner});
  for (std::size_t i = 0; i < x_inner.size(); ++i) {
    auto hit = std::find(y_inner.begin(), y_inner.end(), x_inner[i]);
    if (hit == y_inner.end()) continue;
    candidates.push_back({Path(x_inner.begin(), x_inner.begin() + i),
                          x_inner[i], Path(hit + 1, y_inner.end())});
  }

  std::optional<SpliceResult> best;
  Path best_joined;
  for (auto& c : candidates) {
    Path joined = c.joined(x, z);
    if (!is_duplicate_free(joined)) continue;
    if (!best || joined.size() < best_joined.size() ||
        (joined.size() == best_joined.size() && joined < best_joined)) {
      best = std::move(c);
      best_joined = std::move(joined);
    }
  }
  if (!best || !order.contains(x, best->y_new) ||
      !order.contains(best->y_new, z) || !all_l(r, best_joined)) {
    throw InvariantViolation("splice: construction invariant violated");
  }
  return *best;
}

}  // namespace

Path SpliceResult::joined(Vertex x, Vertex z) const {
  return join(x, x_part, y_new, y_part, z);
}

bool all_l(const Relation& r, const Path& p) {
  if (p.empty()) throw PreconditionViolation("all_l: empty path");
  for (Vertex v : p) require_vertex(r, v);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (!r.contains(p[i], p[i + 1])) return false;
  }
  return true;
}

bool is_duplicate_free(const Path& p) {
  std::unordered_set<Vertex> seen;
  for (Vertex v : p) {
    if (!seen.insert(v).second) return false;
  }
  return true;
}

std::optional<Path> find_simple_path(const Relation& r, Vertex x, Vertex y) {
  require_vertex(r, x);
  require_vertex(r, y);
  if (x == y) {
    throw PreconditionViolation(
        "find_simple_path: x == y, use cycle query instead");
  }
  const std::size_t n = r.universe().size();
  constexpr Vertex kNone = static_cast<Vertex>(-1);
  std::vector<Vertex> parent(n, kNone);
  parent[x] = x;
  std::deque<Vertex> frontier{x};
  while (!frontier.empty()) {
    const Vertex v = frontier.front();
    frontier.pop_front();
    const VertexSet& succ = r.row(v);
    for (auto w = succ.first(); w; w = succ.next(*w)) {
      if (parent[*w] != kNone) continue;
      parent[*w] = v;
      if (*w == y) {
        Path path{y};
        for (Vertex u = y; u != x;) {
          u = parent[u];
          path.push_back(u);
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      frontier.push_back(*w);
    }
  }
  return std::nullopt;
}

SpliceResult splice(const Relation& r, Vertex x, Vertex y, Vertex z,
                    const Path& px, const Path& py) {
  return splice_with(r, asym_part(transitive_closure(r)), x, y, z, px, py);
}

SpliceResult splice(const Relation& r, const Relation& order, Vertex x,
                    Vertex y, Vertex z, const Path& px, const Path& py) {
  if (order.universe() != r.universe()) throw UniverseMismatch();
  return splice_with(r, order, x, y, z, px, py);
}

Path expand_asym_path(const Relation& r, const Path& w) {
  if (w.empty()) throw PreconditionViolation("expand_asym_path: empty path");
  for (Vertex v : w) require_vertex(r, v);
  if (!is_duplicate_free(w)) {
    throw PreconditionViolation("expand_asym_path: path repeats a vertex");
  }
  const Relation order = asym_part(transitive_closure(r));
  if (!all_l(order, w)) {
    throw PreconditionViolation(
        "expand_asym_path: consecutive vertices must ascend in Asym(r+)");
  }
  if (w.size() == 1) return w;

  auto segment = [&](Vertex a, Vertex b) {
    auto p = find_simple_path(r, a, b);
    if (!p) throw InvariantViolation("expand_asym_path: missing r-path");
    return *p;
  };

  // `current` is a simple r-path from the current anchor to w[i]; the anchor
  // ascends below w[i] in Asym(r+). Each splice commits the anchor and its
  // kept interior and moves the anchor forward.
  Path out;
  Path current = segment(w[0], w[1]);
  for (std::size_t i = 1; i + 1 < w.size(); ++i) {
    const Vertex anchor = current.front();
    const Path next = segment(w[i], w[i + 1]);
    const SpliceResult s =
        splice_with(r, order, anchor, w[i], w[i + 1], current, next);
    out.push_back(anchor);
    out.insert(out.end(), s.x_part.begin(), s.x_part.end());
    current.clear();
    current.push_back(s.y_new);
    current.insert(current.end(), s.y_part.begin(), s.y_part.end());
    current.push_back(w[i + 1]);
  }
  out.insert(out.end(), current.begin(), current.end());

  if (out.front() != w.front() || out.size() < w.size() ||
      !is_duplicate_free(out) || !all_l(r, out)) {
    throw InvariantViolation("expand_asym_path: construction invariant violated");
  }
  return out;
}

}  // namespace ssw
