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

enum class Color { kBlue, kRed };

/// A digraph whose edges carry a blue and/or a red color. A pair may carry
/// both colors, and loops are allowed.
///
/// The closures needed by every query (the per-color transitive closures,
/// their asymmetric parts and the monochromatic relation) are computed once
/// at construction; the object is immutable afterwards.
class TwoColoredDigraph {
 public:
  TwoColoredDigraph() : TwoColoredDigraph(Relation(), Relation()) {}
  TwoColoredDigraph(Relation blue, Relation red);

  Universe universe() const noexcept { return blue_.universe(); }
  const Relation& blue() const noexcept { return blue_; }
  const Relation& red() const noexcept { return red_; }
  const Relation& edges(Color c) const noexcept {
    return c == Color::kBlue ? blue_ : red_;
  }

  /// E_b+ and E_r+.
  const Relation& closure(Color c) const noexcept {
    return c == Color::kBlue ? blue_plus_ : red_plus_;
  }
  /// Asym(E_b+) and Asym(E_r+).
  const Relation& asym_closure(Color c) const noexcept {
    return c == Color::kBlue ? blue_asym_ : red_asym_;
  }
  /// M = E_b+ | E_r+.
  const Relation& mono() const noexcept { return mono_; }

  friend bool operator==(const TwoColoredDigraph& a,
                         const TwoColoredDigraph& b) {
    return a.blue_ == b.blue_ && a.red_ == b.red_;
  }

 private:
  Relation blue_;
  Relation red_;
  Relation blue_plus_;
  Relation red_plus_;
  Relation blue_asym_;
  Relation red_asym_;
  Relation mono_;
};

struct HypothesisReport {
  bool blue_asym_acyclic = true;
  bool red_asym_acyclic = true;
  std::optional<Path> blue_has_cycle;
  std::optional<Path> red_has_cycle;
  bool nonempty = false;
};

Relation mono(const TwoColoredDigraph& g);

/// Cycle checks on the asymmetric closures (the hypotheses the solver needs)
/// and on the raw colors (the classical no-monochromatic-path hypothesis).
HypothesisReport check_hypotheses(const TwoColoredDigraph& g);

/// S is nonempty, M-independent, and every red-reachable vertex from S
/// reaches S monochromatically.
bool is_in_family_S(const TwoColoredDigraph& g, const VertexSet& s);

/// Vertices neither in S nor able to reach S monochromatically.
VertexSet absorbed_complement(const TwoColoredDigraph& g, const VertexSet& s);

/// S is a nonempty M-independent set absorbing every other vertex.
bool is_solution(const TwoColoredDigraph& g, const VertexSet& s);

/// S is independent for E_b | E_r and every outside vertex has an edge
/// (of either color) into S.
bool is_kernel(const TwoColoredDigraph& g, const VertexSet& s);

}  // namespace ssw
