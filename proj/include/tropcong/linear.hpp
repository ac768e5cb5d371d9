// Copyright (c) tropcong contributors.
// SPDX-License-Identifier: Apache-2.0
#ifndef TROPCONG_LINEAR_HPP
#define TROPCONG_LINEAR_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "tropcong/rat.hpp"

namespace tropcong {

// Constraints are written coeffs . x REL bound with REL one of >=, =.
// Strict inequalities are never stored; callers encode strict separation
// either through a >= 1 offset inside a homogeneous cone or through an
// exact supremum comparison (see lin_sup).
enum class Rel { Geq, Eq };

struct LinConstraint {
  RatVec coeffs;
  Rat bound;
  Rel rel = Rel::Geq;
};

struct LinSystem {
  std::size_t dim = 0;

  LinSystem() = default;
  explicit LinSystem(std::size_t d) : dim(d) {}

  std::vector<LinConstraint> constraints;

  void add(RatVec coeffs, Rat bound, Rel rel = Rel::Geq);
};

// Exact feasibility over the rationals by Fourier-Motzkin elimination with
// pairwise dominance pruning. For rational data this coincides with
// feasibility over the reals.
bool lin_feasible(const LinSystem& sys);

// A rational solution when one exists.
std::optional<RatVec> lin_feasible_point(const LinSystem& sys);

struct LinSup {
  enum class Kind { Infeasible, Finite, Unbounded } kind;
  Rat value;       // Finite only: the attained supremum.
  RatVec witness;  // Finite: attaining point. Unbounded: recession direction
                   // with objective . witness >= 1.
};

// Exact supremum of objective . x over the solution set.
LinSup lin_sup(const RatVec& objective, const LinSystem& sys);

}  // namespace tropcong

#endif
