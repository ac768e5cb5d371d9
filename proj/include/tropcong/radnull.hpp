// Copyright (c) tropcong contributors.
// SPDX-License-Identifier: Apache-2.0
#ifndef TROPCONG_RADNULL_HPP
#define TROPCONG_RADNULL_HPP

#include <cstdint>
#include <optional>
#include <set>

#include "tropcong/order.hpp"
#include "tropcong/pairalg.hpp"
#include "tropcong/tropoly.hpp"

namespace tropcong {

// A prime of dimension at most 1 produced as a non-membership certificate:
// a kill-set plus a single ordering row, or the dimension-0 prime when the
// row is absent.
struct SeparatingPrime {
  std::set<int> kill;
  std::optional<RatVec> row;
};

// A point of V(E) on which the two sides of the probe pair disagree.
struct SeparationPoint {
  Point point;
};

struct Verdict {
  bool member = true;
  std::optional<SeparatingPrime> prime_witness;
  std::optional<SeparationPoint> point_witness;
  std::uint64_t cases_explored = 0;
};

struct DeciderOptions {
  int k_bound = 3;
  unsigned jobs = 1;
};

// The PrimeSpec corresponding to a witness, for independent re-verification
// through prime_member.
PrimeSpec to_prime_spec(const PolyContext& ctx, const SeparatingPrime& w);

// Membership in Rad(diag): equal Newton polytopes over B, equal hats over
// Zmax/TQ. Non-membership comes with a separating single-row prime.
Verdict rad_trivial_member(const Pair& p);

// Membership in Rad(E) for finitely generated E, decided by searching the
// primes with quotient dimension at most 1: kill-sets, the dimension-0
// prime, and single rows found by exact feasibility over the
// achieving-monomial case split.
Verdict rad_member_fg(const CongPresentation& E, const Pair& p,
                      const DeciderOptions& opts = {});

// Whether the two sides of p agree on every point of V(E) (TQ only).
// Non-membership comes with a rational point of V(E) separating the sides.
Verdict null_member(const CongPresentation& E, const Pair& p,
                    const DeciderOptions& opts = {});

// Membership in E_+: decides p (1, eps) in Rad(E) through the prime search
// restricted to rows with positive t-entry. The verdict does not depend on
// the choice of eps outside {0, 1}.
Verdict eplus_member(const CongPresentation& E, const Pair& p, const Scalar& eps,
                     const DeciderOptions& opts = {});

// True iff the generalized power of p described by w has formally equal
// coordinates.
bool gp_witness_verify(const Pair& p, const GpWitness& w);

struct GpSearchBounds {
  std::size_t pow_bound = 4;       // kpow, lpow <= pow_bound
  std::int64_t c_degree_cap = 8;   // degree cap on candidate c terms
};

// Semi-decision: enumerates kpow, lpow and candidate c built from monomials
// and powers of lhs+rhs. Found implies gp_witness_verify; NotFound does not
// refute membership.
std::optional<GpWitness> gp_witness_search(const Pair& p,
                                           const GpSearchBounds& bounds = {});

// Collapses a witness to a single trailing factor:
// (i, j, h) -> (i+j-1, 1, h (lhs+rhs)^(j-1)).
GpWitness gp_witness_normalize(const Pair& p, std::size_t i, std::size_t j,
                               const TropPoly& h);

}  // namespace tropcong

#endif
