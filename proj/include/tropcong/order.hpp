// Copyright (c) tropcong contributors.
// SPDX-License-Identifier: Apache-2.0
#ifndef TROPCONG_ORDER_HPP
#define TROPCONG_ORDER_HPP

#include <set>
#include <string>
#include <vector>

#include "tropcong/pairalg.hpp"
#include "tropcong/rat.hpp"

namespace tropcong {

// A rational matrix defining a (partial) term ordering by lexicographic
// comparison of images. Over Zmax/TQ column 0 is the t-column and must be
// all zero or lead with a positive entry.
struct OrderMatrix {
  SemifieldTag tag = SemifieldTag::B;
  RatMat rows;

  std::size_t row_count() const { return rows.size(); }
  std::size_t col_count() const { return rows.empty() ? 0 : rows[0].size(); }
  friend bool operator==(const OrderMatrix&, const OrderMatrix&) = default;
};

// A prime congruence P(U): a kill-set of variables whose monomials collapse
// to zero (empty in Laurent contexts) and an ordering matrix over the
// surviving variables. The empty matrix is the dimension-0 prime that
// identifies every surviving nonzero element.
struct PrimeSpec {
  PolyContext ctx;
  std::set<int> kill;  // 1-based variable indices
  OrderMatrix U;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> issues;
};

// Expected column count for a spec's matrix: surviving variables, plus the
// t-column over Zmax/TQ.
std::size_t spec_columns(const PrimeSpec& spec);

ValidationReport validate(const PrimeSpec& spec);

// U applied to the extended exponent vector (c, n) of a monomial in the
// surviving variables (just n over B).
RatVec phi(const OrderMatrix& U, const Scalar& coeff, const ExpVec& exp);

// Lexicographic maximum of phi over the surviving monomials of f, or
// nullopt when every monomial is killed.
std::optional<RatVec> leading_image(const PrimeSpec& spec, const TropPoly& f);

// Membership in P(U): killed monomials are dropped from both sides; the
// sides are congruent iff the lexicographic maxima of phi over the
// surviving monomials agree (two empty sides agree, exactly one empty side
// does not).
bool prime_member(const PrimeSpec& spec, const Pair& p);

// The chain P(U(r)) < ... < P(U(0)) of leading-row prefixes, finest first.
std::vector<PrimeSpec> prime_chain(const PrimeSpec& spec);

// For each consecutive chain link a monomial pair separating the coarser
// prime from the finer one, found by exact kernel computation.
std::vector<Pair> chain_separators(const PrimeSpec& spec);

// Krull dimension of the quotient: the number of rows of U.
std::size_t dimension(const PrimeSpec& spec);

// Minimality: trivial kernel and full column rank (with rational entries a
// nonzero kernel always meets the monomial lattice after scaling).
bool is_minimal(const PrimeSpec& spec);

// Gram-Schmidt without normalization, each row scaled to a primitive
// integer vector with its sign preserved. Defines the same ordering; equal
// canonical forms characterize equal orderings on the ambient lattice.
OrderMatrix canonicalize(const OrderMatrix& U);

// A single-row matrix wU with positive weights chosen so that membership in
// P(wU) agrees with membership in P(U) for every pair in the given set.
OrderMatrix collapse_weights(const OrderMatrix& U, const std::vector<Pair>& pairs);

}  // namespace tropcong

#endif
