// Copyright (c) tropcong contributors.
// SPDX-License-Identifier: Apache-2.0
#ifndef TROPCONG_TROPOLY_HPP
#define TROPCONG_TROPOLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropcong/semifield.hpp"

namespace tropcong {

// Exponent vector of one (Laurent) monomial; length k per context.
using ExpVec = std::vector<std::int64_t>;

struct PolyContext {
  SemifieldTag tag;
  int k = 0;
  bool laurent = false;

  friend bool operator==(const PolyContext&, const PolyContext&) = default;
};

std::string context_to_string(const PolyContext& ctx);

// Canonical formal (Laurent) polynomial: a finite exponent -> coefficient
// map with no zero coefficients. Equality is formal (map) equality, which is
// strictly finer than equality as functions.
class TropPoly {
 public:
  explicit TropPoly(PolyContext ctx) : ctx_(ctx) {}

  static TropPoly zero(PolyContext ctx) { return TropPoly(ctx); }
  static TropPoly one(PolyContext ctx);
  static TropPoly monomial(PolyContext ctx, ExpVec exp, Scalar coeff);
  static TropPoly variable(PolyContext ctx, int i);  // x_i, 1-based

  const PolyContext& context() const { return ctx_; }
  const std::map<ExpVec, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }
  std::int64_t total_degree() const;  // max over terms of sum |n_i|; 0 for 0

  // Merges by idempotent coefficient addition; zero coefficients vanish.
  void add_term(const ExpVec& exp, const Scalar& coeff);

  friend bool operator==(const TropPoly& a, const TropPoly& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const TropPoly& a, const TropPoly& b) { return !(a == b); }
  friend bool operator<(const TropPoly& a, const TropPoly& b) {
    return a.terms_ < b.terms_;
  }

  std::string to_string() const;

 private:
  PolyContext ctx_;
  std::map<ExpVec, Scalar> terms_;
};

// A point of T^k; a missing coordinate is the additive zero (-inf).
struct Point {
  std::vector<std::optional<Rat>> coords;
};

TropPoly poly_add(const TropPoly& f, const TropPoly& g);
TropPoly poly_mul(const TropPoly& f, const TropPoly& g);

// Evaluation at a point. Laurent contexts require all coordinates finite;
// a term meeting a -inf coordinate with nonzero exponent contributes the
// zero; the empty maximum is the zero. Over B every finite coordinate must
// be t^0 so that the value stays in B; over Zmax coordinates must be
// integral.
Scalar poly_eval(const TropPoly& f, const Point& a);

}  // namespace tropcong

#endif
