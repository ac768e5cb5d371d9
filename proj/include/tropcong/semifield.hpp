// Copyright (c) tropcong contributors.
// SPDX-License-Identifier: Apache-2.0
#ifndef TROPCONG_SEMIFIELD_HPP
#define TROPCONG_SEMIFIELD_HPP

#include <optional>
#include <string>

#include "tropcong/rat.hpp"

namespace tropcong {

// The three coefficient semifields: the Boolean semifield B, the integer
// max-plus semifield Zmax, and TQ, max-plus over the rationals.
enum class SemifieldTag { B, Zmax, TQ };

std::string tag_name(SemifieldTag tag);

// One semifield element in exponential notation: the additive zero, or
// t^e. The multiplicative unit is t^0; B admits only the zero and t^0.
// Idempotent addition is max, multiplication adds exponents.
class Scalar {
 public:
  static Scalar zero(SemifieldTag tag) { return Scalar(tag, std::nullopt); }
  static Scalar one(SemifieldTag tag) { return Scalar(tag, Rat(0)); }
  static Scalar exp(SemifieldTag tag, Rat e);

  SemifieldTag tag() const { return tag_; }
  bool is_zero() const { return !exp_.has_value(); }
  bool is_one() const { return exp_.has_value() && *exp_ == 0; }
  const Rat& exponent() const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.tag_ == b.tag_ && a.exp_ == b.exp_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  // Structural order (zero first, then by exponent); used for canonical maps.
  friend bool operator<(const Scalar& a, const Scalar& b);

 private:
  Scalar(SemifieldTag tag, std::optional<Rat> e) : tag_(tag), exp_(std::move(e)) {}
  SemifieldTag tag_;
  std::optional<Rat> exp_;
};

Scalar scalar_add(const Scalar& a, const Scalar& b);
Scalar scalar_mul(const Scalar& a, const Scalar& b);

// a <= b iff a + b = b, with the sum being the larger element (max). Total
// order with the zero as minimum.
bool scalar_leq(const Scalar& a, const Scalar& b);

// Literals: "0" for zero, "1" for t^0, "t^p/q" otherwise.
std::string scalar_to_string(const Scalar& s);
Scalar parse_scalar(SemifieldTag tag, const std::string& text);

}  // namespace tropcong

#endif
