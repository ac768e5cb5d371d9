// Copyright (c) tropcong contributors.
// SPDX-License-Identifier: Apache-2.0
#include "tropcong/semifield.hpp"

#include "tropcong/errors.hpp"

namespace tropcong {

std::string tag_name(SemifieldTag tag) {
  switch (tag) {
    case SemifieldTag::B: return "B";
    case SemifieldTag::Zmax: return "Zmax";
    case SemifieldTag::TQ: return "TQ";
  }
  return "?";
}

Scalar Scalar::exp(SemifieldTag tag, Rat e) {
  if (tag == SemifieldTag::B && e != 0)
    throw input_error("B admits only 0 and 1");
  if (tag == SemifieldTag::Zmax && denominator(e) != 1)
    throw input_error("Zmax exponents must be integers: t^" + rat_to_string(e));
  return Scalar(tag, std::move(e));
}

const Rat& Scalar::exponent() const {
  if (!exp_) throw input_error("exponent of the zero scalar");
  return *exp_;
}

bool operator<(const Scalar& a, const Scalar& b) {
  if (a.tag_ != b.tag_) return a.tag_ < b.tag_;
  if (!a.exp_ || !b.exp_) return !a.exp_ && b.exp_.has_value();
  return *a.exp_ < *b.exp_;
}

namespace {
void check_tags(const Scalar& a, const Scalar& b, const char* op) {
  if (a.tag() != b.tag())
    throw input_error(std::string(op) + ": mixed semifield tags");
}
}  // namespace

Scalar scalar_add(const Scalar& a, const Scalar& b) {
  check_tags(a, b, "scalar_add");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return a.exponent() >= b.exponent() ? a : b;
}

Scalar scalar_mul(const Scalar& a, const Scalar& b) {
  check_tags(a, b, "scalar_mul");
  if (a.is_zero() || b.is_zero()) return Scalar::zero(a.tag());
  return Scalar::exp(a.tag(), a.exponent() + b.exponent());
}

bool scalar_leq(const Scalar& a, const Scalar& b) {
  check_tags(a, b, "scalar_leq");
  if (a.is_zero()) return true;
  if (b.is_zero()) return false;
  return a.exponent() <= b.exponent();
}

std::string scalar_to_string(const Scalar& s) {
  if (s.is_zero()) return "0";
  if (s.is_one()) return "1";
  return "t^" + rat_to_string(s.exponent());
}

Scalar parse_scalar(SemifieldTag tag, const std::string& text) {
  if (text == "0") return Scalar::zero(tag);
  if (text == "1") return Scalar::one(tag);
  if (text.size() > 2 && text[0] == 't' && text[1] == '^')
    return Scalar::exp(tag, parse_rat(text.substr(2)));
  throw input_error("malformed scalar literal: " + text);
}

}  // namespace tropcong
