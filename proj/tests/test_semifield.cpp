// Copyright (c) tropcong contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"
#include "tropcong/errors.hpp"
#include "tropcong/semifield.hpp"

using namespace tropcong;

TEST_CASE("addition is the maximum") {
  const auto t2 = Scalar::exp(SemifieldTag::Zmax, Rat(2));
  const auto t3 = Scalar::exp(SemifieldTag::Zmax, Rat(3));
  CHECK(scalar_add(t2, t2) == t2);
  CHECK(scalar_add(t3, Scalar::zero(SemifieldTag::Zmax)) == t3);
  const auto h = Scalar::exp(SemifieldTag::TQ, Rat(1, 2));
  const auto th = Scalar::exp(SemifieldTag::TQ, Rat(1, 3));
  CHECK(scalar_add(h, th) == h);
}

TEST_CASE("multiplication adds exponents and zero absorbs") {
  const auto t2 = Scalar::exp(SemifieldTag::Zmax, Rat(2));
  const auto t3 = Scalar::exp(SemifieldTag::Zmax, Rat(3));
  CHECK(scalar_mul(t2, t3) == Scalar::exp(SemifieldTag::Zmax, Rat(5)));
  CHECK(scalar_mul(t2, Scalar::zero(SemifieldTag::Zmax)).is_zero());
  CHECK(scalar_mul(Scalar::one(SemifieldTag::B), Scalar::one(SemifieldTag::B)).is_one());
}

TEST_CASE("the order has the zero as minimum") {
  CHECK(scalar_leq(Scalar::zero(SemifieldTag::Zmax),
                   Scalar::exp(SemifieldTag::Zmax, Rat(-5))));
  CHECK(scalar_leq(Scalar::exp(SemifieldTag::Zmax, Rat(1)),
                   Scalar::exp(SemifieldTag::Zmax, Rat(2))));
  CHECK_FALSE(scalar_leq(Scalar::exp(SemifieldTag::Zmax, Rat(2)),
                         Scalar::exp(SemifieldTag::Zmax, Rat(1))));
}

TEST_CASE("mixed tags are rejected") {
  CHECK_THROWS_AS(scalar_add(Scalar::one(SemifieldTag::B),
                             Scalar::one(SemifieldTag::Zmax)),
                  input_error);
  CHECK_THROWS_AS(Scalar::exp(SemifieldTag::B, Rat(1)), input_error);
  CHECK_THROWS_AS(Scalar::exp(SemifieldTag::Zmax, Rat(1, 2)), input_error);
}

TEST_CASE("literals round-trip") {
  for (const char* text : {"0", "1", "t^2", "t^-3", "t^1/2", "t^-7/3"}) {
    const auto s = parse_scalar(SemifieldTag::TQ, text);
    CHECK(scalar_to_string(s) == text);
  }
  CHECK(scalar_to_string(parse_scalar(SemifieldTag::TQ, "t^0")) == "1");
  CHECK_THROWS_AS(parse_scalar(SemifieldTag::TQ, "t2"), input_error);
  CHECK_THROWS_AS(parse_scalar(SemifieldTag::TQ, ""), input_error);
}

TEST_CASE("semifield axioms on random samples") {
  tctest::Rng rng(99);
  const SemifieldTag tags[] = {SemifieldTag::B, SemifieldTag::Zmax, SemifieldTag::TQ};
  for (auto tag : tags) {
    const auto one = Scalar::one(tag);
    const auto zero = Scalar::zero(tag);
    for (int i = 0; i < 300; ++i) {
      auto pick = [&]() {
        return tctest::rand_int(rng, 0, 4) == 0 ? Scalar::zero(tag)
                                                : tctest::rand_coeff(rng, tag);
      };
      const auto a = pick(), b = pick(), c = pick();
      CHECK(scalar_add(a, a) == a);
      CHECK(scalar_add(a, zero) == a);
      CHECK(scalar_mul(a, one) == a);
      CHECK(scalar_mul(a, zero) == zero);
      CHECK(scalar_add(a, b) == scalar_add(b, a));
      CHECK(scalar_mul(scalar_mul(a, b), c) == scalar_mul(a, scalar_mul(b, c)));
      // Distributivity.
      CHECK(scalar_mul(a, scalar_add(b, c)) ==
            scalar_add(scalar_mul(a, b), scalar_mul(a, c)));
      // Total order compatible with multiplication.
      CHECK((scalar_leq(a, b) || scalar_leq(b, a)));
      if (scalar_leq(a, b)) CHECK(scalar_leq(scalar_mul(a, c), scalar_mul(b, c)));
      // a <= b iff a + b = b.
      CHECK(scalar_leq(a, b) == (scalar_add(a, b) == b));
    }
  }
}
