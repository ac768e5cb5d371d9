// Copyright (c) tropcong contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"
#include "tropcong/errors.hpp"
#include "tropcong/linear.hpp"

using namespace tropcong;

namespace {

Rat eval_row(const RatVec& c, const RatVec& x) {
  Rat acc = 0;
  for (std::size_t i = 0; i < c.size(); ++i) acc += c[i] * x[i];
  return acc;
}

bool satisfies(const LinSystem& sys, const RatVec& x) {
  for (const auto& ct : sys.constraints) {
    const Rat v = eval_row(ct.coeffs, x);
    if (ct.rel == Rel::Eq ? v != ct.bound : v < ct.bound) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("contradictory one-variable bounds are infeasible") {
  LinSystem sys(1);
  sys.add({Rat(1)}, Rat(1));    // u >= 1
  sys.add({Rat(-1)}, Rat(0));   // -u >= 0
  CHECK_FALSE(lin_feasible(sys));
}

TEST_CASE("the standard triangle is feasible") {
  LinSystem sys(2);
  sys.add({Rat(1), Rat(0)}, Rat(0));
  sys.add({Rat(0), Rat(1)}, Rat(0));
  sys.add({Rat(-1), Rat(-1)}, Rat(-1));
  CHECK(lin_feasible(sys));
  auto pt = lin_feasible_point(sys);
  REQUIRE(pt.has_value());
  CHECK(satisfies(sys, *pt));
}

TEST_CASE("nonempty rational interval") {
  // 2u >= 1 and -3u >= -2 leave [1/2, 2/3].
  LinSystem sys(1);
  sys.add({Rat(2)}, Rat(1));
  sys.add({Rat(-3)}, Rat(-2));
  CHECK(lin_feasible(sys));
  auto pt = lin_feasible_point(sys);
  REQUIRE(pt.has_value());
  CHECK((*pt)[0] >= Rat(1, 2));
  CHECK((*pt)[0] <= Rat(2, 3));
}

TEST_CASE("supremum over the triangle is attained at 1") {
  LinSystem sys(2);
  sys.add({Rat(1), Rat(0)}, Rat(0));
  sys.add({Rat(0), Rat(1)}, Rat(0));
  sys.add({Rat(-1), Rat(-1)}, Rat(-1));
  const auto r = lin_sup({Rat(1), Rat(1)}, sys);
  REQUIRE(r.kind == LinSup::Kind::Finite);
  CHECK(r.value == 1);
  CHECK(satisfies(sys, r.witness));
  CHECK(eval_row({Rat(1), Rat(1)}, r.witness) == 1);
}

TEST_CASE("unbounded ray has positive objective") {
  LinSystem sys(1);
  sys.add({Rat(1)}, Rat(0));
  const auto r = lin_sup({Rat(1)}, sys);
  REQUIRE(r.kind == LinSup::Kind::Unbounded);
  CHECK(eval_row({Rat(1)}, r.witness) >= 1);
  CHECK(r.witness[0] >= 0);  // recession direction of {u >= 0}
}

TEST_CASE("infeasible supremum") {
  LinSystem sys(1);
  sys.add({Rat(1)}, Rat(1));
  sys.add({Rat(-1)}, Rat(0));
  CHECK(lin_sup({Rat(1)}, sys).kind == LinSup::Kind::Infeasible);
}

TEST_CASE("equality constraints substitute exactly") {
  // x + y = 3, x - y >= 1, maximize y.
  LinSystem sys(2);
  sys.add({Rat(1), Rat(1)}, Rat(3), Rel::Eq);
  sys.add({Rat(1), Rat(-1)}, Rat(1));
  const auto r = lin_sup({Rat(0), Rat(1)}, sys);
  REQUIRE(r.kind == LinSup::Kind::Finite);
  CHECK(r.value == 1);
  CHECK(satisfies(sys, r.witness));
}

TEST_CASE("dimension mismatch is an input error") {
  LinSystem sys(2);
  CHECK_THROWS_AS(sys.add({Rat(1)}, Rat(0)), input_error);
  LinSystem bad(1);
  bad.add({Rat(1)}, Rat(0));
  CHECK_THROWS_AS(lin_sup({Rat(1), Rat(0)}, bad), input_error);
}

TEST_CASE("zero-dimensional systems") {
  LinSystem sys(0);
  CHECK(lin_feasible(sys));
  CHECK(lin_sup({}, sys).kind == LinSup::Kind::Finite);
  CHECK(lin_sup({}, sys).value == 0);
}

TEST_CASE("random systems: feasibility matches zero-objective supremum") {
  tctest::Rng rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = tctest::rand_int(rng, 1, 4);
    LinSystem sys(dim);
    const int rows = tctest::rand_int(rng, 1, 6);
    for (int r = 0; r < rows; ++r) {
      RatVec c(dim);
      for (auto& x : c) x = tctest::rand_rat(rng, -3, 3, 2);
      sys.add(std::move(c), tctest::rand_rat(rng, -4, 4, 2),
              tctest::rand_int(rng, 0, 5) == 0 ? Rel::Eq : Rel::Geq);
    }
    const bool feasible = lin_feasible(sys);
    const auto sup = lin_sup(RatVec(dim, Rat(0)), sys);
    CHECK(feasible == (sup.kind != LinSup::Kind::Infeasible));
    auto pt = lin_feasible_point(sys);
    CHECK(feasible == pt.has_value());
    if (pt) CHECK(satisfies(sys, *pt));
  }
}

TEST_CASE("random supremum witnesses satisfy all constraints exactly") {
  tctest::Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = tctest::rand_int(rng, 1, 3);
    LinSystem sys(dim);
    const int rows = tctest::rand_int(rng, 1, 6);
    for (int r = 0; r < rows; ++r) {
      RatVec c(dim);
      for (auto& x : c) x = tctest::rand_rat(rng, -3, 3, 2);
      sys.add(std::move(c), tctest::rand_rat(rng, -4, 4, 2));
    }
    RatVec obj(dim);
    for (auto& x : obj) x = tctest::rand_rat(rng, -2, 2, 2);
    const auto r = lin_sup(obj, sys);
    if (r.kind == LinSup::Kind::Finite) {
      CHECK(satisfies(sys, r.witness));
      CHECK(eval_row(obj, r.witness) == r.value);
    } else if (r.kind == LinSup::Kind::Unbounded) {
      CHECK(eval_row(obj, r.witness) >= 1);
      for (const auto& ct : sys.constraints)
        CHECK(eval_row(ct.coeffs, r.witness) >= 0);
    }
  }
}

TEST_CASE("adding a constraint never helps") {
  tctest::Rng rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = tctest::rand_int(rng, 1, 3);
    LinSystem sys(dim);
    for (int r = tctest::rand_int(rng, 1, 5); r > 0; --r) {
      RatVec c(dim);
      for (auto& x : c) x = tctest::rand_rat(rng, -3, 3, 2);
      sys.add(std::move(c), tctest::rand_rat(rng, -3, 3, 2));
    }
    RatVec obj(dim);
    for (auto& x : obj) x = tctest::rand_rat(rng, -2, 2, 2);
    const auto before = lin_sup(obj, sys);

    RatVec extra(dim);
    for (auto& x : extra) x = tctest::rand_rat(rng, -3, 3, 2);
    sys.add(std::move(extra), tctest::rand_rat(rng, -3, 3, 2));
    const auto after = lin_sup(obj, sys);

    if (before.kind == LinSup::Kind::Infeasible)
      CHECK(after.kind == LinSup::Kind::Infeasible);
    if (before.kind == LinSup::Kind::Finite && after.kind == LinSup::Kind::Finite)
      CHECK(after.value <= before.value);
    if (after.kind == LinSup::Kind::Unbounded)
      CHECK(before.kind == LinSup::Kind::Unbounded);
  }
}
