// Copyright (c) tropcong contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"
#include "tropcong/errors.hpp"
#include "tropcong/polytope.hpp"

using namespace tropcong;

namespace {

RatVec pt(std::initializer_list<int> xs) {
  RatVec v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

const PolyContext kB2{SemifieldTag::B, 2, false};

}  // namespace

TEST_CASE("midpoints are not vertices") {
  const auto P = hull_vertices(2, {pt({0, 0}), pt({2, 0}), pt({0, 2}), pt({1, 1})});
  CHECK(P.vertices == std::vector<RatVec>{pt({0, 0}), pt({0, 2}), pt({2, 0})});
  CHECK(hull_vertices(2, {pt({3, 4})}).vertices == std::vector<RatVec>{pt({3, 4})});
  CHECK_THROWS_AS(hull_vertices(2, {pt({0, 0}), pt({1, 1, 1})}), input_error);
}

TEST_CASE("hull is idempotent on random point sets") {
  tctest::Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t dim = tctest::rand_int(rng, 1, 3);
    std::vector<RatVec> pts;
    for (int i = tctest::rand_int(rng, 1, 8); i > 0; --i) {
      RatVec p(dim);
      for (auto& x : p) x = tctest::rand_rat(rng, -4, 4, 2);
      pts.push_back(std::move(p));
    }
    const auto P = hull_vertices(dim, pts);
    CHECK(hull_vertices(dim, P.vertices) == P);
    // Every input point lies in the hull of the computed vertices.
    for (const auto& p : pts) CHECK(point_in_hull(p, P.vertices));
  }
}

TEST_CASE("newton polytopes over B and TQ") {
  TropPoly f(kB2);
  f.add_term({2, 0}, Scalar::one(kB2.tag));
  f.add_term({1, 1}, Scalar::one(kB2.tag));
  f.add_term({0, 2}, Scalar::one(kB2.tag));
  CHECK(poly_newt(f).vertices == std::vector<RatVec>{pt({0, 2}), pt({2, 0})});
  CHECK(poly_newt(TropPoly::zero(kB2)).empty());

  const PolyContext tq{SemifieldTag::TQ, 1, false};
  TropPoly g(tq);
  g.add_term({0}, Scalar::one(tq.tag));
  g.add_term({1}, Scalar::exp(tq.tag, Rat(1)));
  // Points (c, n): (0,0) and (1,1).
  CHECK(poly_newt(g).vertices == std::vector<RatVec>{pt({0, 0}), pt({1, 1})});
}

TEST_CASE("polytope semiring identities") {
  const auto seg = hull_vertices(2, {pt({0, 0}), pt({1, 0})});
  const auto dot = hull_vertices(2, {pt({0, 1})});
  Polytope empty;
  empty.dim = 2;

  CHECK(polytope_add(seg, seg) == seg);
  CHECK(polytope_add(seg, empty) == seg);
  const auto tri = polytope_add(seg, dot);
  CHECK(tri.vertices == std::vector<RatVec>{pt({0, 0}), pt({0, 1}), pt({1, 0})});

  const auto origin = hull_vertices(2, {pt({0, 0})});
  CHECK(polytope_mul(seg, origin) == seg);
  CHECK(polytope_mul(seg, empty).empty());
  const auto vseg = hull_vertices(2, {pt({0, 0}), pt({0, 1})});
  const auto square = polytope_mul(seg, vseg);
  CHECK(square.vertices ==
        std::vector<RatVec>{pt({0, 0}), pt({0, 1}), pt({1, 0}), pt({1, 1})});
}

TEST_CASE("idempotent semiring axioms on random polytopes") {
  tctest::Rng rng(31337);
  auto rand_polytope = [&](std::size_t dim) {
    std::vector<RatVec> pts;
    for (int i = tctest::rand_int(rng, 1, 5); i > 0; --i) {
      RatVec p(dim);
      for (auto& x : p) x = Rat(tctest::rand_int(rng, -3, 3));
      pts.push_back(std::move(p));
    }
    return hull_vertices(dim, pts);
  };
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t dim = 2;
    const auto P = rand_polytope(dim), Q = rand_polytope(dim), R = rand_polytope(dim);
    CHECK(polytope_add(P, P) == P);
    CHECK(polytope_add(P, Q) == polytope_add(Q, P));
    CHECK(polytope_mul(P, Q) == polytope_mul(Q, P));
    CHECK(polytope_add(polytope_add(P, Q), R) == polytope_add(P, polytope_add(Q, R)));
    CHECK(polytope_mul(polytope_mul(P, Q), R) == polytope_mul(P, polytope_mul(Q, R)));
    CHECK(polytope_mul(P, polytope_add(Q, R)) ==
          polytope_add(polytope_mul(P, Q), polytope_mul(P, R)));
  }
}

TEST_CASE("newt is a semiring homomorphism") {
  // Over B the vertex sets match exactly. Over Zmax/TQ coefficients at a
  // shared exponent merge by max, so the match is at the hat level.
  tctest::Rng rng(555);
  const PolyContext b2{SemifieldTag::B, 2, false};
  for (int trial = 0; trial < 420; ++trial) {
    const auto f = tctest::rand_poly(rng, b2, 4, 3, true);
    const auto g = tctest::rand_poly(rng, b2, 4, 3, true);
    CHECK(polytope_eq(poly_newt(poly_add(f, g)),
                      polytope_add(poly_newt(f), poly_newt(g))));
    CHECK(polytope_eq(poly_newt(poly_mul(f, g)),
                      polytope_mul(poly_newt(f), poly_newt(g))));
  }
  const PolyContext contexts[] = {{SemifieldTag::TQ, 1, false},
                                  {SemifieldTag::Zmax, 2, true}};
  for (const auto& ctx : contexts) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto f = tctest::rand_poly(rng, ctx, 4, 3, true);
      const auto g = tctest::rand_poly(rng, ctx, 4, 3, true);
      CHECK(hat_eq(poly_newt(poly_add(f, g)),
                   polytope_add(poly_newt(f), poly_newt(g))));
      CHECK(hat_eq(poly_newt(poly_mul(f, g)),
                   polytope_mul(poly_newt(f), poly_newt(g))));
    }
  }
}

TEST_CASE("hat vertices pick the upper faces") {
  const auto P = hull_vertices(2, {pt({0, 0}), pt({1, 1}), pt({0, 1})});
  CHECK(hat_vertices(P) == std::vector<RatVec>{pt({0, 0}), pt({1, 1})});
  const auto single = hull_vertices(2, {pt({2, 3})});
  CHECK(hat_vertices(single) == std::vector<RatVec>{pt({2, 3})});
  // Same projection: only the top survives.
  const auto vertical = hull_vertices(2, {pt({0, 0}), pt({1, 0})});
  CHECK(hat_vertices(vertical) == std::vector<RatVec>{pt({1, 0})});
  Polytope empty;
  empty.dim = 2;
  CHECK(hat_vertices(empty).empty());
}

TEST_CASE("hat equality matches function equality") {
  const PolyContext tq{SemifieldTag::TQ, 1, false};
  // f = 1 + t^2 x^2; g adds the term x whose support point (0, 1) sits
  // strictly below the hat segment from (0,0) to (2,2).
  TropPoly f(tq);
  f.add_term({0}, Scalar::one(tq.tag));
  f.add_term({2}, Scalar::exp(tq.tag, Rat(2)));
  TropPoly g = f;
  g.add_term({1}, Scalar::one(tq.tag));
  CHECK(f != g);
  CHECK(hat_eq(poly_newt(f), poly_newt(g)));

  TropPoly different = f;
  different.add_term({2}, Scalar::exp(tq.tag, Rat(3)));
  CHECK_FALSE(hat_eq(poly_newt(f), poly_newt(different)));

  // The literal merge case: 1 + tx + x canonicalizes to 1 + tx, so the hats
  // trivially coincide.
  TropPoly base(tq), merged(tq);
  base.add_term({0}, Scalar::one(tq.tag));
  base.add_term({1}, Scalar::exp(tq.tag, Rat(1)));
  merged = base;
  merged.add_term({1}, Scalar::one(tq.tag));
  CHECK(hat_eq(poly_newt(base), poly_newt(merged)));

  // Sampled cross-check: equal hats imply equal functions at 100 random
  // finite points, on pairs constructed to have equal hats.
  tctest::Rng rng(808);
  const PolyContext tq2{SemifieldTag::TQ, 2, false};
  int points_checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const auto pair = tctest::rand_radical_pair(rng, tq2, 4, 3);
    REQUIRE(hat_eq(poly_newt(pair.lhs), poly_newt(pair.rhs)));
    for (int s = 0; s < 5; ++s) {
      Point ptx;
      for (int i = 0; i < 2; ++i)
        ptx.coords.push_back(tctest::rand_rat(rng, -5, 5, 3));
      CHECK(poly_eval(pair.lhs, ptx) == poly_eval(pair.rhs, ptx));
      ++points_checked;
    }
  }
  CHECK(points_checked >= 100);
}
