// Copyright (c) tropcong contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Shared helpers for the test suites: a fixed-seed RNG and generators for
// random scalars, polynomials, pairs and ordering matrices.
#ifndef TROPCONG_TESTS_TESTUTIL_HPP
#define TROPCONG_TESTS_TESTUTIL_HPP

#include <random>
#include <vector>

#include "tropcong/order.hpp"
#include "tropcong/pairalg.hpp"
#include "tropcong/polytope.hpp"
#include "tropcong/tropoly.hpp"

namespace tctest {

using namespace tropcong;

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rat rand_rat(Rng& rng, int lo = -6, int hi = 6, int max_den = 4) {
  return Rat(rand_int(rng, lo, hi), rand_int(rng, 1, max_den));
}

inline Scalar rand_coeff(Rng& rng, SemifieldTag tag) {
  switch (tag) {
    case SemifieldTag::B: return Scalar::one(tag);
    case SemifieldTag::Zmax: return Scalar::exp(tag, Rat(rand_int(rng, -4, 4)));
    case SemifieldTag::TQ: return Scalar::exp(tag, rand_rat(rng, -4, 4, 3));
  }
  return Scalar::one(tag);
}

inline TropPoly rand_poly(Rng& rng, PolyContext ctx, int max_support,
                          int max_degree, bool allow_zero = false) {
  TropPoly f(ctx);
  const int support = rand_int(rng, allow_zero ? 0 : 1, max_support);
  for (int s = 0; s < support; ++s) {
    ExpVec e(ctx.k);
    for (int i = 0; i < ctx.k; ++i)
      e[i] = rand_int(rng, ctx.laurent ? -max_degree : 0, max_degree);
    f.add_term(e, rand_coeff(rng, ctx.tag));
  }
  return f;
}

inline Pair rand_pair(Rng& rng, PolyContext ctx, int max_support, int max_degree) {
  return Pair(rand_poly(rng, ctx, max_support, max_degree),
              rand_poly(rng, ctx, max_support, max_degree));
}

// A random pair inside Rad(diag): both sides share a base polynomial and
// gain only terms lying inside its Newton polytope (below the hat over
// Zmax/TQ), so the polytopes/hats of the two sides coincide.
inline Pair rand_radical_pair(Rng& rng, PolyContext ctx, int max_support,
                              int max_degree) {
  TropPoly base(ctx);
  while (base.support_size() < 2)
    base = rand_poly(rng, ctx, max_support, max_degree);
  auto side = [&]() {
    TropPoly f = base;
    const auto& terms = base.terms();
    for (int extra = rand_int(rng, 0, 2); extra > 0; --extra) {
      auto it1 = terms.begin();
      std::advance(it1, rand_int(rng, 0, static_cast<int>(terms.size()) - 1));
      auto it2 = terms.begin();
      std::advance(it2, rand_int(rng, 0, static_cast<int>(terms.size()) - 1));
      ExpVec mid(ctx.k);
      bool integral = true;
      for (int i = 0; i < ctx.k; ++i) {
        const auto sum = it1->first[i] + it2->first[i];
        if (sum % 2 != 0) { integral = false; break; }
        mid[i] = sum / 2;
      }
      if (!integral) continue;
      if (ctx.tag == SemifieldTag::B) {
        f.add_term(mid, Scalar::one(ctx.tag));
      } else {
        // At or below the midpoint of the segment, hence below the hat.
        Rat c = (it1->second.exponent() + it2->second.exponent()) / 2;
        if (ctx.tag == SemifieldTag::Zmax && denominator(c) != 1) c -= Rat(1, 2);
        if (rand_int(rng, 0, 1)) c -= 1;
        f.add_term(mid, Scalar::exp(ctx.tag, c));
      }
    }
    return f;
  };
  return Pair(side(), side());
}

// Random admissible matrix for the tag: independent rows, and over Zmax/TQ
// a sign-correct t-column.
inline OrderMatrix rand_order_matrix(Rng& rng, SemifieldTag tag, std::size_t rows,
                                     std::size_t cols) {
  OrderMatrix U;
  U.tag = tag;
  while (true) {
    U.rows.assign(rows, RatVec(cols, Rat(0)));
    for (auto& row : U.rows)
      for (auto& x : row) x = rand_int(rng, -3, 3);
    if (tag != SemifieldTag::B) {
      bool seen_nonzero = false;
      for (auto& row : U.rows) {
        if (seen_nonzero || row[0] == 0) continue;
        if (row[0] < 0) row[0] = -row[0];
        seen_nonzero = true;
      }
    }
    if (rat_rank(U.rows) == rows) return U;
  }
}

}  // namespace tctest

#endif
