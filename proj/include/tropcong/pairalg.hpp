// Copyright (c) tropcong contributors.
// SPDX-License-Identifier: Apache-2.0
#ifndef TROPCONG_PAIRALG_HPP
#define TROPCONG_PAIRALG_HPP

#include <cstddef>
#include <vector>

#include "tropcong/tropoly.hpp"

namespace tropcong {

// An ordered pair of polynomials over one context. Pairs carry the twisted
// product (ac+bd, ad+bc), the subtraction-free stand-in for (a-b)(c-d).
struct Pair {
  TropPoly lhs;
  TropPoly rhs;

  Pair(TropPoly l, TropPoly r);
  static Pair identity(PolyContext ctx);  // (1, 0)
  static Pair diagonal(TropPoly f);       // (f, f)

  const PolyContext& context() const { return lhs.context(); }
  bool is_diagonal() const { return lhs == rhs; }

  friend bool operator==(const Pair& a, const Pair& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs;
  }
  friend bool operator!=(const Pair& a, const Pair& b) { return !(a == b); }
  friend bool operator<(const Pair& a, const Pair& b) {
    if (a.lhs != b.lhs) return a.lhs < b.lhs;
    return a.rhs < b.rhs;
  }
};

Pair twisted_mul(const Pair& a, const Pair& b);
Pair twisted_pow(const Pair& a, std::size_t n);  // a^0 = (1, 0)

// star(a) = (a1 + a2, 0).
Pair star(const Pair& a);

// Witness data for one generalized power ((a*)^kpow + (c, 0)) a^lpow.
struct GpWitness {
  std::size_t kpow = 0;
  std::size_t lpow = 0;
  TropPoly c;
};

Pair gp_element(const Pair& a, const GpWitness& w);

// A congruence given by finitely many generating pairs.
struct CongPresentation {
  PolyContext ctx;
  std::vector<Pair> generators;

  CongPresentation(PolyContext c, std::vector<Pair> gens);
};

enum class ClosureAnswer { Yes, Unknown };

struct ClosureLimits {
  std::size_t max_states = 4000;
  std::size_t max_ops = 200000;  // successor constructions before giving up
};

// Sound, incomplete congruence-closure search: Yes iff q was reached from
// the generators and the diagonal by symmetry, transitivity, addition and
// multiplication, restricted to pairs whose sides have total degree at most
// degree_bound. Unknown never refutes membership.
ClosureAnswer bounded_closure_member(const CongPresentation& E, const Pair& q,
                                     std::int64_t degree_bound,
                                     const ClosureLimits& limits = {});

}  // namespace tropcong

#endif
