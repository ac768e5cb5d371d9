// Copyright (c) tropcong contributors.
// SPDX-License-Identifier: Apache-2.0
#include "tropcong/pairalg.hpp"

#include <algorithm>
#include <utility>
#include <optional>
#include <set>

#include "tropcong/errors.hpp"

namespace tropcong {

Pair::Pair(TropPoly l, TropPoly r) : lhs(std::move(l)), rhs(std::move(r)) {
  if (!(lhs.context() == rhs.context()))
    throw input_error("Pair: sides have different contexts");
}

Pair Pair::identity(PolyContext ctx) {
  return Pair(TropPoly::one(ctx), TropPoly::zero(ctx));
}

Pair Pair::diagonal(TropPoly f) {
  TropPoly copy = f;
  return Pair(std::move(copy), std::move(f));
}

namespace {
void check_context(const Pair& a, const Pair& b, const char* op) {
  if (!(a.context() == b.context()))
    throw input_error(std::string(op) + ": context mismatch");
}
}  // namespace

Pair twisted_mul(const Pair& a, const Pair& b) {
  check_context(a, b, "twisted_mul");
  TropPoly same = poly_add(poly_mul(a.lhs, b.lhs), poly_mul(a.rhs, b.rhs));
  TropPoly cross = poly_add(poly_mul(a.lhs, b.rhs), poly_mul(a.rhs, b.lhs));
  return Pair(std::move(same), std::move(cross));
}

Pair twisted_pow(const Pair& a, std::size_t n) {
  Pair acc = Pair::identity(a.context());
  for (std::size_t i = 0; i < n; ++i) acc = twisted_mul(acc, a);
  return acc;
}

Pair star(const Pair& a) {
  return Pair(poly_add(a.lhs, a.rhs), TropPoly::zero(a.context()));
}

Pair gp_element(const Pair& a, const GpWitness& w) {
  if (!(w.c.context() == a.context()))
    throw input_error("gp_element: witness context mismatch");
  // ((a*)^k, 0) has first coordinate (a1+a2)^k, so adding (c, 0) keeps the
  // second coordinate zero.
  const Pair sk = twisted_pow(star(a), w.kpow);
  const Pair head(poly_add(sk.lhs, w.c), sk.rhs);
  return twisted_mul(head, twisted_pow(a, w.lpow));
}

CongPresentation::CongPresentation(PolyContext c, std::vector<Pair> gens)
    : ctx(c), generators(std::move(gens)) {
  for (const auto& g : generators)
    if (!(g.context() == ctx))
      throw input_error("CongPresentation: generator context mismatch");
}

namespace {

Pair canon(const Pair& p) {
  if (p.rhs < p.lhs) return Pair(p.rhs, p.lhs);
  return p;
}

// All exponent vectors of total degree (sum of |n_i|) at most `bound`.
void enumerate_exponents(int k, bool laurent, std::int64_t bound, ExpVec& cur,
                         int pos, std::vector<ExpVec>& out) {
  if (pos == k) {
    out.push_back(cur);
    return;
  }
  std::int64_t used = 0;
  for (int i = 0; i < pos; ++i) used += std::llabs(cur[i]);
  const std::int64_t room = bound - used;
  for (std::int64_t v = laurent ? -room : 0; v <= room; ++v) {
    cur[pos] = v;
    enumerate_exponents(k, laurent, bound, cur, pos + 1, out);
  }
}

// Exact membership test for E = <(m, 0)> with m a monomial: (y, z) is in
// the congruence iff every exponent where y and z disagree is reachable as
// a multiple of m with a large enough coefficient.
std::optional<bool> monomial_kernel_member(const ExpVec& m_exp, const Pair& q) {
  const auto& ctx = q.context();
  std::set<ExpVec> support;
  for (const auto& [e, c] : q.lhs.terms()) support.insert(e);
  for (const auto& [e, c] : q.rhs.terms()) support.insert(e);
  for (const auto& e : support) {
    const auto itl = q.lhs.terms().find(e);
    const auto itr = q.rhs.terms().find(e);
    const Scalar cl = itl == q.lhs.terms().end() ? Scalar::zero(ctx.tag) : itl->second;
    const Scalar cr = itr == q.rhs.terms().end() ? Scalar::zero(ctx.tag) : itr->second;
    if (cl == cr) continue;
    for (int i = 0; i < ctx.k; ++i)
      if (!ctx.laurent && e[i] - m_exp[i] < 0) return false;
  }
  return true;
}

}  // namespace

ClosureAnswer bounded_closure_member(const CongPresentation& E, const Pair& q,
                                     std::int64_t degree_bound,
                                     const ClosureLimits& limits) {
  if (!(q.context() == E.ctx))
    throw input_error("bounded_closure_member: context mismatch");
  std::int64_t have = std::max(q.lhs.total_degree(), q.rhs.total_degree());
  for (const auto& g : E.generators)
    have = std::max({have, g.lhs.total_degree(), g.rhs.total_degree()});
  if (degree_bound < have)
    throw input_error("bounded_closure_member: degree bound below input degrees");

  if (q.is_diagonal()) return ClosureAnswer::Yes;
  const Pair target = canon(q);

  // Exact fast path for a single monomial-by-zero generator.
  if (E.generators.size() == 1) {
    const Pair g = canon(E.generators.front());
    // canon puts the smaller side first and the zero polynomial is minimal.
    if (g.lhs.is_zero() && g.rhs.support_size() == 1) {
      const ExpVec& m_exp = g.rhs.terms().begin()->first;
      if (auto exact = monomial_kernel_member(m_exp, q))
        return *exact ? ClosureAnswer::Yes : ClosureAnswer::Unknown;
    }
  }

  std::vector<ExpVec> monomials;
  {
    ExpVec cur(E.ctx.k, 0);
    enumerate_exponents(E.ctx.k, E.ctx.laurent, degree_bound, cur, 0, monomials);
  }

  std::set<Pair> seen;
  // Best-first worklist: small pairs first, so short derivations surface
  // before the state budget runs out.
  auto weight = [](const Pair& p) {
    return p.lhs.support_size() + p.rhs.support_size() +
           static_cast<std::size_t>(
               std::max(p.lhs.total_degree(), p.rhs.total_degree()));
  };
  std::set<std::pair<std::size_t, Pair>> queue;
  std::size_t ops = 0;

  // Once the state budget is full the frontier stops growing but queued
  // states keep popping; the target test still sees every derived pair.
  auto push = [&](const Pair& p) -> bool {
    ++ops;
    if (std::max(p.lhs.total_degree(), p.rhs.total_degree()) > degree_bound)
      return false;
    const Pair c = canon(p);
    if (c.is_diagonal()) return false;
    if (c == target) return true;
    if (seen.size() < limits.max_states && seen.insert(c).second)
      queue.emplace(weight(c), c);
    return false;
  };

  for (const auto& g : E.generators)
    if (push(g)) return ClosureAnswer::Yes;

  const Scalar unit = Scalar::one(E.ctx.tag);

  while (!queue.empty() && ops < limits.max_ops) {
    const Pair a = queue.begin()->second;
    queue.erase(queue.begin());

    // Transitivity, addition, product with earlier states. Iterate a
    // snapshot: pushes during the loop must not extend it.
    const std::vector<Pair> snapshot(seen.begin(), seen.end());
    for (const auto& b : snapshot) {
      if (ops >= limits.max_ops) break;
      if (a.rhs == b.lhs && push(Pair(a.lhs, b.rhs))) return ClosureAnswer::Yes;
      if (a.rhs == b.rhs && push(Pair(a.lhs, b.lhs))) return ClosureAnswer::Yes;
      if (a.lhs == b.lhs && push(Pair(a.rhs, b.rhs))) return ClosureAnswer::Yes;
      if (a.lhs == b.rhs && push(Pair(a.rhs, b.lhs))) return ClosureAnswer::Yes;
      // Sums in both relative orientations; the swapped-swapped variants
      // canonicalize to the same pairs.
      if (push(Pair(poly_add(a.lhs, b.lhs), poly_add(a.rhs, b.rhs))))
        return ClosureAnswer::Yes;
      if (push(Pair(poly_add(a.lhs, b.rhs), poly_add(a.rhs, b.lhs))))
        return ClosureAnswer::Yes;
    }
    for (const auto& g : E.generators) {
      if (ops >= limits.max_ops) break;
      if (push(twisted_mul(a, g))) return ClosureAnswer::Yes;
    }
    // Shifts by monomial diagonals and scalings by monomial pairs (m, 0).
    const std::int64_t adeg = std::max(a.lhs.total_degree(), a.rhs.total_degree());
    for (const auto& m : monomials) {
      if (ops >= limits.max_ops) break;
      const TropPoly mono = TropPoly::monomial(E.ctx, m, unit);
      if (push(Pair(poly_add(a.lhs, mono), poly_add(a.rhs, mono))))
        return ClosureAnswer::Yes;
      std::int64_t mdeg = 0;
      for (auto n : m) mdeg += std::llabs(n);
      if (mdeg + adeg <= degree_bound) {
        if (push(Pair(poly_mul(a.lhs, mono), poly_mul(a.rhs, mono))))
          return ClosureAnswer::Yes;
      }
    }
  }
  return ClosureAnswer::Unknown;
}

}  // namespace tropcong
