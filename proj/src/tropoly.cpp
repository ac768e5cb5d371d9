// Copyright (c) tropcong contributors.
// SPDX-License-Identifier: Apache-2.0
#include "tropcong/tropoly.hpp"

#include <cstdlib>

#include "tropcong/errors.hpp"

namespace tropcong {

std::string context_to_string(const PolyContext& ctx) {
  return tag_name(ctx.tag) + (ctx.laurent ? "(" : "[") + "x1.." +
         std::to_string(ctx.k) + (ctx.laurent ? ")" : "]");
}

TropPoly TropPoly::one(PolyContext ctx) {
  TropPoly p(ctx);
  p.add_term(ExpVec(ctx.k, 0), Scalar::one(ctx.tag));
  return p;
}

TropPoly TropPoly::monomial(PolyContext ctx, ExpVec exp, Scalar coeff) {
  TropPoly p(ctx);
  p.add_term(exp, coeff);
  return p;
}

TropPoly TropPoly::variable(PolyContext ctx, int i) {
  if (i < 1 || i > ctx.k) throw input_error("variable index out of range");
  ExpVec e(ctx.k, 0);
  e[i - 1] = 1;
  return monomial(ctx, e, Scalar::one(ctx.tag));
}

std::int64_t TropPoly::total_degree() const {
  std::int64_t deg = 0;
  for (const auto& [exp, coeff] : terms_) {
    std::int64_t d = 0;
    for (auto n : exp) d += std::llabs(n);
    deg = std::max(deg, d);
  }
  return deg;
}

void TropPoly::add_term(const ExpVec& exp, const Scalar& coeff) {
  if (static_cast<int>(exp.size()) != ctx_.k)
    throw input_error("term arity does not match context");
  if (coeff.tag() != ctx_.tag)
    throw input_error("coefficient tag does not match context");
  if (!ctx_.laurent)
    for (auto n : exp)
      if (n < 0) throw input_error("negative exponent in a polynomial context");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exp, coeff);
  if (!inserted) it->second = scalar_add(it->second, coeff);
}

std::string TropPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [exp, coeff] : terms_) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < exp.size(); ++i) {
      if (exp[i] == 0) continue;
      mono += "x" + std::to_string(i + 1);
      if (exp[i] != 1) mono += "^" + std::to_string(exp[i]);
    }
    const std::string c = scalar_to_string(coeff);
    if (mono.empty())
      out += c;
    else if (c == "1")
      out += mono;
    else
      out += c + "*" + mono;
  }
  return out;
}

namespace {
void check_context(const TropPoly& f, const TropPoly& g, const char* op) {
  if (!(f.context() == g.context()))
    throw input_error(std::string(op) + ": context mismatch");
}
}  // namespace

TropPoly poly_add(const TropPoly& f, const TropPoly& g) {
  check_context(f, g, "poly_add");
  TropPoly out = f;
  for (const auto& [exp, coeff] : g.terms()) out.add_term(exp, coeff);
  return out;
}

TropPoly poly_mul(const TropPoly& f, const TropPoly& g) {
  check_context(f, g, "poly_mul");
  TropPoly out(f.context());
  const int k = f.context().k;
  ExpVec sum(k);
  for (const auto& [ef, cf] : f.terms()) {
    for (const auto& [eg, cg] : g.terms()) {
      for (int i = 0; i < k; ++i) sum[i] = ef[i] + eg[i];
      out.add_term(sum, scalar_mul(cf, cg));
    }
  }
  return out;
}

Scalar poly_eval(const TropPoly& f, const Point& a) {
  const auto& ctx = f.context();
  if (static_cast<int>(a.coords.size()) != ctx.k)
    throw input_error("poly_eval: point arity mismatch");
  for (const auto& c : a.coords) {
    if (!c) {
      if (ctx.laurent)
        throw input_error("poly_eval: -inf coordinate in a Laurent context");
      continue;
    }
    if (ctx.tag == SemifieldTag::B && *c != 0)
      throw input_error("poly_eval: B points admit only 0 and 1 coordinates");
    if (ctx.tag == SemifieldTag::Zmax && denominator(*c) != 1)
      throw input_error("poly_eval: Zmax points need integral coordinates");
  }

  Scalar acc = Scalar::zero(ctx.tag);
  for (const auto& [exp, coeff] : f.terms()) {
    bool vanishes = false;
    Rat value = coeff.exponent();
    for (int i = 0; i < ctx.k; ++i) {
      if (exp[i] == 0) continue;
      if (!a.coords[i]) { vanishes = true; break; }
      value += Rat(exp[i]) * *a.coords[i];
    }
    if (vanishes) continue;
    acc = scalar_add(acc, Scalar::exp(ctx.tag, value));
  }
  return acc;
}

}  // namespace tropcong
