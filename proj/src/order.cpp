// Copyright (c) tropcong contributors.
// SPDX-License-Identifier: Apache-2.0
#include "tropcong/order.hpp"

#include <algorithm>

#include "tropcong/errors.hpp"

namespace tropcong {

std::size_t spec_columns(const PrimeSpec& spec) {
  const std::size_t surviving = static_cast<std::size_t>(spec.ctx.k) - spec.kill.size();
  return surviving + (spec.ctx.tag == SemifieldTag::B ? 0 : 1);
}

namespace {

void validate_matrix(const OrderMatrix& U, ValidationReport& report) {
  for (const auto& row : U.rows)
    if (row.size() != U.col_count())
      report.issues.push_back("ragged matrix rows");
  if (rat_rank(U.rows) != U.row_count())
    report.issues.push_back("rows are linearly dependent");
  if (U.tag != SemifieldTag::B && U.col_count() > 0) {
    // z-admissibility: the t-column is all zero or leads with a positive
    // entry, otherwise the ordering would put t below 1.
    for (const auto& row : U.rows) {
      if (row[0] == 0) continue;
      if (row[0] < 0) report.issues.push_back("t-column leads with a negative entry");
      break;
    }
  }
}

}  // namespace

ValidationReport validate(const PrimeSpec& spec) {
  ValidationReport report;
  if (spec.U.tag != spec.ctx.tag)
    report.issues.push_back("matrix tag differs from context tag");
  if (spec.ctx.laurent && !spec.kill.empty())
    report.issues.push_back("kill-set must be empty in a Laurent context");
  for (int i : spec.kill)
    if (i < 1 || i > spec.ctx.k)
      report.issues.push_back("kill index out of range: " + std::to_string(i));
  if (spec.U.row_count() > 0 && spec.U.col_count() != spec_columns(spec))
    report.issues.push_back("matrix has " + std::to_string(spec.U.col_count()) +
                            " columns, expected " + std::to_string(spec_columns(spec)));
  validate_matrix(spec.U, report);
  report.ok = report.issues.empty();
  return report;
}

RatVec phi(const OrderMatrix& U, const Scalar& coeff, const ExpVec& exp) {
  const bool with_t = U.tag != SemifieldTag::B;
  RatVec v;
  v.reserve(exp.size() + (with_t ? 1 : 0));
  if (with_t) v.push_back(coeff.exponent());
  for (auto n : exp) v.emplace_back(n);
  RatVec out(U.row_count());
  for (std::size_t r = 0; r < U.row_count(); ++r) out[r] = dot(U.rows[r], v);
  return out;
}

namespace {

void require_valid(const PrimeSpec& spec, const char* op) {
  const auto report = validate(spec);
  if (!report.ok) {
    std::string what = std::string(op) + ": invalid prime spec";
    for (const auto& issue : report.issues) what += "; " + issue;
    throw input_error(what);
  }
}

// Extended exponent vector of a surviving monomial, in matrix coordinates.
RatVec extended_vec(const PrimeSpec& spec, const Scalar& coeff, const ExpVec& exp) {
  RatVec v;
  v.reserve(spec_columns(spec));
  if (spec.ctx.tag != SemifieldTag::B) v.push_back(coeff.exponent());
  for (int i = 0; i < spec.ctx.k; ++i)
    if (!spec.kill.count(i + 1)) v.emplace_back(exp[i]);
  return v;
}

bool term_survives(const PrimeSpec& spec, const ExpVec& exp) {
  for (int i : spec.kill)
    if (exp[i - 1] != 0) return false;
  return true;
}

}  // namespace

std::optional<RatVec> leading_image(const PrimeSpec& spec, const TropPoly& f) {
  if (!(f.context() == spec.ctx))
    throw input_error("leading_image: context mismatch");
  require_valid(spec, "leading_image");
  std::optional<RatVec> best;
  for (const auto& [exp, coeff] : f.terms()) {
    if (!term_survives(spec, exp)) continue;
    const RatVec v = extended_vec(spec, coeff, exp);
    RatVec img(spec.U.row_count());
    for (std::size_t r = 0; r < spec.U.row_count(); ++r)
      img[r] = dot(spec.U.rows[r], v);
    if (!best || *best < img) best = std::move(img);
  }
  return best;
}

bool prime_member(const PrimeSpec& spec, const Pair& p) {
  if (!(p.context() == spec.ctx))
    throw input_error("prime_member: pair context mismatch");
  const auto left = leading_image(spec, p.lhs);
  const auto right = leading_image(spec, p.rhs);
  if (!left || !right) return !left && !right;
  return *left == *right;
}

std::vector<PrimeSpec> prime_chain(const PrimeSpec& spec) {
  require_valid(spec, "prime_chain");
  std::vector<PrimeSpec> chain;
  for (std::size_t i = spec.U.row_count() + 1; i-- > 0;) {
    PrimeSpec prefix = spec;
    prefix.U.rows.assign(spec.U.rows.begin(), spec.U.rows.begin() + i);
    chain.push_back(std::move(prefix));
  }
  return chain;
}

std::vector<Pair> chain_separators(const PrimeSpec& spec) {
  require_valid(spec, "chain_separators");
  const std::size_t cols = spec_columns(spec);
  const bool with_t = spec.ctx.tag != SemifieldTag::B;

  std::vector<int> surviving;
  for (int i = 1; i <= spec.ctx.k; ++i)
    if (!spec.kill.count(i)) surviving.push_back(i);

  std::vector<Pair> seps;
  for (std::size_t i = spec.U.row_count(); i-- > 0;) {
    // A vector killed by the first i rows but not by row i+1 witnesses the
    // strict inclusion P(U(i+1)) < P(U(i)).
    RatMat prefix(spec.U.rows.begin(), spec.U.rows.begin() + i);
    RatMat basis = kernel_basis(prefix, cols);
    RatVec witness;
    for (const auto& v : basis) {
      if (dot(spec.U.rows[i], v) != 0) { witness = v; break; }
    }
    if (witness.empty())
      throw input_error("chain_separators: redundant row " + std::to_string(i + 1));
    witness = primitive_integer(witness);

    ExpVec pos(spec.ctx.k, 0), neg(spec.ctx.k, 0);
    Rat cpos(0), cneg(0);
    std::size_t idx = 0;
    if (with_t) {
      if (witness[0] > 0) cpos = witness[0];
      else cneg = -witness[0];
      idx = 1;
    }
    for (std::size_t j = 0; j < surviving.size(); ++j) {
      const auto n = numerator(witness[idx + j]).convert_to<std::int64_t>();
      if (n > 0) pos[surviving[j] - 1] = n;
      else neg[surviving[j] - 1] = -n;
    }
    TropPoly m1 = TropPoly::monomial(spec.ctx, pos, Scalar::exp(spec.ctx.tag, cpos));
    TropPoly m2 = TropPoly::monomial(spec.ctx, neg, Scalar::exp(spec.ctx.tag, cneg));
    seps.push_back(Pair(std::move(m1), std::move(m2)));
  }
  return seps;
}

std::size_t dimension(const PrimeSpec& spec) {
  require_valid(spec, "dimension");
  return spec.U.row_count();
}

bool is_minimal(const PrimeSpec& spec) {
  require_valid(spec, "is_minimal");
  if (!spec.kill.empty()) return false;
  return rat_rank(spec.U.rows) == spec_columns(spec);
}

OrderMatrix canonicalize(const OrderMatrix& U) {
  ValidationReport report;
  validate_matrix(U, report);
  if (!report.issues.empty())
    throw input_error("canonicalize: invalid matrix: " + report.issues.front());
  OrderMatrix out = U;
  RatMat ortho;
  for (const auto& row : U.rows) {
    RatVec v = row;
    for (const auto& prev : ortho) {
      const Rat factor = dot(row, prev) / dot(prev, prev);
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= factor * prev[j];
    }
    ortho.push_back(std::move(v));
  }
  for (auto& v : ortho) v = primitive_integer(v);
  out.rows = std::move(ortho);
  return out;
}

OrderMatrix collapse_weights(const OrderMatrix& U, const std::vector<Pair>& pairs) {
  ValidationReport report;
  validate_matrix(U, report);
  if (!report.issues.empty())
    throw input_error("collapse_weights: invalid matrix: " + report.issues.front());
  const std::size_t l = U.row_count();
  OrderMatrix out;
  out.tag = U.tag;
  if (l == 0) return out;
  const bool with_t = U.tag != SemifieldTag::B;

  // Images U.(m - m') of all exponent differences occurring in the pair set.
  std::vector<RatVec> images;
  for (const auto& p : pairs) {
    const std::size_t want = static_cast<std::size_t>(p.context().k) + (with_t ? 1 : 0);
    if (want != U.col_count())
      throw input_error("collapse_weights: pair context does not match matrix");
    std::vector<RatVec> monos;
    for (const auto* side : {&p.lhs, &p.rhs}) {
      for (const auto& [exp, coeff] : side->terms()) {
        RatVec v;
        v.reserve(want);
        if (with_t) v.push_back(coeff.exponent());
        for (auto n : exp) v.emplace_back(n);
        monos.push_back(std::move(v));
      }
    }
    for (std::size_t a = 0; a < monos.size(); ++a) {
      for (std::size_t b = 0; b < monos.size(); ++b) {
        if (a == b) continue;
        RatVec img(l);
        for (std::size_t r = 0; r < l; ++r) {
          Rat acc = 0;
          for (std::size_t j = 0; j < U.col_count(); ++j)
            acc += U.rows[r][j] * (monos[a][j] - monos[b][j]);
          img[r] = acc;
        }
        if (!is_zero_vec(img)) images.push_back(std::move(img));
      }
    }
  }
  // The weighted row must stay sign-correct on the t-column as well.
  if (with_t) {
    RatVec col0(l);
    for (std::size_t r = 0; r < l; ++r) col0[r] = U.rows[r][0];
    if (!is_zero_vec(col0)) images.push_back(std::move(col0));
  }

  // Back-to-front weights: the leading nonzero entry must dominate the tail.
  RatVec w(l, Rat(1));
  for (std::size_t i = l; i-- > 0;) {
    Rat need(1);
    for (const auto& img : images) {
      std::size_t s = 0;
      while (s < l && img[s] == 0) ++s;
      if (s != i) continue;
      Rat tail(0);
      for (std::size_t j = i + 1; j < l; ++j) tail += w[j] * abs(img[j]);
      const Rat candidate = tail / abs(img[i]) + 1;
      if (candidate > need) need = candidate;
    }
    w[i] = need;
  }

  RatVec row(U.col_count(), Rat(0));
  for (std::size_t r = 0; r < l; ++r)
    for (std::size_t j = 0; j < U.col_count(); ++j) row[j] += w[r] * U.rows[r][j];
  out.rows.push_back(std::move(row));
  return out;
}

}  // namespace tropcong
