// Copyright (c) tropcong contributors.
// SPDX-License-Identifier: Apache-2.0
#include "tropcong/linear.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <utility>

#include "tropcong/errors.hpp"

namespace tropcong {

void LinSystem::add(RatVec coeffs, Rat bound, Rel rel) {
  if (coeffs.size() != dim) throw input_error("LinSystem::add: dimension mismatch");
  constraints.push_back({std::move(coeffs), std::move(bound), rel});
}

namespace {

// Internal inequality c . x >= b over the full variable width.
struct Ineq {
  RatVec c;
  Rat b;
};

// Scales to primitive integer coefficients. Returns false when the row is
// trivial: contradictory rows set *contradiction.
bool normalize(Ineq& q, bool* contradiction) {
  if (is_zero_vec(q.c)) {
    if (q.b > 0) *contradiction = true;
    return false;
  }
  Int den_lcm = 1;
  for (const auto& x : q.c) den_lcm = lcm(den_lcm, denominator(x));
  den_lcm = lcm(den_lcm, denominator(q.b));
  Int g = 0;
  for (const auto& x : q.c) g = gcd(g, Int(numerator(x) * (den_lcm / denominator(x))));
  if (g == 0) g = 1;
  const Rat scale(den_lcm, g);
  for (auto& x : q.c) x *= scale;
  q.b *= scale;
  return true;
}

// Pairwise dominance: identical normal vectors keep only the strongest bound.
void prune(std::vector<Ineq>& rows) {
  std::map<RatVec, Rat> best;
  for (auto& q : rows) {
    auto it = best.find(q.c);
    if (it == best.end())
      best.emplace(std::move(q.c), std::move(q.b));
    else if (q.b > it->second)
      it->second = std::move(q.b);
  }
  rows.clear();
  for (auto& [c, b] : best) rows.push_back({c, b});
}

struct Stage {
  std::size_t var;
  std::vector<Ineq> rows;  // system before this variable was eliminated
};

struct Substitution {
  std::size_t var;
  RatVec expr;  // var = offset + expr . x, expr zero on eliminated vars
  Rat offset;
};

// Fourier-Motzkin state. `keep` marks variables that must survive projection
// (used by lin_sup for the objective tracker).
struct Eliminator {
  std::size_t dim;
  std::vector<Ineq> rows;
  std::vector<bool> gone;
  std::vector<Stage> stages;
  std::vector<Substitution> subs;
  bool infeasible = false;

  explicit Eliminator(std::size_t d) : dim(d), gone(d, false) {}

  void load(const LinSystem& sys) {
    std::vector<Ineq> eqs;
    for (const auto& ct : sys.constraints) {
      if (ct.coeffs.size() != dim)
        throw input_error("linear: constraint dimension mismatch");
      if (ct.rel == Rel::Geq)
        rows.push_back({ct.coeffs, ct.bound});
      else
        eqs.push_back({ct.coeffs, ct.bound});
    }
    substitute_equalities(eqs);
    renormalize();
  }

  // Gaussian substitution of equality rows; far cheaper than doubling them.
  void substitute_equalities(std::vector<Ineq> eqs) {
    while (!eqs.empty() && !infeasible) {
      Ineq eq = std::move(eqs.front());
      eqs.erase(eqs.begin());
      std::size_t var = dim;
      for (std::size_t j = 0; j < dim; ++j)
        if (!gone[j] && eq.c[j] != 0) { var = j; break; }
      if (var == dim) {
        if (eq.b != 0) infeasible = true;
        continue;
      }
      const Rat pivot = eq.c[var];
      Substitution s;
      s.var = var;
      s.offset = eq.b / pivot;
      s.expr.assign(dim, Rat(0));
      for (std::size_t j = 0; j < dim; ++j)
        if (j != var) s.expr[j] = -eq.c[j] / pivot;
      auto apply = [&](Ineq& row) {
        if (row.c[var] == 0) return;
        const Rat f = row.c[var];
        row.c[var] = 0;
        for (std::size_t j = 0; j < dim; ++j) row.c[j] += f * s.expr[j];
        row.b -= f * s.offset;
      };
      for (auto& row : rows) apply(row);
      for (auto& row : eqs) apply(row);
      gone[var] = true;
      subs.push_back(std::move(s));
    }
  }

  void renormalize() {
    std::vector<Ineq> kept;
    kept.reserve(rows.size());
    for (auto& q : rows)
      if (normalize(q, &infeasible)) kept.push_back(std::move(q));
    prune(kept);
    rows = std::move(kept);
  }

  // Chooses the next variable by the usual #pos * #neg estimate.
  std::size_t pick(const std::vector<bool>& keep) const {
    std::size_t best = dim;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t j = 0; j < dim; ++j) {
      if (gone[j] || keep[j]) continue;
      std::size_t pos = 0, neg = 0;
      for (const auto& q : rows) {
        if (q.c[j] > 0) ++pos;
        else if (q.c[j] < 0) ++neg;
      }
      if (pos + neg == 0) continue;
      const std::size_t cost = pos * neg;
      if (cost < best_cost) { best_cost = cost; best = j; }
    }
    return best;
  }

  void run(const std::vector<bool>& keep) {
    while (!infeasible) {
      const std::size_t var = pick(keep);
      if (var == dim) return;
      stages.push_back({var, rows});
      std::vector<Ineq> pos, neg, zero;
      for (auto& q : rows) {
        if (q.c[var] > 0) pos.push_back(std::move(q));
        else if (q.c[var] < 0) neg.push_back(std::move(q));
        else zero.push_back(std::move(q));
      }
      std::vector<Ineq> next = std::move(zero);
      for (const auto& p : pos) {
        for (const auto& n : neg) {
          // p.c[var] > 0 > n.c[var]; the combination cancels var.
          const Rat a = p.c[var], b = -n.c[var];
          Ineq q;
          q.c.resize(dim);
          for (std::size_t j = 0; j < dim; ++j) q.c[j] = b * p.c[j] + a * n.c[j];
          q.b = b * p.b + a * n.b;
          if (normalize(q, &infeasible)) next.push_back(std::move(q));
          if (infeasible) return;
        }
      }
      prune(next);
      rows = std::move(next);
      gone[var] = true;
    }
  }

  // Back-substitutes through FM stages and equality substitutions. `fixed`
  // carries values for kept variables.
  RatVec recover(const RatVec& fixed, const std::vector<bool>& keep) const {
    RatVec x(dim, Rat(0));
    for (std::size_t j = 0; j < dim; ++j)
      if (keep[j]) x[j] = fixed[j];
    for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
      const std::size_t var = it->var;
      std::optional<Rat> lo, hi;
      for (const auto& q : it->rows) {
        if (q.c[var] == 0) continue;
        Rat rest = q.b;
        for (std::size_t j = 0; j < dim; ++j)
          if (j != var) rest -= q.c[j] * x[j];
        const Rat v = rest / q.c[var];
        if (q.c[var] > 0) {
          if (!lo || v > *lo) lo = v;
        } else {
          if (!hi || v < *hi) hi = v;
        }
      }
      if (lo && hi)
        x[var] = (*lo + *hi) / 2;
      else if (lo)
        x[var] = *lo;
      else if (hi)
        x[var] = *hi;
    }
    for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
      Rat v = it->offset;
      for (std::size_t j = 0; j < dim; ++j) v += it->expr[j] * x[j];
      x[it->var] = v;
    }
    return x;
  }
};

}  // namespace

bool lin_feasible(const LinSystem& sys) {
  Eliminator fm(sys.dim);
  fm.load(sys);
  if (fm.infeasible) return false;
  fm.run(std::vector<bool>(sys.dim, false));
  return !fm.infeasible;
}

std::optional<RatVec> lin_feasible_point(const LinSystem& sys) {
  Eliminator fm(sys.dim);
  fm.load(sys);
  if (fm.infeasible) return std::nullopt;
  const std::vector<bool> keep(sys.dim, false);
  fm.run(keep);
  if (fm.infeasible) return std::nullopt;
  return fm.recover(RatVec(sys.dim, Rat(0)), keep);
}

LinSup lin_sup(const RatVec& objective, const LinSystem& sys) {
  if (objective.size() != sys.dim)
    throw input_error("lin_sup: objective dimension mismatch");

  // Track t <= objective . x in an extra coordinate and project onto it.
  const std::size_t tdim = sys.dim + 1;
  Eliminator fm(tdim);
  std::vector<Ineq> eqs;
  for (const auto& ct : sys.constraints) {
    if (ct.coeffs.size() != sys.dim)
      throw input_error("linear: constraint dimension mismatch");
    RatVec c = ct.coeffs;
    c.push_back(Rat(0));
    if (ct.rel == Rel::Geq)
      fm.rows.push_back({std::move(c), ct.bound});
    else
      eqs.push_back({std::move(c), ct.bound});
  }
  {
    RatVec c(tdim, Rat(0));
    for (std::size_t j = 0; j < sys.dim; ++j) c[j] = objective[j];
    c[sys.dim] = -1;
    fm.rows.push_back({std::move(c), Rat(0)});
  }
  fm.substitute_equalities(std::move(eqs));
  fm.renormalize();
  if (fm.infeasible) return {LinSup::Kind::Infeasible, Rat(0), {}};
  std::vector<bool> keep(tdim, false);
  keep[sys.dim] = true;
  fm.run(keep);
  if (fm.infeasible) return {LinSup::Kind::Infeasible, Rat(0), {}};

  // The projection of the feasible region onto t is exactly the final
  // one-variable system; for a feasible base system it is (-inf, sup].
  std::optional<Rat> lo, hi;
  for (const auto& q : fm.rows) {
    const Rat& a = q.c[sys.dim];
    if (a > 0) {
      const Rat v = q.b / a;
      if (!lo || v > *lo) lo = v;
    } else if (a < 0) {
      const Rat v = q.b / a;
      if (!hi || v < *hi) hi = v;
    } else if (q.b > 0) {
      return {LinSup::Kind::Infeasible, Rat(0), {}};
    }
  }
  if (lo && hi && *lo > *hi) return {LinSup::Kind::Infeasible, Rat(0), {}};
  if (!hi) {
    // Unbounded: a recession direction with positive objective exists.
    LinSystem cone(sys.dim);
    for (const auto& ct : sys.constraints)
      cone.add(ct.coeffs, Rat(0), ct.rel);
    cone.add(objective, Rat(1));
    auto ray = lin_feasible_point(cone);
    if (!ray) throw std::logic_error("lin_sup: unbounded without a ray");
    return {LinSup::Kind::Unbounded, Rat(0), std::move(*ray)};
  }

  RatVec fixed(tdim, Rat(0));
  fixed[sys.dim] = *hi;
  RatVec full = fm.recover(fixed, keep);
  full.resize(sys.dim);
  return {LinSup::Kind::Finite, *hi, std::move(full)};
}

}  // namespace tropcong
