// Copyright (c) tropcong contributors.
// SPDX-License-Identifier: Apache-2.0
#include "tropcong/radnull.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <utility>
#include <vector>

#include "tropcong/errors.hpp"
#include "tropcong/linear.hpp"
#include "tropcong/polytope.hpp"

namespace tropcong {

PrimeSpec to_prime_spec(const PolyContext& ctx, const SeparatingPrime& w) {
  PrimeSpec spec;
  spec.ctx = ctx;
  spec.kill = w.kill;
  spec.U.tag = ctx.tag;
  if (w.row) spec.U.rows.push_back(*w.row);
  return spec;
}

namespace {

std::set<int> mask_to_kill(unsigned mask, int k) {
  std::set<int> kill;
  for (int i = 0; i < k; ++i)
    if (mask & (1u << i)) kill.insert(i + 1);
  return kill;
}

bool term_survives_mask(const ExpVec& exp, unsigned mask) {
  for (std::size_t i = 0; i < exp.size(); ++i)
    if ((mask & (1u << i)) && exp[i] != 0) return false;
  return true;
}

// ----- the dimension-<=1 prime search in u-space -------------------------

// One side of a pair after kill-filtering, as extended exponent vectors
// (t-exponent first over Zmax/TQ, then the surviving variable exponents).
struct USide {
  std::vector<RatVec> vecs;
  bool vanished() const { return vecs.empty(); }
};

USide filter_uside(const TropPoly& f, unsigned mask, bool with_t) {
  USide side;
  const int k = f.context().k;
  for (const auto& [exp, coeff] : f.terms()) {
    if (!term_survives_mask(exp, mask)) continue;
    RatVec v;
    v.reserve(static_cast<std::size_t>(k) + (with_t ? 1 : 0));
    if (with_t) v.push_back(coeff.exponent());
    for (int i = 0; i < k; ++i)
      if (!(mask & (1u << i))) v.emplace_back(exp[i]);
    side.vecs.push_back(std::move(v));
  }
  return side;
}

struct MaskOutcome {
  bool found = false;
  SeparatingPrime prime;
  SeparationPoint point;
  std::uint64_t cases = 0;
};

struct USearchParams {
  bool positive_t = false;  // require u0 >= 1: primes not containing (1, eps)
  bool allow_dim0 = true;
};

// Constraints forcing the chosen term to achieve the side maximum.
void add_achiever(LinSystem& sys, const std::vector<RatVec>& side, std::size_t chosen) {
  const std::size_t d = sys.dim;
  for (std::size_t m = 0; m < side.size(); ++m) {
    if (m == chosen) continue;
    RatVec c(d);
    for (std::size_t j = 0; j < d; ++j) c[j] = side[chosen][j] - side[m][j];
    sys.add(std::move(c), Rat(0));
  }
}

void add_sign_row(LinSystem& sys, bool with_t, bool positive_t) {
  if (!with_t) return;
  RatVec c(sys.dim, Rat(0));
  c[0] = 1;
  sys.add(std::move(c), positive_t ? Rat(1) : Rat(0));
}

using Assignments = std::vector<std::vector<std::pair<std::size_t, std::size_t>>>;

// Enumerates the per-generator achieving assignments that are individually
// feasible, in lexicographic order.
Assignments gen_assignments(const std::vector<std::pair<USide, USide>>& gens,
                            std::size_t dim, bool with_t, bool positive_t) {
  Assignments kept(gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const auto& [ls, rs] = gens[g];
    for (std::size_t a = 0; a < ls.vecs.size(); ++a) {
      for (std::size_t b = 0; b < rs.vecs.size(); ++b) {
        LinSystem sys(dim);
        add_achiever(sys, ls.vecs, a);
        add_achiever(sys, rs.vecs, b);
        RatVec eq(dim);
        for (std::size_t j = 0; j < dim; ++j) eq[j] = ls.vecs[a][j] - rs.vecs[b][j];
        sys.add(std::move(eq), Rat(0), Rel::Eq);
        add_sign_row(sys, with_t, positive_t);
        if (lin_feasible(sys)) kept[g].emplace_back(a, b);
      }
    }
  }
  return kept;
}

void add_gen_combo(LinSystem& sys, const std::vector<std::pair<USide, USide>>& gens,
                   const std::vector<std::size_t>& combo, const Assignments& kept) {
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const auto [a, b] = kept[g][combo[g]];
    add_achiever(sys, gens[g].first.vecs, a);
    add_achiever(sys, gens[g].second.vecs, b);
    RatVec eq(sys.dim);
    for (std::size_t j = 0; j < sys.dim; ++j)
      eq[j] = gens[g].first.vecs[a][j] - gens[g].second.vecs[b][j];
    sys.add(std::move(eq), Rat(0), Rel::Eq);
  }
}

// Odometer over the kept assignment lists; returns false when exhausted.
bool next_combo(std::vector<std::size_t>& combo, const Assignments& kept) {
  for (std::size_t g = combo.size(); g-- > 0;) {
    if (++combo[g] < kept[g].size()) return true;
    combo[g] = 0;
  }
  return false;
}

MaskOutcome search_mask_u(const CongPresentation& E, const Pair& p, unsigned mask,
                          const USearchParams& params) {
  MaskOutcome out;
  const auto& ctx = E.ctx;
  const bool with_t = ctx.tag != SemifieldTag::B;
  const auto kill = mask_to_kill(mask, ctx.k);
  const std::size_t dim =
      static_cast<std::size_t>(ctx.k) - kill.size() + (with_t ? 1 : 0);

  std::vector<std::pair<USide, USide>> gens;
  for (const auto& g : E.generators) {
    USide l = filter_uside(g.lhs, mask, with_t);
    USide r = filter_uside(g.rhs, mask, with_t);
    if (l.vanished() != r.vanished()) return out;  // no such prime contains E
    if (!l.vanished()) gens.emplace_back(std::move(l), std::move(r));
  }

  const USide pl = filter_uside(p.lhs, mask, with_t);
  const USide pr = filter_uside(p.rhs, mask, with_t);
  if (pl.vanished() && pr.vanished()) return out;  // p in every such prime

  if (pl.vanished() != pr.vanished()) {
    // Survive/vanish mismatch: every prime with this kill-set separates p.
    if (params.allow_dim0) {
      ++out.cases;
      out.found = true;
      out.prime = SeparatingPrime{kill, std::nullopt};
      return out;
    }
    const auto kept = gen_assignments(gens, dim, with_t, params.positive_t);
    for (const auto& lists : kept)
      if (lists.empty()) return out;
    std::vector<std::size_t> combo(gens.size(), 0);
    do {
      LinSystem sys(dim);
      add_gen_combo(sys, gens, combo, kept);
      add_sign_row(sys, with_t, params.positive_t);
      ++out.cases;
      if (auto u = lin_feasible_point(sys)) {
        out.found = true;
        out.prime = SeparatingPrime{kill, primitive_integer(*u)};
        return out;
      }
    } while (next_combo(combo, kept));
    return out;
  }

  // Both sides survive: search a row with a strict leading-value gap.
  const auto kept = gen_assignments(gens, dim, with_t, params.positive_t);
  for (const auto& lists : kept)
    if (lists.empty()) return out;
  std::vector<std::size_t> combo(gens.size(), 0);
  do {
    LinSystem base(dim);
    add_gen_combo(base, gens, combo, kept);
    add_sign_row(base, with_t, params.positive_t);
    if (!gens.empty()) {
      ++out.cases;
      if (!lin_feasible(base)) continue;
    }
    for (std::size_t a = 0; a < pl.vecs.size(); ++a) {
      for (std::size_t b = 0; b < pr.vecs.size(); ++b) {
        for (int orient = 0; orient < 2; ++orient) {
          LinSystem sys = base;
          add_achiever(sys, pl.vecs, a);
          add_achiever(sys, pr.vecs, b);
          RatVec gap(dim);
          for (std::size_t j = 0; j < dim; ++j) {
            const Rat delta = pl.vecs[a][j] - pr.vecs[b][j];
            gap[j] = orient == 0 ? delta : -delta;
          }
          sys.add(std::move(gap), Rat(1));
          ++out.cases;
          if (auto u = lin_feasible_point(sys)) {
            out.found = true;
            out.prime = SeparatingPrime{kill, primitive_integer(*u)};
            return out;
          }
        }
      }
    }
  } while (next_combo(combo, kept));
  return out;
}

// ----- shared branch driver ------------------------------------------------

// Evaluates one MaskOutcome per branch, sequentially or fanned out over
// `jobs` threads, and merges canonically: the least separating branch wins
// and later branches never contribute to the case count, so the verdict is
// schedule-independent.
template <typename Task>
Verdict run_branches(std::size_t branch_count, unsigned jobs, Task task) {
  Verdict verdict;
  auto finish = [&](MaskOutcome&& outcome) {
    verdict.cases_explored += outcome.cases;
    if (!outcome.found) return false;
    verdict.member = false;
    if (outcome.point.point.coords.empty())
      verdict.prime_witness = std::move(outcome.prime);
    else
      verdict.point_witness = std::move(outcome.point);
    return true;
  };
  if (jobs <= 1 || branch_count <= 1) {
    for (std::size_t i = 0; i < branch_count; ++i)
      if (finish(task(i))) return verdict;
    return verdict;
  }
  std::vector<MaskOutcome> outcomes(branch_count);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= branch_count) return;
      outcomes[i] = task(i);
    }
  };
  std::vector<std::thread> pool;
  const std::size_t n = std::min<std::size_t>(jobs, branch_count);
  pool.reserve(n);
  for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (auto& outcome : outcomes)
    if (finish(std::move(outcome))) return verdict;
  return verdict;
}

std::vector<unsigned> kill_masks(const PolyContext& ctx) {
  if (ctx.laurent) return {0};
  std::vector<unsigned> masks(1u << ctx.k);
  for (unsigned m = 0; m < masks.size(); ++m) masks[m] = m;
  return masks;
}

void check_decider_input(const CongPresentation& E, const Pair& p,
                         const DeciderOptions& opts, const char* op) {
  if (!(p.context() == E.ctx))
    throw input_error(std::string(op) + ": pair context mismatch");
  if (E.ctx.k > opts.k_bound)
    throw resource_error(std::string(op) + ": k exceeds the configured bound");
}

}  // namespace

Verdict rad_member_fg(const CongPresentation& E, const Pair& p,
                      const DeciderOptions& opts) {
  check_decider_input(E, p, opts, "rad_member_fg");
  const auto masks = kill_masks(E.ctx);
  return run_branches(masks.size(), opts.jobs, [&](std::size_t i) {
    return search_mask_u(E, p, masks[i], USearchParams{});
  });
}

Verdict eplus_member(const CongPresentation& E, const Pair& p, const Scalar& eps,
                     const DeciderOptions& opts) {
  check_decider_input(E, p, opts, "eplus_member");
  if (E.ctx.tag != SemifieldTag::TQ)
    throw input_error("eplus_member: defined over TQ only");
  if (eps.is_zero() || eps.is_one())
    throw input_error("eplus_member: eps must differ from 0 and 1");
  const Pair eps_pair(TropPoly::one(E.ctx),
                      TropPoly::monomial(E.ctx, ExpVec(E.ctx.k, 0), eps));
  const Pair probe = twisted_mul(p, eps_pair);
  USearchParams params;
  params.positive_t = true;  // rows with u0 >= 1 never contain (1, eps)
  params.allow_dim0 = false;
  const auto masks = kill_masks(E.ctx);
  return run_branches(masks.size(), opts.jobs, [&](std::size_t i) {
    return search_mask_u(E, probe, masks[i], params);
  });
}

// ----- the Nullstellensatz decider in point space --------------------------

namespace {

// A term as an affine form offset + coeffs . d over surviving coordinates.
struct AffineTerm {
  RatVec coeffs;
  Rat offset;
};

struct DSide {
  std::vector<AffineTerm> terms;
  bool vanished() const { return terms.empty(); }
};

DSide filter_dside(const TropPoly& f, unsigned mask) {
  DSide side;
  const int k = f.context().k;
  for (const auto& [exp, coeff] : f.terms()) {
    if (!term_survives_mask(exp, mask)) continue;
    AffineTerm t;
    t.offset = coeff.exponent();
    for (int i = 0; i < k; ++i)
      if (!(mask & (1u << i))) t.coeffs.emplace_back(exp[i]);
    side.terms.push_back(std::move(t));
  }
  return side;
}

void add_achiever_d(LinSystem& sys, const std::vector<AffineTerm>& side,
                    std::size_t chosen) {
  for (std::size_t m = 0; m < side.size(); ++m) {
    if (m == chosen) continue;
    RatVec c(sys.dim);
    for (std::size_t j = 0; j < sys.dim; ++j)
      c[j] = side[chosen].coeffs[j] - side[m].coeffs[j];
    sys.add(std::move(c), side[m].offset - side[chosen].offset);
  }
}

Assignments gen_assignments_d(const std::vector<std::pair<DSide, DSide>>& gens,
                              std::size_t dim) {
  Assignments kept(gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const auto& [ls, rs] = gens[g];
    for (std::size_t a = 0; a < ls.terms.size(); ++a) {
      for (std::size_t b = 0; b < rs.terms.size(); ++b) {
        LinSystem sys(dim);
        add_achiever_d(sys, ls.terms, a);
        add_achiever_d(sys, rs.terms, b);
        RatVec eq(dim);
        for (std::size_t j = 0; j < dim; ++j)
          eq[j] = ls.terms[a].coeffs[j] - rs.terms[b].coeffs[j];
        sys.add(std::move(eq), rs.terms[b].offset - ls.terms[a].offset, Rel::Eq);
        if (lin_feasible(sys)) kept[g].emplace_back(a, b);
      }
    }
  }
  return kept;
}

void add_gen_combo_d(LinSystem& sys, const std::vector<std::pair<DSide, DSide>>& gens,
                     const std::vector<std::size_t>& combo, const Assignments& kept) {
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const auto [a, b] = kept[g][combo[g]];
    add_achiever_d(sys, gens[g].first.terms, a);
    add_achiever_d(sys, gens[g].second.terms, b);
    RatVec eq(sys.dim);
    for (std::size_t j = 0; j < sys.dim; ++j)
      eq[j] = gens[g].first.terms[a].coeffs[j] - gens[g].second.terms[b].coeffs[j];
    sys.add(std::move(eq),
            gens[g].second.terms[b].offset - gens[g].first.terms[a].offset, Rel::Eq);
  }
}

SeparationPoint assemble_point(const PolyContext& ctx, unsigned mask, const RatVec& d) {
  SeparationPoint sp;
  std::size_t next = 0;
  for (int i = 0; i < ctx.k; ++i) {
    if (mask & (1u << i))
      sp.point.coords.push_back(std::nullopt);
    else
      sp.point.coords.push_back(d[next++]);
  }
  return sp;
}

MaskOutcome search_stratum(const CongPresentation& E, const Pair& p, unsigned mask) {
  MaskOutcome out;
  const auto& ctx = E.ctx;
  const std::size_t dim =
      static_cast<std::size_t>(ctx.k) - mask_to_kill(mask, ctx.k).size();

  std::vector<std::pair<DSide, DSide>> gens;
  for (const auto& g : E.generators) {
    DSide l = filter_dside(g.lhs, mask);
    DSide r = filter_dside(g.rhs, mask);
    // A finite value never equals the zero: V(E) misses the stratum.
    if (l.vanished() != r.vanished()) return out;
    if (!l.vanished()) gens.emplace_back(std::move(l), std::move(r));
  }

  const DSide pl = filter_dside(p.lhs, mask);
  const DSide pr = filter_dside(p.rhs, mask);
  if (pl.vanished() && pr.vanished()) return out;  // both sides read 0

  const auto kept = gen_assignments_d(gens, dim);
  for (const auto& lists : kept)
    if (lists.empty()) return out;  // V(E) misses the stratum

  if (pl.vanished() != pr.vanished()) {
    // The sides disagree everywhere on the stratum; any point of V(E) in it
    // separates.
    std::vector<std::size_t> combo(gens.size(), 0);
    do {
      LinSystem sys(dim);
      add_gen_combo_d(sys, gens, combo, kept);
      ++out.cases;
      if (auto d = lin_feasible_point(sys)) {
        out.found = true;
        out.point = assemble_point(ctx, mask, *d);
        return out;
      }
    } while (next_combo(combo, kept));
    return out;
  }

  std::vector<std::size_t> combo(gens.size(), 0);
  do {
    LinSystem base(dim);
    add_gen_combo_d(base, gens, combo, kept);
    if (!gens.empty()) {
      ++out.cases;
      if (!lin_feasible(base)) continue;
    }
    for (std::size_t a = 0; a < pl.terms.size(); ++a) {
      for (std::size_t b = 0; b < pr.terms.size(); ++b) {
        for (int orient = 0; orient < 2; ++orient) {
          LinSystem sys = base;
          add_achiever_d(sys, pl.terms, a);
          add_achiever_d(sys, pr.terms, b);
          RatVec obj(dim);
          for (std::size_t j = 0; j < dim; ++j) {
            const Rat delta = pl.terms[a].coeffs[j] - pr.terms[b].coeffs[j];
            obj[j] = orient == 0 ? delta : -delta;
          }
          Rat offset = pl.terms[a].offset - pr.terms[b].offset;
          if (orient == 1) offset = -offset;
          ++out.cases;
          const auto sup = lin_sup(obj, sys);
          if (sup.kind == LinSup::Kind::Infeasible) continue;
          if (sup.kind == LinSup::Kind::Finite) {
            if (sup.value + offset <= 0) continue;
            out.found = true;
            out.point = assemble_point(ctx, mask, sup.witness);
            return out;
          }
          // Unbounded: walk along the ray until the gap turns positive.
          const auto base_pt = lin_feasible_point(sys);
          if (!base_pt) continue;
          Rat at_base = offset;
          Rat along = 0;
          for (std::size_t j = 0; j < dim; ++j) {
            at_base += obj[j] * (*base_pt)[j];
            along += obj[j] * sup.witness[j];
          }
          RatVec ptv = *base_pt;
          if (at_base <= 0) {
            const Rat lambda = (Rat(1) - at_base) / along;
            for (std::size_t j = 0; j < dim; ++j)
              ptv[j] += lambda * sup.witness[j];
          }
          out.found = true;
          out.point = assemble_point(ctx, mask, ptv);
          return out;
        }
      }
    }
  } while (next_combo(combo, kept));
  return out;
}

}  // namespace

Verdict null_member(const CongPresentation& E, const Pair& p,
                    const DeciderOptions& opts) {
  check_decider_input(E, p, opts, "null_member");
  if (E.ctx.tag != SemifieldTag::TQ)
    throw input_error("null_member: defined over TQ only");
  const auto strata = kill_masks(E.ctx);
  return run_branches(strata.size(), opts.jobs, [&](std::size_t i) {
    return search_stratum(E, p, strata[i]);
  });
}

// ----- Rad(diag) by polytopes -----------------------------------------------

namespace {

// Searches a row under which v achieves the maximum of `own` and strictly
// exceeds every point of `other`. Over Zmax/TQ the row must have u0 >= 1.
std::optional<RatVec> separating_row(const RatVec& v, const std::vector<RatVec>& own,
                                     const std::vector<RatVec>& other, bool with_t) {
  const std::size_t dim = v.size();
  LinSystem sys(dim);
  for (const auto& w : own) {
    RatVec c(dim);
    for (std::size_t j = 0; j < dim; ++j) c[j] = v[j] - w[j];
    sys.add(std::move(c), Rat(0));
  }
  for (const auto& q : other) {
    RatVec c(dim);
    for (std::size_t j = 0; j < dim; ++j) c[j] = v[j] - q[j];
    sys.add(std::move(c), Rat(1));
  }
  if (with_t) {
    RatVec c(dim, Rat(0));
    c[0] = 1;
    sys.add(std::move(c), Rat(1));
  }
  auto u = lin_feasible_point(sys);
  if (!u) return std::nullopt;
  return primitive_integer(*u);
}

}  // namespace

Verdict rad_trivial_member(const Pair& p) {
  Verdict verdict;
  const auto& ctx = p.context();
  const bool with_t = ctx.tag != SemifieldTag::B;

  const Polytope P = poly_newt(p.lhs);
  const Polytope Q = poly_newt(p.rhs);
  verdict.cases_explored = 1;

  if (P.empty() || Q.empty()) {
    if (P.empty() && Q.empty()) return verdict;
    // Zero against nonzero: the dimension-0 prime separates.
    verdict.member = false;
    verdict.prime_witness = SeparatingPrime{{}, std::nullopt};
    return verdict;
  }

  if (with_t ? hat_eq(P, Q) : polytope_eq(P, Q)) return verdict;

  const auto candidates_l = with_t ? hat_vertices(P) : P.vertices;
  const auto candidates_r = with_t ? hat_vertices(Q) : Q.vertices;
  for (const auto& v : candidates_l) {
    ++verdict.cases_explored;
    if (auto row = separating_row(v, P.vertices, Q.vertices, with_t)) {
      verdict.member = false;
      verdict.prime_witness = SeparatingPrime{{}, std::move(row)};
      return verdict;
    }
  }
  for (const auto& v : candidates_r) {
    ++verdict.cases_explored;
    if (auto row = separating_row(v, Q.vertices, P.vertices, with_t)) {
      verdict.member = false;
      verdict.prime_witness = SeparatingPrime{{}, std::move(row)};
      return verdict;
    }
  }
  throw std::logic_error("rad_trivial_member: unequal polytopes without a separator");
}

// ----- generalized-power witnesses ------------------------------------------

bool gp_witness_verify(const Pair& p, const GpWitness& w) {
  if (!(w.c.context() == p.context()))
    throw input_error("gp_witness_verify: witness context mismatch");
  return gp_element(p, w).is_diagonal();
}

namespace {

TropPoly poly_pow(const TropPoly& f, std::size_t n) {
  TropPoly acc = TropPoly::one(f.context());
  for (std::size_t i = 0; i < n; ++i) acc = poly_mul(acc, f);
  return acc;
}

void enumerate_exps(int k, bool laurent, std::int64_t cap, ExpVec& cur, int pos,
                    std::vector<ExpVec>& out) {
  if (pos == k) {
    out.push_back(cur);
    return;
  }
  std::int64_t used = 0;
  for (int i = 0; i < pos; ++i) used += std::llabs(cur[i]);
  const std::int64_t room = cap - used;
  for (std::int64_t v = laurent ? -room : 0; v <= room; ++v) {
    cur[pos] = v;
    enumerate_exps(k, laurent, cap, cur, pos + 1, out);
  }
}

}  // namespace

std::optional<GpWitness> gp_witness_search(const Pair& p, const GpSearchBounds& bounds) {
  const auto& ctx = p.context();
  const TropPoly s = poly_add(p.lhs, p.rhs);

  // Candidate c values in canonical order: zero, then monomials times small
  // powers of lhs+rhs under the degree cap.
  std::vector<TropPoly> candidates{TropPoly::zero(ctx)};
  {
    std::vector<ExpVec> exps;
    ExpVec cur(ctx.k, 0);
    enumerate_exps(ctx.k, ctx.laurent, bounds.c_degree_cap, cur, 0, exps);
    TropPoly spow = TropPoly::one(ctx);
    for (std::size_t j = 0; j <= bounds.pow_bound; ++j) {
      if (j > 0) spow = poly_mul(spow, s);
      if (spow.total_degree() > bounds.c_degree_cap) break;
      for (const auto& e : exps) {
        std::int64_t deg = 0;
        for (auto n : e) deg += std::llabs(n);
        if (deg + spow.total_degree() > bounds.c_degree_cap) continue;
        candidates.push_back(
            poly_mul(TropPoly::monomial(ctx, e, Scalar::one(ctx.tag)), spow));
      }
    }
  }

  std::vector<Pair> p_pows{Pair::identity(ctx)};
  for (std::size_t l = 1; l <= bounds.pow_bound; ++l)
    p_pows.push_back(twisted_mul(p_pows.back(), p));
  std::vector<TropPoly> s_pows{TropPoly::one(ctx)};
  for (std::size_t k = 1; k <= bounds.pow_bound; ++k)
    s_pows.push_back(poly_mul(s_pows.back(), s));

  for (std::size_t total = 0; total <= 2 * bounds.pow_bound; ++total) {
    for (std::size_t k = 0; k <= std::min(total, bounds.pow_bound); ++k) {
      const std::size_t l = total - k;
      if (l > bounds.pow_bound) continue;
      for (const auto& c : candidates) {
        const Pair head(poly_add(s_pows[k], c), TropPoly::zero(ctx));
        if (twisted_mul(head, p_pows[l]).is_diagonal()) return GpWitness{k, l, c};
      }
    }
  }
  return std::nullopt;
}

GpWitness gp_witness_normalize(const Pair& p, std::size_t i, std::size_t j,
                               const TropPoly& h) {
  if (j == 0) throw input_error("gp_witness_normalize: j must be positive");
  if (!(h.context() == p.context()))
    throw input_error("gp_witness_normalize: h context mismatch");
  const TropPoly s = poly_add(p.lhs, p.rhs);
  return GpWitness{i + j - 1, 1, poly_mul(h, poly_pow(s, j - 1))};
}

}  // namespace tropcong
