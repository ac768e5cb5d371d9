// Copyright (c) tropcong contributors.
// SPDX-License-Identifier: Apache-2.0
#include "tropcong/polytope.hpp"

#include <algorithm>

#include "tropcong/errors.hpp"
#include "tropcong/linear.hpp"

namespace tropcong {

bool point_in_hull(const RatVec& p, const std::vector<RatVec>& points) {
  if (points.empty()) return false;
  const std::size_t d = p.size();
  // Separation dual: p is outside iff some functional u with offset g
  // satisfies u.q <= g on all hull points and u.p >= g + 1 (the system is a
  // cone, so the strict gap can be normalized to 1).
  LinSystem sys(d + 1);
  for (const auto& q : points) {
    if (q.size() != d) throw input_error("point_in_hull: mixed dimensions");
    RatVec c(d + 1);
    for (std::size_t i = 0; i < d; ++i) c[i] = -q[i];
    c[d] = 1;
    sys.add(std::move(c), Rat(0));  // g - u.q >= 0
  }
  RatVec c(d + 1);
  for (std::size_t i = 0; i < d; ++i) c[i] = p[i];
  c[d] = -1;
  sys.add(std::move(c), Rat(1));  // u.p - g >= 1
  return !lin_feasible(sys);
}

Polytope hull_vertices(std::size_t dim, std::vector<RatVec> points) {
  for (const auto& p : points)
    if (p.size() != dim) throw input_error("hull_vertices: mixed dimensions");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  Polytope out;
  out.dim = dim;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<RatVec> others;
    others.reserve(points.size() - 1);
    for (std::size_t j = 0; j < points.size(); ++j)
      if (j != i) others.push_back(points[j]);
    if (!point_in_hull(points[i], others)) out.vertices.push_back(points[i]);
  }
  return out;
}

Polytope poly_newt(const TropPoly& f) {
  const auto& ctx = f.context();
  const bool with_t = ctx.tag != SemifieldTag::B;
  const std::size_t d = static_cast<std::size_t>(ctx.k) + (with_t ? 1 : 0);
  std::vector<RatVec> pts;
  pts.reserve(f.terms().size());
  for (const auto& [exp, coeff] : f.terms()) {
    RatVec p;
    p.reserve(d);
    if (with_t) p.push_back(coeff.exponent());
    for (auto n : exp) p.emplace_back(n);
    pts.push_back(std::move(p));
  }
  return hull_vertices(d, std::move(pts));
}

Polytope polytope_add(const Polytope& P, const Polytope& Q) {
  if (P.dim != Q.dim) throw input_error("polytope_add: dimension mismatch");
  std::vector<RatVec> pts = P.vertices;
  pts.insert(pts.end(), Q.vertices.begin(), Q.vertices.end());
  return hull_vertices(P.dim, std::move(pts));
}

Polytope polytope_mul(const Polytope& P, const Polytope& Q) {
  if (P.dim != Q.dim) throw input_error("polytope_mul: dimension mismatch");
  std::vector<RatVec> sums;
  sums.reserve(P.vertices.size() * Q.vertices.size());
  for (const auto& p : P.vertices) {
    for (const auto& q : Q.vertices) {
      RatVec s(P.dim);
      for (std::size_t i = 0; i < P.dim; ++i) s[i] = p[i] + q[i];
      sums.push_back(std::move(s));
    }
  }
  return hull_vertices(P.dim, std::move(sums));
}

std::vector<RatVec> hat_vertices(const Polytope& P) {
  std::vector<RatVec> out;
  if (P.empty()) return out;
  if (P.dim < 1) throw input_error("hat_vertices: dimension must be >= 1");
  for (const auto& v : P.vertices) {
    LinSystem sys(P.dim);
    RatVec unit(P.dim, Rat(0));
    unit[0] = 1;
    sys.add(std::move(unit), Rat(1), Rel::Eq);  // u0 = 1
    for (const auto& w : P.vertices) {
      RatVec c(P.dim);
      for (std::size_t i = 0; i < P.dim; ++i) c[i] = v[i] - w[i];
      sys.add(std::move(c), Rat(0));
    }
    if (lin_feasible(sys)) out.push_back(v);
  }
  return out;
}

bool polytope_eq(const Polytope& P, const Polytope& Q) {
  if (P.dim != Q.dim) throw input_error("polytope_eq: dimension mismatch");
  return P.vertices == Q.vertices;
}

bool hat_eq(const Polytope& P, const Polytope& Q) {
  if (P.dim != Q.dim) throw input_error("hat_eq: dimension mismatch");
  return hat_vertices(P) == hat_vertices(Q);
}

}  // namespace tropcong
