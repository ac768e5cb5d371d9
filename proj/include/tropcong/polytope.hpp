// Copyright (c) tropcong contributors.
// SPDX-License-Identifier: Apache-2.0
#ifndef TROPCONG_POLYTOPE_HPP
#define TROPCONG_POLYTOPE_HPP

#include <cstddef>
#include <vector>

#include "tropcong/rat.hpp"
#include "tropcong/tropoly.hpp"

namespace tropcong {

// Bounded rational polytope in canonical minimal V-representation: the
// stored points are exactly the vertices of their convex hull, sorted
// lexicographically. The empty polytope (newt of the zero polynomial) is
// allowed and acts as the additive identity / multiplicative absorber.
struct Polytope {
  std::size_t dim = 0;
  std::vector<RatVec> vertices;

  bool empty() const { return vertices.empty(); }
  friend bool operator==(const Polytope&, const Polytope&) = default;
};

// Exact convex-hull membership via a separating-functional feasibility test.
bool point_in_hull(const RatVec& p, const std::vector<RatVec>& points);

// Canonical vertex set: p is kept iff p lies outside conv(points \ {p}).
Polytope hull_vertices(std::size_t dim, std::vector<RatVec> points);

// Newton polytope. Over B the exponent vectors in dimension k; over Zmax/TQ
// the points (c, n) in dimension k+1 with coordinate 0 the t-exponent.
Polytope poly_newt(const TropPoly& f);

Polytope polytope_add(const Polytope& P, const Polytope& Q);  // hull of union
Polytope polytope_mul(const Polytope& P, const Polytope& Q);  // Minkowski sum

// Vertices of P lying on an upper face with respect to coordinate 0: those
// v for which {u0 = 1, u.v >= u.w for all vertices w} is feasible. The hat
// is the upper hull of exactly these vertices.
std::vector<RatVec> hat_vertices(const Polytope& P);

bool polytope_eq(const Polytope& P, const Polytope& Q);
bool hat_eq(const Polytope& P, const Polytope& Q);

}  // namespace tropcong

#endif
