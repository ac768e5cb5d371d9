// Copyright (c) tropcong contributors.
// SPDX-License-Identifier: Apache-2.0
#ifndef TROPCONG_RAT_HPP
#define TROPCONG_RAT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

#include "tropcong/errors.hpp"

namespace tropcong {

// Exact rationals. cpp_rational keeps values reduced with a positive
// denominator, which is exactly the invariant the rest of the code relies on.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

// Parses "p", "p/q" or "-p/q". Throws input_error on malformed text or q = 0.
Rat parse_rat(const std::string& text);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& value);

Rat dot(const RatVec& a, const RatVec& b);

bool is_zero_vec(const RatVec& v);

// Rank of the row set by Gaussian elimination over Q.
std::size_t rat_rank(const RatMat& rows);

// Basis of {x : rows * x = 0}, deterministic (free columns in index order).
RatMat kernel_basis(const RatMat& rows, std::size_t cols);

// Scales a nonzero rational vector to the unique primitive integer vector
// with the same direction. The zero vector is returned unchanged.
RatVec primitive_integer(const RatVec& v);

}  // namespace tropcong

#endif
