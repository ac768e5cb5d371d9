// Copyright (c) tropcong contributors.
// SPDX-License-Identifier: Apache-2.0
#include "tropcong/rat.hpp"

#include <algorithm>
#include <cctype>

namespace tropcong {

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw input_error("empty rational literal");
  auto valid = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      if (!valid(text)) throw input_error("malformed rational literal: " + text);
      return Rat(Int(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!valid(num) || !valid(den))
      throw input_error("malformed rational literal: " + text);
    Int d(den);
    if (d == 0) throw input_error("zero denominator in rational literal: " + text);
    return Rat(Int(num), d);
  } catch (const std::runtime_error&) {
    throw input_error("malformed rational literal: " + text);
  }
}

std::string rat_to_string(const Rat& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw input_error("dot: dimension mismatch");
  Rat acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

bool is_zero_vec(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

namespace {

// Row echelon form in place; returns rank.
std::size_t echelon(RatMat& m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const Rat factor = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rat_rank(const RatMat& rows) {
  RatMat copy = rows;
  return echelon(copy);
}

RatMat kernel_basis(const RatMat& rows, std::size_t cols) {
  RatMat m = rows;
  for (const auto& r : m)
    if (r.size() != cols) throw input_error("kernel_basis: ragged matrix");
  const std::size_t rank = echelon(m);
  m.resize(rank);

  // Locate pivot column of each echelon row.
  std::vector<std::size_t> pivot_col(rank);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t r = 0; r < rank; ++r) {
    std::size_t c = 0;
    while (c < cols && m[r][c] == 0) ++c;
    pivot_col[r] = c;
    is_pivot[c] = true;
  }

  RatMat basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols, Rat(0));
    v[free] = 1;
    for (std::size_t r = rank; r-- > 0;) {
      Rat acc = 0;
      for (std::size_t c = pivot_col[r] + 1; c < cols; ++c) acc += m[r][c] * v[c];
      v[pivot_col[r]] = -acc / m[r][pivot_col[r]];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

RatVec primitive_integer(const RatVec& v) {
  Int den_lcm = 1;
  for (const auto& x : v) den_lcm = lcm(den_lcm, denominator(x));
  Int num_gcd = 0;
  for (const auto& x : v) num_gcd = gcd(num_gcd, Int(numerator(x) * (den_lcm / denominator(x))));
  if (num_gcd == 0) return v;
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * Rat(den_lcm, num_gcd);
  return out;
}

}  // namespace tropcong
