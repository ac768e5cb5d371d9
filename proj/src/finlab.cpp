// Copyright (c) tropcong contributors.
// SPDX-License-Identifier: Apache-2.0
#include "tropcong/finlab.hpp"

#include <algorithm>
#include <map>

#include "tropcong/errors.hpp"

namespace tropcong {

std::vector<std::string> check_algebra(const FiniteAlgebra& A) {
  std::vector<std::string> issues;
  const int n = A.n;
  auto table_ok = [&](const std::vector<std::vector<int>>& t) {
    if (static_cast<int>(t.size()) != n) return false;
    for (const auto& row : t) {
      if (static_cast<int>(row.size()) != n) return false;
      for (int v : row)
        if (v < 0 || v >= n) return false;
    }
    return true;
  };
  if (n <= 0) issues.push_back("carrier must be nonempty");
  if (!table_ok(A.add)) issues.push_back("add table is not an n x n table over 0..n-1");
  if (!table_ok(A.mul)) issues.push_back("mul table is not an n x n table over 0..n-1");
  if (A.zero < 0 || A.zero >= n) issues.push_back("zero index out of range");
  if (A.one < 0 || A.one >= n) issues.push_back("one index out of range");
  if (!issues.empty()) return issues;

  if (A.zero == A.one) issues.push_back("1 = 0 is excluded");
  for (int a = 0; a < n; ++a) {
    if (A.add[a][a] != a) issues.push_back("addition is not idempotent");
    if (A.add[a][A.zero] != a) issues.push_back("0 is not neutral for addition");
    if (A.mul[a][A.one] != a) issues.push_back("1 is not neutral for multiplication");
    if (A.mul[a][A.zero] != A.zero) issues.push_back("0 is not absorbing");
    for (int b = 0; b < n; ++b) {
      if (A.add[a][b] != A.add[b][a]) issues.push_back("addition is not commutative");
      if (A.mul[a][b] != A.mul[b][a]) issues.push_back("multiplication is not commutative");
      for (int c = 0; c < n; ++c) {
        if (A.add[A.add[a][b]][c] != A.add[a][A.add[b][c]])
          issues.push_back("addition is not associative");
        if (A.mul[A.mul[a][b]][c] != A.mul[a][A.mul[b][c]])
          issues.push_back("multiplication is not associative");
        if (A.mul[a][A.add[b][c]] != A.add[A.mul[a][b]][A.mul[a][c]])
          issues.push_back("multiplication does not distribute over addition");
      }
    }
  }
  std::sort(issues.begin(), issues.end());
  issues.erase(std::unique(issues.begin(), issues.end()), issues.end());
  return issues;
}

FiniteAlgebra validate_algebra(const FiniteAlgebra& tables) {
  const auto issues = check_algebra(tables);
  if (!issues.empty()) {
    std::string what = "invalid algebra:";
    for (const auto& s : issues) what += " " + s + ";";
    throw input_error(what);
  }
  return tables;
}

bool CongRelation::is_trivial() const {
  for (std::size_t i = 0; i < block.size(); ++i)
    if (block[i] != static_cast<int>(i)) return false;
  return true;
}

bool CongRelation::is_improper() const {
  return std::all_of(block.begin(), block.end(), [](int b) { return b == 0; });
}

std::size_t CongRelation::block_count() const {
  return block.empty() ? 0 : static_cast<std::size_t>(
                                 *std::max_element(block.begin(), block.end())) + 1;
}

std::vector<std::vector<int>> CongRelation::blocks() const {
  std::vector<std::vector<int>> out(block_count());
  for (std::size_t i = 0; i < block.size(); ++i)
    out[block[i]].push_back(static_cast<int>(i));
  return out;
}

namespace {

// Canonical restricted-growth renumbering.
CongRelation canon_partition(std::vector<int> raw) {
  std::map<int, int> seen;
  CongRelation out;
  out.block.reserve(raw.size());
  for (int b : raw) {
    auto [it, inserted] = seen.emplace(b, static_cast<int>(seen.size()));
    out.block.push_back(it->second);
  }
  return out;
}

bool compatible(const FiniteAlgebra& A, const std::vector<int>& block) {
  const int n = A.n;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (block[a] != block[b]) continue;
      for (int c = 0; c < n; ++c) {
        if (block[A.add[a][c]] != block[A.add[b][c]]) return false;
        if (block[A.mul[a][c]] != block[A.mul[b][c]]) return false;
      }
    }
  }
  return true;
}

}  // namespace

CongRelation meet(const CongRelation& a, const CongRelation& b) {
  std::vector<int> raw(a.block.size());
  std::map<std::pair<int, int>, int> ids;
  for (std::size_t i = 0; i < a.block.size(); ++i) {
    auto [it, inserted] =
        ids.emplace(std::make_pair(a.block[i], b.block[i]), static_cast<int>(ids.size()));
    raw[i] = it->second;
  }
  return canon_partition(raw);
}

bool refines(const CongRelation& a, const CongRelation& b) {
  for (std::size_t i = 0; i < a.block.size(); ++i)
    for (std::size_t j = i + 1; j < a.block.size(); ++j)
      if (a.block[i] == a.block[j] && b.block[i] != b.block[j]) return false;
  return true;
}

std::vector<CongRelation> enumerate_congruences(const FiniteAlgebra& A) {
  if (A.n > 8)
    throw resource_error("enumerate_congruences: carrier larger than 8");
  std::vector<CongRelation> out;
  std::vector<int> rgs(A.n, 0);
  // Restricted growth strings enumerate all set partitions.
  while (true) {
    if (compatible(A, rgs)) {
      CongRelation c;
      c.block = rgs;
      out.push_back(std::move(c));
    }
    int i = A.n - 1;
    for (; i > 0; --i) {
      const int cap = 1 + *std::max_element(rgs.begin(), rgs.begin() + i);
      if (rgs[i] < cap) break;
    }
    if (i == 0) break;
    ++rgs[i];
    std::fill(rgs.begin() + i + 1, rgs.end(), 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ElemPair twisted_mul_elems(const FiniteAlgebra& A, ElemPair a, ElemPair b) {
  return {A.add[A.mul[a.first][b.first]][A.mul[a.second][b.second]],
          A.add[A.mul[a.first][b.second]][A.mul[a.second][b.first]]};
}

bool is_prime_cong(const FiniteAlgebra& A, const CongRelation& P) {
  if (P.is_improper()) return false;
  const int n = A.n;
  for (int a1 = 0; a1 < n; ++a1)
    for (int a2 = 0; a2 < n; ++a2) {
      if (P.contains(a1, a2)) continue;
      for (int b1 = 0; b1 < n; ++b1)
        for (int b2 = 0; b2 < n; ++b2) {
          if (P.contains(b1, b2)) continue;
          const auto prod = twisted_mul_elems(A, {a1, a2}, {b1, b2});
          if (P.contains(prod.first, prod.second)) return false;
        }
    }
  return true;
}

bool is_qc(const FiniteAlgebra& A, const CongRelation& P) {
  // The quotient by the improper congruence has 1 = 0 and is not a
  // semiring, hence not a cancellative one.
  if (P.is_improper()) return false;
  const int n = A.n;
  for (int a = 0; a < n; ++a) {
    if (P.contains(a, A.zero)) continue;
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (P.contains(A.mul[a][b], A.mul[a][c]) && !P.contains(b, c)) return false;
  }
  return true;
}

bool is_indecomposable(const FiniteAlgebra& A, const CongRelation& P,
                       const std::vector<CongRelation>& all_congs) {
  (void)A;
  for (std::size_t i = 0; i < all_congs.size(); ++i) {
    if (!(refines(P, all_congs[i]) && all_congs[i] != P)) continue;
    for (std::size_t j = i + 1; j < all_congs.size(); ++j) {
      if (!(refines(P, all_congs[j]) && all_congs[j] != P)) continue;
      if (meet(all_congs[i], all_congs[j]) == P) return false;
    }
  }
  return true;
}

CongRelation radical_cong(const FiniteAlgebra& A, const CongRelation& I,
                          const std::vector<CongRelation>& all_congs) {
  CongRelation acc;
  acc.block.assign(I.block.size(), 0);  // improper: the empty intersection
  for (const auto& P : all_congs)
    if (refines(I, P) && is_prime_cong(A, P)) acc = meet(acc, P);
  return acc;
}

std::set<ElemPair> nilpotent_pairs(const FiniteAlgebra& A, const CongRelation& I) {
  const int n = A.n;
  std::set<ElemPair> out;
  for (int a1 = 0; a1 < n; ++a1) {
    for (int a2 = 0; a2 < n; ++a2) {
      const ElemPair alpha{a1, a2};
      const int s = A.add[a1][a2];
      // Distinct twisted powers of alpha (cycle detection caps the list).
      std::vector<ElemPair> apows{{A.one, A.zero}};
      while (true) {
        const auto nxt = twisted_mul_elems(A, apows.back(), alpha);
        if (std::find(apows.begin(), apows.end(), nxt) != apows.end()) break;
        apows.push_back(nxt);
      }
      std::vector<int> spows{A.one};
      while (true) {
        const int nxt = A.mul[spows.back()][s];
        if (std::find(spows.begin(), spows.end(), nxt) != spows.end()) break;
        spows.push_back(nxt);
      }
      bool nil = false;
      for (std::size_t k = 0; k < spows.size() && !nil; ++k)
        for (int c = 0; c < n && !nil; ++c)
          for (std::size_t l = 0; l < apows.size() && !nil; ++l) {
            const ElemPair head{A.add[spows[k]][c], A.zero};
            const auto gp = twisted_mul_elems(A, head, apows[l]);
            if (I.contains(gp.first, gp.second)) nil = true;
          }
      if (nil) out.insert(alpha);
    }
  }
  return out;
}

bool is_primary(const FiniteAlgebra& A, const CongRelation& I,
                const std::vector<CongRelation>& all_congs) {
  const auto rad = radical_cong(A, I, all_congs);
  const int n = A.n;
  for (int a1 = 0; a1 < n; ++a1)
    for (int a2 = 0; a2 < n; ++a2) {
      if (rad.contains(a1, a2)) continue;
      for (int b1 = 0; b1 < n; ++b1)
        for (int b2 = 0; b2 < n; ++b2) {
          if (I.contains(b1, b2)) continue;
          const auto prod = twisted_mul_elems(A, {a1, a2}, {b1, b2});
          if (I.contains(prod.first, prod.second)) return false;
        }
    }
  return true;
}

CongRelation ann_elem(const FiniteAlgebra& A, int a) {
  std::vector<int> raw(A.n);
  for (int x = 0; x < A.n; ++x) raw[x] = A.mul[a][x];
  auto out = canon_partition(raw);
  if (!compatible(A, out.block))
    throw std::logic_error("ann_elem: element annihilator is not a congruence");
  return out;
}

AnnPairResult ann_pair(const FiniteAlgebra& A, ElemPair alpha) {
  AnnPairResult result;
  const int n = A.n;
  for (int b1 = 0; b1 < n; ++b1)
    for (int b2 = 0; b2 < n; ++b2) {
      const auto prod = twisted_mul_elems(A, alpha, {b1, b2});
      if (prod.first == prod.second) result.relation.insert({b1, b2});
    }
  for (const auto& [x, y] : result.relation) {
    for (int z = 0; z < n; ++z) {
      if (result.relation.count({y, z}) && !result.relation.count({x, z})) {
        result.transitive = false;
        return result;
      }
    }
  }
  return result;
}

CongRelation gann(const FiniteAlgebra& A, ElemPair alpha,
                  const std::vector<CongRelation>& all_congs) {
  const int n = A.n;
  CongRelation diag;
  for (int i = 0; i < n; ++i) diag.block.push_back(i);
  const auto nils = nilpotent_pairs(A, diag);

  // Relation by generalized powers.
  std::map<std::pair<int, int>, bool> in_gann;
  for (int b1 = 0; b1 < n; ++b1)
    for (int b2 = 0; b2 < n; ++b2)
      in_gann[{b1, b2}] = nils.count(twisted_mul_elems(A, alpha, {b1, b2})) > 0;

  // The prime-intersection formula must give the same relation.
  CongRelation acc;
  acc.block.assign(n, 0);
  for (const auto& P : all_congs) {
    if (!is_prime_cong(A, P)) continue;
    if (P.contains(alpha.first, alpha.second)) continue;
    acc = meet(acc, P);
  }
  for (int b1 = 0; b1 < n; ++b1)
    for (int b2 = 0; b2 < n; ++b2)
      if (acc.contains(b1, b2) != in_gann[{b1, b2}])
        throw std::logic_error("gann: prime-intersection formula mismatch");
  return acc;
}

AlgebraReport analyze(const FiniteAlgebra& A) {
  AlgebraReport report;
  report.congruences = enumerate_congruences(A);
  const auto& all = report.congruences;
  for (const auto& cong : all) {
    CongAnalysis row;
    row.relation = cong;
    row.proper = !cong.is_improper();
    row.prime = is_prime_cong(A, cong);
    row.qc = is_qc(A, cong);
    row.indecomposable = is_indecomposable(A, cong, all);
    row.primary = is_primary(A, cong, all);
    const auto rad = radical_cong(A, cong, all);
    row.radical_index =
        std::find(all.begin(), all.end(), rad) - all.begin();
    if (row.radical_index == all.size())
      throw std::logic_error("analyze: radical not among the congruences");
    if (row.prime != (row.qc && row.indecomposable))
      report.prime_iff_qc_indecomposable = false;
    // Radical as prime intersection against complete nilpotent enumeration.
    const auto nils = nilpotent_pairs(A, cong);
    for (int a = 0; a < A.n && report.radical_equals_nilpotent; ++a)
      for (int b = 0; b < A.n; ++b)
        if (rad.contains(a, b) != (nils.count({a, b}) > 0)) {
          report.radical_equals_nilpotent = false;
          break;
        }
    report.analyses.push_back(std::move(row));
  }
  return report;
}

}  // namespace tropcong
