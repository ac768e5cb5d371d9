// Copyright (c) tropcong contributors.
// SPDX-License-Identifier: Apache-2.0
#ifndef TROPCONG_FINLAB_HPP
#define TROPCONG_FINLAB_HPP

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tropcong {

// A finite commutative semiring with idempotent addition, given by full
// operation tables over {0, ..., n-1}.
struct FiniteAlgebra {
  int n = 0;
  std::vector<std::vector<int>> add;
  std::vector<std::vector<int>> mul;
  int zero = 0;
  int one = 1;
};

// Every violated axiom, empty when the tables form a B-algebra.
std::vector<std::string> check_algebra(const FiniteAlgebra& tables);

// Verified algebra or an input_error listing the violated axioms.
FiniteAlgebra validate_algebra(const FiniteAlgebra& tables);

// A congruence as an operation-compatible partition, stored as a canonical
// restricted-growth string (block[i] is the block id of element i).
struct CongRelation {
  std::vector<int> block;

  bool contains(int a, int b) const { return block[a] == block[b]; }
  bool is_trivial() const;   // the diagonal
  bool is_improper() const;  // the full relation
  std::size_t block_count() const;
  std::vector<std::vector<int>> blocks() const;

  friend auto operator<=>(const CongRelation&, const CongRelation&) = default;
};

CongRelation meet(const CongRelation& a, const CongRelation& b);
// a refines b: every pair of a is a pair of b.
bool refines(const CongRelation& a, const CongRelation& b);

// All congruences by filtering the set partitions; n is guarded at 8.
std::vector<CongRelation> enumerate_congruences(const FiniteAlgebra& A);

using ElemPair = std::pair<int, int>;

ElemPair twisted_mul_elems(const FiniteAlgebra& A, ElemPair a, ElemPair b);

bool is_prime_cong(const FiniteAlgebra& A, const CongRelation& P);
bool is_qc(const FiniteAlgebra& A, const CongRelation& P);
bool is_indecomposable(const FiniteAlgebra& A, const CongRelation& P,
                       const std::vector<CongRelation>& all_congs);
bool is_primary(const FiniteAlgebra& A, const CongRelation& I,
                const std::vector<CongRelation>& all_congs);

// Intersection of the enumerated primes containing I; the empty
// intersection is the improper congruence.
CongRelation radical_cong(const FiniteAlgebra& A, const CongRelation& I,
                          const std::vector<CongRelation>& all_congs);

// Pairs with some generalized power in I, by complete enumeration: powers
// cycle inside the finite twisted-pair monoid and c ranges over the carrier.
std::set<ElemPair> nilpotent_pairs(const FiniteAlgebra& A, const CongRelation& I);

// Annihilator of an element: {beta : a b1 = a b2}; always a congruence.
CongRelation ann_elem(const FiniteAlgebra& A, int a);

// Annihilator of a pair: {beta : alpha beta diagonal}. May fail
// transitivity, which is reported rather than raised.
struct AnnPairResult {
  std::set<ElemPair> relation;
  bool transitive = true;
};
AnnPairResult ann_pair(const FiniteAlgebra& A, ElemPair alpha);

// Generalized annihilator {beta : alpha beta nilpotent}; equals the
// intersection of the primes not containing alpha.
CongRelation gann(const FiniteAlgebra& A, ElemPair alpha,
                  const std::vector<CongRelation>& all_congs);

// Full per-congruence analysis used by the CLI report.
struct CongAnalysis {
  CongRelation relation;
  bool proper = true;
  bool prime = false;
  bool qc = false;
  bool indecomposable = false;
  bool primary = false;
  std::size_t radical_index = 0;  // index into the enumerated congruence list
};

struct AlgebraReport {
  std::vector<CongRelation> congruences;
  std::vector<CongAnalysis> analyses;
  bool radical_equals_nilpotent = true;  // checked for every congruence
  bool prime_iff_qc_indecomposable = true;
};

AlgebraReport analyze(const FiniteAlgebra& A);

}  // namespace tropcong

#endif
