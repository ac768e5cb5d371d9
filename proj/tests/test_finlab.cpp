// Copyright (c) tropcong contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "tropcong/errors.hpp"
#include "tropcong/finlab.hpp"
#include "tropcong/json_io.hpp"

using namespace tropcong;

namespace {

FiniteAlgebra load_fixture(const std::string& name) {
  std::ifstream in("fixtures/" + name + ".json");
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return validate_algebra(io::parse_algebra(io::parse_document(buf.str())));
}

const std::vector<std::string> kFixtures = {"b2",    "chain3", "nil3",
                                            "ex311", "bxb4",   "zchain6"};

// Shorthand for a partition given directly by block ids.
CongRelation rel(std::vector<int> block) {
  CongRelation c;
  c.block = std::move(block);
  return c;
}

}  // namespace

TEST_CASE("algebra validation accepts the fixtures and rejects bad tables") {
  for (const auto& name : kFixtures) {
    const auto A = load_fixture(name);
    CHECK(check_algebra(A).empty());
  }
  FiniteAlgebra bad = load_fixture("b2");
  bad.add[1][1] = 0;  // 1 + 1 = 0: breaks idempotency
  const auto issues = check_algebra(bad);
  CHECK_FALSE(issues.empty());
  CHECK_THROWS_AS(validate_algebra(bad), input_error);
}

TEST_CASE("B has exactly the trivial and the improper congruence") {
  const auto B = load_fixture("b2");
  const auto congs = enumerate_congruences(B);
  REQUIRE(congs.size() == 2);
  CHECK(congs[0].is_improper());
  CHECK(congs[1].is_trivial());
  CHECK(is_prime_cong(B, congs[1]));
  CHECK_FALSE(is_prime_cong(B, congs[0]));
}

TEST_CASE("the 4-element fixture has exactly the expected congruences") {
  const auto A = load_fixture("ex311");
  const auto congs = enumerate_congruences(A);
  // diag, I1 = {(0,y)}, I2 = {(0,y),(0,x)}, I3 = {(0,y),(1,x)}, improper.
  REQUIRE(congs.size() == 5);
  const auto diag = rel({0, 1, 2, 3});
  const auto i1 = rel({0, 1, 2, 0});
  const auto i2 = rel({0, 1, 0, 0});
  const auto i3 = rel({0, 1, 1, 0});
  const auto improper = rel({0, 0, 0, 0});
  for (const auto& c : {diag, i1, i2, i3, improper})
    CHECK(std::find(congs.begin(), congs.end(), c) != congs.end());

  CHECK(is_prime_cong(A, i2));
  CHECK(is_prime_cong(A, i3));
  CHECK_FALSE(is_prime_cong(A, i1));
  CHECK_FALSE(is_prime_cong(A, diag));

  // Rad(diag) = I2 meet I3 = I1.
  CHECK(meet(i2, i3) == i1);
  CHECK(radical_cong(A, diag, congs) == i1);

  // diag is intersection indecomposable but not primary.
  CHECK(is_indecomposable(A, diag, congs));
  CHECK_FALSE(is_primary(A, diag, congs));
}

TEST_CASE("congruences are closed under intersection") {
  for (const auto& name : kFixtures) {
    const auto A = load_fixture(name);
    const auto congs = enumerate_congruences(A);
    CHECK(congs.size() >= 2);
    for (const auto& c1 : congs)
      for (const auto& c2 : congs) {
        const auto m = meet(c1, c2);
        CHECK(std::find(congs.begin(), congs.end(), m) != congs.end());
      }
  }
}

TEST_CASE("prime iff QC and intersection indecomposable") {
  for (const auto& name : kFixtures) {
    const auto A = load_fixture(name);
    const auto congs = enumerate_congruences(A);
    for (const auto& c : congs)
      CHECK(is_prime_cong(A, c) ==
            (is_qc(A, c) && is_indecomposable(A, c, congs)));
  }
}

TEST_CASE("primes are indecomposable with totally ordered quotients") {
  for (const auto& name : kFixtures) {
    const auto A = load_fixture(name);
    const auto congs = enumerate_congruences(A);
    for (const auto& P : congs) {
      if (!is_prime_cong(A, P)) continue;
      CHECK(is_indecomposable(A, P, congs));
      // Total order on the quotient: a + b lands in the block of a or b.
      for (int a = 0; a < A.n; ++a)
        for (int b = 0; b < A.n; ++b) {
          const int s = A.add[a][b];
          CHECK((P.contains(s, a) || P.contains(s, b)));
        }
    }
  }
}

TEST_CASE("radical equals the complete nilpotent-pair enumeration") {
  for (const auto& name : kFixtures) {
    const auto A = load_fixture(name);
    const auto congs = enumerate_congruences(A);
    for (const auto& I : congs) {
      const auto rad = radical_cong(A, I, congs);
      const auto nils = nilpotent_pairs(A, I);
      for (int a = 0; a < A.n; ++a)
        for (int b = 0; b < A.n; ++b)
          CHECK(rad.contains(a, b) == (nils.count({a, b}) > 0));
      // Idempotency.
      CHECK(radical_cong(A, rad, congs) == rad);
    }
    // Rad(improper) = improper.
    CongRelation improper;
    improper.block.assign(A.n, 0);
    CHECK(radical_cong(A, improper, congs).is_improper());
  }
}

TEST_CASE("radicals of primary congruences are prime") {
  for (const auto& name : kFixtures) {
    const auto A = load_fixture(name);
    const auto congs = enumerate_congruences(A);
    for (const auto& I : congs) {
      if (I.is_improper() || !is_primary(A, I, congs)) continue;
      CHECK(is_prime_cong(A, radical_cong(A, I, congs)));
    }
  }
}

TEST_CASE("annihilators") {
  const auto B = load_fixture("b2");
  CHECK(ann_elem(B, 1).is_trivial());

  const auto A = load_fixture("ex311");
  const auto congs = enumerate_congruences(A);
  // gann((1, x)) is the intersection of the primes avoiding (1, x) = I2.
  const auto g = gann(A, {1, 2}, congs);
  CHECK(g == rel({0, 1, 0, 0}));

  // Pair annihilators always contain the diagonal and are symmetric; the
  // transitivity flag is reported per pair.
  for (const auto& name : kFixtures) {
    const auto F = load_fixture(name);
    for (int a = 0; a < F.n; ++a)
      for (int b = 0; b < F.n; ++b) {
        const auto res = ann_pair(F, {a, b});
        for (int x = 0; x < F.n; ++x) CHECK(res.relation.count({x, x}) > 0);
        if (res.transitive)
          for (const auto& [x, y] : res.relation)
            CHECK(res.relation.count({y, x}) > 0);
      }
  }
}

TEST_CASE("the analyze report matches the by-hand flags") {
  const auto A = load_fixture("ex311");
  const auto report = analyze(A);
  REQUIRE(report.congruences.size() == 5);
  CHECK(report.radical_equals_nilpotent);
  CHECK(report.prime_iff_qc_indecomposable);
  int primes = 0, proper_nontrivial = 0;
  for (const auto& row : report.analyses) {
    if (row.prime) ++primes;
    if (row.proper && !row.relation.is_trivial()) ++proper_nontrivial;
    CHECK(report.congruences[row.radical_index] ==
          radical_cong(A, row.relation, report.congruences));
  }
  CHECK(primes == 2);
  CHECK(proper_nontrivial == 3);
}

TEST_CASE("the enumeration guard rejects large carriers") {
  FiniteAlgebra big;
  big.n = 9;
  CHECK_THROWS_AS(enumerate_congruences(big), resource_error);
}
