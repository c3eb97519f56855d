#include <doctest.h>

#include "hilbertk/cyclic_reps.hpp"
#include "hilbertk/errors.hpp"
#include "oracles.hpp"

using namespace hilbertk;

TEST_CASE("q counts divisors") {
  CHECK(q_count(1) == 1);
  CHECK(q_count(5) == 2);
  CHECK(q_count(12) == 6);
}

TEST_CASE("real and complex-type counts") {
  CHECK(r_count(1) == 1);
  CHECK(r_count(2) == 2);
  CHECK(r_count(3) == 2);
  CHECK(r_count(5) == 3);
  CHECK(c_count(2) == 0);
  CHECK(c_count(3) == 1);
  CHECK(c_count(5) == 2);
}

TEST_CASE("p-adic counts") {
  for (int p : {2, 3, 5, 7}) CHECK(kp_count(1, p) == 1);
  CHECK(kp_count(2, 2) == 2);
  CHECK(kp_count(4, 2) == 3);
  CHECK(kp_count(5, 3) == 2);
  CHECK(kp_count(5, 5) == 2);
  CHECK(kp_count(6, 2) == 4);
  CHECK(kp_count(6, 3) == 4);
}

TEST_CASE("mod p counts") {
  CHECK(rp_count(1, 3) == 1);
  CHECK(rp_count(2, 2) == 1);
  CHECK(rp_count(5, 3) == 2);
  CHECK(rp_count(5, 5) == 1);
  CHECK(rp_count(7, 2) == 3);  // x^7 - 1 = (x - 1)(cubic)(cubic) over F_2
}

TEST_CASE("non-prime p and bad n are rejected") {
  CHECK_THROWS_AS(kp_count(5, 4), InvalidInput);
  CHECK_THROWS_AS(rp_count(5, 1), InvalidInput);
  CHECK_THROWS_AS(q_count(0), InvalidInput);
  CHECK_THROWS_AS(r_count(-3), InvalidInput);
}

TEST_CASE("rep_counts aggregate") {
  const RepCounts two = rep_counts(2);
  CHECK(two.r == 2);
  CHECK(two.c == 0);
  CHECK(two.q == 2);
  CHECK(two.per_prime == std::map<int, PrimeCounts>{{2, {2, 1}}});

  const RepCounts five = rep_counts(5);
  CHECK(five.r == 3);
  CHECK(five.c == 2);
  CHECK(five.q == 2);
  CHECK(five.per_prime == std::map<int, PrimeCounts>{{5, {2, 1}}});

  const RepCounts one = rep_counts(1);
  CHECK(one.r == 1);
  CHECK(one.c == 0);
  CHECK(one.q == 1);
  CHECK(one.per_prime.empty());

  CHECK(rep_counts(60).per_prime.size() == 3);
}

TEST_CASE("closed forms against character-orbit brute force") {
  for (int n = 1; n <= 300; ++n) {
    CHECK(r_count(n) == oracle::real_irreps(n));
    CHECK(c_count(n) == oracle::complex_type_irreps(n));
    CHECK(q_count(n) == oracle::rational_irreps(n));
    CHECK(r_count(n) + c_count(n) == n);
    CHECK(r_count(n) - c_count(n) == (n % 2 ? 1 : 2));
    CHECK(q_count(n) <= r_count(n));
  }
}

TEST_CASE("per-prime counts against two oracles") {
  for (int n = 1; n <= 120; ++n)
    for (int p : {2, 3, 5, 7, 11, 13}) {
      const int k = kp_count(n, p), rp = rp_count(n, p);
      CHECK(k == oracle::padic_irreps(n, p));
      CHECK(k == oracle::padic_factor_count(n, p));
      CHECK(rp == oracle::modp_irreps(n, p));
      CHECK(rp == oracle::modp_factor_count(n, p));
      CHECK(k >= rp);
      if (n % p != 0) CHECK(k == rp);
    }
}
