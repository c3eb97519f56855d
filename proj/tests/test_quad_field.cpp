#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "hilbertk/cyclotomic.hpp"
#include "hilbertk/errors.hpp"
#include "hilbertk/quad_field.hpp"
#include "oracles.hpp"

using namespace hilbertk;

namespace {

Rational r(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

QuadElem q(long d, Rational a, Rational b) { return QuadElem(FieldSpec::make(d), std::move(a), std::move(b)); }

std::set<std::pair<std::string, int>> as_set(const std::vector<TraceCandidate>& cs) {
  std::set<std::pair<std::string, int>> out;
  for (const auto& c : cs) out.emplace(c.trace.to_string(), c.psl_order);
  return out;
}

// Does the monic rational quadratic x^2 + bx + c have a root in Q(sqrt d)?
bool has_root_in_field(long b, long c, long d) {
  const long disc = b * b - 4 * c;
  auto is_square = [](long v) {
    if (v < 0) return false;
    long s = 0;
    while (s * s < v) ++s;
    return s * s == v;
  };
  if (is_square(disc)) return true;
  return disc % d == 0 && is_square(disc / d);
}

}  // namespace

TEST_CASE("field spec validation") {
  CHECK(FieldSpec::make(5).omega_kind() == OmegaKind::HalfOnePlusSqrtD);
  CHECK(FieldSpec::make(2).omega_kind() == OmegaKind::SqrtD);
  CHECK(FieldSpec::make(3).omega_kind() == OmegaKind::SqrtD);
  CHECK_THROWS_AS(FieldSpec::make(12), InvalidInput);
  CHECK_THROWS_AS(FieldSpec::make(1), InvalidInput);
  CHECK_THROWS_AS(FieldSpec::make(-5), InvalidInput);
  CHECK_THROWS_AS(FieldSpec::make(49), InvalidInput);
  CHECK(is_square_free(30));
  CHECK_FALSE(is_square_free(18));
}

TEST_CASE("algebraic integers") {
  CHECK(is_algebraic_integer(q(5, r(1, 2), r(1, 2))));
  CHECK_FALSE(is_algebraic_integer(q(5, r(1, 2), r(0))));
  CHECK(is_algebraic_integer(q(2, r(0), r(1))));
  // d = 2, 3 mod 4: half-integer coordinates are never integral
  CHECK_FALSE(is_algebraic_integer(q(3, r(1, 2), r(1, 2))));
  CHECK_FALSE(is_algebraic_integer(q(2, r(1, 2), r(1, 2))));
  CHECK(is_algebraic_integer(q(13, r(-3, 2), r(5, 2))));

  SUBCASE("trace/norm rule agrees with integral basis membership") {
    for (long d : {2L, 3L, 5L, 6L, 7L, 13L, 17L}) {
      const auto f = FieldSpec::make(d);
      for (long an = -6; an <= 6; ++an)
        for (long bn = -6; bn <= 6; ++bn) {
          const QuadElem x(f, r(an, 2), r(bn, 2));
          auto [cx, cy] = x.basis_coords();
          CHECK(is_algebraic_integer(x) == (cx.is_integer() && cy.is_integer()));
        }
    }
  }
}

TEST_CASE("embeddings") {
  const auto root5 = q(5, r(0), r(1));
  CHECK(embed(root5, 2).exact == q(5, r(0), r(-1)));
  CHECK(embed(root5, 1).exact == root5);
  CHECK(embed(q(5, r(3), r(0)), 2).exact == q(5, r(3), r(0)));
  CHECK(embed(root5, 2).approx == doctest::Approx(-2.2360679775));
  CHECK_THROWS_AS(embed(root5, 3), InvalidInput);

  const auto x = q(7, r(3, 5), r(-2, 3));
  const auto prod = embed(x, 1).exact * embed(x, 2).exact;
  const auto sum = embed(x, 1).exact + embed(x, 2).exact;
  CHECK(prod.b().is_zero());
  CHECK(sum.b().is_zero());
  CHECK(prod.a() == x.norm());
}

TEST_CASE("exact sign of a + b sqrt d") {
  CHECK(sign_of(r(2), r(-1), 3) == 1);   // 2 - 1.73
  CHECK(sign_of(r(2), r(-1), 5) == -1);  // 2 - 2.24
  CHECK(sign_of(r(2), r(-1), 4) == 0);
  CHECK(sign_of(r(0), r(0), 5) == 0);
  CHECK(sign_of(r(-1), r(0), 5) == -1);
  CHECK(sign_of(r(0), r(1, 3), 5) == 1);
}

TEST_CASE("elliptic traces") {
  CHECK(is_elliptic_trace(q(5, r(1, 2), r(1, 2))));
  CHECK_FALSE(is_elliptic_trace(q(5, r(3), r(0))));
  CHECK(is_elliptic_trace(q(2, r(0), r(1))));
  CHECK_FALSE(is_elliptic_trace(q(5, r(2), r(0))));  // parabolic
  CHECK_FALSE(is_elliptic_trace(q(3, r(1), r(1))));  // 2.73 and -0.73
  CHECK_THROWS_AS(is_elliptic_trace(q(5, r(1, 2), r(0))), PreconditionViolation);
}

TEST_CASE("trace minimal polynomials") {
  auto poly = [](std::initializer_list<long> c) {
    IntPoly p;
    for (long v : c) p.emplace_back(v);
    return p;
  };
  CHECK(cyclotomic_polynomial(1) == poly({-1, 1}));
  CHECK(cyclotomic_polynomial(12) == poly({1, 0, -1, 0, 1}));
  CHECK(trace_minimal_polynomial(4) == poly({0, 1}));       // 0
  CHECK(trace_minimal_polynomial(6) == poly({-1, 1}));      // 1
  CHECK(trace_minimal_polynomial(3) == poly({1, 1}));       // -1
  CHECK(trace_minimal_polynomial(8) == poly({-2, 0, 1}));   // sqrt 2
  CHECK(trace_minimal_polynomial(10) == poly({-1, -1, 1}));  // (1+sqrt5)/2
  CHECK(trace_minimal_polynomial(12) == poly({-3, 0, 1}));  // sqrt 3
  CHECK(trace_minimal_polynomial(7) == poly({-1, -2, 1, 1}));

  SUBCASE("degree is phi(N)/2 and TracePolynomials agrees") {
    const TracePolynomials table(40);
    for (int n = 3; n <= 40; ++n) {
      int phi = 0;
      for (int t = 1; t <= n; ++t) phi += std::gcd(t, n) == 1;
      const auto& p = table.psi(n);
      CHECK(static_cast<int>(p.size()) - 1 == phi / 2);
      CHECK(p.back() == 1);
      CHECK(p == trace_minimal_polynomial(n));
    }
  }
}

TEST_CASE("order from trace") {
  CHECK(order_from_trace(q(5, r(0), r(0))) == 2);
  CHECK(order_from_trace(q(5, r(1), r(0))) == 3);
  CHECK(order_from_trace(q(5, r(-1), r(0))) == 3);
  CHECK(order_from_trace(q(5, r(1, 2), r(1, 2))) == 5);
  CHECK(order_from_trace(q(5, r(-1, 2), r(1, 2))) == 5);
  CHECK(order_from_trace(q(2, r(0), r(1))) == 4);
  CHECK(order_from_trace(q(3, r(0), r(1))) == 6);
  // sqrt 3 has order 6: with a bound of 5 it is out of reach
  CHECK_FALSE(order_from_trace(q(3, r(0), r(1)), 5).has_value());
  CHECK_THROWS_AS(order_from_trace(q(5, r(3), r(0))), PreconditionViolation);
}

TEST_CASE("trace candidates for d = 5") {
  const auto cs = elliptic_trace_candidates(FieldSpec::make(5));
  const std::set<std::pair<std::string, int>> expected{
      {"0", 2},
      {"1", 3},
      {"-1", 3},
      {"1/2 + 1/2*sqrt(5)", 5},
      {"1/2 - 1/2*sqrt(5)", 5},
      {"-1/2 + 1/2*sqrt(5)", 5},
      {"-1/2 - 1/2*sqrt(5)", 5},
  };
  CHECK(cs.size() == 7);
  CHECK(as_set(cs) == expected);
}

TEST_CASE("trace candidates for d = 2 and d = 7") {
  const auto c2 = elliptic_trace_candidates(FieldSpec::make(2));
  CHECK(as_set(c2) == std::set<std::pair<std::string, int>>{
                          {"0", 2}, {"1", 3}, {"-1", 3}, {"sqrt(2)", 4}, {"-sqrt(2)", 4}});
  const auto c7 = elliptic_trace_candidates(FieldSpec::make(7));
  CHECK(as_set(c7) == std::set<std::pair<std::string, int>>{{"0", 2}, {"1", 3}, {"-1", 3}});
}

TEST_CASE("allowed orders") {
  CHECK(allowed_orders(FieldSpec::make(5)) == std::vector<int>{2, 3, 5});
  CHECK(allowed_orders(FieldSpec::make(2)) == std::vector<int>{2, 3, 4});
  CHECK(allowed_orders(FieldSpec::make(7)) == std::vector<int>{2, 3});
  CHECK(allowed_orders(FieldSpec::make(3)) == std::vector<int>{2, 3, 6});
}

TEST_CASE("candidate enumeration matches a wide floating scan, and orders match matrix powers") {
  for (long d = 2; d <= 60; ++d) {
    if (!is_square_free(d)) continue;
    const auto f = FieldSpec::make(d);
    const auto cs = elliptic_trace_candidates(f);
    const auto scan = oracle::elliptic_traces_by_scan(f, 12);
    REQUIRE(cs.size() == scan.size());
    for (std::size_t i = 0; i < cs.size(); ++i) {
      CHECK(cs[i].trace == scan[i]);
      CHECK(cs[i].psl_order == oracle::psl_order_by_powers(cs[i].trace, 40));
    }
  }
}

TEST_CASE("candidate set invariants across d") {
  for (long d = 2; d <= 200; ++d) {
    if (!is_square_free(d)) continue;
    const auto f = FieldSpec::make(d);
    const auto cs = elliptic_trace_candidates(f);
    std::set<std::pair<std::string, std::string>> keys;
    for (const auto& c : cs) keys.emplace(c.trace.a().to_string(), c.trace.b().to_string());
    for (const auto& c : cs) {
      const auto neg = -c.trace;
      const auto conj = embed(c.trace, 2).exact;
      CHECK(keys.count({neg.a().to_string(), neg.b().to_string()}) == 1);
      CHECK(keys.count({conj.a().to_string(), conj.b().to_string()}) == 1);
      CHECK(c.trace.norm().is_integer());
    }
    for (long t : {0L, 1L, -1L}) CHECK(keys.count({std::to_string(t), "0"}) == 1);

    const auto orders = allowed_orders(f);
    const std::vector<int> always{2, 3};
    CHECK(std::includes(orders.begin(), orders.end(), always.begin(), always.end()));
    for (int o : orders) CHECK((o >= 2 && o <= 6));
    auto has = [&](int o) { return std::find(orders.begin(), orders.end(), o) != orders.end(); };
    CHECK(has(4) == (d == 2));
    CHECK(has(5) == (d == 5));
    CHECK(has(6) == (d == 3));
    CHECK(has(4) == has_root_in_field(0, -2, d));
    CHECK(has(5) == has_root_in_field(-1, -1, d));
    CHECK(has(6) == has_root_in_field(0, -3, d));
  }
}
