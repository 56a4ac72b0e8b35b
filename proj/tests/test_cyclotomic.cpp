#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "qorbit/cyclotomic.hpp"
#include "qorbit/int_polynomial.hpp"
#include "qorbit/number_theory.hpp"
#include "qorbit/qbinomial.hpp"
#include "qorbit/rat_polynomial.hpp"

using qorbit::IntPolynomial;
using qorbit::NumberTheoryKit;
using qorbit::RatPolynomial;

namespace {

// Direct trial-division reimplementations, used only to cross-check the kit.
int brute_mobius(std::int64_t d) {
  int sign = 1;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % p) continue;
    d /= p;
    if (d % p == 0) return 0;
    sign = -sign;
  }
  if (d > 1) sign = -sign;
  return sign;
}

std::int64_t brute_phi(std::int64_t d) {
  std::int64_t count = 0;
  for (std::int64_t i = 1; i <= d; ++i)
    if (std::gcd(i, d) == 1) ++count;
  return count;
}

RatPolynomial half_of(const IntPolynomial& f) { return RatPolynomial(f) * mpq_class(1, 2); }

}  // namespace

TEST_CASE("number theory kit") {
  NumberTheoryKit kit;
  const int mob[] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0, -1, 1, 1, 0, -1, 0, -1, 0};
  const std::int64_t phi[] = {1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4, 12, 6, 8, 8, 16, 6, 18, 8};
  for (std::int64_t d = 1; d <= 20; ++d) {
    CHECK(kit.mobius(d) == mob[d - 1]);
    CHECK(kit.euler_phi(d) == phi[d - 1]);
  }
  for (std::int64_t d = 1; d <= 500; ++d) {
    CHECK(kit.mobius(d) == brute_mobius(d));
    CHECK(kit.euler_phi(d) == brute_phi(d));
    CHECK(kit.is_squarefree(d) == (brute_mobius(d) != 0));
  }
  CHECK(kit.divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
  CHECK(kit.divisors(1) == std::vector<std::int64_t>{1});
  CHECK(kit.smallest_squared_prime(12) == 2);
  CHECK(kit.smallest_squared_prime(45) == 3);
  CHECK(kit.smallest_squared_prime(30) == 0);
  CHECK(NumberTheoryKit::gcd(12, 18) == 6);
  CHECK(NumberTheoryKit::gcd(7, 0) == 7);
  auto f360 = kit.factor(360);
  REQUIRE(f360.size() == 3);
  CHECK(f360[0] == std::pair<std::int64_t, int>{2, 3});
  CHECK(f360[1] == std::pair<std::int64_t, int>{3, 2});
  CHECK(f360[2] == std::pair<std::int64_t, int>{5, 1});
  CHECK(qorbit::binomial(10, 3) == 120);
  CHECK(qorbit::binomial(10, 11) == 0);
  CHECK(qorbit::factorial(6) == 720);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(qorbit::cyclotomic(1) == IntPolynomial({-1, 1}));
  CHECK(qorbit::cyclotomic(2) == IntPolynomial({1, 1}));
  CHECK(qorbit::cyclotomic(4) == IntPolynomial({1, 0, 1}));
  CHECK(qorbit::cyclotomic(6) == IntPolynomial({1, -1, 1}));
  CHECK(qorbit::cyclotomic(12) == IntPolynomial({1, 0, -1, 0, 1}));
  CHECK_THROWS_AS(qorbit::cyclotomic(0), std::invalid_argument);

  NumberTheoryKit kit;
  for (std::int64_t n = 1; n <= 200; ++n) {
    IntPolynomial prod = IntPolynomial::one();
    for (std::int64_t d : kit.divisors(n)) {
      const IntPolynomial phi_d = qorbit::cyclotomic(d);
      CHECK(phi_d.degree() == kit.euler_phi(d));
      prod *= phi_d;
    }
    CHECK(prod == IntPolynomial::monomial(n) - IntPolynomial::one());
  }
}

TEST_CASE("F family basics") {
  // F(n,1) = [n]_q / n.
  for (std::int64_t n = 1; n <= 12; ++n) {
    CHECK(qorbit::F(n, 1) == RatPolynomial(qorbit::q_int(n)) * mpq_class(1, n));
  }
  CHECK(qorbit::F(2, 2) == half_of(IntPolynomial({1, -1})));
  CHECK(qorbit::F(4, 4) == half_of(IntPolynomial({1, 0, -1})));
  CHECK(qorbit::F(4, 2) == RatPolynomial(IntPolynomial({1, -1, 1, -1})) * mpq_class(1, 4));
  CHECK_THROWS_AS(qorbit::F(4, 3), std::invalid_argument);
  CHECK_THROWS_AS(qorbit::F(0, 1), std::invalid_argument);

  // Degree stays below n.
  NumberTheoryKit kit;
  for (std::int64_t n = 1; n <= 40; ++n)
    for (std::int64_t d : kit.divisors(n)) CHECK(qorbit::F(n, d).degree() < n);
}

TEST_CASE("recursion step choice does not matter") {
  NumberTheoryKit kit;
  for (std::int64_t n = 1; n <= 60; ++n) {
    for (std::int64_t d : kit.divisors(n)) {
      if (kit.is_squarefree(d)) continue;
      RatPolynomial canonical = qorbit::F(n, d);
      for (const auto& [p, mult] : kit.factor(d)) {
        if (mult < 2) continue;
        CHECK(qorbit::F_with_e(n, d, p) == canonical);
      }
    }
  }
  CHECK_THROWS_AS(qorbit::F_with_e(4, 4, 3), std::invalid_argument);
  CHECK_THROWS_AS(qorbit::F_with_e(8, 8, 4), std::invalid_argument);
}

TEST_CASE("congruence decomposition") {
  auto check42 = qorbit::verify_congruence(4, 2);
  CHECK(check42.holds);
  CHECK(check42.lhs == IntPolynomial({2, 1, 2, 1}));
  CHECK(check42.rhs == RatPolynomial(IntPolynomial({2, 1, 2, 1})));
  CHECK(check42.residual.is_zero());

  // Same expansion by hand: 6*F(4,1) + 2*F(4,2).
  RatPolynomial rhs = qorbit::F(4, 1) * mpq_class(6) + qorbit::F(4, 2) * mpq_class(2);
  CHECK(rhs == check42.rhs);

  for (std::int64_t n = 1; n <= 24; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(qorbit::verify_congruence(n, k).holds);
    }
  }
}

TEST_CASE("coprime case forces equal residue sums") {
  for (std::int64_t n = 2; n <= 30; ++n) {
    for (std::int64_t k = 1; k < n; ++k) {
      if (NumberTheoryKit::gcd(n, k) != 1) continue;
      auto sums = qorbit::coeff_residue_sums(qorbit::q_binomial(n, k), n);
      mpz_class expect = qorbit::binomial(n, k) / n;
      CHECK(expect * n == qorbit::binomial(n, k));
      for (const auto& s : sums) CHECK(s == expect);
    }
  }
}

TEST_CASE("delta property of F at roots of unity") {
  CHECK(qorbit::verify_F_delta(4, 4, 4));
  CHECK(qorbit::verify_F_delta(4, 4, 2));
  CHECK(qorbit::verify_F_delta(6, 1, 1));
  CHECK(qorbit::verify_F_delta(1, 1, 1));

  NumberTheoryKit kit;
  for (std::int64_t n = 1; n <= 24; ++n) {
    for (std::int64_t d : kit.divisors(n)) {
      for (std::int64_t c : kit.divisors(n)) {
        CAPTURE(n);
        CAPTURE(d);
        CAPTURE(c);
        CHECK(qorbit::verify_F_delta(n, d, c));
      }
    }
  }
}

TEST_CASE("coefficient bound d/n") {
  CHECK(qorbit::check_F_coeff_bound(4, 2));
  CHECK(qorbit::check_F_coeff_bound(4, 4));
  NumberTheoryKit kit;
  for (std::int64_t n = 1; n <= 40; ++n) {
    for (std::int64_t d : kit.divisors(n)) CHECK(qorbit::check_F_coeff_bound(n, d));
    // Tight at d=1: every coefficient of F(n,1) equals 1/n exactly.
    const RatPolynomial fn1 = qorbit::F(n, 1);
    mpq_class tight(1, n);
    tight.canonicalize();
    for (const auto& v : fn1.coeffs()) CHECK(v == tight);
  }
}
