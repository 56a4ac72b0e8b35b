#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <stdexcept>

#include "qorbit/composition.hpp"
#include "qorbit/int_polynomial.hpp"
#include "qorbit/qbinomial.hpp"

using qorbit::Composition;
using qorbit::IntPolynomial;
using qorbit::QBinomialFamily;

namespace {

// Independent brute-force partition counter used only to cross-check the DP.
long brute_partitions(long r, long k, long m) {
  if (r == 0) return 1;
  if (k == 0 || m == 0) return 0;
  long total = 0;
  for (long first = 1; first <= m && first <= r; ++first)
    total += brute_partitions(r - first, k - 1, first);
  return total;
}

mpz_class binom(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

mpz_class factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace

TEST_CASE("composition basics") {
  Composition a({2, 1, 1});
  CHECK(a.n() == 4);
  CHECK(a.length() == 3);
  CHECK(a.factorial() == 2);
  CHECK(a.partial_sums() == std::vector<int>{2, 3});
  CHECK(a.str() == "(2,1,1)");
  CHECK(Composition::parse("2,1,1") == a);
  CHECK(Composition({5}).partial_sums().empty());
  CHECK(Composition({3, 3}).factorial() == 36);
  CHECK_THROWS_AS(Composition(std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(Composition({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Composition::parse("2,x"), std::invalid_argument);
  CHECK_THROWS_AS(Composition::parse(""), std::invalid_argument);
}

TEST_CASE("composition enumeration") {
  int count = 0;
  int total_n = 0;
  qorbit::for_each_composition(4, [&](const Composition& a) {
    ++count;
    total_n += a.n();
    CHECK(a.n() == 4);
  });
  CHECK(count == 8);  // 2^{n-1}
  CHECK(total_n == 32);
}

TEST_CASE("q_int and q_factorial") {
  CHECK(qorbit::q_int(3) == IntPolynomial({1, 1, 1}));
  CHECK(qorbit::q_int(1) == IntPolynomial({1}));
  CHECK(qorbit::q_int(0).is_zero());
  CHECK(qorbit::q_factorial(0) == IntPolynomial::one());
  CHECK(qorbit::q_factorial(3) == IntPolynomial({1, 2, 2, 1}));
  CHECK(qorbit::eval_at_one(qorbit::q_factorial(6)) == 720);
}

TEST_CASE("q_binomial basics") {
  CHECK(qorbit::q_binomial(4, 2) == IntPolynomial({1, 1, 2, 1, 1}));
  CHECK(qorbit::q_binomial(7, 0) == IntPolynomial::one());
  CHECK(qorbit::q_binomial(7, 7) == IntPolynomial::one());
  CHECK(qorbit::q_binomial(3, 1) == qorbit::q_int(3));
  CHECK_THROWS_AS(qorbit::q_binomial(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(qorbit::q_binomial(3, -1), std::invalid_argument);

  // Against the factorial-quotient definition, which the product form avoids.
  for (std::int64_t n = 0; n <= 10; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      IntPolynomial lhs = qorbit::q_binomial(n, k) * qorbit::q_factorial(k) * qorbit::q_factorial(n - k);
      CHECK(lhs == qorbit::q_factorial(n));
    }
  }
}

TEST_CASE("q_binomial degree, symmetry, Pascal") {
  for (std::int64_t n = 1; n <= 12; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      IntPolynomial f = qorbit::q_binomial(n, k);
      CHECK(f.degree() == k * (n - k));
      CHECK(f == qorbit::q_binomial(n, n - k));
      CHECK(qorbit::eval_at_one(f) == binom(n, k));
      if (k >= 1 && k <= n - 1) {
        IntPolynomial pascal = qorbit::q_binomial(n - 1, k - 1) +
                               IntPolynomial::monomial(k) * qorbit::q_binomial(n - 1, k);
        CHECK(f == pascal);
      }
    }
  }
}

TEST_CASE("q_multinomial") {
  CHECK(qorbit::q_multinomial(Composition({1, 1, 1})) == IntPolynomial({1, 2, 2, 1}));
  CHECK(qorbit::q_multinomial(Composition({6})) == IntPolynomial::one());
  CHECK(qorbit::q_multinomial(Composition({2, 1})) == IntPolynomial({1, 1, 1}));
  CHECK(qorbit::q_multinomial(Composition({2, 2})) == qorbit::q_binomial(4, 2));

  // Factorial-quotient cross-check: multinomial * prod [a_i]_q! = [n]_q!.
  qorbit::for_each_composition(7, [&](const Composition& a) {
    IntPolynomial lhs = qorbit::q_multinomial(a);
    for (int p : a.parts()) lhs *= qorbit::q_factorial(p);
    CHECK(lhs == qorbit::q_factorial(7));
  });

  // Order of parts never matters.
  CHECK(qorbit::q_multinomial(Composition({3, 1, 2})) == qorbit::q_multinomial(Composition({1, 2, 3})));
}

TEST_CASE("partition_count") {
  CHECK(qorbit::partition_count(2, 2, 2) == 2);
  CHECK(qorbit::partition_count(0, 5, 5) == 1);
  CHECK(qorbit::partition_count(0, 0, 0) == 1);
  CHECK(qorbit::partition_count(26, 5, 5) == 0);  // r = km+1 exceeds the box
  CHECK(qorbit::partition_count(25, 5, 5) == 1);
  CHECK(qorbit::partition_count(3, 0, 7) == 0);
  CHECK_THROWS_AS(qorbit::partition_count(-1, 2, 2), std::invalid_argument);

  for (long r = 0; r <= 10; ++r)
    for (long k = 0; k <= 6; ++k)
      for (long m = 0; m <= 6; ++m)
        CHECK(qorbit::partition_count(r, k, m) == brute_partitions(r, k, m));
}

TEST_CASE("oracle equivalence on a small range") {
  for (std::int64_t n = 0; n <= 12; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      IntPolynomial f = qorbit::q_binomial(n, k);
      for (std::int64_t r = 0; r <= k * (n - k); ++r)
        CHECK(f.coeff(r) == qorbit::partition_count(r, k, n - k));
    }
  }
}

TEST_CASE("coeff_residue_sums") {
  IntPolynomial f = qorbit::q_binomial(4, 2);
  std::vector<mpz_class> expect{2, 1, 2, 1};
  CHECK(qorbit::coeff_residue_sums(f, 4) == expect);
  std::vector<mpz_class> unit{1, 0, 0};
  CHECK(qorbit::coeff_residue_sums(IntPolynomial::one(), 3) == unit);

  for (std::int64_t n = 1; n <= 9; ++n) {
    IntPolynomial g = qorbit::q_binomial(9, 4);
    auto sums = qorbit::coeff_residue_sums(g, n);
    mpz_class total = 0;
    for (const auto& s : sums) total += s;
    CHECK(total == qorbit::eval_at_one(g));
    // Must agree with folding mod q^n - 1.
    IntPolynomial folded = qorbit::reduce_mod_qn_minus_1(g, n);
    for (std::int64_t i = 0; i < n; ++i) CHECK(sums[static_cast<std::size_t>(i)] == folded.coeff(i));
  }
}

TEST_CASE("unimodality and palindromicity") {
  IntPolynomial f = qorbit::q_binomial(6, 3);
  CHECK(qorbit::is_unimodal(f));
  CHECK(qorbit::is_palindromic(f));
  CHECK_FALSE(qorbit::is_unimodal(IntPolynomial({1, 2, 1, 2})));
  // A dip through zero breaks unimodality under value comparison, but not
  // palindromicity.
  CHECK_FALSE(qorbit::is_unimodal(IntPolynomial({1, 0, 1})));
  CHECK(qorbit::is_palindromic(IntPolynomial({1, 0, 1})));
  CHECK_FALSE(qorbit::is_palindromic(IntPolynomial({1, 1, 2})));
  CHECK(qorbit::is_unimodal(IntPolynomial({2})));
  CHECK_THROWS_AS(qorbit::is_unimodal(IntPolynomial()), std::invalid_argument);
  CHECK_THROWS_AS(qorbit::is_unimodal(IntPolynomial({1, -1, 1})), std::invalid_argument);

  for (std::int64_t n = 1; n <= 14; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      IntPolynomial g = qorbit::q_binomial(n, k);
      CHECK(qorbit::is_unimodal(g));
      CHECK(qorbit::is_palindromic(g));
    }
  }
}

TEST_CASE("peak coefficient of qbinom(n,2) is floor(n/2)") {
  for (std::int64_t n = 2; n <= 50; ++n) {
    CHECK(qorbit::max_coeff(qorbit::q_binomial(n, 2)) == n / 2);
    // Same statement through the independent oracle.
    mpz_class peak = 0;
    for (std::int64_t r = 0; r <= 2 * (n - 2); ++r) {
      mpz_class c = qorbit::partition_count(r, 2, n - 2);
      if (c > peak) peak = c;
    }
    CHECK(peak == n / 2);
  }
}

TEST_CASE("column containment") {
  // qbinom(n,k) - qbinom(n-1,k-1) has nonnegative coefficients.
  for (std::int64_t n = 1; n <= 20; ++n) {
    for (std::int64_t k = 1; k <= n; ++k) {
      IntPolynomial d = qorbit::q_binomial(n, k) - qorbit::q_binomial(n - 1, k - 1);
      for (const auto& v : d.coeffs()) CHECK(v >= 0);
    }
  }
}

TEST_CASE("family matches direct construction") {
  for (std::int64_t n = 0; n <= 14; ++n) {
    QBinomialFamily fam(n);
    for (std::int64_t k = 0; k <= n; ++k) {
      CHECK(fam.k() == k);
      CHECK(fam.degree() == k * (n - k));
      IntPolynomial direct = qorbit::q_binomial(n, k);
      CHECK(fam.to_polynomial() == direct);
      CHECK(fam.eval_at_one() == binom(n, k));
      CHECK(fam.max_coeff() == qorbit::max_coeff(direct));
      CHECK(fam.coeff(-1) == 0);
      CHECK(fam.coeff(fam.degree() + 1) == 0);
      CHECK(fam.coeff(fam.degree()) == 1);
      if (k < n) fam.next_k();
    }
    CHECK_THROWS_AS(fam.next_k(), std::logic_error);
  }
}

TEST_CASE("family step example") {
  QBinomialFamily fam(4);
  fam.next_k();
  CHECK(fam.to_polynomial() == qorbit::q_int(4));
  fam.next_k();
  CHECK(fam.to_polynomial() == IntPolynomial({1, 1, 2, 1, 1}));
  CHECK(fam.midpoint() == 2);
  CHECK(fam.coeff(2) == 2);
}

TEST_CASE("near-corner coefficient dominates a binomial ratio") {
  // k! * [q^{n-k}] qbinom(n,k) >= C(n-1,k-1), exact integer form.
  for (std::int64_t n = 16; n <= 100; ++n) {
    QBinomialFamily fam(n);
    for (std::int64_t k = 0; k < 5; ++k) fam.next_k();
    for (std::int64_t k = 5; k <= n; ++k) {
      mpz_class lhs = factorial(static_cast<unsigned long>(k)) * fam.coeff(n - k);
      CHECK(lhs >= binom(static_cast<unsigned long>(n - 1), static_cast<unsigned long>(k - 1)));
      if (k < n) fam.next_k();
    }
  }
}
