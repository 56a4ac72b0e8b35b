#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "qorbit/composition.hpp"
#include "qorbit/int_polynomial.hpp"

namespace qorbit {

// [n]_q = 1 + q + ... + q^{n-1}; the empty sum for n = 0.
IntPolynomial q_int(std::int64_t n);

// [n]_q! = [1]_q [2]_q ... [n]_q; the empty product for n = 0.
IntPolynomial q_factorial(std::int64_t n);

// Gaussian binomial coefficient: [n]_q! / ([k]_q! [n-k]_q!), exact, degree
// k(n-k).  Built as a telescoping product of (1 - q^{n-k+i}) / (1 - q^i)
// factors so every intermediate is itself a Gaussian binomial.
IntPolynomial q_binomial(std::int64_t n, std::int64_t k);

// q-multinomial of a composition: [n]_q! / prod [a_i]_q!, exact.  Computed
// as a product of q-binomials over the prefix sums, never as a factorial
// quotient, which keeps intermediates small.
IntPolynomial q_multinomial(const Composition& alpha);

// Number of integer partitions of r into at most k parts, each part at
// most m.  Memoized DP on (r,k,m); shares no code with the polynomial
// pipeline so it can serve as an independent oracle for q_binomial
// coefficients.
mpz_class partition_count(std::int64_t r, std::int64_t k, std::int64_t m);

// Entry i (0 <= i < n) is the sum of coefficients of f over exponents
// congruent to i mod n.
std::vector<mpz_class> coeff_residue_sums(const IntPolynomial& f, std::int64_t n);

// Coefficients rise then fall, compared strictly by value; an internal
// zero between positive coefficients therefore breaks unimodality.
// Requires a nonzero polynomial with nonnegative coefficients.
bool is_unimodal(const IntPolynomial& f);

// coeff(r) == coeff(degree - r) for all r.  Requires a nonzero polynomial.
bool is_palindromic(const IntPolynomial& f);

// Walks the column of Gaussian binomials qbinom(n,0), qbinom(n,1), ... for
// a fixed n.  Only the lower half of each palindromic coefficient vector is
// materialized, and next_k() advances in place reusing buffers; both matter
// once n runs into the hundreds, where a full polynomial holds ~10^5
// multi-hundred-digit integers.
class QBinomialFamily {
 public:
  explicit QBinomialFamily(std::int64_t n);  // starts at k = 0

  std::int64_t n() const { return n_; }
  std::int64_t k() const { return k_; }
  // k(n-k), the degree of the current polynomial.
  std::int64_t degree() const { return k_ * (n_ - k_); }
  // floor(degree/2), the index of the peak coefficient.
  std::int64_t midpoint() const { return degree() / 2; }

  // Mirrored accessor: coefficient of q^r in qbinom(n,k), any r.
  const mpz_class& coeff(std::int64_t r) const;
  // Stored lower half, indices 0..midpoint().
  const std::vector<mpz_class>& half_coeffs() const { return half_; }

  // Advance to k+1; requires k < n.
  void next_k();

  IntPolynomial to_polynomial() const;
  mpz_class eval_at_one() const;  // equals C(n,k)
  mpz_class max_coeff() const;

 private:
  std::int64_t n_;
  std::int64_t k_ = 0;
  std::vector<mpz_class> half_;
  std::vector<mpz_class> scratch_;
};

}  // namespace qorbit
