#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace qorbit {

// Dense polynomial in q with arbitrary-precision integer coefficients.
//
// coeff(r) is the coefficient of q^r.  The representation is canonical:
// the coefficient vector carries no trailing zeros, the zero polynomial
// is the empty vector, and equality is structural.  All arithmetic is
// exact; there is no floating point anywhere in this class.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial one();
  // c * q^r
  static IntPolynomial monomial(std::int64_t r, const mpz_class& c = 1);

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
  // Coefficient of q^r; zero outside [0, degree()].
  const mpz_class& coeff(std::int64_t r) const;
  const std::vector<mpz_class>& coeffs() const { return c_; }

  IntPolynomial& operator+=(const IntPolynomial& g);
  IntPolynomial& operator-=(const IntPolynomial& g);
  IntPolynomial operator-() const;
  friend IntPolynomial operator+(IntPolynomial f, const IntPolynomial& g) {
    f += g;
    return f;
  }
  friend IntPolynomial operator-(IntPolynomial f, const IntPolynomial& g) {
    f -= g;
    return f;
  }
  friend IntPolynomial operator*(const IntPolynomial& f, const IntPolynomial& g);
  IntPolynomial& operator*=(const IntPolynomial& g) { return *this = *this * g; }

  bool operator==(const IntPolynomial& g) const { return c_ == g.c_; }

  // Multiply by (1 - q^k) in place, k >= 1.  Linear time, no allocation
  // beyond the k-slot extension of the coefficient vector.
  IntPolynomial& mul_one_minus_qk(std::int64_t k);
  // Divide by (1 - q^k) in place, k >= 1.  Throws std::domain_error when
  // the division is not exact.
  IntPolynomial& div_one_minus_qk(std::int64_t k);

  // Substitute q -> q^e, e >= 1.
  IntPolynomial substitute_q_power(std::int64_t e) const;

  // Rendering like "1 + 2q + 2q^2 + q^3"; "0" for the zero polynomial.
  std::string str() const;

 private:
  std::vector<mpz_class> c_;
  void canonicalize();
};

// Quotient f / g; throws std::domain_error when g is zero or does not
// divide f exactly over the integers.
IntPolynomial divide_exact(const IntPolynomial& f, const IntPolynomial& g);

// Remainder of f modulo q^n - 1, i.e. exponents folded mod n.  The result
// has degree < n.
IntPolynomial reduce_mod_qn_minus_1(const IntPolynomial& f, std::int64_t n);

// Largest coefficient (by signed value).  Throws std::domain_error on the
// zero polynomial, which has no coefficients.
mpz_class max_coeff(const IntPolynomial& f);

// f(1), the sum of all coefficients.
mpz_class eval_at_one(const IntPolynomial& f);

}  // namespace qorbit
