#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "qorbit/int_polynomial.hpp"

namespace qorbit {

// Dense polynomial in q with exact rational coefficients.  Same canonical
// representation contract as IntPolynomial: no trailing zeros, zero is the
// empty vector, equality is structural.
class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<mpq_class> coeffs);
  explicit RatPolynomial(const IntPolynomial& f);

  static RatPolynomial monomial(std::int64_t r, const mpq_class& c = 1);

  bool is_zero() const { return c_.empty(); }
  std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
  const mpq_class& coeff(std::int64_t r) const;
  const std::vector<mpq_class>& coeffs() const { return c_; }

  RatPolynomial& operator+=(const RatPolynomial& g);
  RatPolynomial& operator-=(const RatPolynomial& g);
  friend RatPolynomial operator+(RatPolynomial f, const RatPolynomial& g) {
    f += g;
    return f;
  }
  friend RatPolynomial operator-(RatPolynomial f, const RatPolynomial& g) {
    f -= g;
    return f;
  }
  friend RatPolynomial operator*(const RatPolynomial& f, const RatPolynomial& g);
  RatPolynomial& operator*=(const mpq_class& s);
  friend RatPolynomial operator*(RatPolynomial f, const mpq_class& s) {
    f *= s;
    return f;
  }

  bool operator==(const RatPolynomial& g) const { return c_ == g.c_; }

  // Substitute q -> q^e, e >= 1.
  RatPolynomial substitute_q_power(std::int64_t e) const;

  // Fails with std::domain_error when some coefficient is not an integer.
  IntPolynomial to_int_polynomial() const;

  std::string str() const;

 private:
  std::vector<mpq_class> c_;
  void canonicalize();
};

// Euclidean remainder of f modulo nonzero g, computed over the rationals:
// f = u*g + r with deg r < deg g.
RatPolynomial remainder(const RatPolynomial& f, const RatPolynomial& g);

mpq_class eval_at_one(const RatPolynomial& f);

}  // namespace qorbit
