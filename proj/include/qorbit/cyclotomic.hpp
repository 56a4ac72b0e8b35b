#pragma once

#include <cstdint>
#include <map>

#include "qorbit/int_polynomial.hpp"
#include "qorbit/number_theory.hpp"
#include "qorbit/rat_polynomial.hpp"

namespace qorbit {

// Memoized cyclotomic polynomials, computed by exact division:
// Phi_d = (q^d - 1) / prod of Phi_c over proper divisors c of d.
class CyclotomicCache {
 public:
  const IntPolynomial& cyclotomic(std::int64_t d);
  NumberTheoryKit& kit() { return kit_; }

 private:
  std::map<std::int64_t, IntPolynomial> cache_;
  NumberTheoryKit kit_;
};

// Convenience entry points below share one cache per thread; each thread
// rebuilds cheaply, so sweeps parallelize without locking.
IntPolynomial cyclotomic(std::int64_t d);

// The rational polynomial family F(n,d), defined for d | n.  Squarefree d:
//   (1/n) * sum_{i=0}^{n-1} mobius(d/gcd(d,i)) * phi(gcd(d,i)) * q^i.
// Otherwise F(n/e, d/e) with q -> q^e, where e is the smallest prime whose
// square divides d.  Degree < n in all cases.
RatPolynomial F(std::int64_t n, std::int64_t d);

// Same, but forcing the first recursion step to use a caller-chosen prime e
// with e^2 | d.  Exists so the choice-independence of the recursion can be
// swept explicitly instead of assumed.
RatPolynomial F_with_e(std::int64_t n, std::int64_t d, std::int64_t e);

struct CongruenceCheck {
  bool holds = false;
  IntPolynomial lhs;       // qbinom(n,k) reduced mod q^n - 1
  RatPolynomial rhs;       // sum over d | gcd(n,k) of C(n/d,k/d) * F(n,d)
  RatPolynomial residual;  // rhs - lhs; zero iff the congruence holds
};

// Checks qbinom(n,k) = sum_{d | gcd(n,k)} C(n/d,k/d) F(n,d)  (mod q^n - 1)
// in exact rational arithmetic.
CongruenceCheck verify_congruence(std::int64_t n, std::int64_t k);

// Checks that F(n,d) reduces to the constant [c == d] modulo Phi_c, for
// c | n, d | n.  A symbolic remainder stands in for evaluation at a
// primitive c-th root of unity, so no complex arithmetic is involved.
bool verify_F_delta(std::int64_t n, std::int64_t d, std::int64_t c);

// Checks |coefficient| <= d/n for every coefficient of F(n,d), exactly.
bool check_F_coeff_bound(std::int64_t n, std::int64_t d);

}  // namespace qorbit
