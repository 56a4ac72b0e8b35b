#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace qorbit {

mpz_class factorial(std::int64_t n);
mpz_class binomial(std::int64_t n, std::int64_t k);  // 0 outside 0 <= k <= n

// Multiplicative-function toolbox backed by a smallest-prime-factor sieve
// that grows on demand.  All answers are exact and are cross-checkable
// against direct factorization.
class NumberTheoryKit {
 public:
  explicit NumberTheoryKit(std::int64_t initial_bound = 64);

  // (prime, multiplicity) pairs in increasing prime order.
  std::vector<std::pair<std::int64_t, int>> factor(std::int64_t d);

  int mobius(std::int64_t d);
  std::int64_t euler_phi(std::int64_t d);
  bool is_squarefree(std::int64_t d);
  // Smallest prime p with p^2 | d, or 0 when d is squarefree.
  std::int64_t smallest_squared_prime(std::int64_t d);
  // All positive divisors in increasing order.
  std::vector<std::int64_t> divisors(std::int64_t d);

  static std::int64_t gcd(std::int64_t a, std::int64_t b);

 private:
  void ensure(std::int64_t d);
  std::vector<std::int32_t> spf_;
};

}  // namespace qorbit
