#include "qorbit/cyclotomic.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "qorbit/qbinomial.hpp"

namespace qorbit {

const IntPolynomial& CyclotomicCache::cyclotomic(std::int64_t d) {
  if (d < 1) throw std::invalid_argument("cyclotomic: d must be positive");
  auto it = cache_.find(d);
  if (it != cache_.end()) return it->second;
  IntPolynomial f = IntPolynomial::monomial(d) - IntPolynomial::one();
  for (std::int64_t c : kit_.divisors(d)) {
    if (c < d) f = divide_exact(f, cyclotomic(c));
  }
  return cache_.emplace(d, std::move(f)).first->second;
}

namespace {
CyclotomicCache& tls_cache() {
  thread_local CyclotomicCache cache;
  return cache;
}

void check_F_args(std::int64_t n, std::int64_t d) {
  if (n < 1 || d < 1) throw std::invalid_argument("F: n and d must be positive");
  if (n % d != 0) throw std::invalid_argument("F: d must divide n");
}
}  // namespace

IntPolynomial cyclotomic(std::int64_t d) { return tls_cache().cyclotomic(d); }

RatPolynomial F(std::int64_t n, std::int64_t d) {
  check_F_args(n, d);
  NumberTheoryKit& kit = tls_cache().kit();
  const std::int64_t e = kit.smallest_squared_prime(d);
  if (e != 0) return F_with_e(n, d, e);
  std::vector<mpq_class> c(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    const std::int64_t g = i == 0 ? d : NumberTheoryKit::gcd(d, i);
    c[static_cast<std::size_t>(i)] =
        mpq_class(kit.mobius(d / g) * kit.euler_phi(g), n);
  }
  return RatPolynomial(std::move(c));
}

RatPolynomial F_with_e(std::int64_t n, std::int64_t d, std::int64_t e) {
  check_F_args(n, d);
  NumberTheoryKit& kit = tls_cache().kit();
  auto factors = kit.factor(e);
  if (factors.size() != 1 || factors[0].second != 1)
    throw std::invalid_argument("F_with_e: e must be prime");
  if (d % (e * e) != 0) throw std::invalid_argument("F_with_e: e^2 must divide d");
  return F(n / e, d / e).substitute_q_power(e);
}

CongruenceCheck verify_congruence(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 0 || k > n) throw std::invalid_argument("verify_congruence: need 0 <= k <= n");
  CongruenceCheck out;
  out.lhs = reduce_mod_qn_minus_1(q_binomial(n, k), n);
  const std::int64_t g = k == 0 ? n : NumberTheoryKit::gcd(n, k);
  for (std::int64_t d : tls_cache().kit().divisors(g)) {
    out.rhs += F(n, d) * mpq_class(binomial(n / d, k / d));
  }
  out.residual = out.rhs - RatPolynomial(out.lhs);
  out.holds = out.residual.is_zero();
  return out;
}

bool verify_F_delta(std::int64_t n, std::int64_t d, std::int64_t c) {
  check_F_args(n, d);
  check_F_args(n, c);
  RatPolynomial rem = remainder(F(n, d), RatPolynomial(cyclotomic(c)));
  if (c == d) return rem == RatPolynomial(IntPolynomial::one());
  return rem.is_zero();
}

bool check_F_coeff_bound(std::int64_t n, std::int64_t d) {
  check_F_args(n, d);
  mpq_class bound(d, n);
  bound.canonicalize();
  const RatPolynomial f = F(n, d);
  for (const auto& v : f.coeffs()) {
    if (abs(v) > bound) return false;
  }
  return true;
}

}  // namespace qorbit
