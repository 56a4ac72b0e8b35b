#include "qorbit/number_theory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qorbit {

mpz_class factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

mpz_class binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

NumberTheoryKit::NumberTheoryKit(std::int64_t initial_bound) { ensure(initial_bound); }

void NumberTheoryKit::ensure(std::int64_t d) {
  if (d < static_cast<std::int64_t>(spf_.size())) return;
  if (d > 100'000'000) throw std::invalid_argument("NumberTheoryKit: argument too large");
  std::int64_t bound = std::max<std::int64_t>(d + 1, 2 * static_cast<std::int64_t>(spf_.size()));
  bound = std::max<std::int64_t>(bound, 64);
  spf_.assign(static_cast<std::size_t>(bound), 0);
  for (std::int64_t i = 2; i < bound; ++i) {
    if (spf_[static_cast<std::size_t>(i)] != 0) continue;
    for (std::int64_t j = i; j < bound; j += i) {
      if (spf_[static_cast<std::size_t>(j)] == 0) spf_[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(i);
    }
  }
}

std::vector<std::pair<std::int64_t, int>> NumberTheoryKit::factor(std::int64_t d) {
  if (d < 1) throw std::invalid_argument("factor: argument must be positive");
  ensure(d);
  std::vector<std::pair<std::int64_t, int>> out;
  while (d > 1) {
    const std::int64_t p = spf_[static_cast<std::size_t>(d)];
    int mult = 0;
    while (d % p == 0) {
      d /= p;
      ++mult;
    }
    out.emplace_back(p, mult);
  }
  return out;
}

int NumberTheoryKit::mobius(std::int64_t d) {
  int sign = 1;
  for (const auto& [p, mult] : factor(d)) {
    (void)p;
    if (mult >= 2) return 0;
    sign = -sign;
  }
  return sign;
}

std::int64_t NumberTheoryKit::euler_phi(std::int64_t d) {
  std::int64_t out = d;
  for (const auto& [p, mult] : factor(d)) {
    (void)mult;
    out -= out / p;
  }
  return out;
}

bool NumberTheoryKit::is_squarefree(std::int64_t d) { return smallest_squared_prime(d) == 0; }

std::int64_t NumberTheoryKit::smallest_squared_prime(std::int64_t d) {
  for (const auto& [p, mult] : factor(d)) {
    if (mult >= 2) return p;
  }
  return 0;
}

std::vector<std::int64_t> NumberTheoryKit::divisors(std::int64_t d) {
  std::vector<std::int64_t> out{1};
  for (const auto& [p, mult] : factor(d)) {
    const std::size_t base = out.size();
    std::int64_t power = 1;
    for (int e = 1; e <= mult; ++e) {
      power *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t NumberTheoryKit::gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

}  // namespace qorbit
