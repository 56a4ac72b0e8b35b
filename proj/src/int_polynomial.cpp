#include "qorbit/int_polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace qorbit {

namespace {
const mpz_class kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
  canonicalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  canonicalize();
}

IntPolynomial IntPolynomial::one() { return IntPolynomial{1}; }

IntPolynomial IntPolynomial::monomial(std::int64_t r, const mpz_class& c) {
  if (r < 0) throw std::invalid_argument("monomial: negative exponent");
  IntPolynomial f;
  if (c == 0) return f;
  f.c_.assign(static_cast<std::size_t>(r) + 1, kZero);
  f.c_.back() = c;
  return f;
}

void IntPolynomial::canonicalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& IntPolynomial::coeff(std::int64_t r) const {
  if (r < 0 || r > degree()) return kZero;
  return c_[static_cast<std::size_t>(r)];
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& g) {
  if (g.c_.size() > c_.size()) c_.resize(g.c_.size());
  for (std::size_t r = 0; r < g.c_.size(); ++r) c_[r] += g.c_[r];
  canonicalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& g) {
  if (g.c_.size() > c_.size()) c_.resize(g.c_.size());
  for (std::size_t r = 0; r < g.c_.size(); ++r) c_[r] -= g.c_[r];
  canonicalize();
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial f = *this;
  for (auto& v : f.c_) v = -v;
  return f;
}

IntPolynomial operator*(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() || g.is_zero()) return {};
  IntPolynomial h;
  h.c_.assign(f.c_.size() + g.c_.size() - 1, 0);
  for (std::size_t i = 0; i < f.c_.size(); ++i) {
    if (f.c_[i] == 0) continue;
    for (std::size_t j = 0; j < g.c_.size(); ++j) h.c_[i + j] += f.c_[i] * g.c_[j];
  }
  h.canonicalize();
  return h;
}

IntPolynomial& IntPolynomial::mul_one_minus_qk(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("mul_one_minus_qk: k must be positive");
  if (is_zero()) return *this;
  const std::size_t uk = static_cast<std::size_t>(k);
  c_.resize(c_.size() + uk);
  // Downward pass so each c_[r - k] read is still the original value.
  for (std::size_t r = c_.size(); r-- > uk;) c_[r] -= c_[r - uk];
  canonicalize();
  return *this;
}

IntPolynomial& IntPolynomial::div_one_minus_qk(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("div_one_minus_qk: k must be positive");
  if (is_zero()) return *this;
  const std::size_t uk = static_cast<std::size_t>(k);
  if (c_.size() < uk + 1) throw std::domain_error("div_one_minus_qk: not divisible");
  // Prefix sums along residue classes mod k invert the (1 - q^k) factor;
  // the top k slots must then telescope to zero exactly when it divides.
  for (std::size_t r = uk; r < c_.size(); ++r) c_[r] += c_[r - uk];
  for (std::size_t r = c_.size() - uk; r < c_.size(); ++r) {
    if (c_[r] != 0) throw std::domain_error("div_one_minus_qk: not divisible");
  }
  c_.resize(c_.size() - uk);
  canonicalize();
  return *this;
}

IntPolynomial IntPolynomial::substitute_q_power(std::int64_t e) const {
  if (e < 1) throw std::invalid_argument("substitute_q_power: e must be positive");
  if (is_zero()) return {};
  IntPolynomial f;
  f.c_.assign((c_.size() - 1) * static_cast<std::size_t>(e) + 1, kZero);
  for (std::size_t r = 0; r < c_.size(); ++r) f.c_[r * static_cast<std::size_t>(e)] = c_[r];
  return f;
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t r = 0; r < c_.size(); ++r) {
    if (c_[r] == 0) continue;
    mpz_class a = c_[r];
    if (first) {
      if (a < 0) out << "-";
    } else {
      out << (a < 0 ? " - " : " + ");
    }
    mpz_class mag = abs(a);
    if (mag != 1 || r == 0) out << mag.get_str();
    if (r >= 1) out << "q";
    if (r >= 2) out << "^" << r;
    first = false;
  }
  return out.str();
}

IntPolynomial divide_exact(const IntPolynomial& f, const IntPolynomial& g) {
  if (g.is_zero()) throw std::domain_error("divide_exact: division by zero");
  if (f.is_zero()) return {};
  if (f.degree() < g.degree()) throw std::domain_error("divide_exact: not divisible");
  std::vector<mpz_class> rem = f.coeffs();
  const auto& d = g.coeffs();
  const mpz_class& lead = d.back();
  std::vector<mpz_class> quot(rem.size() - d.size() + 1, 0);
  for (std::size_t i = quot.size(); i-- > 0;) {
    mpz_class& top = rem[i + d.size() - 1];
    if (top == 0) continue;
    mpz_class t;
    mpz_class r;
    mpz_tdiv_qr(t.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    if (r != 0) throw std::domain_error("divide_exact: not divisible");
    quot[i] = t;
    for (std::size_t j = 0; j < d.size(); ++j) rem[i + j] -= t * d[j];
  }
  for (const auto& v : rem) {
    if (v != 0) throw std::domain_error("divide_exact: not divisible");
  }
  return IntPolynomial(std::move(quot));
}

IntPolynomial reduce_mod_qn_minus_1(const IntPolynomial& f, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("reduce_mod_qn_minus_1: n must be positive");
  std::vector<mpz_class> out(static_cast<std::size_t>(n), 0);
  const auto& c = f.coeffs();
  for (std::size_t r = 0; r < c.size(); ++r) out[r % static_cast<std::size_t>(n)] += c[r];
  return IntPolynomial(std::move(out));
}

mpz_class max_coeff(const IntPolynomial& f) {
  if (f.is_zero()) throw std::domain_error("max_coeff: zero polynomial");
  mpz_class best = f.coeffs().front();
  for (const auto& v : f.coeffs()) {
    if (v > best) best = v;
  }
  return best;
}

mpz_class eval_at_one(const IntPolynomial& f) {
  mpz_class s = 0;
  for (const auto& v : f.coeffs()) s += v;
  return s;
}

}  // namespace qorbit
