#include "qorbit/rat_polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace qorbit {

namespace {
const mpq_class kZero = 0;
}

RatPolynomial::RatPolynomial(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  for (auto& v : c_) v.canonicalize();
  canonicalize();
}

RatPolynomial::RatPolynomial(const IntPolynomial& f) {
  c_.reserve(f.coeffs().size());
  for (const auto& v : f.coeffs()) c_.emplace_back(v);
}

RatPolynomial RatPolynomial::monomial(std::int64_t r, const mpq_class& c) {
  if (r < 0) throw std::invalid_argument("monomial: negative exponent");
  RatPolynomial f;
  if (c == 0) return f;
  f.c_.assign(static_cast<std::size_t>(r) + 1, kZero);
  f.c_.back() = c;
  return f;
}

void RatPolynomial::canonicalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpq_class& RatPolynomial::coeff(std::int64_t r) const {
  if (r < 0 || r > degree()) return kZero;
  return c_[static_cast<std::size_t>(r)];
}

RatPolynomial& RatPolynomial::operator+=(const RatPolynomial& g) {
  if (g.c_.size() > c_.size()) c_.resize(g.c_.size());
  for (std::size_t r = 0; r < g.c_.size(); ++r) c_[r] += g.c_[r];
  canonicalize();
  return *this;
}

RatPolynomial& RatPolynomial::operator-=(const RatPolynomial& g) {
  if (g.c_.size() > c_.size()) c_.resize(g.c_.size());
  for (std::size_t r = 0; r < g.c_.size(); ++r) c_[r] -= g.c_[r];
  canonicalize();
  return *this;
}

RatPolynomial operator*(const RatPolynomial& f, const RatPolynomial& g) {
  if (f.is_zero() || g.is_zero()) return {};
  RatPolynomial h;
  h.c_.assign(f.c_.size() + g.c_.size() - 1, 0);
  for (std::size_t i = 0; i < f.c_.size(); ++i) {
    if (f.c_[i] == 0) continue;
    for (std::size_t j = 0; j < g.c_.size(); ++j) h.c_[i + j] += f.c_[i] * g.c_[j];
  }
  h.canonicalize();
  return h;
}

RatPolynomial& RatPolynomial::operator*=(const mpq_class& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= s;
  return *this;
}

RatPolynomial RatPolynomial::substitute_q_power(std::int64_t e) const {
  if (e < 1) throw std::invalid_argument("substitute_q_power: e must be positive");
  if (is_zero()) return {};
  RatPolynomial f;
  f.c_.assign((c_.size() - 1) * static_cast<std::size_t>(e) + 1, kZero);
  for (std::size_t r = 0; r < c_.size(); ++r) f.c_[r * static_cast<std::size_t>(e)] = c_[r];
  return f;
}

IntPolynomial RatPolynomial::to_int_polynomial() const {
  std::vector<mpz_class> out;
  out.reserve(c_.size());
  for (const auto& v : c_) {
    if (v.get_den() != 1) throw std::domain_error("to_int_polynomial: non-integer coefficient");
    out.push_back(v.get_num());
  }
  return IntPolynomial(std::move(out));
}

std::string RatPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t r = 0; r < c_.size(); ++r) {
    if (c_[r] == 0) continue;
    mpq_class a = c_[r];
    if (first) {
      if (a < 0) out << "-";
    } else {
      out << (a < 0 ? " - " : " + ");
    }
    mpq_class mag = abs(a);
    if (mag != 1 || r == 0) out << mag.get_str();
    if (r >= 1) {
      if (mag != 1) out << "*";
      out << "q";
    }
    if (r >= 2) out << "^" << r;
    first = false;
  }
  return out.str();
}

RatPolynomial remainder(const RatPolynomial& f, const RatPolynomial& g) {
  if (g.is_zero()) throw std::domain_error("remainder: division by zero");
  std::vector<mpq_class> rem = f.coeffs();
  const auto& d = g.coeffs();
  const mpq_class& lead = d.back();
  while (rem.size() >= d.size()) {
    mpq_class t = rem.back() / lead;
    const std::size_t shift = rem.size() - d.size();
    for (std::size_t j = 0; j < d.size(); ++j) rem[shift + j] -= t * d[j];
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  }
  return RatPolynomial(std::move(rem));
}

mpq_class eval_at_one(const RatPolynomial& f) {
  mpq_class s = 0;
  for (const auto& v : f.coeffs()) s += v;
  return s;
}

}  // namespace qorbit
