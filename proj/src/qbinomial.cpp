#include "qorbit/qbinomial.hpp"

#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace qorbit {

namespace {
const mpz_class kZero = 0;
}

IntPolynomial q_int(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("q_int: n must be nonnegative");
  std::vector<mpz_class> c(static_cast<std::size_t>(n), 1);
  return IntPolynomial(std::move(c));
}

IntPolynomial q_factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("q_factorial: n must be nonnegative");
  IntPolynomial f = IntPolynomial::one();
  for (std::int64_t i = 2; i <= n; ++i) f *= q_int(i);
  return f;
}

IntPolynomial q_binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("q_binomial: need 0 <= k <= n");
  IntPolynomial f = IntPolynomial::one();
  // After step i the value is qbinom(n-k+i, i), so each division is exact.
  for (std::int64_t i = 1; i <= k; ++i) {
    f.mul_one_minus_qk(n - k + i);
    f.div_one_minus_qk(i);
  }
  return f;
}

IntPolynomial q_multinomial(const Composition& alpha) {
  IntPolynomial f = IntPolynomial::one();
  std::int64_t prefix = 0;
  for (int part : alpha.parts()) {
    prefix += part;
    f *= q_binomial(prefix, part);
  }
  return f;
}

mpz_class partition_count(std::int64_t r, std::int64_t k, std::int64_t m) {
  if (r < 0 || k < 0 || m < 0) throw std::invalid_argument("partition_count: negative argument");
  if (r == 0) return 1;
  if (k == 0 || m == 0 || r > k * m) return 0;
  // By palindromicity of the box, shrink r first: saves memo states.
  if (2 * r > k * m) r = k * m - r;
  if (r == 0) return 1;
  thread_local std::unordered_map<std::uint64_t, mpz_class> memo;
  const std::uint64_t key = (static_cast<std::uint64_t>(r) << 40) |
                            (static_cast<std::uint64_t>(k) << 20) |
                            static_cast<std::uint64_t>(m);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  // Split on whether some part equals m.
  mpz_class out = partition_count(r, k, m - 1);
  if (r >= m) out += partition_count(r - m, k - 1, m);
  memo.emplace(key, out);
  return out;
}

std::vector<mpz_class> coeff_residue_sums(const IntPolynomial& f, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("coeff_residue_sums: n must be positive");
  std::vector<mpz_class> out(static_cast<std::size_t>(n), kZero);
  const auto& c = f.coeffs();
  for (std::size_t r = 0; r < c.size(); ++r) out[r % static_cast<std::size_t>(n)] += c[r];
  return out;
}

namespace {
void require_nonneg_nonzero(const IntPolynomial& f, const char* who) {
  if (f.is_zero()) throw std::invalid_argument(std::string(who) + ": zero polynomial");
  for (const auto& v : f.coeffs()) {
    if (v < 0) throw std::invalid_argument(std::string(who) + ": negative coefficient");
  }
}
}  // namespace

bool is_unimodal(const IntPolynomial& f) {
  require_nonneg_nonzero(f, "is_unimodal");
  const auto& c = f.coeffs();
  bool falling = false;
  for (std::size_t r = 0; r + 1 < c.size(); ++r) {
    if (c[r + 1] < c[r]) falling = true;
    else if (c[r + 1] > c[r] && falling) return false;
  }
  return true;
}

bool is_palindromic(const IntPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("is_palindromic: zero polynomial");
  const auto& c = f.coeffs();
  for (std::size_t r = 0; 2 * r < c.size(); ++r) {
    if (c[r] != c[c.size() - 1 - r]) return false;
  }
  return true;
}

QBinomialFamily::QBinomialFamily(std::int64_t n) : n_(n) {
  if (n < 0) throw std::invalid_argument("QBinomialFamily: n must be nonnegative");
  half_.assign(1, 1);  // qbinom(n,0) = 1
}

const mpz_class& QBinomialFamily::coeff(std::int64_t r) const {
  const std::int64_t d = degree();
  if (r < 0 || r > d) return kZero;
  if (2 * r > d) r = d - r;
  return half_[static_cast<std::size_t>(r)];
}

void QBinomialFamily::next_k() {
  if (k_ >= n_) throw std::logic_error("QBinomialFamily::next_k: k already equals n");
  // qbinom(n,k+1) = qbinom(n,k) * (1 - q^{n-k}) / (1 - q^{k+1}).  With A()
  // the mirrored accessor of the current half vector, the new coefficients
  // satisfy h[r] = A(r) - A(r - (n-k)) + h[r - (k+1)], which only reads new
  // values at strictly smaller indices, so one forward pass fills the new
  // lower half.
  const std::int64_t up = n_ - k_;
  const std::int64_t down = k_ + 1;
  const std::int64_t new_mid = ((k_ + 1) * (n_ - k_ - 1)) / 2;
  scratch_.assign(static_cast<std::size_t>(new_mid) + 1, kZero);
  for (std::int64_t r = 0; r <= new_mid; ++r) {
    mpz_class& h = scratch_[static_cast<std::size_t>(r)];
    h = coeff(r) - coeff(r - up);
    if (r >= down) h += scratch_[static_cast<std::size_t>(r - down)];
  }
  half_.swap(scratch_);
  ++k_;
}

IntPolynomial QBinomialFamily::to_polynomial() const {
  const std::int64_t d = degree();
  std::vector<mpz_class> c(static_cast<std::size_t>(d) + 1);
  for (std::int64_t r = 0; r <= d; ++r) c[static_cast<std::size_t>(r)] = coeff(r);
  return IntPolynomial(std::move(c));
}

mpz_class QBinomialFamily::eval_at_one() const {
  const std::int64_t d = degree();
  mpz_class s = 0;
  for (const auto& v : half_) s += v;
  s *= 2;
  if (d % 2 == 0) s -= half_.back();
  return s;
}

mpz_class QBinomialFamily::max_coeff() const {
  // Unimodal and palindromic, so the peak sits at the midpoint, but take
  // the max over the stored half rather than rely on that here.
  mpz_class best = half_.front();
  for (const auto& v : half_) {
    if (v > best) best = v;
  }
  return best;
}

}  // namespace qorbit
