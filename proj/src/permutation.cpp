#include "qorbit/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qorbit {

Permutation::Permutation(std::vector<int> one_line) : p_(std::move(one_line)) {
  if (p_.empty()) throw std::invalid_argument("Permutation: empty");
  std::vector<bool> seen(p_.size(), false);
  for (int v : p_) {
    if (v < 1 || v > static_cast<int>(p_.size()) || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("Permutation: not a bijection on {1..n}");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  return Permutation(std::move(p));
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j)
    throw std::invalid_argument("transposition: need distinct i, j in {1..n}");
  Permutation t = identity(n);
  std::swap(t.p_[static_cast<std::size_t>(i - 1)], t.p_[static_cast<std::size_t>(j - 1)]);
  return t;
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(p_.size());
  for (std::size_t i = 0; i < p_.size(); ++i) inv[static_cast<std::size_t>(p_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& g) const {
  if (n() != g.n()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> out(p_.size());
  for (std::size_t i = 0; i < p_.size(); ++i) out[i] = p_[static_cast<std::size_t>(g.p_[i] - 1)];
  return Permutation(std::move(out));
}

int Permutation::inversions() const {
  int count = 0;
  for (std::size_t i = 0; i < p_.size(); ++i)
    for (std::size_t j = i + 1; j < p_.size(); ++j)
      if (p_[i] > p_[j]) ++count;
  return count;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < p_.size(); ++i)
    if (p_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::string Permutation::str() const {
  std::ostringstream out;
  const bool compact = p_.size() <= 9;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (i && !compact) out << ",";
    out << p_[i];
  }
  return out.str();
}

}  // namespace qorbit
