#include "qorbit/composition.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qorbit {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("Composition: no parts");
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("Composition: parts must be positive");
    n_ += p;
  }
}

Composition Composition::parse(const std::string& csv) {
  std::vector<int> parts;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("Composition::parse: bad part '" + tok + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("Composition::parse: bad part '" + tok + "'");
    parts.push_back(v);
  }
  return Composition(std::move(parts));
}

mpz_class Composition::factorial() const {
  mpz_class out = 1;
  mpz_class f;
  for (int p : parts_) {
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(p));
    out *= f;
  }
  return out;
}

std::vector<int> Composition::partial_sums() const {
  std::vector<int> s;
  s.reserve(parts_.size() - 1);
  int acc = 0;
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
    acc += parts_[i];
    s.push_back(acc);
  }
  return s;
}

std::string Composition::str() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ",";
    out << parts_[i];
  }
  out << ")";
  return out.str();
}

void for_each_composition(int n, const std::function<void(const Composition&)>& fn) {
  if (n < 1) throw std::invalid_argument("for_each_composition: n must be positive");
  if (n > 62) throw std::invalid_argument("for_each_composition: n too large for mask enumeration");
  // Each subset of the n-1 gap positions marks where a new part starts.
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int gap = 0; gap < n - 1; ++gap) {
      if (mask >> gap & 1) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    fn(Composition(std::move(parts)));
  }
}

}  // namespace qorbit
