#pragma once

#include <gmpxx.h>

#include <functional>
#include <string>
#include <vector>

namespace qorbit {

// A composition of n: an ordered sequence of positive integers with sum n.
class Composition {
 public:
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

  // Parses "2,1,1".
  static Composition parse(const std::string& csv);

  int n() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }

  // Product of the factorials of the parts.
  mpz_class factorial() const;

  // Proper prefix sums: for (a1,...,am) the values a1, a1+a2, ...,
  // a1+...+a_{m-1}.  Empty for a one-part composition.
  std::vector<int> partial_sums() const;

  std::string str() const;

  bool operator==(const Composition& other) const { return parts_ == other.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// Calls fn once per composition of n, in a fixed deterministic order.
void for_each_composition(int n, const std::function<void(const Composition&)>& fn);

}  // namespace qorbit
