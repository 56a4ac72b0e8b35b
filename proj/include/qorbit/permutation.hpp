#pragma once

#include <string>
#include <vector>

namespace qorbit {

// Permutation of {1..n} in one-line notation: the i-th entry (1-based) is
// the image of i.  Vectors are acted on by (sigma v)_i = v at sigma^{-1}(i),
// i.e. the value in position i came from position sigma^{-1}(i).
class Permutation {
 public:
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  static Permutation transposition(int n, int i, int j);
  // All n! permutations in lexicographic one-line order.
  static std::vector<Permutation> all(int n);

  int n() const { return static_cast<int>(p_.size()); }
  int operator()(int i) const { return p_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& one_line() const { return p_; }

  Permutation inverse() const;
  // (f.compose(g))(i) = f(g(i)).
  Permutation compose(const Permutation& g) const;

  template <typename T>
  std::vector<T> act(const std::vector<T>& v) const {
    std::vector<T> out(v.size());
    for (std::size_t i = 0; i < p_.size(); ++i) out[static_cast<std::size_t>(p_[i] - 1)] = v[i];
    return out;
  }

  int inversions() const;
  bool is_identity() const;

  // "5146327" for n <= 9, comma-separated otherwise.
  std::string str() const;

  bool operator==(const Permutation& o) const { return p_ == o.p_; }
  bool operator<(const Permutation& o) const { return p_ < o.p_; }

 private:
  std::vector<int> p_;
};

}  // namespace qorbit
