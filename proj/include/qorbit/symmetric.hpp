#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qorbit/composition.hpp"
#include "qorbit/permutation.hpp"

namespace qorbit {

// Exact-rational coordinate vector; all zero tests on dot products are
// decided exactly, never by epsilon.
using RationalVector = std::vector<mpq_class>;

// Parses "1,2,3" or "-1/2,0,7/3".
RationalVector parse_rational_vector(const std::string& csv);

mpq_class dot(const RationalVector& a, const RationalVector& b);
bool has_distinct_entries(const RationalVector& v);
mpq_class sum(const RationalVector& v);

inline RationalVector to_rational(const std::vector<mpz_class>& v) {
  RationalVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

// Run-length composition of the weakly increasing rearrangement of w.
Composition comp(const RationalVector& w);

// Proper partial sums of alpha, ascending: the split points of {1..n}.
std::vector<int> s_set(const Composition& alpha);

// Sequence of disjoint nonempty blocks covering {1..n}; blocks are kept
// sorted internally.  Models a coset of a parabolic subgroup: the blocks
// record which positions' values travel together.
class OrderedSetPartition {
 public:
  explicit OrderedSetPartition(std::vector<std::vector<int>> blocks);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  Composition type() const;

  // Concatenation of the sorted blocks read as one-line notation; the
  // minimal-length representative of the coset.
  Permutation word() const;

  // Swap values i and j between their blocks.
  OrderedSetPartition swap_values(int i, int j) const;

  std::string str() const;  // "({5},{1,4,6},{3},{2,7})"

  bool operator==(const OrderedSetPartition& o) const { return blocks_ == o.blocks_; }
  bool operator<(const OrderedSetPartition& o) const { return blocks_ < o.blocks_; }

 private:
  std::vector<std::vector<int>> blocks_;
  int n_ = 0;
};

// Unique factorization sigma = word(B) composed with pi, where block c of B
// is the image under sigma of the c-th interval of alpha, and pi permutes
// within those intervals.
struct AlphaDecomposition {
  OrderedSetPartition blocks;
  Permutation pi;
};
AlphaDecomposition alpha_decompose(const Permutation& sigma, const Composition& alpha);

}  // namespace qorbit
