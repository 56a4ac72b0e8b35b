#pragma once

#include <cstdint>
#include <vector>

#include "qorbit/composition.hpp"
#include "qorbit/int_polynomial.hpp"
#include "qorbit/permutation.hpp"
#include "qorbit/symmetric.hpp"

namespace qorbit {

// The partial order on ordered set partitions of a fixed type, generated by
// the relations B < (B with values i < j swapped) whenever i sits in an
// earlier block than j.  Elements are indexed densely; edges point from
// smaller to larger and strictly increase the rank (inversion count of the
// word).  Comparability is answered from a precomputed reachability bit
// matrix when the poset is small enough, and by a rank-pruned DFS otherwise.
class QuotientPoset {
 public:
  explicit QuotientPoset(const Composition& alpha);

  const Composition& type() const { return type_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const OrderedSetPartition& element(int idx) const { return elements_[static_cast<std::size_t>(idx)]; }
  // Index of a partition of this type; throws on type mismatch.
  int index_of(const OrderedSetPartition& b) const;
  int rank(int idx) const { return ranks_[static_cast<std::size_t>(idx)]; }
  int max_rank() const { return max_rank_; }
  const std::vector<std::int32_t>& edges_from(int idx) const {
    return edges_[static_cast<std::size_t>(idx)];
  }

  // Strict order: element a below element b.
  bool less(int a, int b) const;

  // Sum of q^rank over all elements.
  IntPolynomial rank_generating_function() const;

 private:
  Composition type_;
  std::vector<OrderedSetPartition> elements_;
  std::vector<int> ranks_;
  std::vector<std::vector<std::int32_t>> edges_;
  // word one-line -> index, stored sorted for binary search.
  std::vector<std::pair<std::vector<int>, std::int32_t>> index_;
  int max_rank_ = 0;
  bool eager_closure_ = false;
  std::size_t closure_words_per_row_ = 0;
  std::vector<std::uint64_t> closure_;  // row-major bit matrix when eager

  bool closure_bit(int a, int b) const {
    return closure_[static_cast<std::size_t>(a) * closure_words_per_row_ +
                    static_cast<std::size_t>(b) / 64] >>
               (static_cast<std::size_t>(b) % 64) &
           1;
  }
};

// Constructs the poset for alpha; |alpha| <= 9 guard (element count is the
// multinomial coefficient and explodes beyond that).
QuotientPoset build_poset(const Composition& alpha);

// Shared per-thread poset cache keyed by alpha; build_poset is expensive
// enough that sweeps over many (v,w) pairs of the same shape want reuse.
const QuotientPoset& cached_poset(const Composition& alpha);

// Strict comparability of sigma and tau in the alpha-transported order:
// both factor as word(B)*pi with the same pi, and the partitions compare in
// the quotient poset.
bool alpha_bruhat_less(const Permutation& sigma, const Permutation& tau, const Composition& alpha);

// No two distinct members comparable under the alpha order.
bool is_antichain(const std::vector<Permutation>& elems, const Composition& alpha);

// Largest antichain in the disjoint union of `copies` copies of P, by the
// chain-cover route: elements minus a maximum bipartite matching on the
// strict comparability relation.  Guard: size * copies <= 5000.
int max_antichain_size(const QuotientPoset& poset, int copies);

}  // namespace qorbit
