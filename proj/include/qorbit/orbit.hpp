#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "qorbit/permutation.hpp"
#include "qorbit/symmetric.hpp"

namespace qorbit {

// All sigma with w . (sigma v) = 0, in lexicographic one-line order.
// Exact rational zero test; n <= 10 guard (n! enumeration).
std::vector<Permutation> orbit_zero_set(const RationalVector& v, const RationalVector& w);

// Size of the zero set, without materializing it.
std::int64_t orbit_count(const RationalVector& v, const RationalVector& w);

struct OrbitMaxResult {
  std::int64_t count = 0;
  std::vector<mpz_class> witness_w;  // primitive integer normal vector
};

// Maximum of the zero count over every hyperplane w.x = 0 with w not a
// multiple of the all-ones vector, for 3 <= n <= 5.  Any maximizing
// hyperplane is spanned by orbit points it contains, so the search runs
// over normals of hyperplanes spanned by (n-1)-subsets of the n! orbit
// points, skipping rank-deficient subsets and deduplicating directions by
// a primitive, first-nonzero-positive normalization.  Ties are broken
// toward the lexicographically smallest witness, making the result
// deterministic regardless of worker count.
// Requires v with distinct coordinates and nonzero coordinate sum.
OrbitMaxResult orbit_max_search(int n, const RationalVector& v, int workers = 0);

}  // namespace qorbit
