#include "qorbit/orbit.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <utility>

namespace qorbit {

namespace {

// Clear denominators and divide out content; scaling by a positive rational
// never changes any zero set.
std::vector<mpz_class> primitive_integer_vector(const RationalVector& v) {
  mpz_class lcm = 1;
  for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<mpz_class> out;
  out.reserve(v.size());
  mpz_class content = 0;
  for (const auto& x : v) {
    mpz_class scaled = x.get_num() * (lcm / x.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
    out.push_back(std::move(scaled));
  }
  if (content > 1) {
    for (auto& x : out) x /= content;
  }
  return out;
}

std::int64_t count_zero_dots(const std::vector<mpz_class>& v, const std::vector<mpz_class>& w) {
  const int n = static_cast<int>(v.size());
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::int64_t count = 0;
  mpz_class acc;
  do {
    acc = 0;
    for (int x = 0; x < n; ++x)
      mpz_addmul(acc.get_mpz_t(), w[static_cast<std::size_t>(p[static_cast<std::size_t>(x)] - 1)].get_mpz_t(),
                 v[static_cast<std::size_t>(x)].get_mpz_t());
    if (acc == 0) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

void check_orbit_sizes(const RationalVector& v, const RationalVector& w) {
  if (v.size() != w.size()) throw std::invalid_argument("orbit: v and w must have equal length");
  if (v.empty()) throw std::invalid_argument("orbit: empty vectors");
  if (v.size() > 10) throw std::invalid_argument("orbit: n > 10 guard (n! enumeration)");
}

using i128 = __int128;

constexpr int kMaxN = 5;
using Point = std::array<std::int64_t, kMaxN>;

// Determinant of the rows x cols minor, by Laplace expansion; sizes <= 4.
i128 minor_det(const Point* rows, int nrows, const int* cols) {
  if (nrows == 1) return rows[0][static_cast<std::size_t>(cols[0])];
  i128 acc = 0;
  int sub[kMaxN];
  for (int j = 1; j < nrows; ++j) sub[j - 1] = cols[j];
  for (int j = 0; j < nrows; ++j) {
    const i128 pivot = rows[0][static_cast<std::size_t>(cols[j])];
    if (pivot != 0) {
      const i128 term = pivot * minor_det(rows + 1, nrows - 1, sub);
      acc += (j % 2 == 0) ? term : -term;
    }
    if (j < nrows - 1) sub[j] = cols[j];
  }
  return acc;
}

struct SearchBest {
  std::int64_t count = -1;
  Point witness{};

  void offer(std::int64_t c, const Point& w, int n) {
    if (c < count) return;
    if (c == count) {
      for (int i = 0; i < n; ++i) {
        if (w[static_cast<std::size_t>(i)] != witness[static_cast<std::size_t>(i)]) {
          if (w[static_cast<std::size_t>(i)] < witness[static_cast<std::size_t>(i)]) break;
          return;
        }
      }
      if (w == witness) return;
    }
    count = c;
    witness = w;
  }
};

}  // namespace

std::vector<Permutation> orbit_zero_set(const RationalVector& v, const RationalVector& w) {
  check_orbit_sizes(v, w);
  const std::vector<mpz_class> vz = primitive_integer_vector(v);
  const std::vector<mpz_class> wz = primitive_integer_vector(w);
  const int n = static_cast<int>(v.size());
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<Permutation> out;
  mpz_class acc;
  do {
    acc = 0;
    for (int x = 0; x < n; ++x)
      mpz_addmul(acc.get_mpz_t(), wz[static_cast<std::size_t>(p[static_cast<std::size_t>(x)] - 1)].get_mpz_t(),
                 vz[static_cast<std::size_t>(x)].get_mpz_t());
    if (acc == 0) out.push_back(Permutation(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::int64_t orbit_count(const RationalVector& v, const RationalVector& w) {
  check_orbit_sizes(v, w);
  return count_zero_dots(primitive_integer_vector(v), primitive_integer_vector(w));
}

OrbitMaxResult orbit_max_search(int n, const RationalVector& v, int workers) {
  if (n < 3 || n > 5) throw std::invalid_argument("orbit_max_search: need 3 <= n <= 5");
  if (static_cast<int>(v.size()) != n) throw std::invalid_argument("orbit_max_search: v has wrong length");
  if (!has_distinct_entries(v))
    throw std::invalid_argument("orbit_max_search: v must have distinct coordinates");
  if (sum(v) == 0)
    throw std::invalid_argument("orbit_max_search: v must have nonzero coordinate sum");

  const std::vector<mpz_class> vz = primitive_integer_vector(v);
  Point base{};
  for (int i = 0; i < n; ++i) {
    const mpz_class& x = vz[static_cast<std::size_t>(i)];
    if (abs(x) > 10000)
      throw std::invalid_argument(
          "orbit_max_search: scaled |v| entries above 10^4 overflow the exact minor bounds");
    base[static_cast<std::size_t>(i)] = x.get_si();
  }

  // The full orbit, in lexicographic permutation order.
  std::vector<Point> points;
  {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    do {
      Point pt{};
      for (int x = 0; x < n; ++x)
        pt[static_cast<std::size_t>(p[static_cast<std::size_t>(x)] - 1)] = base[static_cast<std::size_t>(x)];
      points.push_back(pt);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  const int n_points = static_cast<int>(points.size());
  const int m = n - 1;

  if (workers <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    workers = hw == 0 ? 1 : static_cast<int>(hw);
  }
  workers = std::max(1, std::min(workers, n_points));

  auto run_stripe = [&](int stripe, SearchBest& best) {
    int cols[kMaxN + 1];
    std::array<int, kMaxN> idx{};
    Point rowbuf[kMaxN];
    for (int c0 = stripe; c0 + m <= n_points; c0 += workers) {
      idx[0] = c0;
      for (int t = 1; t < m; ++t) idx[static_cast<std::size_t>(t)] = c0 + t;
      while (true) {
        for (int t = 0; t < m; ++t) rowbuf[t] = points[static_cast<std::size_t>(idx[static_cast<std::size_t>(t)])];

        // Normal via signed maximal minors of the m x n matrix.
        Point normal{};
        bool nonzero = false;
        for (int j = 0; j < n; ++j) {
          int pos = 0;
          for (int col = 0; col < n; ++col) {
            if (col != j) cols[pos++] = col;
          }
          i128 d = minor_det(rowbuf, m, cols);
          if (j % 2 == 1) d = -d;
          normal[static_cast<std::size_t>(j)] = static_cast<std::int64_t>(d);
          if (d != 0) nonzero = true;
        }
        if (nonzero) {
          // Primitive, first nonzero positive.
          std::int64_t g = 0;
          for (int j = 0; j < n; ++j) g = std::gcd(g, normal[static_cast<std::size_t>(j)]);
          int lead = 0;
          while (normal[static_cast<std::size_t>(lead)] == 0) ++lead;
          const std::int64_t s = normal[static_cast<std::size_t>(lead)] > 0 ? g : -g;
          for (int j = 0; j < n; ++j) normal[static_cast<std::size_t>(j)] /= s;
          bool all_ones = true;
          for (int j = 0; j < n; ++j) all_ones = all_ones && normal[static_cast<std::size_t>(j)] == normal[0];
          if (!all_ones) {
            std::int64_t zeros = 0;
            for (const Point& pt : points) {
              i128 acc = 0;
              for (int j = 0; j < n; ++j)
                acc += static_cast<i128>(normal[static_cast<std::size_t>(j)]) * pt[static_cast<std::size_t>(j)];
              if (acc == 0) ++zeros;
            }
            best.offer(zeros, normal, n);
          }
        }

        // Next combination with idx[0] pinned to c0.
        int t = m - 1;
        while (t >= 1 && idx[static_cast<std::size_t>(t)] == n_points - m + t) --t;
        if (t < 1) break;
        ++idx[static_cast<std::size_t>(t)];
        for (int u = t + 1; u < m; ++u) idx[static_cast<std::size_t>(u)] = idx[static_cast<std::size_t>(u - 1)] + 1;
      }
    }
  };

  std::vector<SearchBest> bests(static_cast<std::size_t>(workers));
  if (workers == 1) {
    run_stripe(0, bests[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t)
      pool.emplace_back([&, t] { run_stripe(t, bests[static_cast<std::size_t>(t)]); });
    for (auto& th : pool) th.join();
  }
  SearchBest best;
  for (const SearchBest& b : bests) {
    if (b.count >= 0) best.offer(b.count, b.witness, n);
  }
  if (best.count < 0) throw std::runtime_error("orbit_max_search: no admissible hyperplane found");

  OrbitMaxResult out;
  out.count = best.count;
  out.witness_w.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) out.witness_w.emplace_back(best.witness[static_cast<std::size_t>(j)]);
  return out;
}

}  // namespace qorbit
