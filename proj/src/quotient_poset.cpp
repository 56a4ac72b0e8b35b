#include "qorbit/quotient_poset.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <utility>

namespace qorbit {

namespace {

// Keep the eager reachability matrix under ~50 MB; larger posets answer
// comparability queries by DFS instead.
constexpr int kEagerClosureCap = 20000;

void enumerate_partitions(const std::vector<int>& parts, std::vector<int>& pool,
                          std::vector<std::vector<int>>& acc,
                          std::vector<OrderedSetPartition>& out) {
  if (acc.size() == parts.size()) {
    out.emplace_back(acc);
    return;
  }
  const int want = parts[acc.size()];
  // Choose `want` elements of the sorted pool, in lexicographic order of
  // index subsets, so enumeration order is canonical.
  const int m = static_cast<int>(pool.size());
  std::vector<int> idx(static_cast<std::size_t>(want));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<int> block;
    block.reserve(static_cast<std::size_t>(want));
    for (int i : idx) block.push_back(pool[static_cast<std::size_t>(i)]);
    std::vector<int> rest;
    rest.reserve(pool.size() - block.size());
    {
      std::size_t t = 0;
      for (int i = 0; i < m; ++i) {
        if (t < idx.size() && idx[t] == i) {
          ++t;
        } else {
          rest.push_back(pool[static_cast<std::size_t>(i)]);
        }
      }
    }
    acc.push_back(std::move(block));
    enumerate_partitions(parts, rest, acc, out);
    acc.pop_back();
    // Advance the index combination.
    int pos = want - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - want + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < want; ++i)
      idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
}

}  // namespace

QuotientPoset::QuotientPoset(const Composition& alpha) : type_(alpha) {
  if (alpha.n() > 9) throw std::invalid_argument("QuotientPoset: |alpha| > 9 guard");
  std::vector<int> pool(static_cast<std::size_t>(alpha.n()));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<std::vector<int>> acc;
  enumerate_partitions(alpha.parts(), pool, acc, elements_);

  const int n_elems = size();
  index_.reserve(static_cast<std::size_t>(n_elems));
  ranks_.resize(static_cast<std::size_t>(n_elems));
  for (int i = 0; i < n_elems; ++i) {
    const Permutation w = elements_[static_cast<std::size_t>(i)].word();
    index_.emplace_back(w.one_line(), i);
    ranks_[static_cast<std::size_t>(i)] = w.inversions();
    max_rank_ = std::max(max_rank_, ranks_[static_cast<std::size_t>(i)]);
  }
  std::sort(index_.begin(), index_.end());

  edges_.resize(static_cast<std::size_t>(n_elems));
  const int blocks = alpha.length();
  for (int i = 0; i < n_elems; ++i) {
    const OrderedSetPartition& b = elements_[static_cast<std::size_t>(i)];
    for (int a = 0; a < blocks; ++a) {
      for (int c = a + 1; c < blocks; ++c) {
        for (int x : b.blocks()[static_cast<std::size_t>(a)]) {
          for (int y : b.blocks()[static_cast<std::size_t>(c)]) {
            if (x < y) {
              const int j = index_of(b.swap_values(x, y));
              assert(ranks_[static_cast<std::size_t>(j)] > ranks_[static_cast<std::size_t>(i)]);
              edges_[static_cast<std::size_t>(i)].push_back(j);
            }
          }
        }
      }
    }
  }

  if (n_elems <= kEagerClosureCap) {
    eager_closure_ = true;
    closure_words_per_row_ = (static_cast<std::size_t>(n_elems) + 63) / 64;
    closure_.assign(static_cast<std::size_t>(n_elems) * closure_words_per_row_, 0);
    // Edges strictly increase rank, so filling in decreasing-rank order is
    // a topological sweep: reach(a) = union over edges a->b of {b}+reach(b).
    std::vector<int> order(static_cast<std::size_t>(n_elems));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return ranks_[static_cast<std::size_t>(a)] > ranks_[static_cast<std::size_t>(b)]; });
    for (int a : order) {
      std::uint64_t* row = &closure_[static_cast<std::size_t>(a) * closure_words_per_row_];
      for (int b : edges_[static_cast<std::size_t>(a)]) {
        row[static_cast<std::size_t>(b) / 64] |= std::uint64_t{1} << (static_cast<std::size_t>(b) % 64);
        const std::uint64_t* sub = &closure_[static_cast<std::size_t>(b) * closure_words_per_row_];
        for (std::size_t t = 0; t < closure_words_per_row_; ++t) row[t] |= sub[t];
      }
    }
  }
}

int QuotientPoset::index_of(const OrderedSetPartition& b) const {
  if (!(b.type() == type_))
    throw std::invalid_argument("QuotientPoset::index_of: partition type does not match the poset");
  const std::vector<int> key = b.word().one_line();
  auto it = std::lower_bound(index_.begin(), index_.end(), key,
                             [](const auto& entry, const std::vector<int>& k) { return entry.first < k; });
  if (it == index_.end() || it->first != key)
    throw std::invalid_argument("QuotientPoset::index_of: not an element of this poset");
  return it->second;
}

bool QuotientPoset::less(int a, int b) const {
  if (a == b) return false;
  if (eager_closure_) return closure_bit(a, b);
  if (ranks_[static_cast<std::size_t>(a)] >= ranks_[static_cast<std::size_t>(b)]) return false;
  // Rank-pruned DFS along rank-increasing edges.
  std::vector<bool> visited(static_cast<std::size_t>(size()), false);
  std::vector<int> stack{a};
  visited[static_cast<std::size_t>(a)] = true;
  const int target_rank = ranks_[static_cast<std::size_t>(b)];
  while (!stack.empty()) {
    const int cur = stack.back();
    stack.pop_back();
    for (int nxt : edges_[static_cast<std::size_t>(cur)]) {
      if (nxt == b) return true;
      if (visited[static_cast<std::size_t>(nxt)]) continue;
      if (ranks_[static_cast<std::size_t>(nxt)] >= target_rank) continue;
      visited[static_cast<std::size_t>(nxt)] = true;
      stack.push_back(nxt);
    }
  }
  return false;
}

IntPolynomial QuotientPoset::rank_generating_function() const {
  std::vector<mpz_class> c(static_cast<std::size_t>(max_rank_) + 1, 0);
  for (int r : ranks_) c[static_cast<std::size_t>(r)] += 1;
  return IntPolynomial(std::move(c));
}

QuotientPoset build_poset(const Composition& alpha) { return QuotientPoset(alpha); }

const QuotientPoset& cached_poset(const Composition& alpha) {
  thread_local std::map<std::vector<int>, QuotientPoset> cache;
  auto it = cache.find(alpha.parts());
  if (it == cache.end()) it = cache.emplace(alpha.parts(), QuotientPoset(alpha)).first;
  return it->second;
}

bool alpha_bruhat_less(const Permutation& sigma, const Permutation& tau, const Composition& alpha) {
  if (sigma.n() != alpha.n() || tau.n() != alpha.n())
    throw std::invalid_argument("alpha_bruhat_less: size mismatch");
  const AlphaDecomposition ds = alpha_decompose(sigma, alpha);
  const AlphaDecomposition dt = alpha_decompose(tau, alpha);
  if (!(ds.pi == dt.pi)) return false;
  const QuotientPoset& poset = cached_poset(alpha);
  return poset.less(poset.index_of(ds.blocks), poset.index_of(dt.blocks));
}

bool is_antichain(const std::vector<Permutation>& elems, const Composition& alpha) {
  if (elems.size() < 2) return true;
  const QuotientPoset& poset = cached_poset(alpha);
  // Group by the within-block permutation; distinct groups are incomparable.
  std::map<std::vector<int>, std::vector<int>> groups;
  for (const Permutation& s : elems) {
    const AlphaDecomposition d = alpha_decompose(s, alpha);
    groups[d.pi.one_line()].push_back(poset.index_of(d.blocks));
  }
  for (const auto& [pi, idxs] : groups) {
    for (std::size_t i = 0; i < idxs.size(); ++i) {
      for (std::size_t j = i + 1; j < idxs.size(); ++j) {
        if (idxs[i] == idxs[j]) continue;  // duplicate permutation
        if (poset.less(idxs[i], idxs[j]) || poset.less(idxs[j], idxs[i])) return false;
      }
    }
  }
  return true;
}

namespace {

// Hopcroft-Karp maximum matching on a bipartite graph given as left-side
// adjacency lists; returns the matching size.
int max_bipartite_matching(const std::vector<std::vector<int>>& adj, int n_right) {
  const int n_left = static_cast<int>(adj.size());
  constexpr int kInf = 1 << 30;
  std::vector<int> match_left(static_cast<std::size_t>(n_left), -1);
  std::vector<int> match_right(static_cast<std::size_t>(n_right), -1);
  std::vector<int> dist(static_cast<std::size_t>(n_left));
  int matching = 0;

  auto bfs = [&]() {
    std::queue<int> q;
    for (int u = 0; u < n_left; ++u) {
      if (match_left[static_cast<std::size_t>(u)] < 0) {
        dist[static_cast<std::size_t>(u)] = 0;
        q.push(u);
      } else {
        dist[static_cast<std::size_t>(u)] = kInf;
      }
    }
    bool found = false;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : adj[static_cast<std::size_t>(u)]) {
        const int w = match_right[static_cast<std::size_t>(v)];
        if (w < 0) {
          found = true;
        } else if (dist[static_cast<std::size_t>(w)] == kInf) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          q.push(w);
        }
      }
    }
    return found;
  };

  std::function<bool(int)> dfs = [&](int u) {
    for (int v : adj[static_cast<std::size_t>(u)]) {
      const int w = match_right[static_cast<std::size_t>(v)];
      if (w < 0 || (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(u)] + 1 && dfs(w))) {
        match_left[static_cast<std::size_t>(u)] = v;
        match_right[static_cast<std::size_t>(v)] = u;
        return true;
      }
    }
    dist[static_cast<std::size_t>(u)] = kInf;
    return false;
  };

  while (bfs()) {
    for (int u = 0; u < n_left; ++u) {
      if (match_left[static_cast<std::size_t>(u)] < 0 && dfs(u)) ++matching;
    }
  }
  return matching;
}

}  // namespace

int max_antichain_size(const QuotientPoset& poset, int copies) {
  if (copies < 1) throw std::invalid_argument("max_antichain_size: copies must be positive");
  const long long total = static_cast<long long>(poset.size()) * copies;
  if (total > 5000) throw std::invalid_argument("max_antichain_size: size * copies > 5000 guard");

  // Strict comparability pairs within one copy.
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < poset.size(); ++a) {
    for (int b = 0; b < poset.size(); ++b) {
      if (a != b && poset.less(a, b)) pairs.emplace_back(a, b);
    }
  }
  // Disjoint union: the same pairs replicated per copy, nodes offset.
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(total));
  for (int c = 0; c < copies; ++c) {
    const int off = c * poset.size();
    for (const auto& [a, b] : pairs) adj[static_cast<std::size_t>(off + a)].push_back(off + b);
  }
  const int matching = max_bipartite_matching(adj, static_cast<int>(total));
  return static_cast<int>(total) - matching;
}

}  // namespace qorbit
