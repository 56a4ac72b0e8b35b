#include "qorbit/symmetric.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qorbit {

RationalVector parse_rational_vector(const std::string& csv) {
  RationalVector out;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
    while (!tok.empty() && tok.back() == ' ') tok.pop_back();
    mpq_class v;
    try {
      v = mpq_class(tok, 10);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_rational_vector: bad entry '" + tok + "'");
    }
    if (v.get_den() == 0) throw std::invalid_argument("parse_rational_vector: zero denominator");
    v.canonicalize();
    out.push_back(std::move(v));
  }
  if (out.empty()) throw std::invalid_argument("parse_rational_vector: empty vector");
  return out;
}

mpq_class dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  mpq_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool has_distinct_entries(const RationalVector& v) {
  RationalVector s = v;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

mpq_class sum(const RationalVector& v) {
  mpq_class s = 0;
  for (const auto& x : v) s += x;
  return s;
}

Composition comp(const RationalVector& w) {
  if (w.empty()) throw std::invalid_argument("comp: empty vector");
  RationalVector s = w;
  std::sort(s.begin(), s.end());
  std::vector<int> parts;
  int run = 1;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] == s[i - 1]) {
      ++run;
    } else {
      parts.push_back(run);
      run = 1;
    }
  }
  parts.push_back(run);
  return Composition(std::move(parts));
}

std::vector<int> s_set(const Composition& alpha) { return alpha.partial_sums(); }

OrderedSetPartition::OrderedSetPartition(std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks)) {
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("OrderedSetPartition: empty block");
    std::sort(b.begin(), b.end());
    n_ += static_cast<int>(b.size());
  }
  std::vector<bool> seen(static_cast<std::size_t>(n_), false);
  for (const auto& b : blocks_) {
    for (int v : b) {
      if (v < 1 || v > n_ || seen[static_cast<std::size_t>(v - 1)])
        throw std::invalid_argument("OrderedSetPartition: blocks must partition {1..n}");
      seen[static_cast<std::size_t>(v - 1)] = true;
    }
  }
}

Composition OrderedSetPartition::type() const {
  std::vector<int> parts;
  parts.reserve(blocks_.size());
  for (const auto& b : blocks_) parts.push_back(static_cast<int>(b.size()));
  return Composition(std::move(parts));
}

Permutation OrderedSetPartition::word() const {
  std::vector<int> one_line;
  one_line.reserve(static_cast<std::size_t>(n_));
  for (const auto& b : blocks_) one_line.insert(one_line.end(), b.begin(), b.end());
  return Permutation(std::move(one_line));
}

OrderedSetPartition OrderedSetPartition::swap_values(int i, int j) const {
  std::vector<std::vector<int>> out = blocks_;
  for (auto& b : out) {
    for (auto& v : b) {
      if (v == i) v = j;
      else if (v == j) v = i;
    }
  }
  return OrderedSetPartition(std::move(out));
}

std::string OrderedSetPartition::str() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t c = 0; c < blocks_.size(); ++c) {
    if (c) out << ",";
    out << "{";
    for (std::size_t i = 0; i < blocks_[c].size(); ++i) {
      if (i) out << ",";
      out << blocks_[c][i];
    }
    out << "}";
  }
  out << ")";
  return out.str();
}

AlphaDecomposition alpha_decompose(const Permutation& sigma, const Composition& alpha) {
  if (sigma.n() != alpha.n())
    throw std::invalid_argument("alpha_decompose: permutation and composition sizes differ");
  std::vector<std::vector<int>> blocks;
  blocks.reserve(static_cast<std::size_t>(alpha.length()));
  int pos = 1;
  for (int part : alpha.parts()) {
    std::vector<int> b;
    b.reserve(static_cast<std::size_t>(part));
    for (int i = 0; i < part; ++i) b.push_back(sigma(pos + i));
    pos += part;
    blocks.push_back(std::move(b));
  }
  OrderedSetPartition B(std::move(blocks));
  Permutation pi = B.word().inverse().compose(sigma);
  return AlphaDecomposition{std::move(B), std::move(pi)};
}

}  // namespace qorbit
