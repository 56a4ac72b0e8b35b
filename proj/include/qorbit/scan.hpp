#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "qorbit/qbinomial.hpp"

namespace qorbit {

struct LogConcaveViolation {
  int n = 0;
  int k = 0;
  std::int64_t r = 0;
  mpz_class a_prev, a, a_next;  // the witnessing triple: a^2 < a_prev * a_next

  bool operator==(const LogConcaveViolation& o) const {
    return n == o.n && k == o.k && r == o.r && a_prev == o.a_prev && a == o.a && a_next == o.a_next;
  }
};

// All r in [r_lo, r_hi] where the coefficient sequence of qbinom(n,k) fails
// log-concavity: a_r^2 < a_{r-1} a_{r+1}, exact.  Requires
// 0 < r_lo <= r_hi < k(n-k).  Palindromicity is exploited: the comparison
// runs only at indices up to the midpoint and verdicts above it mirror.
std::vector<LogConcaveViolation> logconcave_violations(const QBinomialFamily& fam, std::int64_t r_lo,
                                                       std::int64_t r_hi);
std::vector<LogConcaveViolation> logconcave_violations(int n, int k, std::int64_t r_lo, std::int64_t r_hi);

struct ScanBounds {
  int n_min = 45;
  int k_min = 13;
  std::int64_t guard = 25;  // only guard < r < k(n-k) - guard is tested

  bool operator==(const ScanBounds& o) const {
    return n_min == o.n_min && k_min == o.k_min && guard == o.guard;
  }
};

// Bounds with the conjecture's thresholds removed, for exploring where
// violations actually start.
inline ScanBounds relaxed_bounds() { return ScanBounds{4, 1, 0}; }

struct ScanCell {
  int n = 0;
  int k = 0;
  int violations = 0;

  bool operator==(const ScanCell& o) const {
    return n == o.n && k == o.k && violations == o.violations;
  }
};

// Line-oriented checkpoint.  Layout:
//   logconcave-scan v1
//   bounds n_min=45 k_min=13 guard=25 n_max=120
//   viol n=.. k=.. r=.. a_prev=.. a=.. a_next=..   (before their cell)
//   cell n=.. k=.. viols=..
// Cells appear in canonical order: n ascending from n_min, k ascending
// from k_min to floor(n/2) (the k > n/2 half is determined by symmetry).
// Serialization is canonical, so serialize(parse(x)) == x.
struct ScanCheckpoint {
  ScanBounds bounds;
  int n_max = 0;
  std::vector<ScanCell> cells;
  std::vector<LogConcaveViolation> violations;

  std::string serialize() const;
  // Strict parse; throws std::runtime_error with a distinct message for a
  // bad version line, malformed records, cells out of canonical order,
  // violation/cell count mismatches, and stored triples that do not
  // actually violate log-concavity.
  static ScanCheckpoint parse(const std::string& text);
};

struct ScanOptions {
  int n_max = 45;
  std::string checkpoint_path;  // empty: in-memory only
  ScanBounds bounds;
  int workers = 0;
  // Deterministic ~1% of cells are recomputed from scratch and compared
  // against the incremental family; a mismatch aborts the scan.
  bool spot_check = true;
};

struct ScanResult {
  ScanCheckpoint checkpoint;
  long cells_scanned_now = 0;
  double elapsed_seconds = 0.0;
};

// Scans every cell after the ones already in the checkpoint, appending to
// the checkpoint file after each cell.  An existing checkpoint must carry
// identical bounds and an n_max no larger than the requested one; a torn
// tail (partial final line, or violation lines with no following cell) is
// discarded on resume, so an interrupted-and-resumed scan produces a file
// byte-identical to an uninterrupted run.
ScanResult run_scan(const ScanOptions& opts);

}  // namespace qorbit
