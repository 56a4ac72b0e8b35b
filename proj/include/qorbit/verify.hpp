#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qorbit {

enum class CaseStatus { holds, fails, skipped_by_shortcut };

std::string status_str(CaseStatus s);

// One checked case.  `params` holds the inputs ("n=8 k=3"), `margin` the
// exact slack (rational string, or a fixed-precision decimal for the one
// suite that works in logs), `note` optional computed context.  Records
// carry no timing so that reruns with identical ranges serialize
// identically.
struct CaseRecord {
  std::string suite;
  std::string params;
  CaseStatus status = CaseStatus::holds;
  std::string margin;
  std::string note;

  std::string line() const;
};

struct VerificationReport {
  std::string suite;
  std::string ranges;
  std::vector<CaseRecord> cases;
  std::string worst_margin;
  double elapsed_seconds = 0.0;
  long held = 0, failed = 0, skipped = 0;

  void add(CaseRecord r);
  bool passed() const { return failed == 0; }
  // Line-oriented structured body: one line per case plus a summary line.
  std::string records() const;
  // One-line human summary (the only place elapsed time appears).
  std::string human() const;
};

// ---- single-case checks ----------------------------------------------

// Residue-class sums of the Gaussian binomial vs the n-th of the plain
// binomial: for every residue i, (C - n*s_i)^2 <= n*C, compared exactly in
// integers (squaring avoids the square root).  Reports the residue with the
// least slack.  Requires 1 < k < n-1.
CaseRecord residue_case(int n, int k);

// Peak coefficient bound n*M <= C(n,k), exact.  Requires 2 < k < n-2.
// With `gcd_shortcut`, coprime (n,k) pairs are marked skipped-by-shortcut:
// all residue-class sums are then equal, so every coefficient is at most
// C/n already.  A deterministic 1% of skipped pairs is still checked in
// full; a failing spot check fails the case.
CaseRecord maxcoeff_case(int n, int k, bool gcd_shortcut);

// Falling-factorial inequality C(n-j,k-j)^2 / C(n,k) >= (n/k)^(log(2)(k-2j)),
// requires n >= k >= 2j >= 2.  Decided in 256-bit interval logs with a 1e-9
// guard band; anything inside the band escalates to exact rational power
// comparisons through nested fraction brackets of log(2), then to wider
// directed-rounding evaluation.
CaseRecord falling_case(int n, int k, int j);

// All single-split coarsening pairs at n: splitting one part of alpha into
// two yields beta, and beta!*M(beta) <= alpha!*M(alpha).  These pairs
// generate the full refinement order, so checking them checks everything.
std::vector<CaseRecord> refinement_cases(int n);

// Composition maximum: max over compositions alpha of n with at least two
// parts of alpha!*M(q_multinomial(alpha)) equals 2*floor(n/2)*(n-2)! and is
// attained by the (2, n-2) split.  Requires 3 <= n <= 12.
CaseRecord main_identity_case(int n);

// Geometric cross-check: the hyperplane search on the orbit of (1,...,n)
// attains the same number.  Requires 3 <= n <= 5.
CaseRecord main_search_case(int n);

// ---- range drivers (parallel over rows, canonical merge order) --------

VerificationReport verify_residue(int n_max, int workers = 0);
VerificationReport verify_maxcoeff(int n_max, bool gcd_shortcut, int workers = 0);
VerificationReport verify_refinement(int n_max, int workers = 0);
VerificationReport verify_falling(int n_max, int workers = 0);
// Gaussian-binomial congruence mod q^n - 1 plus the root-of-unity identity
// for the cyclotomic fractions, over all admissible (n,k) and (n,d,c).
VerificationReport verify_congruences(int n_max, int workers = 0);
VerificationReport verify_main(int n_max, int workers = 0);

// Seeded random sweep: for each sampled pair (strictly increasing integer
// v, weakly increasing integer w), checks that the zero set of w on the
// orbit of v is an antichain in the comp(w) order.  Only failing trials
// produce case records; the note carries the first comparable pair.  Each
// failing record also reports whether the variant with every permutation
// inverted passes (it always has so far: the dot product factors through
// the inverse-side partition, where every cross-block move is strict).
VerificationReport verify_antichain(int pairs, unsigned long seed, int n_cap = 7);

}  // namespace qorbit
