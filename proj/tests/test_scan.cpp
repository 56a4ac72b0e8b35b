#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qorbit/scan.hpp"

using qorbit::LogConcaveViolation;
using qorbit::logconcave_violations;
using qorbit::relaxed_bounds;
using qorbit::run_scan;
using qorbit::ScanBounds;
using qorbit::ScanCell;
using qorbit::ScanCheckpoint;
using qorbit::ScanOptions;
using qorbit::ScanResult;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(bool(in));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  REQUIRE(bool(out));
  out << text;
}

ScanOptions relaxed_opts(int n_max, const std::string& path = "") {
  ScanOptions o;
  o.n_max = n_max;
  o.checkpoint_path = path;
  o.bounds = relaxed_bounds();
  o.workers = 1;
  return o;
}

LogConcaveViolation viol(int n, int k, std::int64_t r, long p, long a, long nx) {
  LogConcaveViolation v;
  v.n = n;
  v.k = k;
  v.r = r;
  v.a_prev = p;
  v.a = a;
  v.a_next = nx;
  return v;
}

const char* kFrozenN4 =
    "logconcave-scan v1\n"
    "bounds n_min=4 k_min=1 guard=0 n_max=4\n"
    "cell n=4 k=1 viols=0\n"
    "viol n=4 k=2 r=1 a_prev=1 a=1 a_next=2\n"
    "viol n=4 k=2 r=3 a_prev=2 a=1 a_next=1\n"
    "cell n=4 k=2 viols=2\n";

const char* kHeaderN4 =
    "logconcave-scan v1\n"
    "bounds n_min=4 k_min=1 guard=0 n_max=4\n";

}  // namespace

TEST_CASE("violations of log-concavity in small Gaussian binomials") {
  // qbinom(4,2) = 1,1,2,1,1: the leading 1,1,2 ramp violates at r=1 and,
  // by symmetry, at r=3.
  auto v42 = logconcave_violations(4, 2, 1, 3);
  REQUIRE(v42.size() == 2);
  CHECK(v42[0] == viol(4, 2, 1, 1, 1, 2));
  CHECK(v42[1] == viol(4, 2, 3, 2, 1, 1));

  // qbinom(6,3) = 1,1,2,3,3,3,3,2,1,1: only the edge ramps violate.
  auto v63 = logconcave_violations(6, 3, 1, 8);
  REQUIRE(v63.size() == 2);
  CHECK(v63[0] == viol(6, 3, 1, 1, 1, 2));
  CHECK(v63[1] == viol(6, 3, 8, 2, 1, 1));

  // qbinom(6,2) = 1,1,2,2,3,2,2,1,1: violations at r = 1, 3, 5, 7.
  auto v62 = logconcave_violations(6, 2, 1, 7);
  REQUIRE(v62.size() == 4);
  CHECK(v62[0] == viol(6, 2, 1, 1, 1, 2));
  CHECK(v62[1] == viol(6, 2, 3, 2, 2, 3));
  CHECK(v62[2] == viol(6, 2, 5, 3, 2, 2));
  CHECK(v62[3] == viol(6, 2, 7, 2, 1, 1));

  // All-ones coefficient vector: no violations anywhere.
  CHECK(logconcave_violations(4, 1, 1, 2).empty());
}

TEST_CASE("range restriction and mirrored verdicts") {
  // Restricting qbinom(6,2) to [2,6] drops the r=1 and r=7 edge
  // violations but keeps r=3 and its mirror r=5.
  auto mid = logconcave_violations(6, 2, 2, 6);
  REQUIRE(mid.size() == 2);
  CHECK(mid[0] == viol(6, 2, 3, 2, 2, 3));
  CHECK(mid[1] == viol(6, 2, 5, 3, 2, 2));

  // A range entirely above the midpoint is answered via mirrors alone.
  auto high = logconcave_violations(6, 2, 4, 7);
  REQUIRE(high.size() == 2);
  CHECK(high[0] == viol(6, 2, 5, 3, 2, 2));
  CHECK(high[1] == viol(6, 2, 7, 2, 1, 1));

  // Inside the conjectured safe band nothing shows up: n=45, k=13 with the
  // default guard of 25 on each side.
  ScanBounds def;
  auto safe = logconcave_violations(45, 13, def.guard + 1, 13 * (45 - 13) - def.guard - 1);
  CHECK(safe.empty());
}

TEST_CASE("violation range validation") {
  CHECK_THROWS_AS(logconcave_violations(4, 2, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(logconcave_violations(4, 2, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(logconcave_violations(4, 2, 3, 2), std::invalid_argument);
}

TEST_CASE("checkpoint serialization: frozen format and round trip") {
  ScanResult res = run_scan(relaxed_opts(4));
  CHECK(res.cells_scanned_now == 2);
  CHECK(res.checkpoint.serialize() == kFrozenN4);

  ScanCheckpoint cp = ScanCheckpoint::parse(kFrozenN4);
  CHECK(cp.bounds == relaxed_bounds());
  CHECK(cp.n_max == 4);
  REQUIRE(cp.cells.size() == 2);
  CHECK(cp.cells[0] == ScanCell{4, 1, 0});
  CHECK(cp.cells[1] == ScanCell{4, 2, 2});
  REQUIRE(cp.violations.size() == 2);
  CHECK(cp.violations[0] == viol(4, 2, 1, 1, 1, 2));
  CHECK(cp.violations[1] == viol(4, 2, 3, 2, 1, 1));
  CHECK(cp.serialize() == kFrozenN4);

  // Header-only files are valid checkpoints with zero cells.
  ScanCheckpoint empty = ScanCheckpoint::parse(kHeaderN4);
  CHECK(empty.cells.empty());
  CHECK(empty.serialize() == kHeaderN4);
}

TEST_CASE("strict parse rejects corruption with distinct errors") {
  const std::string h = kHeaderN4;
  CHECK_THROWS_WITH_AS(ScanCheckpoint::parse("nonsense v9\nbounds n_min=4 k_min=1 guard=0 n_max=4\n"),
                       "scan checkpoint: unsupported version line", std::runtime_error);
  CHECK_THROWS_WITH_AS(ScanCheckpoint::parse("logconcave-scan v1\n"),
                       "scan checkpoint: missing bounds line", std::runtime_error);
  CHECK_THROWS_WITH_AS(ScanCheckpoint::parse(h + "cell n=4 k=2 viols=0\n"),
                       "scan checkpoint: cells out of canonical order", std::runtime_error);
  CHECK_THROWS_WITH_AS(ScanCheckpoint::parse(h + "cell n=4 k=1 viols=1\n"),
                       "scan checkpoint: violation count mismatch", std::runtime_error);
  CHECK_THROWS_WITH_AS(
      ScanCheckpoint::parse(h + "cell n=4 k=1 viols=0\n" +
                            "viol n=4 k=2 r=2 a_prev=1 a=2 a_next=1\ncell n=4 k=2 viols=1\n"),
      "scan checkpoint: stored violation fails its own inequality", std::runtime_error);
  CHECK_THROWS_WITH_AS(
      ScanCheckpoint::parse(h + "viol n=5 k=2 r=1 a_prev=1 a=1 a_next=2\ncell n=4 k=1 viols=1\n"),
      "scan checkpoint: violation attached to the wrong cell", std::runtime_error);
  CHECK_THROWS_WITH_AS(ScanCheckpoint::parse(h + "viol n=4 k=2 r=1 a_prev=1 a=1 a_next=2\n"),
                       "scan checkpoint: dangling violation records at end of file",
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(ScanCheckpoint::parse(h + "bogus record\n"),
                       "scan checkpoint: malformed record (unknown line type)", std::runtime_error);
  CHECK_THROWS_WITH_AS(ScanCheckpoint::parse(h + "cell n=4 k=1\n"),
                       "scan checkpoint: malformed record (missing viols)", std::runtime_error);
  CHECK_THROWS_WITH_AS(ScanCheckpoint::parse(h + "cell n=4 k=1 viols=0 junk\n"),
                       "scan checkpoint: malformed record (trailing data)", std::runtime_error);
  CHECK_THROWS_WITH_AS(ScanCheckpoint::parse(h + "cell n=4 k=1 viols=zero\n"),
                       "scan checkpoint: malformed record (bad number)", std::runtime_error);
  CHECK_THROWS_WITH_AS(ScanCheckpoint::parse(h + "cell n=4 k=1 viols=0"),
                       "scan checkpoint: truncated final line", std::runtime_error);
  // Cells past the grid's end are out of order too.
  CHECK_THROWS_WITH_AS(ScanCheckpoint::parse(std::string(kFrozenN4) + "cell n=5 k=1 viols=0\n"),
                       "scan checkpoint: cells out of canonical order", std::runtime_error);
}

TEST_CASE("checkpoint file: fresh run, complete resume is a no-op") {
  const std::string path = "scan_ckpt_fresh.txt";
  std::remove(path.c_str());
  ScanResult res = run_scan(relaxed_opts(6, path));
  CHECK(res.cells_scanned_now == 7);
  const std::string bytes = read_file(path);
  CHECK(bytes == res.checkpoint.serialize());

  // Resuming over a complete checkpoint rescans nothing and leaves the
  // file untouched.
  ScanResult again = run_scan(relaxed_opts(6, path));
  CHECK(again.cells_scanned_now == 0);
  CHECK(again.checkpoint.serialize() == bytes);
  CHECK(read_file(path) == bytes);
  std::remove(path.c_str());
}

TEST_CASE("interrupted checkpoints resume to byte-identical files") {
  const std::string ref_path = "scan_ckpt_ref.txt";
  std::remove(ref_path.c_str());
  run_scan(relaxed_opts(6, ref_path));
  const std::string full = read_file(ref_path);
  std::remove(ref_path.c_str());

  const std::size_t header_len = std::string(kHeaderN4).size();
  REQUIRE(full.size() > header_len);

  const std::string path = "scan_ckpt_resume.txt";
  // Every truncation point from the end of the header onward must recover,
  // whether it lands mid-line, after a dangling violation line, or after a
  // complete cell.
  for (std::size_t cut = header_len; cut <= full.size(); cut += 3) {
    write_file(path, full.substr(0, cut));
    ScanResult res = run_scan(relaxed_opts(6, path));
    CHECK(read_file(path) == full);
    CHECK(res.checkpoint.serialize() == full);
  }
  // An empty pre-existing file behaves like a fresh start.
  write_file(path, "");
  ScanResult res = run_scan(relaxed_opts(6, path));
  CHECK(res.cells_scanned_now == 7);
  CHECK(read_file(path) == full);
  std::remove(path.c_str());
}

TEST_CASE("corrupted middles are discarded and rescanned on resume") {
  const std::string path = "scan_ckpt_corrupt.txt";
  // A malformed record after the first cell: resume keeps the one good
  // cell and rescans the rest.
  write_file(path, std::string(kHeaderN4) + "cell n=4 k=1 viols=0\ngarbage\ncell n=4 k=2 viols=0\n");
  ScanResult res = run_scan(relaxed_opts(4, path));
  CHECK(res.cells_scanned_now == 1);
  CHECK(read_file(path) == kFrozenN4);
  std::remove(path.c_str());
}

TEST_CASE("resume refuses foreign or incompatible checkpoints") {
  const std::string path = "scan_ckpt_refuse.txt";

  write_file(path, "totally different file\n");
  CHECK_THROWS_WITH_AS(run_scan(relaxed_opts(4, path)),
                       "scan checkpoint: unsupported version line", std::runtime_error);
  CHECK(read_file(path) == "totally different file\n");  // left untouched

  write_file(path, kFrozenN4);
  ScanOptions other = relaxed_opts(4, path);
  other.bounds.guard = 25;
  CHECK_THROWS_WITH_AS(run_scan(other), "scan checkpoint: bounds mismatch with requested scan",
                       std::runtime_error);
  CHECK(read_file(path) == kFrozenN4);

  // Shrinking n_max is refused rather than silently discarding work.
  run_scan(relaxed_opts(6, path));
  CHECK_THROWS_WITH_AS(run_scan(relaxed_opts(4, path)),
                       "scan checkpoint: already covers a larger n_max", std::runtime_error);
  std::remove(path.c_str());
}

TEST_CASE("extending n_max reuses completed cells") {
  const std::string path_small = "scan_ckpt_small.txt";
  const std::string path_big = "scan_ckpt_big.txt";
  std::remove(path_small.c_str());
  std::remove(path_big.c_str());

  run_scan(relaxed_opts(6, path_big));
  const std::string full = read_file(path_big);

  run_scan(relaxed_opts(5, path_small));
  ScanResult ext = run_scan(relaxed_opts(6, path_small));
  CHECK(ext.cells_scanned_now == 3);  // the n=6 row
  CHECK(read_file(path_small) == full);

  std::remove(path_small.c_str());
  std::remove(path_big.c_str());
}

TEST_CASE("worker count does not change the result") {
  ScanOptions serial = relaxed_opts(12);
  ScanOptions pooled = relaxed_opts(12);
  pooled.workers = 3;
  const std::string a = run_scan(serial).checkpoint.serialize();
  const std::string b = run_scan(pooled).checkpoint.serialize();
  CHECK(a == b);

  // And with a checkpoint file in play.
  const std::string path = "scan_ckpt_workers.txt";
  std::remove(path.c_str());
  pooled.checkpoint_path = path;
  run_scan(pooled);
  CHECK(read_file(path) == a);
  std::remove(path.c_str());
}

TEST_CASE("spot checks leave results unchanged") {
  // (n,k) = (27,1) lands on the deterministic ~1% recheck schedule; the
  // scan must agree with itself whether or not the recheck runs.
  ScanOptions checked = relaxed_opts(27);
  ScanOptions unchecked = relaxed_opts(27);
  unchecked.spot_check = false;
  CHECK(run_scan(checked).checkpoint.serialize() == run_scan(unchecked).checkpoint.serialize());
}

TEST_CASE("default thresholds hold on the first rows of the grid") {
  ScanOptions opts;
  opts.n_max = 46;
  opts.workers = 1;
  ScanResult res = run_scan(opts);
  CHECK(res.cells_scanned_now == 21);  // k = 13..22 at n=45, 13..23 at n=46
  CHECK(res.checkpoint.violations.empty());
  for (const ScanCell& c : res.checkpoint.cells) CHECK(c.violations == 0);
}

TEST_CASE("scan option validation") {
  ScanOptions bad = relaxed_opts(3);
  CHECK_THROWS_AS(run_scan(bad), std::invalid_argument);  // n_max below n_min
  bad = relaxed_opts(6);
  bad.bounds.k_min = 0;
  CHECK_THROWS_AS(run_scan(bad), std::invalid_argument);
  bad = relaxed_opts(6);
  bad.bounds.guard = -1;
  CHECK_THROWS_AS(run_scan(bad), std::invalid_argument);
}
