#include "qorbit/scan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <type_traits>

namespace qorbit {

namespace {

int k_hi_for(int n) { return n / 2; }

// Reads "key=value" off the stream; throws if the key differs.
template <typename T>
T read_field(std::istringstream& in, const char* key) {
  std::string tok;
  if (!(in >> tok))
    throw std::runtime_error("scan checkpoint: malformed record (missing " + std::string(key) + ")");
  const std::string prefix = std::string(key) + "=";
  if (tok.rfind(prefix, 0) != 0)
    throw std::runtime_error("scan checkpoint: malformed record (expected " + std::string(key) + ")");
  const std::string val = tok.substr(prefix.size());
  if constexpr (std::is_same_v<T, mpz_class>) {
    try {
      return mpz_class(val);
    } catch (const std::invalid_argument&) {
      throw std::runtime_error("scan checkpoint: malformed record (bad integer)");
    }
  } else {
    std::size_t pos = 0;
    long long parsed = 0;
    try {
      parsed = std::stoll(val, &pos);
    } catch (const std::exception&) {
      throw std::runtime_error("scan checkpoint: malformed record (bad number)");
    }
    if (pos != val.size())
      throw std::runtime_error("scan checkpoint: malformed record (bad number)");
    return static_cast<T>(parsed);
  }
}

void require_no_trailing(std::istringstream& in) {
  std::string extra;
  if (in >> extra)
    throw std::runtime_error("scan checkpoint: malformed record (trailing data)");
}

std::string viol_line(const LogConcaveViolation& v) {
  return "viol n=" + std::to_string(v.n) + " k=" + std::to_string(v.k) + " r=" + std::to_string(v.r) +
         " a_prev=" + v.a_prev.get_str() + " a=" + v.a.get_str() + " a_next=" + v.a_next.get_str() +
         "\n";
}

std::string cell_line(const ScanCell& c) {
  return "cell n=" + std::to_string(c.n) + " k=" + std::to_string(c.k) +
         " viols=" + std::to_string(c.violations) + "\n";
}

std::string header_lines(const ScanBounds& b, int n_max) {
  return std::string("logconcave-scan v1\n") + "bounds n_min=" + std::to_string(b.n_min) +
         " k_min=" + std::to_string(b.k_min) + " guard=" + std::to_string(b.guard) +
         " n_max=" + std::to_string(n_max) + "\n";
}

LogConcaveViolation parse_viol_line(const std::string& rest) {
  std::istringstream in(rest);
  LogConcaveViolation v;
  v.n = read_field<int>(in, "n");
  v.k = read_field<int>(in, "k");
  v.r = read_field<std::int64_t>(in, "r");
  v.a_prev = read_field<mpz_class>(in, "a_prev");
  v.a = read_field<mpz_class>(in, "a");
  v.a_next = read_field<mpz_class>(in, "a_next");
  require_no_trailing(in);
  if (v.a * v.a >= v.a_prev * v.a_next)
    throw std::runtime_error("scan checkpoint: stored violation fails its own inequality");
  return v;
}

ScanCell parse_cell_line(const std::string& rest) {
  std::istringstream in(rest);
  ScanCell c;
  c.n = read_field<int>(in, "n");
  c.k = read_field<int>(in, "k");
  c.violations = read_field<int>(in, "viols");
  require_no_trailing(in);
  return c;
}

// The canonical cell after (n,k), or false when the grid is exhausted.
bool advance_cell(const ScanBounds& b, int n_max, int& n, int& k) {
  while (n <= n_max) {
    ++k;
    if (k >= b.k_min && k <= k_hi_for(n)) return true;
    ++n;
    k = b.k_min - 1;
  }
  return false;
}

bool first_cell(const ScanBounds& b, int n_max, int& n, int& k) {
  n = b.n_min;
  k = b.k_min - 1;
  return advance_cell(b, n_max, n, k);
}

// Incremental consumer shared by the strict parser and the lenient resume
// loader: feed lines in order, commit violations when their cell arrives.
struct CellStream {
  ScanCheckpoint* cp;
  int exp_n = 0, exp_k = 0;
  bool more = false;
  std::vector<LogConcaveViolation> pending;

  explicit CellStream(ScanCheckpoint* target) : cp(target) {
    more = first_cell(cp->bounds, cp->n_max, exp_n, exp_k);
  }

  void feed(const std::string& line) {
    if (line.rfind("viol ", 0) == 0) {
      pending.push_back(parse_viol_line(line.substr(5)));
    } else if (line.rfind("cell ", 0) == 0) {
      ScanCell c = parse_cell_line(line.substr(5));
      if (!more || c.n != exp_n || c.k != exp_k)
        throw std::runtime_error("scan checkpoint: cells out of canonical order");
      if (static_cast<int>(pending.size()) != c.violations)
        throw std::runtime_error("scan checkpoint: violation count mismatch");
      for (const auto& v : pending)
        if (v.n != c.n || v.k != c.k)
          throw std::runtime_error("scan checkpoint: violation attached to the wrong cell");
      for (auto& v : pending) cp->violations.push_back(std::move(v));
      pending.clear();
      cp->cells.push_back(c);
      more = advance_cell(cp->bounds, cp->n_max, exp_n, exp_k);
    } else {
      throw std::runtime_error("scan checkpoint: malformed record (unknown line type)");
    }
  }
};

// Parses the two header lines; returns the offset just past them.
std::size_t parse_header(const std::string& text, ScanCheckpoint& cp) {
  const std::size_t p1 = text.find('\n');
  if (p1 == std::string::npos || text.substr(0, p1) != "logconcave-scan v1")
    throw std::runtime_error("scan checkpoint: unsupported version line");
  const std::size_t p2 = text.find('\n', p1 + 1);
  if (p2 == std::string::npos || text.compare(p1 + 1, 7, "bounds ") != 0)
    throw std::runtime_error("scan checkpoint: missing bounds line");
  std::istringstream in(text.substr(p1 + 8, p2 - p1 - 8));
  cp.bounds.n_min = read_field<int>(in, "n_min");
  cp.bounds.k_min = read_field<int>(in, "k_min");
  cp.bounds.guard = read_field<std::int64_t>(in, "guard");
  cp.n_max = read_field<int>(in, "n_max");
  require_no_trailing(in);
  return p2 + 1;
}

}  // namespace

std::vector<LogConcaveViolation> logconcave_violations(const QBinomialFamily& fam, std::int64_t r_lo,
                                                       std::int64_t r_hi) {
  const std::int64_t d = fam.degree();
  if (!(0 < r_lo && r_lo <= r_hi && r_hi < d))
    throw std::invalid_argument("logconcave_violations: need 0 < r_lo <= r_hi < k(n-k)");
  const std::int64_t mid = fam.midpoint();
  // Direct comparisons are confined to indices at or below the midpoint;
  // the lower bound also covers mirror images of the range's upper part.
  const std::int64_t lo_d = std::max<std::int64_t>(1, std::min(r_lo, d - r_hi));
  const std::int64_t hi_d = std::min(mid, r_hi);
  std::vector<bool> bad;
  if (hi_d >= lo_d) bad.assign(static_cast<std::size_t>(hi_d - lo_d + 1), false);
  mpz_class sq, prod;
  for (std::int64_t r = lo_d; r <= hi_d; ++r) {
    sq = fam.coeff(r) * fam.coeff(r);
    prod = fam.coeff(r - 1) * fam.coeff(r + 1);
    bad[static_cast<std::size_t>(r - lo_d)] = sq < prod;
  }
  auto is_bad = [&](std::int64_t r) {
    const std::int64_t rr = r <= mid ? r : d - r;
    return rr >= lo_d && rr <= hi_d && bad[static_cast<std::size_t>(rr - lo_d)];
  };
  std::vector<LogConcaveViolation> out;
  for (std::int64_t r = r_lo; r <= r_hi; ++r) {
    if (!is_bad(r)) continue;
    LogConcaveViolation v;
    v.n = static_cast<int>(fam.n());
    v.k = static_cast<int>(fam.k());
    v.r = r;
    v.a_prev = fam.coeff(r - 1);
    v.a = fam.coeff(r);
    v.a_next = fam.coeff(r + 1);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<LogConcaveViolation> logconcave_violations(int n, int k, std::int64_t r_lo,
                                                       std::int64_t r_hi) {
  QBinomialFamily fam(n);
  for (int i = 0; i < k; ++i) fam.next_k();
  return logconcave_violations(fam, r_lo, r_hi);
}

std::string ScanCheckpoint::serialize() const {
  std::string out = header_lines(bounds, n_max);
  std::size_t vi = 0;
  for (const ScanCell& c : cells) {
    for (int t = 0; t < c.violations; ++t) out += viol_line(violations[vi++]);
    out += cell_line(c);
  }
  return out;
}

ScanCheckpoint ScanCheckpoint::parse(const std::string& text) {
  ScanCheckpoint cp;
  std::size_t pos = parse_header(text, cp);
  if (text.back() != '\n')
    throw std::runtime_error("scan checkpoint: truncated final line");
  CellStream stream(&cp);
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    stream.feed(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  if (!stream.pending.empty())
    throw std::runtime_error("scan checkpoint: dangling violation records at end of file");
  return cp;
}

namespace {

// Longest valid prefix of an interrupted checkpoint: everything up to the
// last complete, consistent cell line.  A torn final line, violation lines
// with no following cell, and any malformed suffix are discarded — those
// cells are simply rescanned.  A bad header is not recoverable.
ScanCheckpoint load_resume_prefix(const std::string& text) {
  ScanCheckpoint cp;
  std::size_t pos = parse_header(text, cp);
  CellStream stream(&cp);
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) break;  // torn tail
    const std::string line = text.substr(pos, nl - pos);
    pos = nl + 1;
    try {
      stream.feed(line);
    } catch (const std::runtime_error&) {
      break;
    }
  }
  return cp;
}

struct RowOutput {
  std::vector<ScanCell> cells;
  std::vector<LogConcaveViolation> violations;
};

RowOutput scan_row(int n, int k_from, const ScanBounds& bounds, bool spot_check) {
  RowOutput out;
  const int k_hi = k_hi_for(n);
  if (k_from > k_hi) return out;
  QBinomialFamily fam(n);
  for (int i = 0; i < k_from; ++i) fam.next_k();
  for (int k = k_from; k <= k_hi; ++k) {
    if (k > k_from) fam.next_k();
    if (spot_check && (static_cast<unsigned long long>(n) * 1000003ull +
                       static_cast<unsigned long long>(k) * 7919ull) %
                              100 ==
                          0) {
      if (!(fam.to_polynomial() == q_binomial(n, k)))
        throw std::runtime_error("scan: incremental family diverged from direct construction at n=" +
                                 std::to_string(n) + " k=" + std::to_string(k));
    }
    const std::int64_t d = fam.degree();
    const std::int64_t r_lo = bounds.guard + 1;
    const std::int64_t r_hi = d - bounds.guard - 1;
    std::vector<LogConcaveViolation> v;
    if (r_lo <= r_hi) v = logconcave_violations(fam, r_lo, r_hi);
    ScanCell c;
    c.n = n;
    c.k = k;
    c.violations = static_cast<int>(v.size());
    out.cells.push_back(c);
    for (auto& x : v) out.violations.push_back(std::move(x));
  }
  return out;
}

void append_row(ScanCheckpoint& cp, std::ofstream* file, RowOutput&& row, long& scanned) {
  std::size_t vi = 0;
  for (const ScanCell& c : row.cells) {
    std::string chunk;
    for (int t = 0; t < c.violations; ++t) {
      chunk += viol_line(row.violations[vi]);
      cp.violations.push_back(std::move(row.violations[vi]));
      ++vi;
    }
    chunk += cell_line(c);
    cp.cells.push_back(c);
    ++scanned;
    if (file) {
      *file << chunk;
      file->flush();
    }
  }
}

}  // namespace

ScanResult run_scan(const ScanOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  if (opts.bounds.n_min < 2 || opts.bounds.k_min < 1 || opts.bounds.guard < 0)
    throw std::invalid_argument("run_scan: bounds must have n_min >= 2, k_min >= 1, guard >= 0");
  if (opts.n_max < opts.bounds.n_min)
    throw std::invalid_argument("run_scan: n_max below the grid's n_min");

  ScanCheckpoint cp;
  cp.bounds = opts.bounds;
  cp.n_max = opts.n_max;

  if (!opts.checkpoint_path.empty()) {
    std::ifstream in(opts.checkpoint_path, std::ios::binary);
    if (in) {
      std::ostringstream buf;
      buf << in.rdbuf();
      const std::string text = buf.str();
      if (!text.empty()) {
        ScanCheckpoint prev = load_resume_prefix(text);
        if (!(prev.bounds == opts.bounds))
          throw std::runtime_error("scan checkpoint: bounds mismatch with requested scan");
        if (prev.n_max > opts.n_max)
          throw std::runtime_error("scan checkpoint: already covers a larger n_max");
        cp.cells = std::move(prev.cells);
        cp.violations = std::move(prev.violations);
      }
    }
  }

  // Rewrite the retained prefix (dropping any torn tail, and refreshing the
  // header if n_max grew), then append the remaining cells.
  std::ofstream file;
  if (!opts.checkpoint_path.empty()) {
    file.open(opts.checkpoint_path, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("scan checkpoint: cannot open for writing");
    file << cp.serialize();
    file.flush();
  }

  // Cells form a canonical prefix, so the resume point is determined by how
  // many there are.
  int n0 = 0, k0 = 0;
  bool any = first_cell(opts.bounds, opts.n_max, n0, k0);
  for (std::size_t i = 0; any && i < cp.cells.size(); ++i)
    any = advance_cell(opts.bounds, opts.n_max, n0, k0);

  long scanned = 0;
  if (any) {
    const int workers = [&] {
      if (opts.workers > 0) return opts.workers;
      const unsigned hw = std::thread::hardware_concurrency();
      return hw == 0 ? 1 : static_cast<int>(hw);
    }();
    std::ofstream* fptr = opts.checkpoint_path.empty() ? nullptr : &file;
    if (workers <= 1 || n0 == opts.n_max) {
      int k_from = k0;
      for (int n = n0; n <= opts.n_max; ++n, k_from = opts.bounds.k_min)
        append_row(cp, fptr, scan_row(n, k_from, opts.bounds, opts.spot_check), scanned);
    } else {
      // Row pool feeding a single in-order writer.
      std::mutex mu;
      std::condition_variable cv;
      std::map<int, RowOutput> done;
      std::exception_ptr error;
      std::atomic<int> next_row{n0};
      auto worker = [&] {
        while (true) {
          const int n = next_row.fetch_add(1);
          if (n > opts.n_max) return;
          try {
            RowOutput row =
                scan_row(n, n == n0 ? k0 : opts.bounds.k_min, opts.bounds, opts.spot_check);
            std::lock_guard<std::mutex> lock(mu);
            done.emplace(n, std::move(row));
          } catch (...) {
            std::lock_guard<std::mutex> lock(mu);
            if (!error) error = std::current_exception();
            next_row.store(opts.n_max + 1);
          }
          cv.notify_all();
        }
      };
      std::vector<std::thread> pool;
      const int nthreads = std::min(workers, opts.n_max - n0 + 1);
      pool.reserve(static_cast<std::size_t>(nthreads));
      for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
      bool aborted = false;
      for (int n = n0; n <= opts.n_max && !aborted; ++n) {
        RowOutput row;
        {
          std::unique_lock<std::mutex> lock(mu);
          cv.wait(lock, [&] { return done.count(n) != 0 || error; });
          if (error) {
            aborted = true;
          } else {
            row = std::move(done[n]);
            done.erase(n);
          }
        }
        if (aborted) break;
        append_row(cp, fptr, std::move(row), scanned);
      }
      for (auto& th : pool) th.join();
      if (error) std::rethrow_exception(error);
    }
  }

  ScanResult result;
  result.checkpoint = std::move(cp);
  result.cells_scanned_now = scanned;
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

}  // namespace qorbit
