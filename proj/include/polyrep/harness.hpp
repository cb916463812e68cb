#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "polyrep/polygonal.hpp"

namespace polyrep::harness {

struct Failure {
  std::string inputs;
  std::string expected;
  std::string got;
  friend bool operator==(const Failure&, const Failure&) = default;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t cases_run = 0;
  std::vector<Failure> failures;
  std::int64_t elapsed_ms = 0;
  bool aborted = false;  // failure budget exhausted before the range finished

  bool passed() const { return failures.empty(); }
  nlohmann::ordered_json to_json() const;
  static VerificationReport from_json(const nlohmann::ordered_json& j);
  friend bool operator==(const VerificationReport&,
                         const VerificationReport&) = default;
};

struct RunOptions {
  std::uint64_t n_max = 0;  // 0 = the suite's default range
  int jobs = 0;             // 0 = POLYREP_JOBS env var, then hardware count
  std::uint64_t failure_budget = 25;
};

const std::vector<std::string>& suite_names();

/// Runs one verification suite. Throws std::invalid_argument for unknown
/// names. Reports are deterministic regardless of worker count.
VerificationReport run_suite(const std::string& name,
                             const RunOptions& opts = {});

struct ScanResult {
  Family family;
  std::uint64_t n_max = 0;
  std::vector<std::uint64_t> unsolvable;    // n with r = 0, via closed form
  std::vector<std::uint64_t> r_le_1;        // n with r <= 1
  std::uint64_t spot_checks = 0;            // brute-force sample size
  std::vector<Failure> spot_failures;
};

/// Closed-form scan for unsolvable n with a deterministic 1% brute-force
/// cross-check sample. Only the divisor-formula families are supported.
ScanResult scan_unsolvable(const Family& family, std::uint64_t n_max);

struct BenchResult {
  Family family;
  std::uint64_t n_max = 0;
  double closed_ms = 0;
  double brute_ms = 0;
  std::uint64_t mismatches = 0;
  double speedup() const { return closed_ms > 0 ? brute_ms / closed_ms : 0.0; }
};

/// Times the closed-form path against the brute-force path over n <= n_max
/// and cross-checks every count.
BenchResult benchmark(const Family& family, std::uint64_t n_max);

}  // namespace polyrep::harness
