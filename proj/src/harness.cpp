#include "polyrep/harness.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "polyrep/arith.hpp"
#include "polyrep/closedform.hpp"
#include "polyrep/qforms.hpp"
#include "polyrep/repcount.hpp"

namespace polyrep::harness {

namespace {

using i64 = std::int64_t;
using u64 = std::uint64_t;

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  if (const char* env = std::getenv("POLYREP_JOBS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

struct BlockResult {
  u64 cases = 0;
  std::vector<Failure> failures;
};

/// Per-block collector. Failure strings are only materialized on mismatch.
class Sink {
 public:
  explicit Sink(BlockResult& out) : out_(out) {}

  template <typename T, typename U>
  void equals(const T& expected, const U& got, const std::string& inputs) {
    ++out_.cases;
    if (!(expected == got))
      out_.failures.push_back({inputs, str(expected), str(got)});
  }

  void is_true(bool ok, const std::string& inputs, const std::string& what) {
    ++out_.cases;
    if (!ok) out_.failures.push_back({inputs, what, "violated"});
  }

  void fail(std::string inputs, std::string expected, std::string got) {
    ++out_.cases;
    out_.failures.push_back(
        {std::move(inputs), std::move(expected), std::move(got)});
  }

 private:
  template <typename T>
  static std::string str(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
  }
  BlockResult& out_;
};

/// Partitions [lo, hi] into contiguous blocks dispatched to a worker pool.
/// Block results are merged in range order, so the report is identical for
/// any worker count; the failure budget is applied during the merge.
class SuiteRunner {
 public:
  SuiteRunner(VerificationReport& report, const RunOptions& opts)
      : report_(report),
        jobs_(resolve_jobs(opts.jobs)),
        budget_(opts.failure_budget) {}

  void over_range(u64 lo, u64 hi, const std::function<void(u64, Sink&)>& body) {
    if (stop_all_ || hi < lo) return;
    const u64 count = hi - lo + 1;
    // Block layout must not depend on the worker count, or the merged
    // cases_run would change with --jobs once the failure budget trips.
    const u64 block = std::max<u64>(1, (count + 63) / 64);
    const u64 nblocks = (count + block - 1) / block;
    std::vector<BlockResult> results(nblocks);
    std::vector<char> done(nblocks, 0);
    std::atomic<u64> next{0};
    std::atomic<u64> failures_seen{report_.failures.size()};
    std::atomic<bool> stop{false};

    auto worker = [&] {
      while (!stop.load(std::memory_order_relaxed)) {
        const u64 idx = next.fetch_add(1, std::memory_order_relaxed);
        if (idx >= nblocks) return;
        BlockResult block_result;
        Sink sink(block_result);
        const u64 b_lo = lo + idx * block;
        const u64 b_hi = std::min(hi, b_lo + block - 1);
        for (u64 n = b_lo; n <= b_hi; ++n) {
          try {
            body(n, sink);
          } catch (const std::exception& e) {
            sink.fail("n=" + std::to_string(n), "no exception", e.what());
          }
        }
        if (!block_result.failures.empty() &&
            failures_seen.fetch_add(block_result.failures.size()) +
                    block_result.failures.size() >=
                budget_)
          stop.store(true);
        results[idx] = std::move(block_result);
        done[idx] = 1;
      }
    };

    if (jobs_ <= 1 || nblocks == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      const int nthreads = static_cast<int>(
          std::min<u64>(static_cast<u64>(jobs_), nblocks));
      pool.reserve(nthreads);
      for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }

    // Merge in range order and cut at the block that fills the budget, so
    // the report does not depend on how far ahead the workers raced.
    for (u64 idx = 0; idx < nblocks; ++idx) {
      if (!done[idx]) {
        report_.aborted = true;
        stop_all_ = true;
        return;
      }
      report_.cases_run += results[idx].cases;
      for (auto& f : results[idx].failures) {
        if (report_.failures.size() < budget_)
          report_.failures.push_back(std::move(f));
      }
      if (report_.failures.size() >= budget_) {
        report_.aborted = true;
        stop_all_ = true;
        return;
      }
    }
  }

 private:
  VerificationReport& report_;
  int jobs_;
  u64 budget_;
  bool stop_all_ = false;
};

std::string family_input(const Family& f, u64 n) {
  return "m=" + std::to_string(f.m) + " t=" + std::to_string(f.t) +
         " n=" + std::to_string(n);
}

std::vector<Family> all_closed_families() {
  std::vector<Family> out;
  for (const auto& c : closedform::divisor_cases()) out.push_back(c.family);
  for (const auto& c : closedform::z4_cases()) out.push_back(c.family);
  return out;
}

std::vector<i64> odd_primes_up_to(i64 bound) {
  std::vector<i64> out;
  for (i64 p = 3; p <= bound; p += 2)
    if (arith::is_prime(static_cast<u64>(p))) out.push_back(p);
  return out;
}

/// The three family schedules with r = r' - 1.
std::vector<Family> relation_families() {
  std::vector<Family> out;
  std::vector<i64> m_case1{3};
  for (i64 p : odd_primes_up_to(60)) m_case1.push_back(p + 2);
  for (i64 m : m_case1) out.emplace_back(m, 1);
  out.emplace_back(3, 2);
  for (i64 p : odd_primes_up_to(30)) out.emplace_back(2 * p + 2, 2);
  for (i64 t : {3, 5, 7, 11, 13}) {
    for (i64 m : m_case1) {
      if (t == m - 2) continue;
      out.emplace_back(m, t);
    }
  }
  return out;
}

void suite_theorem1(SuiteRunner& runner, u64 n_max) {
  runner.over_range(1, n_max, [](u64 n, Sink& sink) {
    for (i64 m = 3; m <= 60; ++m) {
      for (i64 t = 1; t <= 30; ++t) {
        const Family fam(m, t);
        const u64 r = repcount::representations(fam, n).size();
        const u64 rp = repcount::qsolutions(fam, n).size();
        sink.is_true(r + 1 <= rp, family_input(fam, n), "r <= r' - 1");
        if (arith::is_prime(repcount::target_value(fam, n)))
          sink.equals(u64{0}, r, family_input(fam, n) + " (prime target)");
      }
    }
  });
}

void suite_theorem2(SuiteRunner& runner, u64 n_max) {
  const auto families = relation_families();
  runner.over_range(1, n_max, [&families](u64 n, Sink& sink) {
    for (const Family& fam : families) {
      const u64 r = repcount::representations(fam, n).size();
      const u64 rp = repcount::qsolutions(fam, n).size();
      sink.equals(rp - 1, r, family_input(fam, n));
    }
  });
}

void suite_theorem3(SuiteRunner& runner, u64 n_max) {
  runner.over_range(1, n_max, [](u64 n, Sink& sink) {
    for (const auto& c : closedform::divisor_cases()) {
      const u64 brute = repcount::representations(c.family, n).size();
      const u64 closed = closedform::r_divisor(c.family, n);
      sink.equals(brute, closed, family_input(c.family, n));
    }
  });
}

void suite_corollary1(SuiteRunner& runner, u64 n_max) {
  runner.over_range(1, n_max, [](u64 n, Sink& sink) {
    for (const auto& c : closedform::divisor_cases()) {
      const bool unsolvable = closedform::unsolvable_closed(c.family, n);
      const bool closed_zero = closedform::r_divisor(c.family, n) == 0;
      const bool brute_zero = repcount::representations(c.family, n).empty();
      sink.equals(closed_zero, unsolvable,
                  family_input(c.family, n) + " (vs closed form)");
      sink.equals(brute_zero, unsolvable,
                  family_input(c.family, n) + " (vs brute force)");
    }
  });
  // Flagship case: n = a+b with ab twice a triangular number is unsolvable
  // exactly when n^2 + 1 is prime.
  runner.over_range(1, 2000, [](u64 n, Sink& sink) {
    const Family fam(3, 2);
    const bool brute_zero = repcount::representations(fam, n).empty();
    sink.equals(arith::is_prime(n * n + 1), brute_zero,
                family_input(fam, n) + " (n^2+1 primality)");
  });
}

void suite_theorem4(SuiteRunner& runner, u64 n_max) {
  runner.over_range(1, n_max, [](u64 n, Sink& sink) {
    for (const auto& c : closedform::z4_cases()) {
      const u64 brute = repcount::representations(c.family, n).size();
      const u64 closed = closedform::r_z4(c.family, n);
      sink.equals(brute, closed, family_input(c.family, n));

      // Tabulated principal-character expression against the class-group
      // value. Any disagreement is a reported finding.
      const u64 z0 = repcount::target_value(c.family, n);
      const qforms::QuadForm raw{c.family.t, 0, 2 * (c.family.m - 2)};
      const u64 z = z0 / static_cast<u64>(raw.content());
      const auto cd = qforms::reduced_forms(c.d);
      const i64 principal = qforms::character_sums(z, cd).principal;
      sink.equals(principal,
                  static_cast<i64>(closedform::table_principal(c.family, n)),
                  family_input(c.family, n) + " (principal table)");
    }
  });
}

void suite_bridge(SuiteRunner& runner, u64 n_max) {
  const auto families = all_closed_families();
  runner.over_range(1, n_max, [&families](u64 n, Sink& sink) {
    for (const Family& fam : families) {
      const u64 brute = repcount::qsolutions(fam, n).size();
      const u64 closed = closedform::rprime_closed(fam, n);
      sink.equals(brute, closed, family_input(fam, n));
      // The correction term covers only the x = 0 axis; confirm the other
      // axis never occurs rather than absorbing it silently.
      const u64 z = repcount::target_value(fam, n);
      const u64 coeff = 2 * static_cast<u64>(fam.m - 2);
      sink.is_true(
          z % coeff != 0 || !arith::is_square(z / coeff).has_value(),
          family_input(fam, n), "no y = 0 axis solution");
    }
  });
}

void suite_lemmas(SuiteRunner& runner, u64 n_max) {
  // (a) Class-number lists reproduced by reduced-form enumeration.
  runner.over_range(4, 1600, [](u64 k, Sink& sink) {
    const i64 d = -static_cast<i64>(k);
    if (k % 4 != 0 && k % 4 != 3) return;
    const auto cd = qforms::reduced_forms(d);
    const std::string inputs = "d=" + std::to_string(d);
    using qforms::GroupTag;
    sink.equals(cd.h() == 1, cd.structure == GroupTag::h1, inputs + " (h=1 list)");
    sink.equals(cd.h() == 2, cd.structure == GroupTag::h2, inputs + " (h=2 list)");
    sink.equals(cd.h() == 3, cd.structure == GroupTag::h3, inputs + " (h=3 list)");
    if (cd.structure == GroupTag::z4)
      sink.equals(4, cd.h(), inputs + " (Z4 list)");
  });

  // (b) Divisor-sum formula against enumeration on the project discriminants.
  static const std::vector<i64> kProjectDiscs{-3,   -4,   -8,   -24,  -40,  -56,
                                              -88,  -136, -184, -232, -328, -568};
  runner.over_range(1, n_max, [](u64 n, Sink& sink) {
    for (i64 d : kProjectDiscs) {
      if (std::gcd(n, static_cast<u64>(-d)) != 1) continue;
      sink.equals(qforms::N_by_enumeration(n, d), qforms::dirichlet_N(n, d),
                  "n=" + std::to_string(n) + " d=" + std::to_string(d));
    }
  });

  // (c) Closed-form class counts against enumeration wherever the
  // hypotheses hold.
  runner.over_range(1, n_max, [](u64 n, Sink& sink) {
    for (i64 d : {-24, -40, -88, -232}) {
      const auto closed = qforms::two_class_counts_closed(n, d);
      if (!closed) continue;
      const auto cd = qforms::reduced_forms(d);
      const std::string inputs = "n=" + std::to_string(n) + " d=" + std::to_string(d);
      sink.equals(qforms::represent_count(cd.form(qforms::FormRole::I), n),
                  closed->first, inputs + " (principal)");
      sink.equals(qforms::represent_count(cd.form(qforms::FormRole::A), n),
                  closed->second, inputs + " (generator)");
    }
    for (i64 d : {-56, -136, -184, -328, -568}) {
      const auto cd = qforms::reduced_forms(d);
      const auto closed = qforms::z4_counts_closed(n, cd);
      const std::string inputs = "n=" + std::to_string(n) + " d=" + std::to_string(d);
      sink.equals(qforms::represent_count(cd.form(qforms::FormRole::I), n),
                  closed.first, inputs + " (principal)");
      sink.equals(qforms::represent_count(cd.form(qforms::FormRole::A2), n),
                  closed.second, inputs + " (generator squared)");
    }
  });

  // (d) Uniqueness of prime representations p = c x^2 + d y^2 in natural
  // numbers.
  runner.over_range(2, 10000, [](u64 p, Sink& sink) {
    if (!arith::is_prime(p)) return;
    for (u64 c : {1, 2, 3, 5, 11, 29}) {
      for (u64 d : {1, 2, 6, 10, 14}) {
        u64 count = 0;
        for (u64 x = 1; c * x * x < p; ++x) {
          const u64 rest = p - c * x * x;
          if (rest % d != 0) continue;
          const auto y = arith::is_square(rest / d);
          if (!y || *y == 0) continue;
          if (c == d && *y < x) continue;  // unordered when the form is symmetric
          ++count;
        }
        sink.is_true(count <= 1,
                     "p=" + std::to_string(p) + " c=" + std::to_string(c) +
                         " d=" + std::to_string(d),
                     "at most one representation");
      }
    }
  });

  // (e) Class number one: the principal count is the full count.
  runner.over_range(1, n_max, [](u64 n, Sink& sink) {
    for (i64 d : {-3, -4, -8}) {
      if (std::gcd(n, static_cast<u64>(-d)) != 1) continue;
      const auto cd = qforms::reduced_forms(d);
      sink.equals(qforms::represent_count(cd.reduced.front(), n),
                  qforms::principal_R(n, d),
                  "n=" + std::to_string(n) + " d=" + std::to_string(d));
    }
  });
}

struct SuiteSpec {
  const char* name;
  u64 default_n_max;
  void (*run)(SuiteRunner&, u64);
};

constexpr SuiteSpec kSuites[] = {
    {"theorem1", 200, suite_theorem1},
    {"theorem2", 200, suite_theorem2},
    {"theorem3", 300, suite_theorem3},
    {"theorem4", 150, suite_theorem4},
    {"corollary1", 300, suite_corollary1},
    {"lemmas", 2000, suite_lemmas},
    {"bridge", 200, suite_bridge},
};

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : kSuites) out.emplace_back(s.name);
    return out;
  }();
  return names;
}

VerificationReport run_suite(const std::string& name, const RunOptions& opts) {
  for (const auto& spec : kSuites) {
    if (name != spec.name) continue;
    VerificationReport report;
    report.suite = name;
    const auto start = std::chrono::steady_clock::now();
    SuiteRunner runner(report, opts);
    spec.run(runner, opts.n_max == 0 ? spec.default_n_max : opts.n_max);
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
  }
  throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
}

ScanResult scan_unsolvable(const Family& family, u64 n_max) {
  const closedform::CaseDescriptor* c = closedform::find_case(family);
  if (c == nullptr || c->kind != closedform::FormulaKind::divisor)
    throw std::invalid_argument("scan_unsolvable: unsupported family");
  ScanResult result{family, n_max, {}, {}, 0, {}};
  for (u64 n = 1; n <= n_max; ++n) {
    const u64 r = closedform::r_divisor(family, n);
    const bool unsolvable = closedform::unsolvable_closed(family, n);
    if (unsolvable) result.unsolvable.push_back(n);
    if (r <= 1) result.r_le_1.push_back(n);
    if (n % 100 == 1 || n == n_max) {
      ++result.spot_checks;
      const u64 brute = repcount::representations(family, n).size();
      if (brute != r || unsolvable != (brute == 0)) {
        result.spot_failures.push_back({family_input(family, n),
                                        std::to_string(brute),
                                        std::to_string(r)});
      }
    }
  }
  return result;
}

BenchResult benchmark(const Family& family, u64 n_max) {
  if (closedform::find_case(family) == nullptr)
    throw std::invalid_argument("benchmark: no closed form for this family");
  BenchResult result{family, n_max, 0, 0, 0};
  arith::factorize(2);  // build the shared prime table outside the timing
  std::vector<u64> closed(n_max + 1, 0);
  const auto t0 = std::chrono::steady_clock::now();
  for (u64 n = 1; n <= n_max; ++n) closed[n] = closedform::r_closed(family, n);
  const auto t1 = std::chrono::steady_clock::now();
  for (u64 n = 1; n <= n_max; ++n) {
    if (repcount::representations(family, n).size() != closed[n])
      ++result.mismatches;
  }
  const auto t2 = std::chrono::steady_clock::now();
  result.closed_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();
  result.brute_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
  return result;
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["cases_run"] = cases_run;
  nlohmann::ordered_json fails = nlohmann::ordered_json::array();
  for (const auto& f : failures) {
    fails.push_back({{"inputs", f.inputs},
                     {"expected", f.expected},
                     {"got", f.got}});
  }
  j["failures"] = std::move(fails);
  j["elapsed_ms"] = elapsed_ms;
  j["aborted"] = aborted;
  j["passed"] = passed();
  return j;
}

VerificationReport VerificationReport::from_json(
    const nlohmann::ordered_json& j) {
  VerificationReport report;
  report.suite = j.at("suite").get<std::string>();
  report.cases_run = j.at("cases_run").get<u64>();
  for (const auto& f : j.at("failures")) {
    report.failures.push_back({f.at("inputs").get<std::string>(),
                               f.at("expected").get<std::string>(),
                               f.at("got").get<std::string>()});
  }
  report.elapsed_ms = j.at("elapsed_ms").get<i64>();
  report.aborted = j.at("aborted").get<bool>();
  return report;
}

}  // namespace polyrep::harness
