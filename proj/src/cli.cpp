#include "polyrep/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "polyrep/arith.hpp"
#include "polyrep/closedform.hpp"
#include "polyrep/harness.hpp"
#include "polyrep/record.hpp"
#include "polyrep/repcount.hpp"

namespace polyrep::cli {

namespace {

using i64 = std::int64_t;
using u64 = std::uint64_t;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

bool parse_range(const std::string& text, u64& lo, u64& hi) {
  const auto sep = text.find(':');
  if (sep == std::string::npos) return false;
  try {
    lo = std::stoull(text.substr(0, sep));
    hi = std::stoull(text.substr(sep + 1));
  } catch (const std::exception&) {
    return false;
  }
  return lo >= 1 && lo <= hi;
}

std::string reps_text(const std::vector<repcount::Representation>& reps) {
  std::string out;
  for (const auto& rep : reps) {
    if (!out.empty()) out += ';';
    out += std::to_string(rep.a) + ':' + std::to_string(rep.b) + ':' +
           std::to_string(rep.c);
  }
  return out;
}

int run_compute(i64 m, i64 t, std::optional<u64> n_single,
                const std::string& range_text, const std::string& method,
                const std::string& format) {
  if (method != "brute" && method != "closed" && method != "both") {
    std::cerr << "error: --method must be brute, closed or both\n";
    return kExitUsage;
  }
  u64 lo = 0, hi = 0;
  if (n_single && !range_text.empty()) {
    std::cerr << "error: --n and --n-range are mutually exclusive\n";
    return kExitUsage;
  }
  if (n_single) {
    if (*n_single == 0) {
      std::cerr << "error: --n must be positive\n";
      return kExitUsage;
    }
    lo = hi = *n_single;
  } else if (!range_text.empty()) {
    if (!parse_range(range_text, lo, hi)) {
      std::cerr << "error: --n-range expects lo:hi with 1 <= lo <= hi\n";
      return kExitUsage;
    }
  } else {
    std::cerr << "error: one of --n or --n-range is required\n";
    return kExitUsage;
  }

  Family family(m, t);
  const closedform::CaseDescriptor* desc = closedform::find_case(family);
  const bool wants_closed = method != "brute";
  if (wants_closed && desc == nullptr) {
    std::cerr << "error: no closed form for (" << m << "," << t << ")\n";
    return kExitUsage;
  }
  const Method closed_method = (desc && desc->kind == closedform::FormulaKind::z4)
                                   ? Method::theorem4
                                   : Method::theorem3;

  bool mismatch = false;
  bool header_done = false;
  for (u64 n = lo; n <= hi; ++n) {
    OutputRecord rec;
    rec.m = m;
    rec.t = t;
    rec.n = n;
    if (method == "brute" || method == "both") {
      rec.representations = repcount::representations(family, n);
      rec.r = rec.representations.size();
      rec.r_prime = repcount::qsolutions(family, n).size();
      rec.method = Method::brute;
    }
    if (wants_closed) {
      const u64 r_closed = closedform::r_closed(family, n);
      const u64 rp_closed = closedform::rprime_closed(family, n);
      if (method == "both") {
        if (r_closed != rec.r || rp_closed != rec.r_prime) {
          std::cerr << "mismatch at n=" << n << ": brute r=" << rec.r
                    << " r'=" << rec.r_prime << ", closed r=" << r_closed
                    << " r'=" << rp_closed << "\n";
          mismatch = true;
        }
      } else {
        rec.r = r_closed;
        rec.r_prime = rp_closed;
      }
      rec.method = closed_method;
    }

    if (format == "json") {
      std::cout << rec.to_json().dump() << "\n";
    } else if (format == "csv") {
      if (!header_done) std::cout << OutputRecord::csv_header() << "\n";
      std::cout << rec.csv_row() << "\n";
    } else {
      if (!header_done)
        std::cout << std::left << std::setw(5) << "m" << std::setw(5) << "t"
                  << std::setw(8) << "n" << std::setw(6) << "r" << std::setw(8)
                  << "r_prime" << std::setw(10) << "method"
                  << "reps\n";
      std::cout << std::left << std::setw(5) << rec.m << std::setw(5) << rec.t
                << std::setw(8) << rec.n << std::setw(6) << rec.r
                << std::setw(8) << rec.r_prime << std::setw(10)
                << method_name(rec.method) << reps_text(rec.representations)
                << "\n";
    }
    header_done = true;
  }
  return mismatch ? kExitFailure : kExitOk;
}

int run_verify(const std::string& suite, u64 n_max, int jobs, u64 budget,
               const std::string& format) {
  std::vector<std::string> to_run;
  if (suite == "all") {
    to_run = harness::suite_names();
  } else {
    const auto& names = harness::suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
      std::cerr << "error: unknown suite '" << suite << "'\n";
      return kExitUsage;
    }
    to_run.push_back(suite);
  }

  harness::RunOptions opts;
  opts.n_max = n_max;
  opts.jobs = jobs;
  opts.failure_budget = budget;

  bool all_passed = true;
  nlohmann::ordered_json json_reports = nlohmann::ordered_json::array();
  if (format != "json")
    std::cout << std::left << std::setw(12) << "suite" << std::setw(10)
              << "cases" << std::setw(10) << "failures" << std::setw(12)
              << "elapsed" << "status\n";
  for (const auto& name : to_run) {
    const auto report = harness::run_suite(name, opts);
    all_passed = all_passed && report.passed();
    if (format == "json") {
      json_reports.push_back(report.to_json());
      continue;
    }
    std::ostringstream elapsed;
    elapsed << std::fixed << std::setprecision(2)
            << report.elapsed_ms / 1000.0 << "s";
    std::cout << std::left << std::setw(12) << report.suite << std::setw(10)
              << report.cases_run << std::setw(10) << report.failures.size()
              << std::setw(12) << elapsed.str()
              << (report.passed() ? "PASS" : "FAIL")
              << (report.aborted ? " (aborted at failure budget)" : "")
              << "\n";
    const std::size_t shown = std::min<std::size_t>(report.failures.size(), 10);
    for (std::size_t i = 0; i < shown; ++i) {
      const auto& f = report.failures[i];
      std::cout << "  FAIL " << f.inputs << ": expected " << f.expected
                << ", got " << f.got << "\n";
    }
    if (report.failures.size() > shown)
      std::cout << "  ... " << report.failures.size() - shown << " more\n";
  }
  if (format == "json") std::cout << json_reports.dump(2) << "\n";
  return all_passed ? kExitOk : kExitFailure;
}

int run_scan(i64 m, i64 t, u64 n_max, const std::string& format,
             bool show_r_le_1) {
  Family family(m, t);
  const auto* desc = closedform::find_case(family);
  if (desc == nullptr || desc->kind != closedform::FormulaKind::divisor) {
    std::cerr << "error: no closed form for (" << m << "," << t << ")\n";
    return kExitUsage;
  }
  const auto result = harness::scan_unsolvable(family, n_max);

  auto join = [](const std::vector<u64>& xs) {
    std::string out;
    for (u64 x : xs) {
      if (!out.empty()) out += ',';
      out += std::to_string(x);
    }
    return out;
  };

  const double density =
      n_max == 0 ? 0.0
                 : static_cast<double>(result.unsolvable.size()) /
                       static_cast<double>(n_max);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["m"] = m;
    j["t"] = t;
    j["n_max"] = n_max;
    j["unsolvable"] = result.unsolvable;
    j["unsolvable_count"] = result.unsolvable.size();
    j["unsolvable_density"] = density;
    if (show_r_le_1) j["r_le_1"] = result.r_le_1;
    j["r_le_1_count"] = result.r_le_1.size();
    j["spot_checks"] = result.spot_checks;
    j["spot_check_failures"] = result.spot_failures.size();
    std::cout << j.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "n\n";
    for (u64 n : result.unsolvable) std::cout << n << "\n";
  } else {
    std::cout << "unsolvable n (r=0): " << join(result.unsolvable) << "\n";
    if (show_r_le_1)
      std::cout << "n with r<=1: " << join(result.r_le_1) << "\n";
    std::cout << "counts: unsolvable " << result.unsolvable.size() << " of "
              << n_max << " (density " << std::fixed << std::setprecision(4)
              << density << "), r<=1 " << result.r_le_1.size()
              << "; spot checks " << result.spot_checks << " ("
              << (result.spot_failures.empty() ? "clean" : "FAILED") << ")\n";
  }
  return result.spot_failures.empty() ? kExitOk : kExitFailure;
}

int run_qform(i64 d, const std::string& format) {
  qforms::ClassData cd;
  try {
    cd = qforms::reduced_forms(d);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const i64 f = qforms::conductor(d);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["d"] = d;
    j["h"] = cd.h();
    j["structure"] = qforms::to_string(cd.structure);
    j["conductor"] = f;
    nlohmann::ordered_json forms = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < cd.reduced.size(); ++i) {
      nlohmann::ordered_json one;
      one["a"] = cd.reduced[i].a;
      one["b"] = cd.reduced[i].b;
      one["c"] = cd.reduced[i].c;
      if (cd.has_roles()) one["role"] = qforms::to_string(cd.roles[i]);
      forms.push_back(std::move(one));
    }
    j["forms"] = std::move(forms);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "d=" << d << "  h=" << cd.h() << "  structure="
              << qforms::to_string(cd.structure) << "  conductor=" << f
              << "\n";
    for (std::size_t i = 0; i < cd.reduced.size(); ++i) {
      const auto& form = cd.reduced[i];
      std::cout << "  [" << form.a << "," << form.b << "," << form.c << "]";
      if (cd.has_roles()) std::cout << "  " << qforms::to_string(cd.roles[i]);
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int run_bench(i64 m, i64 t, u64 n_max) {
  Family family(m, t);
  if (closedform::find_case(family) == nullptr) {
    std::cerr << "error: no closed form for (" << m << "," << t << ")\n";
    return kExitUsage;
  }
  const auto result = harness::benchmark(family, n_max);
  std::cout << std::fixed << std::setprecision(2) << "closed path: "
            << result.closed_ms << " ms\nbrute path:  " << result.brute_ms
            << " ms\nspeedup:     " << result.speedup()
            << "x\nmismatches:  " << result.mismatches << "\n";
  return result.mismatches == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"Representation counts for n = a+b with ab = t*P(m,c)"};
  app.require_subcommand(1);
  u64 seed = 0;
  app.add_option("--seed", seed,
                 "Seed for the randomized factorization splitter");

  auto* compute = app.add_subcommand(
      "compute", "Count representations and quadratic solutions");
  i64 c_m = 0, c_t = 1;
  std::optional<u64> c_n;
  std::string c_range, c_method = "brute", c_format = "table";
  compute->add_option("--m", c_m, "Polygon order (>= 3)")->required();
  compute->add_option("--t", c_t, "Multiplier (>= 1)");
  compute->add_option("--n", c_n, "Single n");
  compute->add_option("--n-range", c_range, "Range lo:hi");
  compute->add_option("--method", c_method, "brute, closed or both");
  compute->add_option("--format", c_format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string v_suite;
  u64 v_n_max = 0, v_budget = 25;
  int v_jobs = 0;
  std::string v_format = "table";
  verify->add_option("--suite", v_suite, "Suite name or 'all'")->required();
  verify->add_option("--n-max", v_n_max, "Range override (0 = suite default)");
  verify->add_option("--jobs", v_jobs, "Worker threads (default POLYREP_JOBS)");
  verify->add_option("--failure-budget", v_budget,
                     "Collect at most this many failures");
  verify->add_option("--format", v_format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  auto* scan = app.add_subcommand("scan", "List unsolvable n for a family");
  i64 s_m = 0, s_t = 1;
  u64 s_n_max = 0;
  std::string s_format = "table";
  bool s_r_le_1 = false;
  scan->add_option("--m", s_m, "Polygon order")->required();
  scan->add_option("--t", s_t, "Multiplier");
  scan->add_option("--n-max", s_n_max, "Upper bound")->required();
  scan->add_option("--format", s_format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  scan->add_flag("--r-le-1", s_r_le_1, "Also list n with r <= 1");

  auto* qform = app.add_subcommand("qform", "Dump class data for a discriminant");
  i64 q_d = 0;
  std::string q_format = "table";
  qform->add_option("--d", q_d, "Negative discriminant")->required();
  qform->add_option("--format", q_format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  auto* bench = app.add_subcommand("bench", "Time closed form against brute force");
  i64 b_m = 0, b_t = 1;
  u64 b_n_max = 1000;
  bench->add_option("--m", b_m, "Polygon order")->required();
  bench->add_option("--t", b_t, "Multiplier");
  bench->add_option("--n-max", b_n_max, "Upper bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (seed != 0) arith::set_rho_seed(seed);

  try {
    if (compute->parsed())
      return run_compute(c_m, c_t, c_n, c_range, c_method, c_format);
    if (verify->parsed())
      return run_verify(v_suite, v_n_max, v_jobs, v_budget, v_format);
    if (scan->parsed()) return run_scan(s_m, s_t, s_n_max, s_format, s_r_le_1);
    if (qform->parsed()) return run_qform(q_d, q_format);
    if (bench->parsed()) return run_bench(b_m, b_t, b_n_max);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace polyrep::cli
