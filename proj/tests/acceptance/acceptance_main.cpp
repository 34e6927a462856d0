// Acceptance gate. Prints one PASS/FAIL line per criterion and exits non-zero
// if any selected criterion fails.
//
//   frz_acceptance              every criterion
//   frz_acceptance 3 7          only criteria 3 and 7

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "frz/bounds.hpp"
#include "frz/pipeline.hpp"
#include "frz/rng.hpp"
#include "frz/search.hpp"
#include "frz/setops.hpp"
#include "frz/verify.hpp"

using namespace frz;

namespace {

constexpr double kLogTolerance = 1e-9;
constexpr std::uint64_t kSeed = kDefaultSeed;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::string suite_detail(const SuiteResult& r, double limit) {
  std::string s = std::to_string(r.cases) + " cases, " + std::to_string(r.violations) + " violations, " +
                  fmt("%.2f s", r.seconds) + fmt(" (limit %.0f s)", limit);
  if (!r.detail.empty()) s += "; first: " + r.detail;
  return s;
}

Outcome suite_outcome(const SuiteResult& r, double limit) {
  return {r.passed() && r.cases > 0 && r.seconds < limit, suite_detail(r, limit)};
}

SuiteResult merged(const std::vector<SuiteResult>& parts) {
  SuiteResult out{parts.front().name};
  for (const auto& p : parts) {
    out.cases += p.cases;
    out.seconds += p.seconds;
    if (out.detail.empty()) out.detail = p.detail;
    out.violations += p.violations;
  }
  return out;
}

// 1. Compression sumset containment.
Outcome criterion_compression() {
  const std::uint32_t primes[] = {3, 5, 7};
  const std::uint32_t dims[] = {1, 2, 3};
  const SuiteResult r = verify_compression_lemma(primes, dims, 1000, kSeed);
  // 9 (p, n) pairs x 1000 sampled triples + 8 x 8 x 1 exhaustive.
  Outcome o = suite_outcome(r, 60);
  o.pass = o.pass && r.cases == 9 * 1000 + 64;
  return o;
}

// 2. Cauchy-Davenport.
Outcome criterion_cauchy_davenport() {
  const std::uint32_t primes[] = {3, 5, 7, 11};
  const SuiteResult r = verify_cauchy_davenport(primes);
  std::uint64_t want = 0;
  for (std::uint32_t p : primes) want += ((std::uint64_t{1} << p) - 1) * ((std::uint64_t{1} << p) - 1);
  Outcome o = suite_outcome(r, 30);
  o.pass = o.pass && r.cases == want;
  return o;
}

// 3. Decomposition and the four observations on every E-compressed set.
Outcome criterion_structure() {
  const SuiteResult r = merged({verify_structure_lemma(3, 2, 1), verify_structure_lemma(5, 2, 1)});
  return suite_outcome(r, 300);
}

// 4. Cardinality interval and both sumset lower bounds on the same sets.
Outcome criterion_inequalities() {
  const SuiteResult r = merged({verify_inequalities(3, 2, 1), verify_inequalities(5, 2, 1)});
  return suite_outcome(r, 300);
}

// 5. F_1(m) = p^(2G_1(m)-2)/(2G_1(m)-1) exactly.
Outcome criterion_identity() {
  std::uint64_t cases = 0, bad = 0;
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (std::uint32_t m = 1; m <= 40; ++m) {
      ++cases;
      if (extremal_spanning(p, 1, m) != main_theorem_curve_exact(p, extremal_doubling(p, 1, m))) ++bad;
    }
  }
  return {bad == 0, std::to_string(cases) + " exact comparisons, " + std::to_string(bad) + " mismatches"};
}

// 6. The extremal family's constants by brute force.
Outcome criterion_extremal_family() {
  std::uint64_t cases = 0, bad = 0;
  std::string first;
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (std::uint32_t q = 1; q < p; ++q) {
      for (std::uint32_t m = 1; m <= 5; ++m) {
        ++cases;
        const DenseSet a = extremal_set(p, q, m);
        if (doubling(a) != extremal_doubling(p, q, m) || spanning(a) != extremal_spanning(p, q, m)) {
          if (bad++ == 0) first = "p=" + std::to_string(p) + " q=" + std::to_string(q) + " m=" + std::to_string(m);
        }
      }
    }
  }
  std::string d = std::to_string(cases) + " sets, " + std::to_string(bad) + " mismatches";
  if (!first.empty()) d += "; first: " + first;
  return {bad == 0, d};
}

// 7. The small counterexample to extending the bound below the threshold.
Outcome criterion_small_example() {
  const DenseSet a = extremal_set(3, 2, 2);
  const Rational dbl = doubling(a);
  const Rational spn = spanning(a);
  const double log_curve = log_main_theorem_curve(3, to_double(dbl));
  const double log_span = std::log(to_double(spn));
  const bool pass = dbl == Rational(7, 4) && spn == Rational(9, 4) && log_span > log_curve + kLogTolerance;
  return {pass, "doubling " + to_string(dbl) + ", spanning " + to_string(spn) + ", curve at 7/4 = " +
                    fmt("%.6f", std::exp(log_curve))};
}

// 8. m-monotonicity and q = 1 minimality grid certificates.
Outcome criterion_certificates() {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<double> grid;
  for (int i = 25; i <= 250; ++i) grid.push_back(i / 10.0);
  std::uint64_t cases = 0, bad = 0;
  std::string first;
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    for (std::uint32_t q = 1; q < p; ++q) {
      for (double k : {8.0, 10.0, 12.0}) {
        ++cases;
        if (!check_decreasing_in_m(p, q, k, 1000) && bad++ == 0) {
          first = "monotonicity p=" + std::to_string(p) + " q=" + std::to_string(q) + fmt(" K=%g", k);
        }
      }
    }
    ++cases;
    if (!check_q1_minimal(p, grid, kLogTolerance) && bad++ == 0) first = "minimality p=" + std::to_string(p);
  }
  const double secs = seconds_since(t0);
  std::string d = std::to_string(cases) + " certificates, " + std::to_string(bad) + " failures, " +
                  fmt("%.2f s (limit 60 s)", secs);
  if (!first.empty()) d += "; first: " + first;
  return {bad == 0 && secs < 60, d};
}

// 9. Threshold arithmetic for every prime up to 97.
Outcome criterion_threshold_arithmetic() {
  std::uint64_t cases = 0, bad = 0;
  double worst = 0;
  for (std::uint32_t p = 2; p <= 97; ++p) {
    if (!is_prime(p)) continue;
    const double lp = std::log(static_cast<double>(p));
    ++cases;
    if (14 * lp - std::log(15.0) < 10 * lp - kLogTolerance) ++bad;
    // The threshold is defined for odd p (q ln p > 1).
    if (p == 2) continue;
    for (std::uint32_t q = 1; q < p; ++q) {
      ++cases;
      const double t = monotonicity_threshold(p, q);
      worst = std::max(worst, t);
      if (t > 10) ++bad;
    }
  }
  return {bad == 0, std::to_string(cases) + " checks, " + std::to_string(bad) + " failures, largest threshold " +
                        fmt("%.5f", worst)};
}

// 10. Pipeline invariants on seeded random sets.
Outcome criterion_pipeline() {
  const auto t0 = std::chrono::steady_clock::now();
  std::uint64_t cases = 0, bad = 0;
  std::string first;
  for (auto [p, n] : {std::pair{3u, 3u}, {5u, 2u}}) {
    const GroupParams g(p, n);
    std::uint64_t done = 0;
    for (std::uint64_t t = 0; done < 1000; ++t) {
      const CounterRng rng(kSeed, t);
      const DenseSet a = sample_set(g, rng, rng.uniform(0), 1);
      if (a.empty()) continue;
      ++done;
      ++cases;
      const PipelineReport r = end_to_end(a);
      if (!(r.size_preserved && r.span_preserved && r.doubling_monotone && r.ok()) && bad++ == 0) {
        first = "p=" + std::to_string(p) + " n=" + std::to_string(n) + " stream " + std::to_string(t);
      }
    }
  }
  const double secs = seconds_since(t0);
  std::string d = std::to_string(cases) + " sets, " + std::to_string(bad) + " violations, " +
                  fmt("%.2f s (limit 300 s)", secs);
  if (!first.empty()) d += "; first: " + first;
  return {bad == 0 && secs < 300, d};
}

double time_enumeration(unsigned threads, std::size_t& count) {
  const auto t0 = std::chrono::steady_clock::now();
  count = enumerate_E_compressed(3, 3, threads).size();
  return seconds_since(t0);
}

// 11. Desk-scale performance.
Outcome criterion_performance() {
  auto t0 = std::chrono::steady_clock::now();
  SearchConfig cfg;
  cfg.p = 3;
  cfg.n = 2;
  const auto frontier = frontier_exhaustive(cfg);
  const double frontier_secs = seconds_since(t0);

  std::size_t count1 = 0, count8 = 0;
  const double t1 = time_enumeration(1, count1);
  const double t8 = time_enumeration(8, count8);
  const double speedup = t1 / t8;
  const unsigned cores = std::thread::hardware_concurrency();

  const bool frontier_ok = frontier_secs < 1.0 && frontier.size() == 6;
  const bool enum_ok = t1 < 60 && count1 == 26 && count8 == 26;
  // Linear speedup within 20%: at least 0.8 * 8.
  const bool scaling_ok = speedup >= 0.8 * 8;
  std::string d = fmt("frontier F_3^2 %.3f s (limit 1 s)", frontier_secs) + "; " +
                  fmt("E-compressed F_3^3 %.3f s single-threaded (limit 60 s)", t1) + "; " +
                  fmt("8 threads %.3f s, ", t8) + fmt("speedup %.2f (need >= 6.40) on ", speedup) +
                  std::to_string(cores) + " hardware thread(s)";
  if (!frontier_ok) d += "; frontier part fails";
  if (!enum_ok) d += "; enumeration part fails";
  if (!scaling_ok) d += "; thread-scaling part fails";
  return {frontier_ok && enum_ok && scaling_ok, d};
}

void informational() {
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    std::printf("INFO threshold doubling p=%u: bisection %.5f, grid scan %.2f\n", p, least_threshold_doubling(p),
                least_certified_doubling(p, 1.01, 12, 0.01, 1000));
  }
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"compression sumset containment", criterion_compression},
      {"Cauchy-Davenport exhaustive", criterion_cauchy_davenport},
      {"structure decomposition and observations", criterion_structure},
      {"cardinality interval and sumset bounds", criterion_inequalities},
      {"exact q=1 curve identity", criterion_identity},
      {"extremal family constants", criterion_extremal_family},
      {"A_{2,2} exceeds the curve below the threshold", criterion_small_example},
      {"monotonicity and minimality certificates", criterion_certificates},
      {"threshold arithmetic up to 97", criterion_threshold_arithmetic},
      {"pipeline invariants on random sets", criterion_pipeline},
      {"performance", criterion_performance},
  };

  std::set<std::size_t> selected;
  bool info = argc == 1;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--info") {
      info = true;
      continue;
    }
    char* end = nullptr;
    const long k = std::strtol(arg.c_str(), &end, 10);
    if (*end != '\0' || k < 1 || k > static_cast<long>(criteria.size())) {
      std::fprintf(stderr, "usage: frz_acceptance [--info] [criterion 1-%zu ...]\n", criteria.size());
      return 2;
    }
    selected.insert(static_cast<std::size_t>(k));
  }
  if (selected.empty() && argc == 1) {
    for (std::size_t k = 1; k <= criteria.size(); ++k) selected.insert(k);
  }

  bool all = true;
  for (std::size_t k : selected) {
    const Outcome o = criteria[k - 1].second();
    all = all && o.pass;
    std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", k, criteria[k - 1].first, o.detail.c_str());
    std::fflush(stdout);
  }
  if (info) informational();
  return all ? 0 : 1;
}
