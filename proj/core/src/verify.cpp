#include "frz/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <sstream>

#include "frz/compress.hpp"
#include "frz/error.hpp"
#include "frz/io.hpp"
#include "frz/mask_space.hpp"
#include "frz/search.hpp"
#include "frz/setops.hpp"
#include "frz/structure.hpp"

namespace frz {

namespace {

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void fail(SuiteResult& r, const std::string& what) {
  if (r.violations++ == 0) r.detail = what;
}

std::string describe(const DenseSet& a) {
  std::ostringstream s;
  s << "p=" << a.group().p() << " n=" << a.group().n() << " {";
  bool first = true;
  a.for_each([&](Point u) {
    s << (first ? "" : " ") << format_point(a.group(), u);
    first = false;
  });
  s << "}";
  return s.str();
}

constexpr std::array<std::uint32_t, 4> kCdPrimes{3, 5, 7, 11};
constexpr std::array<std::uint32_t, 3> kSmallPrimes{3, 5, 7};
constexpr std::array<std::uint32_t, 3> kDims{1, 2, 3};
constexpr std::array<double, 3> kClaimK{8, 10, 12};

}  // namespace

SuiteResult verify_cauchy_davenport(std::span<const std::uint32_t> primes) {
  SuiteResult r{"cauchy-davenport"};
  Timer timer;
  for (std::uint32_t p : primes) {
    const MaskSpace ms(GroupParams(p, 1));
    for (std::uint64_t c = 1; c <= ms.full(); ++c) {
      for (std::uint64_t d = 1; d <= ms.full(); ++d) {
        ++r.cases;
        const auto got = static_cast<std::uint32_t>(std::popcount(ms.sumset(c, d)));
        const std::uint32_t want = std::min<std::uint32_t>(std::popcount(c) + std::popcount(d) - 1, p);
        if (got < want) fail(r, "p=" + std::to_string(p) + " C=" + std::to_string(c) + " D=" + std::to_string(d));
      }
    }
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteResult verify_compression_lemma(std::span<const std::uint32_t> primes, std::span<const std::uint32_t> dims,
                                     std::uint64_t trials, std::uint64_t seed) {
  SuiteResult r{"compression-lemma"};
  Timer timer;
  auto check = [&](const DenseSet& a, const DenseSet& b, const LineTable& t) {
    ++r.cases;
    const DenseSet ca = compress(a, t);
    const DenseSet cb = compress(b, t);
    if (!sumset(ca, cb).is_subset_of(compress(sumset(a, b), t))) {
      fail(r, "containment fails for A=" + describe(a) + " B=" + describe(b));
    }
    if (sumset(ca, ca).size() > sumset(a, a).size()) fail(r, "|C(A)+C(A)| > |A+A| for A=" + describe(a));
    if (ca.size() != a.size()) fail(r, "compression changed |A| for A=" + describe(a));
  };

  for (std::uint32_t p : primes) {
    for (std::uint32_t n : dims) {
      const GroupParams g(p, n);
      const LineTableCache cache(g);
      const std::uint64_t stream_base = splitmix64_mix((std::uint64_t{p} << 32) | n);
      for (std::uint64_t t = 0; t < trials; ++t) {
        const CounterRng rng(seed ^ stream_base, t);
        const DenseSet a = sample_set(g, rng, rng.uniform(0), 3);
        const DenseSet b = sample_set(g, rng, rng.uniform(1), 3 + g.size());
        const std::size_t d = rng.below(2, cache.directions().size());
        check(a, b, cache.table(d));
      }
    }
  }

  // Every pair of subsets of F_3 (including empty ones), every direction.
  const GroupParams line(3, 1);
  const LineTableCache cache(line);
  for (std::uint64_t wa = 0; wa < 8; ++wa) {
    for (std::uint64_t wb = 0; wb < 8; ++wb) {
      for (std::size_t d = 0; d < cache.directions().size(); ++d) {
        check(DenseSet::from_word(line, wa), DenseSet::from_word(line, wb), cache.table(d));
      }
    }
  }
  r.seconds = timer.seconds();
  return r;
}

std::vector<DenseSet> structure_suite_sets(std::uint32_t p, std::uint32_t n, unsigned threads) {
  const GroupParams g(p, n);
  if (g.size() > 9) return enumerate_E_compressed(p, n, threads);
  const LineTableCache cache(g);
  std::vector<DenseSet> out;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << g.size()); ++w) {
    DenseSet a = DenseSet::from_word(g, w);
    if (is_E_compressed(a, cache)) out.push_back(std::move(a));
  }
  return out;
}

SuiteResult verify_structure_lemma(std::uint32_t p, std::uint32_t n, unsigned threads) {
  SuiteResult r{"structure-lemma"};
  Timer timer;
  const GroupParams g(p, n);
  const LineTableCache cache(g);
  for (const DenseSet& a : structure_suite_sets(p, n, threads)) {
    ++r.cases;
    const StructureReport st = extract_structure(a, cache);
    if (!verify_structure(a, st)) fail(r, "decomposition fails for " + describe(a));
    if (!check_proof_observations(a, st).all()) fail(r, "an intermediate observation fails for " + describe(a));
    if (!reduce(a, cache).trace.steps.empty()) fail(r, "reduce moved an E-compressed set " + describe(a));
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteResult verify_inequalities(std::uint32_t p, std::uint32_t n, unsigned threads) {
  SuiteResult r{"inequalities"};
  Timer timer;
  const GroupParams g(p, n);
  const LineTableCache cache(g);
  for (const DenseSet& a : structure_suite_sets(p, n, threads)) {
    ++r.cases;
    const StructureReport st = extract_structure(a, cache);
    const std::uint64_t sum = sumset(a, a).size();
    const std::uint64_t span = affine_span(a).size;
    const auto [lo, hi] = cardinality_bounds(st);
    const Rational density = ratio(a.size(), span);
    if (!(lo <= density && density <= hi)) fail(r, "cardinality interval fails for " + describe(a));
    if (sumset_bounds_apply(st)) {
      if (sumset_lower_bound(st) > sum) fail(r, "sumset lower bound exceeds |A+A| for " + describe(a));
      if (simplified_lower_bound(st, a.size(), span) > sum) fail(r, "simplified bound exceeds |A+A| for " + describe(a));
    }
    if (st.m > 0) {
      const Rational chain = ratio(BigInt(st.m) + 1, 2) * (BigInt(a.size()) - BigInt(st.q) * st.h_size);
      if (Rational(piece_sumset_total(st)) < chain) fail(r, "piece chain fails for " + describe(a));
    }
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteResult verify_claims(std::span<const std::uint32_t> primes, double tolerance) {
  SuiteResult r{"claims"};
  Timer timer;
  std::vector<double> grid;
  for (int i = 25; i <= 250; ++i) grid.push_back(i / 10.0);
  for (std::uint32_t p : primes) {
    for (std::uint32_t q = 1; q < p; ++q) {
      for (double k : kClaimK) {
        ++r.cases;
        if (!check_decreasing_in_m(p, q, k, 1000)) {
          fail(r, "m-monotonicity fails at p=" + std::to_string(p) + " q=" + std::to_string(q) + " K=" + std::to_string(k));
        }
      }
      ++r.cases;
      if (monotonicity_threshold(p, q) > 10) fail(r, "threshold above 10 at p=" + std::to_string(p));
    }
    ++r.cases;
    if (!check_q1_minimal(p, grid, tolerance)) fail(r, "q = 1 minimality fails at p=" + std::to_string(p));
    ++r.cases;
    // p^14/15 >= p^10
    if (14 * std::log(p) - std::log(15.0) < 10 * std::log(p) - tolerance) fail(r, "p^14/15 < p^10");
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteResult verify_identities(std::span<const std::uint32_t> primes, std::uint32_t m_max) {
  SuiteResult r{"identities"};
  Timer timer;
  for (std::uint32_t p : primes) {
    for (std::uint32_t m = 1; m <= m_max; ++m) {
      ++r.cases;
      if (extremal_spanning(p, 1, m) != main_theorem_curve_exact(p, extremal_doubling(p, 1, m))) {
        fail(r, "F_1/G_1 identity fails at p=" + std::to_string(p) + " m=" + std::to_string(m));
      }
    }
    for (std::uint32_t q = 1; q < p; ++q) {
      for (std::uint32_t m = 1; m <= 5; ++m) {
        ++r.cases;
        const DenseSet a = extremal_set(p, q, m);
        if (doubling(a) != extremal_doubling(p, q, m) || spanning(a) != extremal_spanning(p, q, m)) {
          fail(r, "extremal family mismatch at p=" + std::to_string(p) + " q=" + std::to_string(q) +
                      " m=" + std::to_string(m));
        }
      }
    }
  }
  r.seconds = timer.seconds();
  return r;
}

std::span<const std::string_view> suite_names() {
  static constexpr std::array<std::string_view, 7> kNames{
      "cauchy-davenport", "compression-lemma", "structure-lemma", "inequalities", "claims", "identities", "all"};
  return kNames;
}

std::vector<SuiteResult> run_suite(std::string_view name, const VerifyOptions& o) {
  auto primes = [&](std::span<const std::uint32_t> defaults) {
    return o.p ? std::vector<std::uint32_t>{*o.p} : std::vector<std::uint32_t>(defaults.begin(), defaults.end());
  };
  auto dims = [&] { return o.n ? std::vector<std::uint32_t>{*o.n} : std::vector<std::uint32_t>(kDims.begin(), kDims.end()); };
  // (p, n) pairs for the structure-type suites.
  auto structure_cases = [&] {
    if (o.p || o.n) return std::vector<std::pair<std::uint32_t, std::uint32_t>>{{o.p.value_or(3), o.n.value_or(2)}};
    return std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 2}, {5, 2}};
  };
  auto merge = [](std::vector<SuiteResult> parts, std::string suite) {
    SuiteResult out{std::move(suite)};
    for (const auto& s : parts) {
      out.cases += s.cases;
      out.seconds += s.seconds;
      if (s.violations != 0 && out.violations == 0) out.detail = s.detail;
      out.violations += s.violations;
    }
    return out;
  };

  std::vector<SuiteResult> out;
  const bool all = name == "all";
  if (all || name == "cauchy-davenport") out.push_back(verify_cauchy_davenport(primes(kCdPrimes)));
  if (all || name == "compression-lemma") {
    out.push_back(verify_compression_lemma(primes(kSmallPrimes), dims(), o.trials, o.seed));
  }
  if (all || name == "structure-lemma") {
    std::vector<SuiteResult> parts;
    for (auto [p, n] : structure_cases()) parts.push_back(verify_structure_lemma(p, n, o.threads));
    out.push_back(merge(std::move(parts), "structure-lemma"));
  }
  if (all || name == "inequalities") {
    std::vector<SuiteResult> parts;
    for (auto [p, n] : structure_cases()) parts.push_back(verify_inequalities(p, n, o.threads));
    out.push_back(merge(std::move(parts), "inequalities"));
  }
  if (all || name == "claims") out.push_back(verify_claims(primes(kCdPrimes), o.tolerance));
  if (all || name == "identities") out.push_back(verify_identities(primes(kSmallPrimes), 40));
  if (out.empty()) {
    throw ValidationError("unknown suite '" + std::string(name) +
                          "' (expected cauchy-davenport, compression-lemma, structure-lemma, inequalities, claims, "
                          "identities or all)");
  }
  return out;
}

}  // namespace frz
