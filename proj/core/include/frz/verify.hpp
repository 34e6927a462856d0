#pragma once

// Named property suites: exhaustive and seeded-fuzz checks of the sumset and
// compression facts, the structure decomposition, the inequality chain and
// the scalar identities. Each suite counts cases and violations.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frz/bounds.hpp"
#include "frz/rng.hpp"

namespace frz {

struct SuiteResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t violations = 0;
  double seconds = 0;
  std::string detail;  // first violation, if any

  bool passed() const { return violations == 0; }
};

struct VerifyOptions {
  std::optional<std::uint32_t> p;  // restrict to one prime
  std::optional<std::uint32_t> n;  // restrict to one dimension
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t trials = 1000;
  unsigned threads = 1;
  double tolerance = kDefaultTolerance;
};

// |C + D| >= min(|C| + |D| - 1, p) for all non-empty C, D ⊆ F_p.
SuiteResult verify_cauchy_davenport(std::span<const std::uint32_t> primes);

// C_d(A) + C_d(B) ⊆ C_d(A + B) and |C_d(A) + C_d(A)| <= |A + A| on `trials`
// seeded (A, B, d) per (p, n), plus every A, B ⊆ F_3 exhaustively.
SuiteResult verify_compression_lemma(std::span<const std::uint32_t> primes, std::span<const std::uint32_t> dims,
                                     std::uint64_t trials, std::uint64_t seed);

// Decomposition and the four intermediate observations on every E-compressed
// subset of F_p^n (full scan when p^n <= 9, down-set scan otherwise).
SuiteResult verify_structure_lemma(std::uint32_t p, std::uint32_t n, unsigned threads);

// Cardinality interval, the two sumset lower bounds and the piece chain on
// the same sets.
SuiteResult verify_inequalities(std::uint32_t p, std::uint32_t n, unsigned threads);

// Grid certificates for m-monotonicity (K in {8, 10, 12}, 1000 points) and
// q = 1 minimality (x in [2.5, 25] step 0.1), and the threshold arithmetic.
SuiteResult verify_claims(std::span<const std::uint32_t> primes, double tolerance);

// F_1(m) = p^(2G_1(m)-2)/(2G_1(m)-1) exactly for m <= m_max, and the
// extremal family's doubling/spanning by brute force for m <= 5.
SuiteResult verify_identities(std::span<const std::uint32_t> primes, std::uint32_t m_max);

std::span<const std::string_view> suite_names();
// Runs one suite (or all of them for "all"). Throws ValidationError for
// unknown names.
std::vector<SuiteResult> run_suite(std::string_view name, const VerifyOptions& options);

// The E-compressed sets a structure suite visits.
std::vector<DenseSet> structure_suite_sets(std::uint32_t p, std::uint32_t n, unsigned threads);

}  // namespace frz
