#pragma once

// Empirical (doubling, spanning) Pareto frontiers over subsets of small
// F_p^n, by exhaustive enumeration or seeded sampling, and enumeration of
// E-compressed sets.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frz/bounds.hpp"
#include "frz/dense_set.hpp"
#include "frz/rational.hpp"
#include "frz/rng.hpp"

namespace frz {

enum class SetClass { kArbitrary, kContainsE, kDownSet, kECompressed };
enum class SearchMode { kExhaustive, kRandom };

std::string_view to_string(SetClass c);
SetClass parse_set_class(std::string_view text);
std::string_view to_string(SearchMode m);
SearchMode parse_search_mode(std::string_view text);

// Largest universe whose 2^(p^n) subsets may be scanned.
inline constexpr std::uint64_t kMaxScanUniverse = 27;

struct Shard {
  std::uint32_t index = 0;
  std::uint32_t count = 1;
};

Shard parse_shard(std::string_view text);  // "i/k"

struct SearchConfig {
  std::uint32_t p = 3;
  std::uint32_t n = 2;
  SearchMode mode = SearchMode::kExhaustive;
  std::uint64_t trials = 10000;
  std::uint64_t seed = kDefaultSeed;
  SetClass set_class = SetClass::kArbitrary;
  Shard shard;
  bool force = false;
  unsigned threads = 1;
  // Unfiltered exhaustive scans are refused above this universe size unless forced.
  std::uint64_t exhaustive_cap = 9;

  void validate() const;
};

struct FrontierRecord {
  Rational doubling;
  Rational spanning;
  DenseSet witness;
  SetClass set_class;
};

// a has doubling <= and spanning >= b's, with at least one strict.
bool dominates(const FrontierRecord& a, const FrontierRecord& b);

// Membership-word order (compared as big integers).
bool witness_less(const DenseSet& a, const DenseSet& b);

// Pareto frontier of the union; equal (doubling, spanning) pairs keep the
// least witness. Sorted by ascending doubling.
std::vector<FrontierRecord> merge_frontiers(std::span<const std::vector<FrontierRecord>> parts);

std::vector<FrontierRecord> frontier_exhaustive(const SearchConfig& cfg);
std::vector<FrontierRecord> frontier_random(const SearchConfig& cfg);
std::vector<FrontierRecord> run_search(const SearchConfig& cfg);

// All E-compressed subsets of F_p^n in ascending membership-word order.
// Scans only down-sets (every E-compressed set is one). Requires p^n <= 27.
std::vector<DenseSet> enumerate_E_compressed(std::uint32_t p, std::uint32_t n, unsigned threads = 1);

enum class CurveStatus { kBelow, kEqual, kNearTie, kExceeds };
std::string_view to_string(CurveStatus s);

struct CurveComparison {
  Rational doubling;
  Rational spanning;
  double log_spanning;
  double log_curve;  // log of p^(2K-2)/(2K-1) at K = doubling
  CurveStatus status;
  bool below_threshold;  // doubling < K_0, where the main bound is not claimed
};

struct FrontierReport {
  std::vector<CurveComparison> entries;
  std::size_t exceedances = 0;
  std::size_t exceedances_at_threshold = 0;  // with doubling >= K_0
  bool threshold_vacuous = true;             // no record reaches K_0
};

// Compares every record against the main-theorem curve. Half-integer
// doubling values are compared exactly; the rest in log space, where
// differences within `tolerance` are reported as near-ties.
FrontierReport compare_frontier(std::span<const FrontierRecord> records, std::uint32_t p,
                                double tolerance = kDefaultTolerance);

}  // namespace frz
