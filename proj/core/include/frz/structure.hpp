#pragma once

// Coset decomposition of E-compressed sets and the sumset lower bounds that
// follow from it.

#include <cstdint>
#include <utility>
#include <vector>

#include "frz/compress.hpp"
#include "frz/dense_set.hpp"
#include "frz/rational.hpp"

namespace frz {

// A = H ∪ (a_1+H) ∪ ... ∪ ((q-1)a_1+H) ∪ A_1 ∪ ... ∪ A_m with
// H = span{e_1..e_h} maximal inside A, a_i = e_{h+i}, A_1 = A ∩ (q a_1 + H)
// for the largest q making it non-empty, A_i = A ∩ (a_i + H) for i >= 2.
//
// When A is a subgroup (h = n) the report has m = 0, q = p-1 and no pieces.
struct StructureReport {
  GroupParams group;
  std::uint32_t h = 0;
  std::uint32_t m = 0;
  std::uint32_t q = 0;
  std::vector<Point> a;         // a_1..a_m
  std::vector<DenseSet> pieces; // A_1..A_m
  std::uint64_t h_size = 1;     // p^h

  // Coset representative of piece i (0-based): q a_1 for the first, a_i otherwise.
  Point piece_offset(std::size_t i) const;
};

// Requires is_E_compressed(A) and n >= 1.
StructureReport extract_structure(const DenseSet& a);
StructureReport extract_structure(const DenseSet& a, const LineTableCache& cache);

// True iff the report is the decomposition of A (maximal H, maximal q,
// pieces equal to the stated intersections) and A is exactly the union.
bool verify_structure(const DenseSet& a, const StructureReport& r);

// Facts established along the way to the decomposition.
struct ProofObservations {
  bool coset_below_q = true;      // (q-1)a_1 + H ⊆ A
  bool a1_plus_ai_absent = true;  // a_1 + a_i ∉ A, i >= 2
  bool double_ai_absent = true;   // 2a_i ∉ A, i >= 2 (vacuous for p = 2)
  bool aj_plus_ai_absent = true;  // a_j + a_i ∉ A, i > j > 1

  bool all() const { return coset_below_q && a1_plus_ai_absent && double_ai_absent && aj_plus_ai_absent; }
};

ProofObservations check_proof_observations(const DenseSet& a, const StructureReport& r);

// Bounds on |A| / |<A>|: [q/p^m, (m+q)/p^m]. For m = 0 the set is its own
// span and the interval is [1, 1].
std::pair<Rational, Rational> cardinality_bounds(const StructureReport& r);

// The two sumset lower bounds below need p > 2: over F_2 the piece sums
// A_1 + A_1 land back in H and are counted twice. Both throw DomainError
// when this is false.
bool sumset_bounds_apply(const StructureReport& r);

// min(2q, p-1)|H| + (m-1)q|H| + sum_{i<=j} |A_i + A_j|.
BigInt sumset_lower_bound(const StructureReport& r);

// (min(2q, p-1) + (m-3)q/2) |<A>|/p^m + (m+1)/2 |A|.
Rational simplified_lower_bound(const StructureReport& r, std::uint64_t a_size, std::uint64_t span_size);

// sum_{i<=j} |A_i + A_j|, each pair computed after translating both pieces into H.
std::uint64_t piece_sumset_total(const StructureReport& r);

}  // namespace frz
