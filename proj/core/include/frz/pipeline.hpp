#pragma once

// normalize -> reduce -> extract structure -> verify -> lower bounds, with
// the doubling constant tracked at every compression step.

#include <cstdint>
#include <optional>
#include <vector>

#include "frz/compress.hpp"
#include "frz/dense_set.hpp"
#include "frz/rational.hpp"
#include "frz/structure.hpp"

namespace frz {

struct PipelineReport {
  std::uint64_t size = 0;
  std::uint64_t sum_size = 0;   // |A+A| of the input
  std::uint64_t span_size = 0;  // |<A>| of the input
  std::uint32_t dimension = 0;  // dim <A>

  std::uint64_t normalized_sum_size = 0;
  std::vector<std::uint64_t> step_sum_sizes;  // |C+C| after each compression
  CompressionTrace trace;
  DenseSet reduced;
  std::uint64_t reduced_span_size = 0;

  // Empty when the reduced set lives in F_p^0 (A was a single point).
  std::optional<StructureReport> structure;
  bool structure_verified = false;
  bool observations_hold = false;
  std::pair<Rational, Rational> cardinality_interval;
  bool cardinality_holds = false;
  bool bounds_apply = false;  // p > 2; otherwise the two bounds are skipped
  BigInt sumset_bound;
  bool sumset_bound_holds = false;
  Rational simplified_bound;
  bool simplified_bound_holds = false;

  bool size_preserved = false;
  bool span_preserved = false;
  bool doubling_monotone = false;

  bool ok() const;
};

PipelineReport end_to_end(const DenseSet& a);

}  // namespace frz
