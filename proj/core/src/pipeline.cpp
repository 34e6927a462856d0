#include "frz/pipeline.hpp"

#include "frz/error.hpp"
#include "frz/setops.hpp"

namespace frz {

bool PipelineReport::ok() const {
  const bool bounds = !bounds_apply || (sumset_bound_holds && simplified_bound_holds);
  const bool structural = !structure || (structure_verified && observations_hold && cardinality_holds && bounds);
  return size_preserved && span_preserved && doubling_monotone && structural;
}

PipelineReport end_to_end(const DenseSet& a) {
  if (a.empty()) throw DomainError("pipeline needs a non-empty set");
  PipelineReport r{.reduced = DenseSet(a.group())};
  r.size = a.size();
  r.sum_size = sumset(a, a).size();
  const AffineSpanDescriptor span = affine_span(a);
  r.span_size = span.size;
  r.dimension = span.dim;

  const NormalizedSet norm = normalize_to_E(a);
  r.normalized_sum_size = sumset(norm.set, norm.set).size();

  const LineTableCache cache(norm.group);
  ReduceResult red = reduce(norm.set, cache, [&](const DenseSet& after, const CompressionStep&) {
    r.step_sum_sizes.push_back(sumset(after, after).size());
  });
  r.trace = std::move(red.trace);
  r.reduced = std::move(red.set);
  r.reduced_span_size = affine_span(r.reduced).size;

  r.size_preserved = norm.set.size() == r.size && r.reduced.size() == r.size;
  r.span_preserved = norm.group.size() == r.span_size && r.reduced_span_size == r.span_size;
  r.doubling_monotone = r.normalized_sum_size == r.sum_size;
  std::uint64_t prev = r.normalized_sum_size;
  for (std::uint64_t s : r.step_sum_sizes) {
    if (s > prev) r.doubling_monotone = false;
    prev = s;
  }

  if (norm.group.n() == 0) return r;
  StructureReport st = extract_structure(r.reduced, cache);
  r.structure_verified = verify_structure(r.reduced, st);
  r.observations_hold = check_proof_observations(r.reduced, st).all();
  r.cardinality_interval = cardinality_bounds(st);
  const Rational density = ratio(r.size, r.span_size);
  r.cardinality_holds = r.cardinality_interval.first <= density && density <= r.cardinality_interval.second;
  r.bounds_apply = sumset_bounds_apply(st);
  if (r.bounds_apply) {
    const std::uint64_t reduced_sum = r.step_sum_sizes.empty() ? r.normalized_sum_size : r.step_sum_sizes.back();
    r.sumset_bound = sumset_lower_bound(st);
    r.sumset_bound_holds = r.sumset_bound <= reduced_sum;
    r.simplified_bound = simplified_lower_bound(st, r.size, r.span_size);
    r.simplified_bound_holds = r.simplified_bound <= reduced_sum;
  }
  r.structure = std::move(st);
  return r;
}

}  // namespace frz
