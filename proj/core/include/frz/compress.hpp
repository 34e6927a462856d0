#pragma once

// Directional compressions C_v and the span-preserving reduction to an
// E-compressed set.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "frz/dense_set.hpp"
#include "frz/group.hpp"

namespace frz {

// Lines of one direction flattened into an index table: line l occupies
// entries [l*p, (l+1)*p) in ascending (lexicographic) order.
class LineTable {
 public:
  LineTable(const GroupParams& g, const Direction& d);

  const Direction& direction() const { return dir_; }
  std::size_t line_count() const { return members_.size() / p_; }
  std::span<const Index> line(std::size_t l) const { return {members_.data() + l * p_, p_}; }

 private:
  Direction dir_;
  std::uint32_t p_;
  std::vector<Index> members_;
};

// Per-group cache of line tables for every direction, built lazily and
// shared read-only afterwards. Thread-safe.
class LineTableCache {
 public:
  explicit LineTableCache(GroupParams g);

  const GroupParams& group() const { return group_; }
  std::span<const Direction> directions() const { return directions_; }
  const LineTable& table(std::size_t direction_index) const;

 private:
  GroupParams group_;
  std::vector<Direction> directions_;
  mutable std::vector<std::unique_ptr<LineTable>> tables_;
  mutable std::unique_ptr<std::once_flag[]> built_;
};

// IS(k, L): the k lex-smallest members of L.
std::vector<Point> initial_segment(std::uint32_t k, const Line& line);

// IS(c, L_u) + IS(d, L_w) for two lines of the same direction, returned as
// IS(min(c+d-1, p), L_{u+w}). Requires c, d in [1, p].
std::vector<Point> initial_segment_sum(const GroupParams& g, const Line& lu, std::uint32_t c, const Line& lw,
                                       std::uint32_t d);

DenseSet compress(const DenseSet& a, const Direction& d);
DenseSet compress(const DenseSet& a, const LineTable& table);

bool is_compressed(const DenseSet& a, const Direction& d);
bool is_compressed(const DenseSet& a, const LineTable& table);

bool is_E_compressed(const DenseSet& a);
bool is_E_compressed(const DenseSet& a, const LineTableCache& cache);

// Sum of heights.
std::uint64_t potential(const DenseSet& a);

struct CompressionStep {
  Direction direction;
  std::uint64_t potential_before;
  std::uint64_t potential_after;
  std::size_t moved;  // points that left the set (equally many entered)
};

struct CompressionTrace {
  std::vector<CompressionStep> steps;
  std::uint64_t initial_potential = 0;
  std::uint64_t final_potential = 0;
};

struct ReduceResult {
  DenseSet set;
  CompressionTrace trace;
};

using StepObserver = std::function<void(const DenseSet& after, const CompressionStep& step)>;

// Applies compressions that keep E inside the set until none changes it.
// Directions are tried in ascending order and the sweep restarts after every
// applied compression. Requires E ⊆ A.
ReduceResult reduce(const DenseSet& a, const StepObserver& observer = {});
ReduceResult reduce(const DenseSet& a, const LineTableCache& cache, const StepObserver& observer = {});

}  // namespace frz
