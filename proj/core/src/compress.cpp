#include "frz/compress.hpp"

#include <algorithm>

#include "frz/error.hpp"
#include "frz/setops.hpp"

namespace frz {

LineTable::LineTable(const GroupParams& g, const Direction& d) : dir_(d), p_(g.p()) {
  members_.reserve(g.size());
  const std::uint64_t below = g.stride(d.pivot());
  // Bases are the points whose pivot coordinate is 0, visited in index order.
  for (std::uint64_t x = 0; x < g.size(); ++x) {
    if ((x / below) % p_ != 0) {
      x += below * (p_ - 1) - 1;  // skip the rest of this pivot block
      continue;
    }
    Point u{static_cast<Index>(x)};
    for (std::uint32_t k = 0; k < p_; ++k) {
      members_.push_back(u.index);
      u = g.add(u, d.vector());
    }
  }
}

LineTableCache::LineTableCache(GroupParams g)
    : group_(std::move(g)),
      directions_(enumerate_directions(group_)),
      tables_(directions_.size()),
      built_(std::make_unique<std::once_flag[]>(directions_.size())) {}

const LineTable& LineTableCache::table(std::size_t i) const {
  std::call_once(built_[i], [&] { tables_[i] = std::make_unique<LineTable>(group_, directions_[i]); });
  return *tables_[i];
}

std::vector<Point> initial_segment(std::uint32_t k, const Line& line) {
  if (k > line.members.size()) throw DomainError("initial segment longer than the line");
  return {line.members.begin(), line.members.begin() + k};
}

std::vector<Point> initial_segment_sum(const GroupParams& g, const Line& lu, std::uint32_t c, const Line& lw,
                                       std::uint32_t d) {
  if (!(lu.dir == lw.dir)) throw ValidationError("initial segments on lines of different directions");
  if (c < 1 || c > g.p() || d < 1 || d > g.p()) throw DomainError("segment sizes must lie in [1, p]");
  const Line sum_line = line_of(g, g.add(lu.base, lw.base), lu.dir);
  return initial_segment(std::min(c + d - 1, g.p()), sum_line);
}

DenseSet compress(const DenseSet& a, const Direction& d) { return compress(a, LineTable(a.group(), d)); }

DenseSet compress(const DenseSet& a, const LineTable& table) {
  DenseSet out(a.group());
  for (std::size_t l = 0; l < table.line_count(); ++l) {
    const auto line = table.line(l);
    std::uint32_t k = 0;
    for (Index x : line) k += a.contains(Point{x});
    for (std::uint32_t j = 0; j < k; ++j) out.insert(Point{line[j]});
  }
  return out;
}

bool is_compressed(const DenseSet& a, const Direction& d) { return is_compressed(a, LineTable(a.group(), d)); }

bool is_compressed(const DenseSet& a, const LineTable& table) {
  for (std::size_t l = 0; l < table.line_count(); ++l) {
    bool gap = false;
    for (Index x : table.line(l)) {
      const bool in = a.contains(Point{x});
      if (in && gap) return false;
      gap = gap || !in;
    }
  }
  return true;
}

bool is_E_compressed(const DenseSet& a) { return is_E_compressed(a, LineTableCache(a.group())); }

bool is_E_compressed(const DenseSet& a, const LineTableCache& cache) {
  if (!(a.group() == cache.group())) throw ValidationError("line cache built for a different group");
  const DenseSet e = basis_set(a.group());
  if (!e.is_subset_of(a)) return false;
  for (std::size_t i = 0; i < cache.directions().size(); ++i) {
    const LineTable& t = cache.table(i);
    if (is_compressed(a, t)) continue;
    if (e.is_subset_of(compress(a, t))) return false;
  }
  return true;
}

std::uint64_t potential(const DenseSet& a) {
  std::uint64_t sum = 0;
  a.for_each([&](Point u) { sum += height(u); });
  return sum;
}

ReduceResult reduce(const DenseSet& a, const StepObserver& observer) {
  return reduce(a, LineTableCache(a.group()), observer);
}

ReduceResult reduce(const DenseSet& a, const LineTableCache& cache, const StepObserver& observer) {
  if (!(a.group() == cache.group())) throw ValidationError("line cache built for a different group");
  const DenseSet e = basis_set(a.group());
  if (!e.is_subset_of(a)) throw PreconditionError("reduce requires E = {0, e_1, ..., e_n} inside the set");

  ReduceResult out{a, {}};
  out.trace.initial_potential = potential(a);
  std::uint64_t current = out.trace.initial_potential;
  const std::size_t nd = cache.directions().size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < nd; ++i) {
      const LineTable& t = cache.table(i);
      if (is_compressed(out.set, t)) continue;
      DenseSet next = compress(out.set, t);
      if (!e.is_subset_of(next)) continue;
      std::size_t moved = 0;
      out.set.for_each([&](Point u) { moved += !next.contains(u); });
      const std::uint64_t after = potential(next);
      CompressionStep step{t.direction(), current, after, moved};
      out.set = std::move(next);
      current = after;
      out.trace.steps.push_back(step);
      if (observer) observer(out.set, step);
      changed = true;
      break;
    }
  }
  out.trace.final_potential = current;
  return out;
}

}  // namespace frz
