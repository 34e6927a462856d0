#pragma once

// Subsets of a universe of at most 64 points as single machine words. This is
// the inner loop of every exhaustive scan; all per-point and per-line data is
// precomputed once per group.

#include <bit>
#include <cstdint>
#include <vector>

#include "frz/dense_set.hpp"
#include "frz/group.hpp"

namespace frz {

class MaskSpace {
 public:
  static constexpr std::uint64_t kMaxPoints = 64;

  explicit MaskSpace(const GroupParams& g);

  const GroupParams& group() const { return group_; }
  std::uint32_t points() const { return points_; }
  std::uint64_t full() const { return full_; }
  std::uint64_t e_mask() const { return e_mask_; }

  // {x + a : x in mask}
  std::uint64_t translate(std::uint64_t mask, Index a) const {
    std::uint64_t out = 0;
    const std::uint64_t* t = &translate_[static_cast<std::size_t>(a) * chunks_ * 256];
    for (std::uint32_t c = 0; c < chunks_; ++c, t += 256) {
      const std::uint32_t byte = (mask >> (8 * c)) & 0xFF;
      if (byte != 0) out |= t[byte];
    }
    return out;
  }

  std::uint64_t sumset(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t out = 0;
    while (a != 0) {
      out |= translate(b, static_cast<Index>(std::countr_zero(a)));
      a &= a - 1;
    }
    return out;
  }

  // |<A>| for non-empty A.
  std::uint64_t span_size(std::uint64_t a) const;

  bool contains_E(std::uint64_t a) const { return (a & e_mask_) == e_mask_; }
  bool is_down_set(std::uint64_t a) const {
    for (std::uint32_t i = 0; i < group_.n(); ++i) {
      if (((a & positive_[i]) >> group_.stride(i)) & ~a) return false;
    }
    return true;
  }
  std::uint64_t down_closure(std::uint64_t a) const;

  std::size_t direction_count() const { return dirs_.size(); }
  std::uint64_t compress(std::uint64_t a, std::size_t direction) const;
  bool is_E_compressed(std::uint64_t a) const;

  DenseSet to_set(std::uint64_t a) const { return DenseSet::from_word(group_, a); }

 private:
  struct DirectionLines {
    std::vector<std::uint64_t> line;    // member mask per line
    std::vector<std::uint64_t> prefix;  // (p+1) initial-segment masks per line
  };

  GroupParams group_;
  std::uint32_t points_;
  std::uint32_t chunks_;
  std::uint64_t full_;
  std::uint64_t e_mask_ = 0;
  std::vector<std::uint64_t> translate_;  // [a][chunk][byte]
  std::vector<Index> neg_;
  std::vector<Index> multiples_;          // [x][k] = k x
  std::vector<std::uint64_t> positive_;   // per coordinate: points with that coordinate > 0
  std::vector<DirectionLines> dirs_;
};

}  // namespace frz
