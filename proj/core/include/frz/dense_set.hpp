#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "frz/group.hpp"

namespace frz {

// A subset of F_p^n stored as a bitset indexed by point index.
class DenseSet {
 public:
  explicit DenseSet(GroupParams group);

  static DenseSet from_points(const GroupParams& group, std::span<const Point> points);
  static DenseSet full(const GroupParams& group);
  // Membership word of a set in a universe of at most 64 points; bit i is point i.
  static DenseSet from_word(const GroupParams& group, std::uint64_t word);

  const GroupParams& group() const { return group_; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(Point u) const { return (words_[u.index >> 6] >> (u.index & 63)) & 1u; }
  void insert(Point u);
  void erase(Point u);

  // Lex-least member. Requires a non-empty set.
  Point min() const;
  // Members in lexicographic order.
  std::vector<Point> points() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(Point{static_cast<Index>(w * 64 + b)});
        bits &= bits - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const { return words_; }
  std::uint64_t word() const;

  bool is_subset_of(const DenseSet& other) const;
  DenseSet& operator|=(const DenseSet& other);
  DenseSet& operator&=(const DenseSet& other);

  friend bool operator==(const DenseSet& a, const DenseSet& b) {
    return a.group_ == b.group_ && a.words_ == b.words_;
  }

 private:
  // Replaces the storage wholesale; trailing bits past p^n must be clear.
  friend class DenseSetBuilder;
  void recount();

  GroupParams group_;
  std::vector<std::uint64_t> words_;
  std::size_t count_ = 0;
};

// Single-owner raw access for kernels that fill words directly.
class DenseSetBuilder {
 public:
  explicit DenseSetBuilder(const GroupParams& group) : set_(group) {}
  std::vector<std::uint64_t>& words() { return set_.words_; }
  DenseSet build() && {
    set_.recount();
    return std::move(set_);
  }

 private:
  DenseSet set_;
};

}  // namespace frz
