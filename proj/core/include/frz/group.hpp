#pragma once

// Arithmetic of F_p^n with points encoded as base-p integers.
//
// Coordinate i (0-based here, e_{i+1} in the usual notation) is the digit of
// weight p^i, so coordinate n-1 is the most significant one. With this
// encoding the lexicographic order (compare at the largest differing
// coordinate) is exactly integer order on indices, and the height of a point
// is its index.

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace frz {

using Index = std::uint32_t;
using Residue = std::uint32_t;

struct Point {
  Index index = 0;

  friend constexpr auto operator<=>(Point, Point) = default;
};

class GroupParams {
 public:
  // Largest universe p^n accepted; point indices must fit Index.
  static constexpr std::uint64_t kMaxUniverse = 0xFFFFFFFFull;

  GroupParams(std::uint32_t p, std::uint32_t n);

  std::uint32_t p() const { return p_; }
  std::uint32_t n() const { return n_; }
  std::uint64_t size() const { return size_; }
  // p^i for i in [0, n].
  std::uint64_t stride(std::uint32_t i) const { return strides_[i]; }

  Point encode(std::span<const Residue> coords) const;
  std::vector<Residue> coords(Point u) const;
  Residue coord(Point u, std::uint32_t i) const {
    return static_cast<Residue>((u.index / strides_[i]) % p_);
  }

  Point zero() const { return Point{0}; }
  // e_{i+1}.
  Point unit(std::uint32_t i) const { return Point{static_cast<Index>(strides_[i])}; }
  Point from_index(std::uint64_t index) const;

  Point add(Point u, Point v) const;
  Point sub(Point u, Point v) const;
  Point neg(Point u) const;
  Point scale(Residue k, Point u) const;

  Residue inverse(Residue a) const;

  friend bool operator==(const GroupParams& a, const GroupParams& b) {
    return a.p_ == b.p_ && a.n_ == b.n_;
  }

 private:
  std::uint32_t p_;
  std::uint32_t n_;
  std::uint64_t size_;
  std::vector<std::uint64_t> strides_;
};

bool is_prime(std::uint64_t p);

inline Point encode(const GroupParams& g, std::span<const Residue> coords) { return g.encode(coords); }
inline bool lex_less(Point u, Point v) { return u.index < v.index; }
inline std::uint64_t height(Point u) { return u.index; }

// A nonzero vector scaled so that its largest nonzero coordinate (the pivot) is 1.
class Direction {
 public:
  const Point& vector() const { return v_; }
  std::uint32_t pivot() const { return pivot_; }

  friend bool operator==(const Direction& a, const Direction& b) { return a.v_ == b.v_; }

 private:
  friend Direction normalize_direction(const GroupParams& g, Point v);
  Direction(Point v, std::uint32_t pivot) : v_(v), pivot_(pivot) {}

  Point v_;
  std::uint32_t pivot_;
};

Direction normalize_direction(const GroupParams& g, Point v);

// All (p^n - 1)/(p - 1) directions, ascending by normalized vector.
std::vector<Direction> enumerate_directions(const GroupParams& g);

struct Line {
  Point base;  // the unique member whose pivot coordinate is 0
  Direction dir;
  std::vector<Point> members;  // base, base+v, ..., base+(p-1)v; ascending
};

Line line_of(const GroupParams& g, Point u, const Direction& d);

// The p^(n-1) lines of direction d, ordered by base.
std::vector<Line> line_partition(const GroupParams& g, const Direction& d);

}  // namespace frz
