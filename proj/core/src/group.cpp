#include "frz/group.hpp"

#include <string>

#include "frz/error.hpp"

namespace frz {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

GroupParams::GroupParams(std::uint32_t p, std::uint32_t n) : p_(p), n_(n), size_(1) {
  if (!is_prime(p)) {
    throw ValidationError("modulus " + std::to_string(p) + " is not prime");
  }
  strides_.reserve(n + 1);
  strides_.push_back(1);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (size_ > kMaxUniverse / p) {
      throw CapacityError("universe " + std::to_string(p) + "^" + std::to_string(n) +
                          " does not fit the 32-bit point index");
    }
    size_ *= p;
    strides_.push_back(size_);
  }
}

Point GroupParams::encode(std::span<const Residue> coords) const {
  if (coords.size() != n_) {
    throw ValidationError("expected " + std::to_string(n_) + " coordinates, got " +
                          std::to_string(coords.size()));
  }
  std::uint64_t index = 0;
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (coords[i] >= p_) {
      throw ValidationError("residue " + std::to_string(coords[i]) + " out of range for p = " +
                            std::to_string(p_));
    }
    index += coords[i] * strides_[i];
  }
  return Point{static_cast<Index>(index)};
}

std::vector<Residue> GroupParams::coords(Point u) const {
  std::vector<Residue> out(n_);
  std::uint64_t x = u.index;
  for (std::uint32_t i = 0; i < n_; ++i) {
    out[i] = static_cast<Residue>(x % p_);
    x /= p_;
  }
  return out;
}

Point GroupParams::from_index(std::uint64_t index) const {
  if (index >= size_) {
    throw ValidationError("point index " + std::to_string(index) + " out of range [0, " +
                          std::to_string(size_) + ")");
  }
  return Point{static_cast<Index>(index)};
}

Point GroupParams::add(Point u, Point v) const {
  std::uint64_t x = u.index, y = v.index, out = 0;
  for (std::uint32_t i = 0; i < n_; ++i) {
    std::uint64_t d = x % p_ + y % p_;
    if (d >= p_) d -= p_;
    out += d * strides_[i];
    x /= p_;
    y /= p_;
  }
  return Point{static_cast<Index>(out)};
}

Point GroupParams::neg(Point u) const {
  std::uint64_t x = u.index, out = 0;
  for (std::uint32_t i = 0; i < n_; ++i) {
    const std::uint64_t d = x % p_;
    out += (d == 0 ? 0 : p_ - d) * strides_[i];
    x /= p_;
  }
  return Point{static_cast<Index>(out)};
}

Point GroupParams::sub(Point u, Point v) const { return add(u, neg(v)); }

Point GroupParams::scale(Residue k, Point u) const {
  std::uint64_t x = u.index, out = 0;
  const std::uint64_t kk = k % p_;
  for (std::uint32_t i = 0; i < n_; ++i) {
    out += (kk * (x % p_) % p_) * strides_[i];
    x /= p_;
  }
  return Point{static_cast<Index>(out)};
}

Residue GroupParams::inverse(Residue a) const {
  if (a % p_ == 0) throw DomainError("zero has no inverse mod p");
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a % p_;
  for (std::uint64_t e = p_ - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
  }
  return static_cast<Residue>(result);
}

Direction normalize_direction(const GroupParams& g, Point v) {
  if (v.index >= g.size()) throw ValidationError("direction outside the group");
  if (v.index == 0) throw DomainError("the zero vector does not define a direction");
  std::uint32_t pivot = g.n() - 1;
  while (g.coord(v, pivot) == 0) --pivot;
  const Residue lead = g.coord(v, pivot);
  return Direction(g.scale(g.inverse(lead), v), pivot);
}

std::vector<Direction> enumerate_directions(const GroupParams& g) {
  std::vector<Direction> out;
  if (g.n() == 0) return out;
  // Normalized vectors with pivot i occupy indices [p^i, 2 p^i), so ascending
  // pivot then ascending tail is ascending index.
  for (std::uint32_t i = 0; i < g.n(); ++i) {
    const std::uint64_t lo = g.stride(i);
    for (std::uint64_t x = lo; x < 2 * lo; ++x) {
      out.push_back(normalize_direction(g, Point{static_cast<Index>(x)}));
    }
  }
  return out;
}

Line line_of(const GroupParams& g, Point u, const Direction& d) {
  const Residue k = g.coord(u, d.pivot());
  const Point base = g.sub(u, g.scale(k, d.vector()));
  Line line{base, d, {}};
  line.members.reserve(g.p());
  Point x = base;
  for (std::uint32_t j = 0; j < g.p(); ++j) {
    line.members.push_back(x);
    x = g.add(x, d.vector());
  }
  return line;
}

std::vector<Line> line_partition(const GroupParams& g, const Direction& d) {
  std::vector<Line> out;
  out.reserve(g.size() / g.p());
  for (std::uint64_t x = 0; x < g.size(); ++x) {
    const Point u{static_cast<Index>(x)};
    if (g.coord(u, d.pivot()) == 0) out.push_back(line_of(g, u, d));
  }
  return out;
}

}  // namespace frz
