#include "frz/mask_space.hpp"

#include "frz/compress.hpp"
#include "frz/error.hpp"

namespace frz {

MaskSpace::MaskSpace(const GroupParams& g)
    : group_(g),
      points_(static_cast<std::uint32_t>(g.size())),
      chunks_(static_cast<std::uint32_t>((g.size() + 7) / 8)),
      full_(g.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.size()) - 1) {
  if (g.size() > kMaxPoints) throw CapacityError("word-sized sets need a universe of at most 64 points");

  e_mask_ = 1;
  for (std::uint32_t i = 0; i < g.n(); ++i) e_mask_ |= std::uint64_t{1} << g.stride(i);

  translate_.assign(static_cast<std::size_t>(points_) * chunks_ * 256, 0);
  for (Index a = 0; a < points_; ++a) {
    for (std::uint32_t c = 0; c < chunks_; ++c) {
      std::uint64_t* t = &translate_[(static_cast<std::size_t>(a) * chunks_ + c) * 256];
      for (std::uint32_t byte = 1; byte < 256; ++byte) {
        std::uint64_t out = 0;
        for (std::uint32_t b = 0; b < 8; ++b) {
          const std::uint32_t x = 8 * c + b;
          if (((byte >> b) & 1) && x < points_) out |= std::uint64_t{1} << g.add(Point{x}, Point{a}).index;
        }
        t[byte] = out;
      }
    }
  }

  neg_.resize(points_);
  multiples_.resize(static_cast<std::size_t>(points_) * g.p());
  for (Index x = 0; x < points_; ++x) {
    neg_[x] = g.neg(Point{x}).index;
    for (std::uint32_t k = 0; k < g.p(); ++k) multiples_[x * g.p() + k] = g.scale(k, Point{x}).index;
  }

  positive_.assign(g.n(), 0);
  for (Index x = 0; x < points_; ++x) {
    for (std::uint32_t i = 0; i < g.n(); ++i) {
      if (g.coord(Point{x}, i) > 0) positive_[i] |= std::uint64_t{1} << x;
    }
  }

  for (const Direction& d : enumerate_directions(g)) {
    const LineTable table(g, d);
    DirectionLines lines;
    for (std::size_t l = 0; l < table.line_count(); ++l) {
      std::uint64_t member = 0, prefix = 0;
      lines.prefix.push_back(0);
      for (Index x : table.line(l)) {
        member |= std::uint64_t{1} << x;
        prefix |= std::uint64_t{1} << x;
        lines.prefix.push_back(prefix);
      }
      lines.line.push_back(member);
    }
    dirs_.push_back(std::move(lines));
  }
}

std::uint64_t MaskSpace::span_size(std::uint64_t a) const {
  const Index base = static_cast<Index>(std::countr_zero(a));
  std::uint64_t diffs = translate(a, neg_[base]) & ~std::uint64_t{1};
  std::uint64_t span = 1;  // subgroup generated so far
  const std::uint32_t p = group_.p();
  while (diffs != 0) {
    const Index x = static_cast<Index>(std::countr_zero(diffs));
    diffs &= diffs - 1;
    if ((span >> x) & 1) continue;
    std::uint64_t next = span;
    for (std::uint32_t k = 1; k < p; ++k) next |= translate(span, multiples_[x * p + k]);
    span = next;
  }
  return static_cast<std::uint64_t>(std::popcount(span));
}

std::uint64_t MaskSpace::down_closure(std::uint64_t a) const {
  std::uint64_t prev;
  do {
    prev = a;
    for (std::uint32_t i = 0; i < group_.n(); ++i) a |= (a & positive_[i]) >> group_.stride(i);
  } while (a != prev);
  return a;
}

std::uint64_t MaskSpace::compress(std::uint64_t a, std::size_t direction) const {
  const DirectionLines& d = dirs_[direction];
  const std::uint32_t p = group_.p();
  std::uint64_t out = 0;
  for (std::size_t l = 0; l < d.line.size(); ++l) {
    out |= d.prefix[l * (p + 1) + std::popcount(a & d.line[l])];
  }
  return out;
}

bool MaskSpace::is_E_compressed(std::uint64_t a) const {
  if (!contains_E(a)) return false;
  for (std::size_t i = 0; i < dirs_.size(); ++i) {
    const std::uint64_t c = compress(a, i);
    if (c != a && contains_E(c)) return false;
  }
  return true;
}

}  // namespace frz
