#include "frz/setops.hpp"

#include <algorithm>
#include <thread>

#include "frz/error.hpp"

namespace frz {

namespace {

// Reads `width` (< 64) bits starting at bit `off`.
std::uint64_t read_bits(std::span<const std::uint64_t> words, std::uint64_t off, unsigned width) {
  const std::size_t w = off >> 6;
  const unsigned s = off & 63;
  std::uint64_t v = words[w] >> s;
  if (s + width > 64) v |= words[w + 1] << (64 - s);
  return v & ((std::uint64_t{1} << width) - 1);
}

void or_bits(std::vector<std::uint64_t>& words, std::uint64_t off, std::uint64_t value) {
  const std::size_t w = off >> 6;
  const unsigned s = off & 63;
  words[w] |= value << s;
  if (s != 0 && (value >> (64 - s)) != 0) words[w + 1] |= value >> (64 - s);
}

// Sumset for p < 64. Points are grouped into rows of p consecutive indices
// (fixed coordinates 2..n). Translating by a rotates each row by a_1 and
// moves it to row (r + (a_2..a_n)); rows fit one machine word so the
// rotation needs no per-bit modular arithmetic.
DenseSet sumset_rows(const DenseSet& a, const DenseSet& b, unsigned threads) {
  const GroupParams& g = a.group();
  const unsigned p = g.p();
  const std::uint64_t rows = g.size() / p;
  const GroupParams high(p, g.n() - 1);
  const std::uint64_t mask = (std::uint64_t{1} << p) - 1;

  std::vector<Index> nz_rows;
  std::vector<std::uint64_t> rotations;  // p rotations per nonzero row of B
  for (std::uint64_t r = 0; r < rows; ++r) {
    const std::uint64_t x = read_bits(b.words(), r * p, p);
    if (x == 0) continue;
    nz_rows.push_back(static_cast<Index>(r));
    for (unsigned s = 0; s < p; ++s) {
      rotations.push_back(s == 0 ? x : (((x << s) | (x >> (p - s))) & mask));
    }
  }

  const std::vector<Point> a_points = a.points();
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(a_points.size())));
  std::vector<std::vector<std::uint64_t>> acc(workers, std::vector<std::uint64_t>(rows, 0));

  auto work = [&](unsigned w) {
    const std::size_t lo = a_points.size() * w / workers;
    const std::size_t hi = a_points.size() * (w + 1) / workers;
    auto& out = acc[w];
    for (std::size_t i = lo; i < hi; ++i) {
      const Index shift = a_points[i].index % p;
      const Point row_shift{a_points[i].index / p};
      for (std::size_t k = 0; k < nz_rows.size(); ++k) {
        const Index target = high.add(Point{nz_rows[k]}, row_shift).index;
        out[target] |= rotations[k * p + shift];
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  DenseSetBuilder builder(g);
  auto& words = builder.words();
  for (std::uint64_t r = 0; r < rows; ++r) {
    std::uint64_t x = acc[0][r];
    for (unsigned w = 1; w < workers; ++w) x |= acc[w][r];
    if (x != 0) or_bits(words, r * p, x);
  }
  return std::move(builder).build();
}

DenseSet sumset_pairs(const DenseSet& a, const DenseSet& b) {
  DenseSet out(a.group());
  const GroupParams& g = a.group();
  a.for_each([&](Point x) { b.for_each([&](Point y) { out.insert(g.add(x, y)); }); });
  return out;
}

Vec coords_of(const GroupParams& g, Point u) { return g.coords(u); }

}  // namespace

DenseSet basis_set(const GroupParams& g) {
  DenseSet e(g);
  e.insert(g.zero());
  for (std::uint32_t i = 0; i < g.n(); ++i) e.insert(g.unit(i));
  return e;
}

DenseSet sumset(const DenseSet& a, const DenseSet& b, unsigned threads) {
  if (!(a.group() == b.group())) throw ValidationError("sumset of sets in different groups");
  const GroupParams& g = a.group();
  if (a.empty() || b.empty()) return DenseSet(g);
  if (g.n() == 0) return DenseSet::full(g);
  if (g.p() < 64) return sumset_rows(a, b, threads);
  return sumset_pairs(a, b);
}

Rational doubling(const DenseSet& a) {
  if (a.empty()) throw DomainError("doubling constant of the empty set");
  return ratio(sumset(a, a).size(), a.size());
}

AffineSpanDescriptor affine_span(const DenseSet& a) {
  if (a.empty()) throw DomainError("affine span of the empty set");
  const GroupParams& g = a.group();
  AffineSpanDescriptor out;
  out.base = a.min();
  Echelon ech(g.p(), g.n());
  a.for_each([&](Point x) {
    if (out.dim == g.n()) return;
    const Point d = g.sub(x, out.base);
    if (ech.insert(coords_of(g, d))) out.basis.push_back(d);
    out.dim = ech.rank();
  });
  out.size = g.stride(out.dim);
  return out;
}

Rational spanning(const DenseSet& a) {
  const AffineSpanDescriptor span = affine_span(a);
  return ratio(span.size, a.size());
}

AffineMap::AffineMap(GroupParams group, Matrix matrix, Point shift)
    : group_(std::move(group)), matrix_(std::move(matrix)), inverse_(group_.p(), 0, 0), shift_(shift) {
  if (matrix_.rows() != group_.n() || matrix_.cols() != group_.n() || matrix_.p() != group_.p()) {
    throw ValidationError("affine map matrix has the wrong shape");
  }
  auto inv = matrix_.inverse();
  if (!inv) throw ValidationError("affine map matrix is singular");
  inverse_ = std::move(*inv);
  if (shift_.index >= group_.size()) throw ValidationError("affine shift outside the group");
}

AffineMap AffineMap::identity(const GroupParams& group) {
  return AffineMap(group, Matrix::identity(group.p(), group.n()), group.zero());
}

Point AffineMap::apply(Point x) const {
  return group_.add(group_.encode(matrix_.apply(group_.coords(x))), shift_);
}

Point AffineMap::unapply(Point y) const {
  return group_.encode(inverse_.apply(group_.coords(group_.sub(y, shift_))));
}

NormalizedSet normalize_to_E(const DenseSet& a) {
  const GroupParams& g = a.group();
  const AffineSpanDescriptor span = affine_span(a);
  const std::uint32_t n = g.n();

  // Columns: the span basis, then standard vectors completing it to F_p^n.
  Matrix frame(g.p(), n, n);
  Echelon ech(g.p(), n);
  std::uint32_t col = 0;
  auto put_column = [&](Point v) {
    const Vec c = g.coords(v);
    for (std::uint32_t r = 0; r < n; ++r) frame.at(r, col) = c[r];
    ++col;
  };
  for (Point v : span.basis) {
    ech.insert(g.coords(v));
    put_column(v);
  }
  for (std::uint32_t i = 0; i < n && col < n; ++i) {
    if (ech.insert(g.coords(g.unit(i)))) put_column(g.unit(i));
  }
  const Matrix forward = *frame.inverse();
  const Point shift = g.encode(forward.apply(g.coords(g.neg(span.base))));
  AffineMap map(g, forward, shift);

  GroupParams target(g.p(), span.dim);
  DenseSet out(target);
  a.for_each([&](Point x) {
    const Vec c = g.coords(map.apply(x));
    out.insert(target.encode(std::span<const Residue>(c.data(), span.dim)));
  });
  return NormalizedSet{std::move(out), std::move(map), target};
}

DenseSet restrict_to_coset(const DenseSet& a, Point c, const AffineSpanDescriptor& h) {
  const GroupParams& g = a.group();
  if (h.base.index != 0) throw PreconditionError("coset restriction needs a subgroup descriptor (base 0)");
  Echelon ech(g.p(), g.n());
  for (Point v : h.basis) ech.insert(g.coords(v));
  DenseSet out(g);
  a.for_each([&](Point x) {
    if (ech.contains(g.coords(g.sub(x, c)))) out.insert(x);
  });
  return out;
}

}  // namespace frz
