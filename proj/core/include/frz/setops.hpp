#pragma once

#include <cstdint>
#include <vector>

#include "frz/dense_set.hpp"
#include "frz/group.hpp"
#include "frz/linalg.hpp"
#include "frz/rational.hpp"

namespace frz {

// The set E = {0, e_1, ..., e_n}.
DenseSet basis_set(const GroupParams& g);

// A + B. The work is split over `threads` workers by partitioning A; the
// result does not depend on the split.
DenseSet sumset(const DenseSet& a, const DenseSet& b, unsigned threads = 1);

// |A+A| / |A|.
Rational doubling(const DenseSet& a);

struct AffineSpanDescriptor {
  Point base;                // lex-least element of the source set
  std::vector<Point> basis;  // greedy in lex order over {a - base}
  std::uint32_t dim = 0;
  std::uint64_t size = 1;    // p^dim
};

AffineSpanDescriptor affine_span(const DenseSet& a);

// |<A>| / |A|.
Rational spanning(const DenseSet& a);

// x -> matrix * x + shift on F_p^n, with matrix invertible.
class AffineMap {
 public:
  AffineMap(GroupParams group, Matrix matrix, Point shift);
  static AffineMap identity(const GroupParams& group);

  Point apply(Point x) const;
  Point unapply(Point y) const;

  const GroupParams& group() const { return group_; }
  const Matrix& matrix() const { return matrix_; }
  const Point& shift() const { return shift_; }

 private:
  GroupParams group_;
  Matrix matrix_;
  Matrix inverse_;
  Point shift_;
};

struct NormalizedSet {
  DenseSet set;        // lives in `group`, contains {0, e_1, ..., e_d}
  AffineMap map;       // on the source group; sends A into span{e_1..e_d}
  GroupParams group;   // F_p^d with d = dim <A>
};

// Affine change of coordinates taking A to a full-dimensional set containing
// E. The lex-least element goes to 0 and the greedy span basis to e_1..e_d.
NormalizedSet normalize_to_E(const DenseSet& a);

// A ∩ (c + H) for a subgroup descriptor H (base 0).
DenseSet restrict_to_coset(const DenseSet& a, Point c, const AffineSpanDescriptor& h);

}  // namespace frz
