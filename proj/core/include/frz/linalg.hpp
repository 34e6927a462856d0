#pragma once

// Dense linear algebra over F_p for the small dimensions used here.

#include <cstdint>
#include <optional>
#include <vector>

#include "frz/group.hpp"

namespace frz {

using Vec = std::vector<Residue>;

class Matrix {
 public:
  Matrix(std::uint32_t p, std::uint32_t rows, std::uint32_t cols);
  static Matrix identity(std::uint32_t p, std::uint32_t n);

  std::uint32_t p() const { return p_; }
  std::uint32_t rows() const { return rows_; }
  std::uint32_t cols() const { return cols_; }

  Residue& at(std::uint32_t r, std::uint32_t c) { return data_[r * cols_ + c]; }
  Residue at(std::uint32_t r, std::uint32_t c) const { return data_[r * cols_ + c]; }

  Vec apply(const Vec& x) const;
  Residue determinant() const;
  // Empty when singular.
  std::optional<Matrix> inverse() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::uint32_t p_;
  std::uint32_t rows_;
  std::uint32_t cols_;
  std::vector<Residue> data_;
};

// Incremental row-echelon basis. Insertion reports whether the vector was
// independent of everything inserted so far.
class Echelon {
 public:
  Echelon(std::uint32_t p, std::uint32_t n);

  bool insert(const Vec& v);
  bool contains(const Vec& v) const { return is_zero(reduce(v)); }
  Vec reduce(Vec v) const;
  std::uint32_t rank() const { return static_cast<std::uint32_t>(rows_.size()); }

 private:
  static bool is_zero(const Vec& v);

  std::uint32_t p_;
  std::uint32_t n_;
  // Row k is 1 at pivot_[k] and 0 at every other row's pivot.
  std::vector<Vec> rows_;
  std::vector<std::uint32_t> pivot_;
};

}  // namespace frz
