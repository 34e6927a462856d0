#include "frz/linalg.hpp"

#include <algorithm>
#include <utility>

#include "frz/error.hpp"

namespace frz {

namespace {

Residue inv_mod(Residue a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<Residue>(result);
}

// row[i] -= factor * other[i]
void axpy(Vec& row, const Vec& other, Residue factor, std::uint32_t p) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    const std::uint64_t sub = static_cast<std::uint64_t>(factor) * other[i] % p;
    row[i] = static_cast<Residue>((row[i] + p - sub) % p);
  }
}

}  // namespace

Matrix::Matrix(std::uint32_t p, std::uint32_t rows, std::uint32_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

Matrix Matrix::identity(std::uint32_t p, std::uint32_t n) {
  Matrix m(p, n, n);
  for (std::uint32_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw ValidationError("matrix/vector dimension mismatch");
  Vec out(rows_, 0);
  for (std::uint32_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::uint32_t c = 0; c < cols_; ++c) acc = (acc + std::uint64_t{at(r, c)} * x[c]) % p_;
    out[r] = static_cast<Residue>(acc);
  }
  return out;
}

Residue Matrix::determinant() const {
  if (rows_ != cols_) throw ValidationError("determinant of a non-square matrix");
  std::vector<Vec> m(rows_);
  for (std::uint32_t r = 0; r < rows_; ++r) m[r].assign(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  std::uint64_t det = 1;
  for (std::uint32_t c = 0; c < cols_; ++c) {
    std::uint32_t piv = c;
    while (piv < rows_ && m[piv][c] == 0) ++piv;
    if (piv == rows_) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = (p_ - det) % p_;
    }
    det = det * m[c][c] % p_;
    const Residue inv = inv_mod(m[c][c], p_);
    for (std::uint32_t r = c + 1; r < rows_; ++r) {
      if (m[r][c] != 0) axpy(m[r], m[c], static_cast<Residue>(std::uint64_t{m[r][c]} * inv % p_), p_);
    }
  }
  return static_cast<Residue>(det);
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) throw ValidationError("inverse of a non-square matrix");
  const std::uint32_t n = rows_;
  std::vector<Vec> m(n, Vec(2 * n, 0));
  for (std::uint32_t r = 0; r < n; ++r) {
    for (std::uint32_t c = 0; c < n; ++c) m[r][c] = at(r, c);
    m[r][n + r] = 1;
  }
  for (std::uint32_t c = 0; c < n; ++c) {
    std::uint32_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[c]);
    const Residue inv = inv_mod(m[c][c], p_);
    for (auto& x : m[c]) x = static_cast<Residue>(std::uint64_t{x} * inv % p_);
    for (std::uint32_t r = 0; r < n; ++r) {
      if (r != c && m[r][c] != 0) axpy(m[r], m[c], m[r][c], p_);
    }
  }
  Matrix out(p_, n, n);
  for (std::uint32_t r = 0; r < n; ++r)
    for (std::uint32_t c = 0; c < n; ++c) out.at(r, c) = m[r][n + c];
  return out;
}

Echelon::Echelon(std::uint32_t p, std::uint32_t n) : p_(p), n_(n) {}

bool Echelon::is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; });
}

Vec Echelon::reduce(Vec v) const {
  if (v.size() != n_) throw ValidationError("echelon vector dimension mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Residue c = v[pivot_[k]];
    if (c != 0) axpy(v, rows_[k], c, p_);
  }
  return v;
}

bool Echelon::insert(const Vec& v) {
  Vec r = reduce(v);
  std::uint32_t lead = n_;
  for (std::uint32_t i = n_; i-- > 0;) {
    if (r[i] != 0) {
      lead = i;
      break;
    }
  }
  if (lead == n_) return false;
  const Residue inv = inv_mod(r[lead], p_);
  for (auto& x : r) x = static_cast<Residue>(std::uint64_t{x} * inv % p_);
  // Keep earlier rows reduced against the new pivot so reduce() is a single pass.
  for (auto& row : rows_) {
    if (row[lead] != 0) axpy(row, r, row[lead], p_);
  }
  rows_.push_back(std::move(r));
  pivot_.push_back(lead);
  return true;
}

}  // namespace frz
