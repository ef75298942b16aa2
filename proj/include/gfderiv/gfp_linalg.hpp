#pragma once

// Dense linear algebra over the prime field GF(p) for small k x k operators.

#include <cstdint>
#include <optional>
#include <vector>

namespace gfderiv::linalg {

using Vec = std::vector<std::uint32_t>;

class Matrix {
 public:
  Matrix(std::uint32_t p, std::size_t rows, std::size_t cols);
  static Matrix identity(std::uint32_t p, std::size_t n);
  static Matrix from_columns(std::uint32_t p, const std::vector<Vec>& columns);

  std::uint32_t modulus() const noexcept { return p_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec column(std::size_t c) const;
  Vec apply(const Vec& v) const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix power(std::uint64_t e) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::uint32_t p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

/// Reduced row echelon form of a list of row vectors; zero rows are dropped.
/// Pivots are taken leftmost first, so callers choose the pivot priority by
/// the order in which they lay out coordinates.
std::vector<Vec> row_reduce(std::uint32_t p, std::vector<Vec> rows);

/// Index of the leading nonzero entry, or nullopt for the zero vector.
std::optional<std::size_t> pivot_of(const Vec& v);

/// Basis of {v : A v = 0}, in reduced echelon form.
std::vector<Vec> kernel(const Matrix& a);

/// Basis of the column space of A, in reduced echelon form.
std::vector<Vec> image(const Matrix& a);

std::size_t rank(const Matrix& a);

/// Some x with A x = b, or nullopt when b is outside the column space.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

/// Subtracts multiples of the echelon basis so that v is zero at every pivot.
Vec reduce_against(std::uint32_t p, Vec v, const std::vector<Vec>& echelon_basis);

/// Coordinates of v in the (not necessarily echelon) basis, or nullopt when v
/// is outside the span.
std::optional<Vec> coordinates(std::uint32_t p, const std::vector<Vec>& basis, const Vec& v);

}  // namespace gfderiv::linalg
