#include "gfderiv/gfp_linalg.hpp"

#include <stdexcept>

namespace gfderiv::linalg {

namespace {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1u) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

bool is_zero(const Vec& v) {
  for (auto x : v) {
    if (x != 0) return false;
  }
  return true;
}

// row_target -= factor * row_source
void axpy(std::uint32_t p, Vec& target, const Vec& source, std::uint32_t factor) {
  for (std::size_t i = 0; i < target.size(); ++i) {
    const std::uint64_t sub = std::uint64_t{factor} * source[i] % p;
    target[i] = static_cast<std::uint32_t>((target[i] + p - sub) % p);
  }
}

}  // namespace

Matrix::Matrix(std::uint32_t p, std::size_t rows, std::size_t cols) : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(std::uint32_t p, std::size_t n) {
  Matrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::uint32_t p, const std::vector<Vec>& columns) {
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  Matrix m(p, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("ragged column list");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r] % p;
  }
  return m;
}

Vec Matrix::column(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in Matrix::apply");
  Vec out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc = (acc + std::uint64_t{(*this)(r, c)} * v[c]) % p_;
    out[r] = static_cast<std::uint32_t>(acc);
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("dimension mismatch in Matrix::operator*");
  Matrix out(p_, rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < rhs.cols_; ++c) {
      std::uint64_t acc = 0;
      for (std::size_t i = 0; i < cols_; ++i) acc = (acc + std::uint64_t{(*this)(r, i)} * rhs(i, c)) % p_;
      out(r, c) = static_cast<std::uint32_t>(acc);
    }
  }
  return out;
}

Matrix Matrix::power(std::uint64_t e) const {
  Matrix result = identity(p_, rows_);
  Matrix base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::optional<std::size_t> pivot_of(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) return i;
  }
  return std::nullopt;
}

std::vector<Vec> row_reduce(std::uint32_t p, std::vector<Vec> rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows.size(); ++c) {
    std::size_t pick = lead;
    while (pick < rows.size() && rows[pick][c] == 0) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[lead], rows[pick]);
    const std::uint32_t scale = inverse_mod(rows[lead][c], p);
    for (auto& x : rows[lead]) x = static_cast<std::uint32_t>(std::uint64_t{x} * scale % p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != lead && rows[r][c] != 0) axpy(p, rows[r], rows[lead], rows[r][c]);
    }
    ++lead;
  }
  rows.resize(lead);
  return rows;
}

std::vector<Vec> kernel(const Matrix& a) {
  const std::uint32_t p = a.modulus();
  std::vector<Vec> rows(a.rows(), Vec(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) rows[r][c] = a(r, c);
  }
  const auto echelon = row_reduce(p, std::move(rows));
  std::vector<bool> is_pivot(a.cols(), false);
  std::vector<std::size_t> pivot_cols;
  for (const auto& row : echelon) {
    const auto pc = *pivot_of(row);
    is_pivot[pc] = true;
    pivot_cols.push_back(pc);
  }
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(a.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < echelon.size(); ++i) v[pivot_cols[i]] = (p - echelon[i][free]) % p;
    basis.push_back(std::move(v));
  }
  return row_reduce(p, std::move(basis));
}

std::vector<Vec> image(const Matrix& a) {
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < a.cols(); ++c) cols.push_back(a.column(c));
  return row_reduce(a.modulus(), std::move(cols));
}

std::size_t rank(const Matrix& a) { return image(a).size(); }

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  const std::uint32_t p = a.modulus();
  if (b.size() != a.rows()) throw std::invalid_argument("dimension mismatch in solve");
  std::vector<Vec> rows(a.rows(), Vec(a.cols() + 1));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) rows[r][c] = a(r, c);
    rows[r][a.cols()] = b[r] % p;
  }
  const auto echelon = row_reduce(p, std::move(rows));
  Vec x(a.cols(), 0);
  for (const auto& row : echelon) {
    const auto pc = *pivot_of(row);
    if (pc == a.cols()) return std::nullopt;
    x[pc] = row[a.cols()];
  }
  return x;
}

Vec reduce_against(std::uint32_t p, Vec v, const std::vector<Vec>& echelon_basis) {
  for (const auto& b : echelon_basis) {
    const auto pc = pivot_of(b);
    if (pc && v[*pc] != 0) axpy(p, v, b, v[*pc]);
  }
  return v;
}

std::optional<Vec> coordinates(std::uint32_t p, const std::vector<Vec>& basis, const Vec& v) {
  if (basis.empty()) {
    if (is_zero(v)) return Vec{};
    return std::nullopt;
  }
  return solve(Matrix::from_columns(p, basis), v);
}

}  // namespace gfderiv::linalg
