#pragma once

// Exact dense linear algebra over the rationals.
//
// Subspaces are kept in a canonical column-reduced echelon form: the basis
// columns are the transposed nonzero rows of rref(spanning_set^T). Column j
// therefore has a 1 in coordinate pivots()[j] and zeros in every other pivot
// coordinate, and two spans are equal exactly when their bases are equal.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace hfsplit {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
      throw Error(ErrorKind::DimensionMismatch,
                  "matrix entry count " + std::to_string(data_.size()) + " != " +
                      std::to_string(rows_) + "x" + std::to_string(cols_));
  }

  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix scalar(std::size_t n, const Rational& c) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
    return m;
  }

  // Row-major literal; every row must have the same length.
  static Matrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.begin()->size() : 0;
    std::vector<Rational> entries;
    entries.reserve(r * c);
    for (const auto& row : rows) {
      if (row.size() != c) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
      entries.insert(entries.end(), row.begin(), row.end());
    }
    return Matrix(r, c, std::move(entries));
  }

  static Matrix column(std::vector<Rational> v) {
    std::size_t n = v.size();
    return Matrix(n, 1, std::move(v));
  }

  static Matrix row(std::vector<Rational> v) {
    std::size_t n = v.size();
    return Matrix(1, n, std::move(v));
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> entries() const noexcept { return data_; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  Matrix col(std::size_t j) const {
    Matrix c(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
  }

  Matrix row_at(std::size_t i) const {
    Matrix r(1, cols_);
    for (std::size_t j = 0; j < cols_; ++j) r(0, j) = (*this)(i, j);
    return r;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b, "+");
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b, "-");
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
    return c;
  }

  friend Matrix operator-(const Matrix& a) {
    Matrix c = a;
    for (auto& x : c.data_) x = -x;
    return c;
  }

  friend Matrix operator*(const Rational& s, const Matrix& a) {
    Matrix c = a;
    for (auto& x : c.data_) x *= s;
    return c;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw Error(ErrorKind::DimensionMismatch,
                  "product of " + a.shape() + " and " + b.shape());
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void require_same_shape(const Matrix& b, const char* op) const {
    if (rows_ != b.rows_ || cols_ != b.cols_)
      throw Error(ErrorKind::DimensionMismatch, shape() + " " + op + " " + b.shape());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

inline Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows())
    throw Error(ErrorKind::DimensionMismatch, "hstack " + a.shape() + " | " + b.shape());
  Matrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

inline Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols())
    throw Error(ErrorKind::DimensionMismatch, "vstack " + a.shape() + " / " + b.shape());
  Matrix c(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, j) = b(i, j);
  return c;
}

inline Matrix rows_range(const Matrix& m, std::size_t first, std::size_t count) {
  Matrix r(count, m.cols());
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(first + i, j);
  return r;
}

inline Matrix select_columns(const Matrix& m, std::span<const std::size_t> cols) {
  Matrix r(m.rows(), cols.size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) r(i, j) = m(i, cols[j]);
  return r;
}

struct RrefResult {
  Matrix echelon;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

inline RrefResult rref(Matrix m) {
  RrefResult out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(lead_row, j));
    Rational inv = 1 / m(lead_row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead_row || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(lead_row, j);
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.rank = out.pivots.size();
  out.echelon = std::move(m);
  return out;
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient_dim) {
    Subspace s;
    s.ambient_ = ambient_dim;
    s.basis_ = Matrix(ambient_dim, 0);
    return s;
  }

  static Subspace full(std::size_t ambient_dim) { return span(Matrix::identity(ambient_dim)); }

  // Column span of `columns`, canonicalized.
  static Subspace span(const Matrix& columns) {
    RrefResult r = rref(columns.transpose());
    Subspace s;
    s.ambient_ = columns.rows();
    s.pivots_ = r.pivots;
    s.basis_ = rows_range(r.echelon, 0, r.rank).transpose();
    return s;
  }

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.cols(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  // v minus its component along the canonical basis; zero at every pivot.
  Matrix residual(const Matrix& v) const {
    require_vectors(v);
    Matrix r = v;
    for (std::size_t k = 0; k < v.cols(); ++k)
      for (std::size_t j = 0; j < dim(); ++j) {
        Rational c = v(pivots_[j], k);
        if (c == 0) continue;
        for (std::size_t i = 0; i < ambient_; ++i) r(i, k) -= c * basis_(i, j);
      }
    return r;
  }

  bool contains(const Matrix& vectors) const { return residual(vectors).is_zero(); }
  bool contains(const Subspace& other) const { return contains(other.basis_); }

  // Coordinates of each column of `vectors` in the canonical basis.
  Matrix coordinates(const Matrix& vectors) const {
    if (!contains(vectors))
      throw Error(ErrorKind::InvarianceViolation, "vector not in subspace");
    Matrix c(dim(), vectors.cols());
    for (std::size_t j = 0; j < dim(); ++j)
      for (std::size_t k = 0; k < vectors.cols(); ++k) c(j, k) = vectors(pivots_[j], k);
    return c;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  void require_vectors(const Matrix& v) const {
    if (v.rows() != ambient_)
      throw Error(ErrorKind::DimensionMismatch,
                  "vectors of length " + std::to_string(v.rows()) + " in ambient dimension " +
                      std::to_string(ambient_));
  }

  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

inline Subspace kernel_basis(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Matrix k(m.cols(), free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    k(free_cols[f], f) = 1;
    for (std::size_t i = 0; i < r.rank; ++i) k(r.pivots[i], f) = -r.echelon(i, free_cols[f]);
  }
  return Subspace::span(k);
}

inline Subspace image_basis(const Matrix& m) { return Subspace::span(m); }

inline Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorKind::DimensionMismatch, "intersect: ambient " +
                                                  std::to_string(a.ambient_dim()) + " vs " +
                                                  std::to_string(b.ambient_dim()));
  // x in ker[A | -B]  <=>  A x_top = B x_bottom.
  Subspace k = kernel_basis(hstack(a.basis(), -b.basis()));
  return Subspace::span(a.basis() * rows_range(k.basis(), 0, a.dim()));
}

inline Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorKind::DimensionMismatch, "sum of subspaces in different ambients");
  return Subspace::span(hstack(a.basis(), b.basis()));
}

struct QuotientSpace {
  std::size_t ambient_dim = 0;
  Subspace subspace;
  Matrix projection;  // ambient -> quotient
  Matrix section;     // quotient -> ambient

  std::size_t dim() const noexcept { return projection.rows(); }
};

// The section sends quotient basis vector i to the standard basis vector at
// the i-th non-pivot coordinate of the subspace.
inline QuotientSpace quotient(std::size_t ambient_dim, const Subspace& s) {
  if (s.ambient_dim() != ambient_dim)
    throw Error(ErrorKind::DimensionMismatch, "quotient: subspace lives in a different ambient");
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto p : s.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> complement;
  for (std::size_t i = 0; i < ambient_dim; ++i)
    if (!is_pivot[i]) complement.push_back(i);

  QuotientSpace q;
  q.ambient_dim = ambient_dim;
  q.subspace = s;
  Matrix reduced = s.residual(Matrix::identity(ambient_dim));
  q.projection = Matrix(complement.size(), ambient_dim);
  q.section = Matrix(ambient_dim, complement.size());
  for (std::size_t i = 0; i < complement.size(); ++i) {
    for (std::size_t j = 0; j < ambient_dim; ++j) q.projection(i, j) = reduced(complement[i], j);
    q.section(complement[i], i) = 1;
  }
  return q;
}

inline Rational trace(const Matrix& f) {
  if (!f.is_square()) throw Error(ErrorKind::NonSquare, "trace of " + f.shape());
  Rational t = 0;
  for (std::size_t i = 0; i < f.rows(); ++i) t += f(i, i);
  return t;
}

namespace detail {

inline void require_endomorphism(const Matrix& f, std::size_t n, const char* what) {
  if (!f.is_square() || f.rows() != n)
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + ": map " + f.shape() + " on a space of dimension " +
                    std::to_string(n));
}

}  // namespace detail

// Matrix of f|_s in the canonical basis of s.
inline Matrix restrict(const Matrix& f, const Subspace& s) {
  detail::require_endomorphism(f, s.ambient_dim(), "restrict");
  Matrix image = f * s.basis();
  if (!s.contains(image))
    throw Error(ErrorKind::InvarianceViolation, "map does not preserve the subspace");
  return s.coordinates(image);
}

inline Matrix induced_on_quotient(const Matrix& f, const QuotientSpace& q) {
  detail::require_endomorphism(f, q.ambient_dim, "induced_on_quotient");
  if (!q.subspace.contains(f * q.subspace.basis()))
    throw Error(ErrorKind::InvarianceViolation, "map does not preserve the quotiented subspace");
  return q.projection * f * q.section;
}

// One solution X of A X = B with all free unknowns set to zero, if any exists.
inline std::optional<Matrix> solve_particular(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows())
    throw Error(ErrorKind::DimensionMismatch, "solve: " + a.shape() + " vs rhs " + b.shape());
  RrefResult r = rref(hstack(a, b));
  for (auto p : r.pivots)
    if (p >= a.cols()) return std::nullopt;
  Matrix x(a.cols(), b.cols());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t k = 0; k < b.cols(); ++k) x(r.pivots[i], k) = r.echelon(i, a.cols() + k);
  return x;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NonSquare, "inverse of " + m.shape());
  std::size_t n = m.rows();
  RrefResult r = rref(hstack(m, Matrix::identity(n)));
  if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.echelon(i, n + j);
  return inv;
}

}  // namespace hfsplit
