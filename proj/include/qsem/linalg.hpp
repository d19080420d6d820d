#pragma once

// Dense exact linear algebra over the Gaussian rationals.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qsem/error.hpp"
#include "qsem/scalar.hpp"

namespace qsem {

/// Largest accepted dimension; elimination is cubic in it.
inline constexpr std::size_t kMaxDim = 4096;

namespace detail {
inline void check_dim(std::size_t n, const char* what) {
  if (n == 0) throw DimensionError(std::string(what) + " must be nonzero");
  if (n > kMaxDim)
    throw DimensionError(std::string(what) + " " + std::to_string(n) +
                         " exceeds the limit of " + std::to_string(kMaxDim));
}
}  // namespace detail

class ExactVector {
 public:
  explicit ExactVector(std::vector<Scalar> entries)
      : entries_(std::move(entries)) {
    detail::check_dim(entries_.size(), "vector dimension");
  }
  ExactVector(std::initializer_list<Scalar> entries)
      : ExactVector(std::vector<Scalar>(entries)) {}

  static ExactVector zero(std::size_t dim) {
    return ExactVector(std::vector<Scalar>(dim));
  }
  static ExactVector unit(std::size_t dim, std::size_t k) {
    std::vector<Scalar> e(dim);
    e.at(k) = Scalar(1);
    return ExactVector(std::move(e));
  }

  std::size_t dim() const { return entries_.size(); }
  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Scalar> entries() const { return entries_; }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  ExactVector scaled(const Scalar& s) const {
    std::vector<Scalar> out(entries_);
    for (auto& e : out) e *= s;
    return ExactVector(std::move(out));
  }

  friend ExactVector operator+(const ExactVector& a, const ExactVector& b) {
    if (a.dim() != b.dim()) throw DimensionError("vector sum dimension mismatch");
    std::vector<Scalar> out(a.entries_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return ExactVector(std::move(out));
  }
  friend ExactVector operator-(const ExactVector& a, const ExactVector& b) {
    return a + b.scaled(Scalar(-1));
  }

  friend bool operator==(const ExactVector&, const ExactVector&) = default;

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) s += ", ";
      s += entries_[i].str();
    }
    return s + ")";
  }

 private:
  std::vector<Scalar> entries_;
};

/// Row-major dense matrix.
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols) {
    detail::check_dim(rows, "row count");
    detail::check_dim(cols, "column count");
    entries_.resize(rows * cols);
  }
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    detail::check_dim(rows, "row count");
    detail::check_dim(cols, "column count");
    if (entries_.size() != rows * cols)
      throw DimensionError("matrix entry count does not match its shape");
  }
  ExactMatrix(std::initializer_list<std::initializer_list<Scalar>> rows)
      : ExactMatrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
    std::size_t r = 0;
    for (const auto& row : rows) {
      if (row.size() != cols_) throw DimensionError("ragged matrix literal");
      std::size_t c = 0;
      for (const auto& e : row) (*this)(r, c++) = e;
      ++r;
    }
  }

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
  }
  static ExactMatrix zero(std::size_t rows, std::size_t cols) {
    return ExactMatrix(rows, cols);
  }
  static ExactMatrix column(const ExactVector& v) {
    return ExactMatrix(v.dim(), 1,
                       std::vector<Scalar>(v.entries().begin(), v.entries().end()));
  }
  /// Matrix whose rows are the given vectors.
  static ExactMatrix from_rows(std::span<const ExactVector> vs) {
    if (vs.empty()) throw DimensionError("no rows given");
    ExactMatrix m(vs.size(), vs.front().dim());
    for (std::size_t r = 0; r < vs.size(); ++r) {
      if (vs[r].dim() != m.cols_) throw DimensionError("rows of unequal length");
      for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = vs[r][c];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  ExactVector row(std::size_t r) const {
    return ExactVector(std::vector<Scalar>(entries_.begin() + r * cols_,
                                           entries_.begin() + (r + 1) * cols_));
  }
  ExactVector col(std::size_t c) const {
    std::vector<Scalar> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return ExactVector(std::move(out));
  }

  ExactMatrix adjoint() const {
    ExactMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c).conj();
    return out;
  }
  ExactMatrix transpose() const {
    ExactMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  ExactMatrix scaled(const Scalar& s) const {
    ExactMatrix out(*this);
    for (auto& e : out.entries_) e *= s;
    return out;
  }

  Scalar trace() const {
    if (!is_square()) throw DimensionError("trace of a non-square matrix");
    Scalar t;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw DimensionError("matrix sum shape mismatch");
    ExactMatrix out(a);
    for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
    return out;
  }
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    return a + b.scaled(Scalar(-1));
  }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    ExactMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& lhs = a(r, k);
        if (lhs.is_zero()) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += lhs * b(k, c);
      }
    return out;
  }
  friend ExactVector operator*(const ExactMatrix& a, const ExactVector& v) {
    if (a.cols_ != v.dim()) throw DimensionError("matrix-vector shape mismatch");
    std::vector<Scalar> out(a.rows_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t c = 0; c < a.cols_; ++c) out[r] += a(r, c) * v[c];
    return ExactVector(std::move(out));
  }

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

  std::string str() const {
    std::string s = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r) s += "; ";
      for (std::size_t c = 0; c < cols_; ++c) {
        if (c) s += ", ";
        s += (*this)(r, c).str();
      }
    }
    return s + "]";
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

/// Sum of conj(u_i) * v_i.
inline Scalar inner_product(const ExactVector& u, const ExactVector& v) {
  if (u.dim() != v.dim())
    throw DimensionError("inner product of vectors of dimension " +
                         std::to_string(u.dim()) + " and " + std::to_string(v.dim()));
  Scalar s;
  for (std::size_t i = 0; i < u.dim(); ++i) s += u[i].conj() * v[i];
  return s;
}

/// |u><v|, entry (i,j) = u_i * conj(v_j).
inline ExactMatrix outer_product(const ExactVector& u, const ExactVector& v) {
  ExactMatrix m(u.dim(), v.dim());
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) m(i, j) = u[i] * v[j].conj();
  return m;
}

inline ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() * b.rows() > kMaxDim || a.cols() * b.cols() > kMaxDim)
    throw DimensionError("Kronecker product exceeds the dimension limit");
  ExactMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Scalar& x = a(ar, ac);
      if (x.is_zero()) continue;
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = x * b(br, bc);
    }
  return out;
}

inline ExactVector kronecker(const ExactVector& u, const ExactVector& v) {
  return kronecker(ExactMatrix::column(u), ExactMatrix::column(v)).col(0);
}

struct RrefResult {
  ExactMatrix reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination to the unique reduced row-echelon form.
inline RrefResult rref(ExactMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t p = lead;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != lead)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead, k));
    Scalar inv = Scalar(1) / m(lead, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, c).is_zero()) continue;
      Scalar f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(lead, k);
    }
    pivots.push_back(c);
    ++lead;
  }
  return {std::move(m), std::move(pivots)};
}

/// Subspace of C^n held as the RREF of a spanning set. Two bases span the
/// same subspace iff they compare equal.
class SubspaceBasis {
 public:
  /// Span of the given vectors (any number, possibly dependent or zero).
  static SubspaceBasis span(std::size_t ambient_dim, std::span<const ExactVector> vs) {
    detail::check_dim(ambient_dim, "ambient dimension");
    SubspaceBasis b(ambient_dim);
    if (vs.empty()) return b;
    for (const auto& v : vs)
      if (v.dim() != ambient_dim) throw DimensionError("spanning vector has wrong dimension");
    RrefResult red = rref(ExactMatrix::from_rows(vs));
    for (std::size_t r = 0; r < red.rank(); ++r) b.basis_.push_back(red.reduced.row(r));
    b.pivots_ = std::move(red.pivots);
    return b;
  }

  /// Column space of m.
  static SubspaceBasis column_space(const ExactMatrix& m) {
    std::vector<ExactVector> cols;
    cols.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.col(c));
    return span(m.rows(), cols);
  }

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<ExactVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;

  std::string str() const {
    std::string s = "span{";
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (i) s += ", ";
      s += basis_[i].str();
    }
    return s + "}";
  }

 private:
  explicit SubspaceBasis(std::size_t n) : ambient_dim_(n) {}

  std::size_t ambient_dim_;
  std::vector<ExactVector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Basis of {x : m x = 0}, one vector per free column of rref(m).
inline std::vector<ExactVector> null_space(const ExactMatrix& m) {
  RrefResult red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<ExactVector> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> x(m.cols());
    x[free] = Scalar(1);
    for (std::size_t r = 0; r < red.rank(); ++r) x[red.pivots[r]] = -red.reduced(r, free);
    out.emplace_back(std::move(x));
  }
  return out;
}

namespace detail {
// v minus its projection along the RREF rows; zero iff v is in the span.
inline ExactVector residual(const SubspaceBasis& basis, const ExactVector& v) {
  std::vector<Scalar> r(v.entries().begin(), v.entries().end());
  for (std::size_t k = 0; k < basis.rank(); ++k) {
    Scalar coeff = r[basis.pivots()[k]];
    if (coeff.is_zero()) continue;
    const ExactVector& row = basis.basis()[k];
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= coeff * row[i];
  }
  return ExactVector(std::move(r));
}
}  // namespace detail

/// True iff v is an exact linear combination of the basis vectors.
inline bool solve_membership(const SubspaceBasis& basis, const ExactVector& v) {
  if (v.dim() != basis.ambient_dim())
    throw DimensionError("vector of dimension " + std::to_string(v.dim()) +
                         " tested against a subspace of C^" +
                         std::to_string(basis.ambient_dim()));
  if (v.is_zero()) throw ZeroVectorError("membership of the zero vector");
  return detail::residual(basis, v).is_zero();
}

}  // namespace qsem
