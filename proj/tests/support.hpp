#pragma once

// Random generators and independent oracles shared by the test binaries.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "qsem/linalg.hpp"
#include "qsem/projector.hpp"
#include "qsem/semantics.hpp"

namespace qsem::testing {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int max_num = 4, int max_den = 4) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return make_rational(num(rng), den(rng));
}

/// Small Gaussian rational; purely real about half the time.
inline Scalar random_scalar(Rng& rng) {
  std::bernoulli_distribution complex_part(0.5);
  Rational re = random_rational(rng);
  Rational im = complex_part(rng) ? random_rational(rng) : Rational(0);
  return Scalar(re, im);
}

inline Scalar random_nonzero_scalar(Rng& rng) {
  for (;;) {
    Scalar s = random_scalar(rng);
    if (!s.is_zero()) return s;
  }
}

inline ExactVector random_vector(Rng& rng, std::size_t dim) {
  std::vector<Scalar> e(dim);
  for (auto& x : e) x = random_scalar(rng);
  return ExactVector(std::move(e));
}

inline ExactVector random_nonzero_vector(Rng& rng, std::size_t dim) {
  for (;;) {
    ExactVector v = random_vector(rng, dim);
    if (!v.is_zero()) return v;
  }
}

inline ExactMatrix random_integer_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> entry(-3, 3);
  std::bernoulli_distribution zero(0.3);
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = zero(rng) ? Scalar(0) : Scalar(entry(rng));
  return m;
}

/// Unnormalized orthogonal basis of C^dim. Starts from the standard basis and
/// applies dim random unitary plane rotations [[x, -conj y], [y, conj x]]
/// with |x|^2 + |y|^2 = 1 taken from a rational point of the 3-sphere
/// (inverse stereographic projection), so orthogonality is exact and entries
/// stay small. Vectors are then rescaled and shuffled.
inline std::vector<ExactVector> random_orthogonal_basis(Rng& rng, std::size_t dim) {
  std::vector<ExactVector> out;
  for (std::size_t k = 0; k < dim; ++k) out.push_back(ExactVector::unit(dim, k));
  if (dim < 2) return out;
  std::uniform_int_distribution<std::size_t> axis(0, dim - 1);
  for (std::size_t n = 0; n < dim; ++n) {
    std::size_t j = axis(rng), k = axis(rng);
    if (j == k) continue;
    Rational p = random_rational(rng, 2, 2), q = random_rational(rng, 2, 2),
             r = random_rational(rng, 2, 2);
    Rational s = p * p + q * q + r * r, t = 1 + s;
    Scalar x(Rational((1 - s) / t), Rational(2 * p / t));
    Scalar y(Rational(2 * q / t), Rational(2 * r / t));
    for (auto& v : out) {
      std::vector<Scalar> e(v.entries().begin(), v.entries().end());
      Scalar a = e[j], b = e[k];
      e[j] = x * a - y.conj() * b;
      e[k] = y * a + x.conj() * b;
      v = ExactVector(std::move(e));
    }
  }
  for (auto& v : out) v = v.scaled(random_nonzero_scalar(rng));
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

/// Sum of rank-one projectors onto `rank` vectors of a random orthogonal basis.
inline Projector random_projector(Rng& rng, std::size_t dim, std::size_t rank) {
  auto basis = random_orthogonal_basis(rng, dim);
  ExactMatrix m = ExactMatrix::zero(dim, dim);
  for (std::size_t k = 0; k < rank; ++k) m = m + from_ket(basis[k], "").matrix();
  return Projector(m, "P");
}

inline Projector random_projector(Rng& rng, std::size_t dim) {
  std::uniform_int_distribution<std::size_t> rank(0, dim);
  return random_projector(rng, dim, rank(rng));
}

/// Random element of the span of the given vectors (possibly zero).
inline ExactVector random_combination(Rng& rng, std::size_t dim,
                                      const std::vector<ExactVector>& vs) {
  ExactVector out = ExactVector::zero(dim);
  for (const auto& v : vs) out = out + v.scaled(random_scalar(rng));
  return out;
}

// ---------------------------------------------------------------------------
// Oracles. Written independently of the library's elimination routines.

/// Rank by elimination with bottom-up pivot search over columns.
inline std::size_t oracle_rank(std::vector<std::vector<Scalar>> a) {
  if (a.empty()) return 0;
  std::size_t rows = a.size(), cols = a[0].size(), rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rows;
    for (std::size_t r = rows; r-- > rank;)
      if (!a[r][c].is_zero()) {
        p = r;
        break;
      }
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c].is_zero()) continue;
      Scalar f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline std::vector<std::vector<Scalar>> rows_of(const std::vector<ExactVector>& vs) {
  std::vector<std::vector<Scalar>> out;
  for (const auto& v : vs) out.emplace_back(v.entries().begin(), v.entries().end());
  return out;
}

/// v is in span(vs) iff appending it does not raise the rank.
inline bool oracle_in_span(const std::vector<ExactVector>& vs, const ExactVector& v) {
  auto rows = rows_of(vs);
  std::size_t before = oracle_rank(rows);
  rows.emplace_back(v.entries().begin(), v.entries().end());
  return oracle_rank(rows) == before;
}

using cd = std::complex<double>;
using FloatVec = std::vector<cd>;
using FloatMat = std::vector<FloatVec>;

inline FloatVec fkron(const FloatVec& a, const FloatVec& b) {
  FloatVec out;
  for (auto x : a)
    for (auto y : b) out.push_back(x * y);
  return out;
}

inline FloatMat fouter(const FloatVec& u) {
  FloatMat m(u.size(), FloatVec(u.size()));
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) m[i][j] = u[i] * std::conj(u[j]);
  return m;
}

inline cd finner(const FloatVec& u, const FloatVec& v) {
  cd s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

inline FloatVec fapply(const FloatMat& m, const FloatVec& v) {
  FloatVec out(v.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

/// Floating-point weak value with normalized states.
inline cd float_weak_value(const FloatMat& p, const FloatVec& pre, const FloatVec& post) {
  return finner(post, fapply(p, pre)) / finner(post, pre);
}

}  // namespace qsem::testing
