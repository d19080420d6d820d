#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "qsem/error.hpp"
#include "qsem/linalg.hpp"

namespace qsem {

/// Hermitian idempotent matrix standing for a yes/no proposition. Validated
/// on construction; the label is for display only and is ignored by ==.
class Projector {
 public:
  /// Throws NotAProjectorError unless m is square, Hermitian and idempotent.
  Projector(ExactMatrix m, std::string label) : matrix_(std::move(m)), label_(std::move(label)) {
    if (!matrix_.is_square())
      throw NotAProjectorError("projector '" + label_ + "' is not square");
    if (matrix_.adjoint() != matrix_)
      throw NotAProjectorError("projector '" + label_ + "' is not Hermitian");
    if (matrix_ * matrix_ != matrix_)
      throw NotAProjectorError("projector '" + label_ + "' is not idempotent");
  }

  static Projector identity(std::size_t dim) {
    return Projector(ExactMatrix::identity(dim), "1");
  }
  static Projector zero(std::size_t dim) {
    return Projector(ExactMatrix::zero(dim, dim), "0");
  }

  const ExactMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return matrix_.rows(); }
  const std::string& label() const { return label_; }

  /// Rank, read off the trace (an integer for projectors).
  std::size_t rank() const {
    Scalar t = matrix_.trace();
    return static_cast<std::size_t>(t.re().get_num().get_ui());
  }

  Projector relabeled(std::string label) const {
    Projector p = *this;
    p.label_ = std::move(label);
    return p;
  }

  friend bool operator==(const Projector& a, const Projector& b) {
    return a.matrix_ == b.matrix_;
  }

 private:
  ExactMatrix matrix_;
  std::string label_;
};

enum class SubspaceRelation { Equal, ProperSubset, ProperSuperset, Incomparable };

inline std::string_view to_string(SubspaceRelation r) {
  switch (r) {
    case SubspaceRelation::Equal: return "Equal";
    case SubspaceRelation::ProperSubset: return "ProperSubset";
    case SubspaceRelation::ProperSuperset: return "ProperSuperset";
    case SubspaceRelation::Incomparable: return "Incomparable";
  }
  return "?";
}

/// |v><v| / <v|v>; independent of the scale of v.
inline Projector from_ket(const ExactVector& v, std::string label) {
  if (v.is_zero()) throw ZeroVectorError("projector onto the zero vector");
  Scalar norm = inner_product(v, v);
  return Projector(outer_product(v, v).scaled(Scalar(1) / norm), std::move(label));
}

/// 1 - p.
inline Projector negate(const Projector& p) {
  return Projector(ExactMatrix::identity(p.dim()) - p.matrix(), "not " + p.label());
}

inline Projector tensor(const Projector& p, const Projector& q) {
  return Projector(kronecker(p.matrix(), q.matrix()), p.label() + " (x) " + q.label());
}

/// Product of two commuting projectors (their lattice meet). Non-commuting
/// pairs have no projector product and are rejected.
inline Projector meet(const Projector& p, const Projector& q) {
  if (p.dim() != q.dim()) throw DimensionError("meet of projectors of different dimension");
  ExactMatrix pq = p.matrix() * q.matrix();
  if (pq != q.matrix() * p.matrix())
    throw NonCommutingError("projectors '" + p.label() + "' and '" + q.label() +
                            "' do not commute; their product is not a projector");
  return Projector(std::move(pq), p.label() + " and " + q.label());
}

/// Column space of p.
inline SubspaceBasis range_basis(const Projector& p) {
  return SubspaceBasis::column_space(p.matrix());
}

/// Null space of p, computed as the column space of 1 - p.
inline SubspaceBasis kernel_basis(const Projector& p) { return range_basis(negate(p)); }

inline bool contains(const SubspaceBasis& outer, const SubspaceBasis& inner) {
  for (const auto& v : inner.basis())
    if (!solve_membership(outer, v)) return false;
  return true;
}

inline SubspaceRelation compare(const SubspaceBasis& s, const SubspaceBasis& t) {
  if (s.ambient_dim() != t.ambient_dim())
    throw DimensionError("comparing subspaces of C^" + std::to_string(s.ambient_dim()) +
                         " and C^" + std::to_string(t.ambient_dim()));
  bool s_in_t = contains(t, s);
  bool t_in_s = contains(s, t);
  if (s_in_t && t_in_s) return SubspaceRelation::Equal;
  if (s_in_t) return SubspaceRelation::ProperSubset;
  if (t_in_s) return SubspaceRelation::ProperSuperset;
  return SubspaceRelation::Incomparable;
}

}  // namespace qsem
