#pragma once

// Valuations of projection operators in a state: bivalent, supervaluationist
// (gappy), many-valued (Born degree) and weak-valued (pre/post-selected).
//
// States are unnormalized. Every valuation here is a ratio in which the norm
// cancels, so results are invariant under rescaling the state vectors.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <type_traits>
#include <variant>

#include "qsem/error.hpp"
#include "qsem/linalg.hpp"
#include "qsem/projector.hpp"

namespace qsem {

class State {
 public:
  State(ExactVector v, std::string label) : vector_(std::move(v)), label_(std::move(label)) {
    if (vector_.is_zero()) throw ZeroVectorError("state '" + label_ + "' is the zero vector");
  }

  const ExactVector& vector() const { return vector_; }
  std::size_t dim() const { return vector_.dim(); }
  const std::string& label() const { return label_; }

 private:
  ExactVector vector_;
  std::string label_;
};

enum class TruthKind { ClassicalTrue, ClassicalFalse, Gap, Degree, Weak };

inline std::string_view to_string(TruthKind k) {
  switch (k) {
    case TruthKind::ClassicalTrue: return "ClassicalTrue";
    case TruthKind::ClassicalFalse: return "ClassicalFalse";
    case TruthKind::Gap: return "Gap";
    case TruthKind::Degree: return "Degree";
    case TruthKind::Weak: return "Weak";
  }
  return "?";
}

/// Outcome of a valuation. Degree payloads lie strictly inside (0,1); Weak
/// payloads are unrestricted Gaussian rationals.
class TruthValue {
 public:
  TruthValue() : TruthValue(TruthKind::Gap, {}) {}

  static TruthValue classical_true() { return TruthValue(TruthKind::ClassicalTrue, {}); }
  static TruthValue classical_false() { return TruthValue(TruthKind::ClassicalFalse, {}); }
  static TruthValue gap() { return TruthValue(TruthKind::Gap, {}); }
  static TruthValue degree(Rational d) {
    if (d <= 0 || d >= 1)
      throw Error("degree " + d.get_str() + " is not strictly between 0 and 1");
    return TruthValue(TruthKind::Degree, Scalar(std::move(d)));
  }
  static TruthValue weak(Scalar w) { return TruthValue(TruthKind::Weak, std::move(w)); }

  TruthKind kind() const { return kind_; }

  /// Numeric payload: 1 / 0 for classical values, the degree or weak value
  /// otherwise. Empty for Gap.
  std::optional<Scalar> value() const {
    switch (kind_) {
      case TruthKind::ClassicalTrue: return Scalar(1);
      case TruthKind::ClassicalFalse: return Scalar(0);
      case TruthKind::Gap: return std::nullopt;
      default: return payload_;
    }
  }

  std::string str() const {
    switch (kind_) {
      case TruthKind::Degree:
      case TruthKind::Weak:
        return std::string(to_string(kind_)) + "(" + payload_.str() + ")";
      default:
        return std::string(to_string(kind_));
    }
  }

  friend bool operator==(const TruthValue&, const TruthValue&) = default;

 private:
  TruthValue(TruthKind k, Scalar p) : kind_(k), payload_(std::move(p)) {}

  TruthKind kind_;
  Scalar payload_;
};

struct Bivalent {};
struct Supervaluationist {};
struct ManyValued {};
struct WeakValued {
  State post;
};
using SemanticsKind = std::variant<Bivalent, Supervaluationist, ManyValued, WeakValued>;

inline std::string_view semantics_name(const SemanticsKind& k) {
  constexpr std::string_view names[] = {"bivalent", "supervaluationist", "many_valued", "weak"};
  return names[k.index()];
}

namespace detail {
inline void check_dims(const Projector& p, const State& s) {
  if (p.dim() != s.dim())
    throw DimensionError("projector '" + p.label() + "' acts on C^" + std::to_string(p.dim()) +
                         " but state '" + s.label() + "' lies in C^" + std::to_string(s.dim()));
}
}  // namespace detail

/// psi in ran(p), i.e. p psi = psi.
inline bool in_range(const Projector& p, const State& psi) {
  detail::check_dims(p, psi);
  return p.matrix() * psi.vector() == psi.vector();
}

/// psi in ker(p) = ran(1 - p), i.e. p psi = 0.
inline bool in_kernel(const Projector& p, const State& psi) {
  detail::check_dims(p, psi);
  return (p.matrix() * psi.vector()).is_zero();
}

/// True in ran(p), false in ran(1 - p), a gap everywhere else.
inline TruthValue supervaluate(const Projector& p, const State& psi) {
  if (in_range(p, psi)) return TruthValue::classical_true();
  if (in_kernel(p, psi)) return TruthValue::classical_false();
  return TruthValue::gap();
}

/// Strict two-valued semantics: like supervaluate, but a state outside both
/// ran(p) and ker(p) admits no bivaluation and raises BivalenceError.
inline TruthValue bivalent(const Projector& p, const State& psi) {
  TruthValue v = supervaluate(p, psi);
  if (v.kind() == TruthKind::Gap)
    throw BivalenceError("no bivaluation of '" + p.label() + "' in state '" + psi.label() +
                         "': the state lies in neither its range nor its kernel");
  return v;
}

/// <psi|p|psi> / <psi|psi>, in [0,1].
inline Rational born_degree(const Projector& p, const State& psi) {
  detail::check_dims(p, psi);
  Scalar num = inner_product(psi.vector(), p.matrix() * psi.vector());
  Scalar den = inner_product(psi.vector(), psi.vector());
  Scalar d = num / den;
  if (!d.is_real()) throw Error("Born degree with nonzero imaginary part");
  return d.re();
}

/// Born degree with the endpoints collapsed to classical values.
inline TruthValue many_valued(const Projector& p, const State& psi) {
  Rational d = born_degree(p, psi);
  if (d == 1) return TruthValue::classical_true();
  if (d == 0) return TruthValue::classical_false();
  return TruthValue::degree(std::move(d));
}

/// <post|p|pre> / <post|pre>.
inline Scalar weak_value(const Projector& p, const State& pre, const State& post) {
  detail::check_dims(p, pre);
  detail::check_dims(p, post);
  Scalar den = inner_product(post.vector(), pre.vector());
  if (den.is_zero())
    throw UndefinedWeakValueError("undefined weak value: pre-selected state '" + pre.label() +
                                  "' is orthogonal to post-selected state '" + post.label() +
                                  "'");
  return inner_product(post.vector(), p.matrix() * pre.vector()) / den;
}

/// Bivaluations when pre is an eigenvector of p, the weak value otherwise.
inline TruthValue weak_valued(const Projector& p, const State& pre, const State& post) {
  Scalar w = weak_value(p, pre, post);
  if (in_range(p, pre)) return TruthValue::classical_true();
  if (in_kernel(p, pre)) return TruthValue::classical_false();
  return TruthValue::weak(std::move(w));
}

/// Checks that "true" coincides with probability 1 and "false" with
/// probability 0 for this pair.
inline bool probability_bridge_check(const Projector& p, const State& psi) {
  TruthKind k = supervaluate(p, psi).kind();
  Rational d = born_degree(p, psi);
  bool true_iff = (k == TruthKind::ClassicalTrue) == (d == 1);
  bool false_iff = (k == TruthKind::ClassicalFalse) == (d == 0);
  return true_iff && false_iff;
}

inline TruthValue evaluate(const SemanticsKind& kind, const Projector& p, const State& psi) {
  return std::visit(
      [&](const auto& k) -> TruthValue {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Bivalent>) return bivalent(p, psi);
        else if constexpr (std::is_same_v<K, Supervaluationist>) return supervaluate(p, psi);
        else if constexpr (std::is_same_v<K, ManyValued>) return many_valued(p, psi);
        else return weak_valued(p, psi, k.post);
      },
      kind);
}

}  // namespace qsem
