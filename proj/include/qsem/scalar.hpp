#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <utility>

#include "qsem/error.hpp"

namespace qsem {

/// Arbitrary-precision rational. GMP keeps results of arithmetic in
/// canonical form (reduced, positive denominator).
using Rational = mpq_class;

/// Builds a canonical rational from a numerator/denominator pair.
inline Rational make_rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Exact Gaussian rational re + im*i.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }

  /// |z|^2, always a non-negative rational.
  Rational norm2() const { return Rational(re_ * re_ + im_ * im_); }

  Scalar operator-() const { return Scalar(-re_, -im_); }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw Error("division by zero scalar");
    Rational n = o.norm2();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// "p/q", "p/q+r/si" or "p/q-r/si"; parseable by the script reader.
  std::string str() const {
    if (is_real()) return re_.get_str();
    Rational mag = abs(im_);
    return re_.get_str() + (sgn(im_) < 0 ? "-" : "+") + mag.get_str() + "i";
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.str();
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

}  // namespace qsem
