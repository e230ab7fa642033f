#ifndef HK_SCALAR_HPP
#define HK_SCALAR_HPP

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <utility>

#include "hk/errors.hpp"

namespace hk {

using Rational = mpq_class;

/// Exact rational n/d in lowest terms.
inline Rational rational(long num, long den = 1) {
  if (den == 0) throw Error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Gaussian rational re + i*im. GMP keeps both parts canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar imaginary_unit() { return Scalar(Rational(0), Rational(1)); }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }
  bool is_one() const noexcept { return is_real() && re_ == 1; }

  Scalar conj() const { return Scalar(re_, -im_); }

  /// |a|^2 = re^2 + im^2.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    if (!o.is_real()) im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    if (!o.is_real()) im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    if (o.is_real()) {
      re_ *= o.re_;
      if (!is_real()) im_ *= o.re_;
      return *this;
    }
    if (is_real()) {
      im_ = re_ * o.im_;
      re_ *= o.re_;
      return *this;
    }
    // scratch keeps its limbs between calls; this is the hot path of polynomial products
    thread_local Rational a, b, c;
    mpq_mul(a.get_mpq_t(), re_.get_mpq_t(), o.re_.get_mpq_t());
    mpq_mul(b.get_mpq_t(), im_.get_mpq_t(), o.im_.get_mpq_t());
    mpq_mul(c.get_mpq_t(), re_.get_mpq_t(), o.im_.get_mpq_t());
    mpq_mul(im_.get_mpq_t(), im_.get_mpq_t(), o.re_.get_mpq_t());
    mpq_add(im_.get_mpq_t(), im_.get_mpq_t(), c.get_mpq_t());
    mpq_sub(re_.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw Error("division by zero scalar");
    if (o.is_real()) {
      re_ /= o.re_;
      if (!is_real()) im_ /= o.re_;
      return *this;
    }
    Rational n = o.norm();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a) { return Scalar(-a.re_, -a.im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// "3", "-1/2", or "(re,im)" when the imaginary part is nonzero.
  std::string to_string() const {
    if (is_real()) return re_.get_str();
    return "(" + re_.get_str() + "," + im_.get_str() + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

 private:
  Rational re_{0};
  Rational im_{0};
};

}  // namespace hk

#endif  // HK_SCALAR_HPP
