#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "ternalg/errors.hpp"

namespace ternalg {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Mode { Real, Complex };

std::string to_string(Mode m);

/// Exact Gaussian rational re + im*i.  Real-mode data simply keeps im = 0;
/// there is no floating-point representation anywhere.  cpp_rational stays
/// gcd-reduced with positive denominator after every operation.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int n) : re_(n) {}  // NOLINT: implicit by design
  Scalar(long long n) : re_(n) {}
  explicit Scalar(Rational re) : re_(std::move(re)) {}
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar of(long long p, long long q);
  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar conj() const { return Scalar(re_, -im_); }
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  Rational re_;
  Rational im_;
};

/// Canonical text form: "p", "p/q", "p/q+r/s i", "r/s i", "p/q-r/s i".
std::string to_string(const Scalar& s);

}  // namespace ternalg
