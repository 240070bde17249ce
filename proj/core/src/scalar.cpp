#include "ternalg/scalar.hpp"

namespace ternalg {

std::string to_string(Mode m) { return m == Mode::Real ? "real" : "complex"; }

Scalar Scalar::of(long long p, long long q) {
  if (q == 0) throw DivisionByZero("rational with zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  return Scalar(Rational(Int(p), Int(q)));
}

Scalar Scalar::inverse() const {
  Rational n = re_ * re_ + im_ * im_;
  if (n == 0) throw DivisionByZero("inverse of zero scalar");
  return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

namespace {

std::string rat_str(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

}  // namespace

std::string to_string(const Scalar& s) {
  if (s.is_real()) return rat_str(s.re());
  std::string im = rat_str(s.im() < 0 ? Rational(-s.im()) : s.im()) + " i";
  if (s.re() == 0) return (s.im() < 0 ? "-" : "") + im;
  return rat_str(s.re()) + (s.im() < 0 ? "-" : "+") + im;
}

}  // namespace ternalg
