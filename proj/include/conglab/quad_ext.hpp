#pragma once

// Elements u + v*sqrt(a) of the real quadratic extension Q(sqrt(a)),
// with exact rational parts. Values with v = 0 are radicand-agnostic and
// combine with any extension; mixing two genuinely irrational values over
// different radicands is an error.

#include <cmath>
#include <stdexcept>
#include <string>

#include "conglab/numeric.hpp"

namespace conglab {

class QuadExtScalar {
 public:
  QuadExtScalar() : u_(0), v_(0), a_(0) {}
  QuadExtScalar(Rational rational) : u_(std::move(rational)), v_(0), a_(0) {}  // NOLINT(google-explicit-constructor)
  QuadExtScalar(int n) : u_(n), v_(0), a_(0) {}                                // NOLINT(google-explicit-constructor)

  QuadExtScalar(Rational u, Rational v, Rational radicand)
      : u_(std::move(u)), v_(std::move(v)), a_(std::move(radicand)) {
    if (v_ != 0 && a_ <= 0)
      throw std::invalid_argument("QuadExtScalar: radicand must be positive");
    if (v_ == 0) a_ = 0;
  }

  const Rational& rational_part() const { return u_; }
  const Rational& surd_part() const { return v_; }
  const Rational& radicand() const { return a_; }
  bool is_rational() const { return v_ == 0; }

  QuadExtScalar conjugate() const { return QuadExtScalar(u_, -v_, a_); }

  /// u^2 - a v^2, the product with the conjugate; always rational.
  Rational field_norm() const { return u_ * u_ - a_ * v_ * v_; }

  double to_double() const;

  friend QuadExtScalar operator+(const QuadExtScalar& x, const QuadExtScalar& y) {
    Rational a = merged_radicand(x, y);
    return QuadExtScalar(x.u_ + y.u_, x.v_ + y.v_, a);
  }
  friend QuadExtScalar operator-(const QuadExtScalar& x, const QuadExtScalar& y) {
    Rational a = merged_radicand(x, y);
    return QuadExtScalar(x.u_ - y.u_, x.v_ - y.v_, a);
  }
  friend QuadExtScalar operator*(const QuadExtScalar& x, const QuadExtScalar& y) {
    Rational a = merged_radicand(x, y);
    return QuadExtScalar(x.u_ * y.u_ + a * x.v_ * y.v_, x.u_ * y.v_ + y.u_ * x.v_, a);
  }
  QuadExtScalar operator-() const { return QuadExtScalar(-u_, -v_, a_); }

  QuadExtScalar& operator+=(const QuadExtScalar& y) { return *this = *this + y; }
  QuadExtScalar& operator-=(const QuadExtScalar& y) { return *this = *this - y; }
  QuadExtScalar& operator*=(const QuadExtScalar& y) { return *this = *this * y; }

  friend bool operator==(const QuadExtScalar& x, const QuadExtScalar& y) {
    merged_radicand(x, y);  // reject comparisons across extensions
    return x.u_ == y.u_ && x.v_ == y.v_;
  }
  friend bool operator!=(const QuadExtScalar& x, const QuadExtScalar& y) { return !(x == y); }

  std::string str() const;

 private:
  static Rational merged_radicand(const QuadExtScalar& x, const QuadExtScalar& y) {
    if (x.v_ == 0) return y.a_;
    if (y.v_ == 0) return x.a_;
    if (x.a_ != y.a_) throw std::invalid_argument("QuadExtScalar: radicand mismatch");
    return x.a_;
  }

  Rational u_, v_, a_;
};

inline std::string QuadExtScalar::str() const {
  if (v_ == 0) return to_string(u_);
  return to_string(u_) + " + " + to_string(v_) + "*sqrt(" + to_string(a_) + ")";
}

inline double QuadExtScalar::to_double() const {
  double x = conglab::to_double(u_);
  if (v_ != 0) x += conglab::to_double(v_) * std::sqrt(conglab::to_double(a_));
  return x;
}

}  // namespace conglab
