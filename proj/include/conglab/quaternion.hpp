#pragma once

// Rational quaternion algebras (a,b | Q): basis 1, i, j, k with
// i^2 = a, j^2 = b, ij = -ji = k, and the embedding into 2x2 matrices
// over Q(sqrt(a)) that identifies reduced norm with determinant and
// reduced trace with matrix trace.

#include <array>
#include <stdexcept>
#include <string>

#include "conglab/mat2.hpp"
#include "conglab/numeric.hpp"

namespace conglab {

struct QuaternionAlgebra {
  Rational a, b;

  QuaternionAlgebra(Rational a_in, Rational b_in) : a(std::move(a_in)), b(std::move(b_in)) {
    if (a == 0 || b == 0)
      throw std::invalid_argument("QuaternionAlgebra: parameters must be nonzero");
  }

  friend bool operator==(const QuaternionAlgebra& x, const QuaternionAlgebra& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const QuaternionAlgebra& x, const QuaternionAlgebra& y) {
    return !(x == y);
  }
};

class Quaternion {
 public:
  Quaternion(QuaternionAlgebra alg, Rational x0, Rational x1, Rational x2, Rational x3)
      : alg_(std::move(alg)),
        x0_(std::move(x0)),
        x1_(std::move(x1)),
        x2_(std::move(x2)),
        x3_(std::move(x3)) {}

  static Quaternion one(const QuaternionAlgebra& alg) { return {alg, 1, 0, 0, 0}; }
  static Quaternion unit_i(const QuaternionAlgebra& alg) { return {alg, 0, 1, 0, 0}; }
  static Quaternion unit_j(const QuaternionAlgebra& alg) { return {alg, 0, 0, 1, 0}; }
  static Quaternion unit_k(const QuaternionAlgebra& alg) { return {alg, 0, 0, 0, 1}; }

  const QuaternionAlgebra& algebra() const { return alg_; }
  const Rational& x0() const { return x0_; }
  const Rational& x1() const { return x1_; }
  const Rational& x2() const { return x2_; }
  const Rational& x3() const { return x3_; }
  std::array<Rational, 4> coords() const { return {x0_, x1_, x2_, x3_}; }

  Quaternion conjugate() const { return {alg_, x0_, -x1_, -x2_, -x3_}; }

  Rational reduced_norm() const {
    const Rational& a = alg_.a;
    const Rational& b = alg_.b;
    return x0_ * x0_ - a * x1_ * x1_ - b * x2_ * x2_ + a * b * x3_ * x3_;
  }
  Rational reduced_trace() const { return 2 * x0_; }

  bool is_integral() const {
    return is_integer(x0_) && is_integer(x1_) && is_integer(x2_) && is_integer(x3_);
  }

  friend Quaternion operator+(const Quaternion& x, const Quaternion& y) {
    x.require_same_algebra(y);
    return {x.alg_, x.x0_ + y.x0_, x.x1_ + y.x1_, x.x2_ + y.x2_, x.x3_ + y.x3_};
  }
  friend Quaternion operator-(const Quaternion& x, const Quaternion& y) {
    x.require_same_algebra(y);
    return {x.alg_, x.x0_ - y.x0_, x.x1_ - y.x1_, x.x2_ - y.x2_, x.x3_ - y.x3_};
  }
  Quaternion operator-() const { return {alg_, -x0_, -x1_, -x2_, -x3_}; }

  friend Quaternion operator*(const Quaternion& x, const Quaternion& y) {
    x.require_same_algebra(y);
    const Rational& a = x.alg_.a;
    const Rational& b = x.alg_.b;
    return {x.alg_,
            x.x0_ * y.x0_ + a * x.x1_ * y.x1_ + b * x.x2_ * y.x2_ - a * b * x.x3_ * y.x3_,
            x.x0_ * y.x1_ + x.x1_ * y.x0_ - b * x.x2_ * y.x3_ + b * x.x3_ * y.x2_,
            x.x0_ * y.x2_ + x.x2_ * y.x0_ + a * x.x1_ * y.x3_ - a * x.x3_ * y.x1_,
            x.x0_ * y.x3_ + x.x3_ * y.x0_ + x.x1_ * y.x2_ - x.x2_ * y.x1_};
  }

  friend bool operator==(const Quaternion& x, const Quaternion& y) {
    return x.alg_ == y.alg_ && x.x0_ == y.x0_ && x.x1_ == y.x1_ && x.x2_ == y.x2_ &&
           x.x3_ == y.x3_;
  }
  friend bool operator!=(const Quaternion& x, const Quaternion& y) { return !(x == y); }

  std::string str() const {
    return "(" + to_string(x0_) + ", " + to_string(x1_) + ", " + to_string(x2_) + ", " +
           to_string(x3_) + ")";
  }

 private:
  void require_same_algebra(const Quaternion& y) const {
    if (alg_ != y.alg_) throw std::invalid_argument("Quaternion: algebra mismatch");
  }

  QuaternionAlgebra alg_;
  Rational x0_, x1_, x2_, x3_;
};

/// Matrix image of x over Q(sqrt(a)):
///   [[x0 + x1 sqrt(a), x2 + x3 sqrt(a)], [b (x2 - x3 sqrt(a)), x0 - x1 sqrt(a)]].
/// det = reduced norm, trace = reduced trace. Requires a > 0.
inline ExtMat2 embed(const Quaternion& x) {
  const Rational& a = x.algebra().a;
  const Rational& b = x.algebra().b;
  if (a <= 0) throw std::domain_error("embed: algebra parameter a must be positive");
  return ExtMat2{QuadExtScalar(x.x0(), x.x1(), a), QuadExtScalar(x.x2(), x.x3(), a),
                 QuadExtScalar(b * x.x2(), -b * x.x3(), a), QuadExtScalar(x.x0(), -x.x1(), a)};
}

}  // namespace conglab
