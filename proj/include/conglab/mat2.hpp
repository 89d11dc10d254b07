#pragma once

// Exact 2x2 matrices over any of the library's scalar types. Row-major
// [[a, b], [c, d]]. Values are immutable in spirit: all operations return
// new matrices.

#include <cstdint>
#include <string>

#include "conglab/numeric.hpp"
#include "conglab/quad_ext.hpp"

namespace conglab {

template <class Scalar>
struct Mat2 {
  Scalar a{}, b{}, c{}, d{};

  static Mat2 identity() { return Mat2{Scalar(1), Scalar(0), Scalar(0), Scalar(1)}; }

  Scalar trace() const { return a + d; }
  Scalar det() const { return a * d - b * c; }

  /// Inverse of a determinant-one matrix.
  Mat2 inverse_unimodular() const { return Mat2{d, -b, -c, a}; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend Mat2 operator+(const Mat2& x, const Mat2& y) {
    return Mat2{x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) {
    return Mat2{x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  Mat2 operator-() const { return Mat2{-a, -b, -c, -d}; }

  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }
};

using IntMat2 = Mat2<Int>;
using ExtMat2 = Mat2<QuadExtScalar>;
using Mat2i = Mat2<std::int64_t>;  // machine-word variant for enumeration hot paths

template <class Scalar>
Mat2<Scalar> mat_mul(const Mat2<Scalar>& x, const Mat2<Scalar>& y) {
  return x * y;
}
template <class Scalar>
Scalar mat_det(const Mat2<Scalar>& m) {
  return m.det();
}
template <class Scalar>
Scalar mat_trace(const Mat2<Scalar>& m) {
  return m.trace();
}

template <class Scalar>
Mat2<Scalar> mat_pow(Mat2<Scalar> base, unsigned exponent) {
  Mat2<Scalar> acc = Mat2<Scalar>::identity();
  while (exponent) {
    if (exponent & 1) acc = acc * base;
    base = base * base;
    exponent >>= 1;
  }
  return acc;
}

inline IntMat2 to_int_mat(const Mat2i& m) {
  return IntMat2{Int(m.a), Int(m.b), Int(m.c), Int(m.d)};
}

inline std::string to_string(const IntMat2& m) {
  return "[[" + m.a.str() + "," + m.b.str() + "],[" + m.c.str() + "," + m.d.str() + "]]";
}

}  // namespace conglab
