#pragma once

// Exact scalars used throughout the library. Every group-theoretic
// computation is exact; floating point appears only in the geometry
// evaluators (see geometry.hpp).

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace conglab {

using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept in canonical reduced form
/// (gcd(|num|, den) = 1, den >= 1) after every operation.
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return numerator(r); }
inline Int den(const Rational& r) { return denominator(r); }

/// p/q for any sign of q != 0, normalized to canonical form.
inline Rational make_rational(const Int& p, const Int& q) {
  if (q == 0) throw std::invalid_argument("make_rational: zero denominator");
  return Rational(p) / Rational(q);
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Exact integer value of an integral rational.
inline Int to_int_exact(const Rational& r) {
  if (!is_integer(r)) throw std::domain_error("rational is not an integer: " + r.str());
  return numerator(r);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(const Int& n) { return n.convert_to<double>(); }

/// Floor of the square root of a nonnegative integer.
inline Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt of negative value");
  return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
  if (n < 0) return false;
  Int r = boost::multiprecision::sqrt(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

/// Parses "p" or "p/q" with optional sign; q must be nonzero.
inline Rational parse_rational(std::string_view text) {
  const auto bad = [&] {
    return std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(Int(std::string(text)));
    Int p{std::string(text.substr(0, slash))};
    Int q{std::string(text.substr(slash + 1))};
    if (q == 0) throw bad();
    return make_rational(p, q);
  } catch (const std::runtime_error&) {
    throw bad();
  }
}

inline std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

}  // namespace conglab
