#pragma once

// Small machine-word number theory utilities shared by the enumeration
// and splitting modules.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "conglab/numeric.hpp"

namespace conglab {

/// x mod m mapped into [0, m); m > 0.
inline std::int64_t mod_floor(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t gcd_i64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

/// Modular inverse of a mod m (m > 0, gcd(a, m) = 1), in [0, m).
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

/// Floor of sqrt(n) for n >= 0.
std::int64_t isqrt_i64(std::int64_t n);

inline bool is_square_i64(std::int64_t n, std::int64_t* root = nullptr) {
  if (n < 0) return false;
  std::int64_t r = isqrt_i64(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

bool is_prime_i64(std::int64_t n);

/// Prime factorization of n >= 1 as (prime, exponent) pairs, ascending.
std::vector<std::pair<std::int64_t, int>> factor_i64(std::int64_t n);

/// Prime factorization of |n| for arbitrary-precision n. Trial division
/// up to 10^6 followed by a primality test on the cofactor; throws
/// std::runtime_error if a composite cofactor survives (inputs of that
/// size are outside this tool's intended scale).
std::vector<std::pair<Int, int>> factor_int(Int n);

/// Legendre symbol (a/p) for odd prime p; a need not be reduced mod p.
int legendre_symbol(const Int& a, const Int& p);

}  // namespace conglab
