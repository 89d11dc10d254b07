#include "conglab/arith.hpp"

#include <cmath>

namespace conglab {

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m <= 0) throw std::domain_error("mod_inverse: modulus must be positive");
  std::int64_t r0 = m, r1 = mod_floor(a, m);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  if (r0 != 1) throw std::domain_error("mod_inverse: arguments are not coprime");
  return mod_floor(s0, m);
}

std::int64_t isqrt_i64(std::int64_t n) {
  if (n < 0) throw std::domain_error("isqrt_i64 of negative value");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t acc = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) acc = mulmod_u64(acc, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return acc;
}

}  // namespace

bool is_prime_i64(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  // Deterministic Miller-Rabin for 64-bit inputs with this base set.
  std::uint64_t d = static_cast<std::uint64_t>(n - 1);
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod_u64(a, d, static_cast<std::uint64_t>(n));
    if (x == 1 || x == static_cast<std::uint64_t>(n - 1)) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, static_cast<std::uint64_t>(n));
      if (x == static_cast<std::uint64_t>(n - 1)) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<std::pair<std::int64_t, int>> factor_i64(std::int64_t n) {
  if (n < 1) throw std::domain_error("factor_i64: argument must be >= 1");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::pair<Int, int>> factor_int(Int n) {
  if (n < 0) n = -n;
  if (n == 0) throw std::domain_error("factor_int: argument must be nonzero");
  std::vector<std::pair<Int, int>> out;
  constexpr std::int64_t kTrialLimit = 1'000'000;
  for (std::int64_t p = 2; p <= kTrialLimit && Int(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(Int(p), e);
  }
  if (n > 1) {
    if (n < Int(kTrialLimit) * kTrialLimit) {
      out.emplace_back(n, 1);  // cofactor below trial bound squared is prime
    } else if (n.convert_to<double>() < 9.2e18 && is_prime_i64(n.convert_to<std::int64_t>())) {
      out.emplace_back(n, 1);
    } else {
      throw std::runtime_error("factor_int: cofactor too large to certify: " + n.str());
    }
  }
  return out;
}

int legendre_symbol(const Int& a, const Int& p) {
  if (p < 3 || p % 2 == 0) throw std::domain_error("legendre_symbol: p must be an odd prime");
  Int r = a % p;
  if (r < 0) r += p;
  if (r == 0) return 0;
  Int e = (p - 1) / 2;
  Int v = boost::multiprecision::powm(r, e, p);
  return v == 1 ? 1 : -1;
}

}  // namespace conglab
