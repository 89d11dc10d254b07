#include "conglab/hilbert.hpp"

#include <algorithm>
#include <cstdlib>

#include "conglab/arith.hpp"

namespace conglab {

namespace {

int valuation(const Int& n, const Int& p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  int v = 0;
  Int m = n;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

/// v_p of a nonzero rational, and the unit part a / p^v.
std::pair<int, Rational> split_at(const Rational& a, const Int& p) {
  int v = valuation(num(a), p) - valuation(den(a), p);
  Rational unit = a;
  Rational pr(p);
  for (int i = 0; i < v; ++i) unit /= pr;
  for (int i = 0; i < -v; ++i) unit *= pr;
  return {v, unit};
}

/// Residue of a p-adic unit rational modulo m (m a power of the prime).
Int unit_mod(const Rational& u, const Int& m) {
  Int n = num(u) % m;
  if (n < 0) n += m;
  Int d = den(u) % m;
  // d is invertible mod m; extended Euclid over cpp_int.
  Int r0 = m, r1 = d, s0 = 0, s1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  Int inv = s0 % m;
  if (inv < 0) inv += m;
  return (n * inv) % m;
}

int epsilon_of_odd(const Int& r) { return static_cast<int>(((r - 1) / 2) % 2); }
int omega_of_odd(const Int& r) { return static_cast<int>(((r * r - 1) / 8) % 2); }

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
  if (a == 0 || b == 0) throw std::domain_error("hilbert_symbol: arguments must be nonzero");
  if (v.is_infinite) return (a < 0 && b < 0) ? -1 : 1;

  const Int& p = v.prime;
  if (p < 2) throw std::domain_error("hilbert_symbol: invalid place");
  auto [alpha, u] = split_at(a, p);
  auto [beta, w] = split_at(b, p);

  if (p == 2) {
    Int ur = unit_mod(u, 8);
    Int wr = unit_mod(w, 8);
    int e = epsilon_of_odd(ur) * epsilon_of_odd(wr) + alpha * omega_of_odd(wr) +
            beta * omega_of_odd(ur);
    return (e % 2 == 0) ? 1 : -1;
  }

  int sign = 1;
  if ((alpha % 2) && (beta % 2) && epsilon_of_odd(p) == 1) sign = -sign;
  if (beta % 2) sign *= legendre_symbol(unit_mod(u, p), p);
  if (alpha % 2) sign *= legendre_symbol(unit_mod(w, p), p);
  return sign;
}

std::vector<Place> candidate_places(const Rational& a, const Rational& b) {
  std::vector<Place> out;
  out.push_back(Place::at(2));
  auto add_odd_primes = [&out](const Int& n) {
    for (const auto& [p, e] : factor_int(n)) {
      (void)e;
      if (p != 2) out.push_back(Place::at(p));
    }
  };
  add_odd_primes(num(a));
  add_odd_primes(den(a));
  add_odd_primes(num(b));
  add_odd_primes(den(b));
  out.push_back(Place::infinity());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Place> ramified_places(const Rational& a, const Rational& b) {
  std::vector<Place> out;
  for (const Place& v : candidate_places(a, b)) {
    if (hilbert_symbol(a, b, v) == -1) out.push_back(v);
  }
  if (out.size() % 2 != 0)
    throw std::logic_error("ramified_places: odd count violates reciprocity");
  return out;
}

Int squarefree_part(const Rational& a) {
  if (a == 0) throw std::domain_error("squarefree_part of zero");
  Int n = num(a) * den(a);
  Int out = n < 0 ? Int(-1) : Int(1);
  for (const auto& [p, e] : factor_int(n)) {
    if (e % 2) out *= p;
  }
  return out;
}

namespace {

/// Smallest solutions of z^2 = A x^2 + B y^2 with (x, y) != 0, searched by
/// increasing max(|x|, |y|). Returns {z, x, y} or throws search_exhausted.
std::array<Int, 3> ternary_isotropy_search(const Int& A, const Int& B, std::int64_t height) {
  // Signs of x and y are irrelevant (they enter squared); search the
  // nonnegative quadrant by increasing max(x, y).
  auto try_pair = [&](std::int64_t x, std::int64_t y, std::array<Int, 3>* hit) -> bool {
    Int val = A * x * x + B * y * y;
    Int z;
    if (val < 0 || !is_perfect_square(val, &z)) return false;
    *hit = {z, Int(x), Int(y)};
    return true;
  };
  std::array<Int, 3> hit;
  for (std::int64_t s = 1; s <= height; ++s) {
    for (std::int64_t y = 0; y < s; ++y)
      if (try_pair(s, y, &hit)) return hit;
    for (std::int64_t x = 0; x <= s; ++x)
      if (try_pair(x, s, &hit)) return hit;
  }
  throw search_exhausted(height);
}

}  // namespace

SplittingCertificate is_division(const QuaternionAlgebra& alg, std::int64_t height_bound) {
  SplittingCertificate cert{};
  cert.ramified = ramified_places(alg.a, alg.b);
  if (!cert.ramified.empty()) {
    cert.verdict = SplitVerdict::Division;
    return cert;
  }

  cert.verdict = SplitVerdict::Split;
  // Search on the square-class representatives, then rescale back.
  Int A = squarefree_part(alg.a);
  Int B = squarefree_part(alg.b);
  auto [z, x, y] = ternary_isotropy_search(A, B, height_bound);
  // a = A s^2 with s = sqrt(a/A); a (x/s)^2 = A x^2, likewise for b.
  Rational sa2 = alg.a / Rational(A);
  Rational sb2 = alg.b / Rational(B);
  Int ra, rb;
  if (!is_perfect_square(num(sa2), &ra) || !is_perfect_square(den(sa2), &rb))
    throw std::logic_error("is_division: square-class decomposition failed");
  Rational sa(ra, rb);
  if (!is_perfect_square(num(sb2), &ra) || !is_perfect_square(den(sb2), &rb))
    throw std::logic_error("is_division: square-class decomposition failed");
  Rational sb(ra, rb);

  cert.witness = {Rational(z), Rational(x) / sa, Rational(y) / sb, Rational(0)};
  // Self-check: the witness must annihilate the norm form exactly.
  const auto& wv = cert.witness;
  Rational nf = wv[0] * wv[0] - alg.a * wv[1] * wv[1] - alg.b * wv[2] * wv[2] +
                alg.a * alg.b * wv[3] * wv[3];
  bool nonzero = wv[0] != 0 || wv[1] != 0 || wv[2] != 0 || wv[3] != 0;
  if (nf != 0 || !nonzero) throw std::logic_error("is_division: witness failed self-check");
  return cert;
}

}  // namespace conglab
