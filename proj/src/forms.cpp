#include "conglab/forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace conglab {

namespace {

Int require_indefinite_disc(const BinaryQuadraticForm& f) {
  Int D = f.discriminant();
  if (D <= 0 || is_perfect_square(D))
    throw std::domain_error("form discriminant must be positive and nonsquare, got " + D.str());
  return D;
}

Int mod_floor_int(const Int& x, const Int& m) {
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

bool is_reduced(const BinaryQuadraticForm& f) {
  Int D = require_indefinite_disc(f);
  if (f.B <= 0 || f.B * f.B >= D) return false;
  Int twoA = 2 * abs(f.A);
  // 2|A| < sqrt(D) + B  and  2|A| > sqrt(D) - B, via squared comparisons.
  if (twoA > f.B && (twoA - f.B) * (twoA - f.B) >= D) return false;
  if ((twoA + f.B) * (twoA + f.B) <= D) return false;
  return true;
}

BinaryQuadraticForm rho_step(const BinaryQuadraticForm& f) {
  Int D = require_indefinite_disc(f);
  if (f.C == 0) throw std::domain_error("rho_step: degenerate form");
  Int r = isqrt(D);
  Int absC = abs(f.C);
  Int m = 2 * absC;
  Int Bp;
  if (absC <= r) {
    // unique B' = -B (mod 2|C|) in (sqrt(D) - 2|C|, sqrt(D))
    Bp = r - mod_floor_int(r + f.B, m);
  } else {
    // unique B' = -B (mod 2|C|) in (-|C|, |C|]
    Bp = mod_floor_int(-f.B, m);
    if (Bp > absC) Bp -= m;
  }
  Int Cp = (Bp * Bp - D) / (4 * f.C);
  return BinaryQuadraticForm{f.C, Bp, Cp};
}

std::vector<BinaryQuadraticForm> reduce_cycle(const BinaryQuadraticForm& f) {
  require_indefinite_disc(f);
  BinaryQuadraticForm g = f;
  for (int guard = 0; !is_reduced(g); ++guard) {
    if (guard > 100000) throw std::logic_error("reduce_cycle: reduction did not terminate");
    g = rho_step(g);
  }
  std::vector<BinaryQuadraticForm> cycle;
  BinaryQuadraticForm h = g;
  do {
    cycle.push_back(h);
    h = rho_step(h);
  } while (h != g);
  auto smallest = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), smallest, cycle.end());
  return cycle;
}

std::vector<BinaryQuadraticForm> reduced_forms(const Int& D) {
  if (D <= 0 || is_perfect_square(D))
    throw std::domain_error("reduced_forms: discriminant must be positive and nonsquare");
  Int mod4 = mod_floor_int(D, 4);
  if (mod4 != 0 && mod4 != 1)
    throw std::domain_error("reduced_forms: discriminant must be 0 or 1 mod 4");

  std::vector<BinaryQuadraticForm> out;
  Int r = isqrt(D);
  for (Int B = (D % 2 == 0) ? 2 : 1; B <= r; B += 2) {
    Int M = (B * B - D) / 4;  // = A*C < 0
    Int absM = -M;
    for (Int A = 1; A * A <= absM; ++A) {
      if (absM % A != 0) continue;
      Int C = absM / A;
      // divisor pairs (A, -C) and (C, -A), with both signs of the leading
      // coefficient
      for (const auto& [pa, pc] : {std::pair{A, -C}, std::pair{C, -A}}) {
        for (int sign : {1, -1}) {
          BinaryQuadraticForm g{sign * pa, B, sign * pc};
          if (is_reduced(g)) out.push_back(g);
        }
        if (A == C) break;  // avoid emitting the same split twice
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool equivalent(const BinaryQuadraticForm& f, const BinaryQuadraticForm& g) {
  if (f.discriminant() != g.discriminant()) return false;
  return reduce_cycle(f) == reduce_cycle(g);
}

BinaryQuadraticForm matrix_to_form(const IntMat2& m) {
  if (m.det() != 1) throw std::domain_error("matrix_to_form: determinant must be 1");
  Int t = m.trace();
  if (abs(t) <= 2) throw std::domain_error("matrix_to_form: matrix must be hyperbolic");
  return BinaryQuadraticForm{m.c, m.d - m.a, -m.b};
}

IntMat2 form_to_matrix(const BinaryQuadraticForm& f, const Int& t) {
  if (f.discriminant() != t * t - 4)
    throw std::domain_error("form_to_matrix: discriminant does not match trace");
  Int a = (t - f.B) / 2;
  Int d = (t + f.B) / 2;
  IntMat2 m{a, -f.C, f.A, d};
  if (m.det() != 1) throw std::logic_error("form_to_matrix: determinant check failed");
  return m;
}

}  // namespace conglab
