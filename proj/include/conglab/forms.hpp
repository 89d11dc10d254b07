#pragma once

// Indefinite integral binary quadratic forms A x^2 + B xy + C y^2 and
// Gauss reduction. Reduction cycles are the canonical representatives of
// proper equivalence classes: two forms of the same nonsquare positive
// discriminant are equivalent iff their cycles coincide up to rotation.
// Hyperbolic matrices correspond to forms through the fixed-point
// quadratic of their Moebius action; the sign convention used everywhere
// in this repository is m = [[a,b],[c,d]] -> (c, d - a, -b).

#include <string>
#include <vector>

#include "conglab/mat2.hpp"
#include "conglab/numeric.hpp"

namespace conglab {

struct BinaryQuadraticForm {
  Int A, B, C;

  Int discriminant() const { return B * B - 4 * A * C; }

  friend bool operator==(const BinaryQuadraticForm& f, const BinaryQuadraticForm& g) {
    return f.A == g.A && f.B == g.B && f.C == g.C;
  }
  friend bool operator!=(const BinaryQuadraticForm& f, const BinaryQuadraticForm& g) {
    return !(f == g);
  }
  friend bool operator<(const BinaryQuadraticForm& f, const BinaryQuadraticForm& g) {
    if (f.A != g.A) return f.A < g.A;
    if (f.B != g.B) return f.B < g.B;
    return f.C < g.C;
  }

  std::string str() const { return "(" + A.str() + "," + B.str() + "," + C.str() + ")"; }
};

/// 0 < B < sqrt(D) and sqrt(D) - B < 2|A| < sqrt(D) + B, decided exactly.
bool is_reduced(const BinaryQuadraticForm& f);

/// Right-neighbor step of Gauss reduction; requires positive nonsquare
/// discriminant. Permutes the reduced forms of each discriminant cyclically
/// and moves any other form strictly toward the reduced set.
BinaryQuadraticForm rho_step(const BinaryQuadraticForm& f);

/// Full cycle of reduced forms equivalent to f, rotated so the
/// lexicographically smallest form comes first.
std::vector<BinaryQuadraticForm> reduce_cycle(const BinaryQuadraticForm& f);

/// All reduced forms of discriminant D (D > 0, nonsquare, D = 0 or 1 mod 4),
/// sorted. Imprimitive forms are included.
std::vector<BinaryQuadraticForm> reduced_forms(const Int& D);

/// True iff f and g are properly equivalent (same discriminant and same
/// canonical cycle).
bool equivalent(const BinaryQuadraticForm& f, const BinaryQuadraticForm& g);

/// Fixed-point form (c, d - a, -b) of a hyperbolic matrix; its
/// discriminant is trace^2 - 4.
BinaryQuadraticForm matrix_to_form(const IntMat2& m);

/// Trace-t matrix attached to a form of discriminant t^2 - 4:
/// [[(t - B)/2, -C], [A, (t + B)/2]]. Inverse of matrix_to_form.
IntMat2 form_to_matrix(const BinaryQuadraticForm& f, const Int& t);

}  // namespace conglab
