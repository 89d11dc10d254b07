#pragma once

// Principal congruence subgroups in the modular and quaternionic settings:
// membership, exact orders/indices mod N, the -beta^2 systole witness, and
// exhaustive height-truncated enumerations. Enumerations report their
// window; no completeness is claimed beyond it.

#include <cstdint>
#include <functional>
#include <vector>

#include "conglab/mat2.hpp"
#include "conglab/numeric.hpp"
#include "conglab/quaternion.hpp"

namespace conglab {

enum class Setting { Modular, Quaternionic };

inline const char* to_string(Setting s) {
  return s == Setting::Modular ? "modular" : "quaternionic";
}

struct CongruenceLevel {
  std::int64_t N = 2;
  Setting setting = Setting::Modular;
  std::int64_t p = 0;  // quaternionic setting: the prime of (p, -1 | Q)

  static CongruenceLevel modular(std::int64_t N);
  static CongruenceLevel quaternionic(std::int64_t p, std::int64_t N);
};

struct EnumerationWindow {
  std::int64_t height = 1;  // max |matrix entry| / |quaternion coordinate|
};

/// m = I mod N entrywise; throws on det != 1.
bool in_gamma_n(const IntMat2& m, std::int64_t N);
bool in_gamma_n(const Mat2i& m, std::int64_t N);

/// |SL2(Z/NZ)| = N^3 prod_{p | N} (1 - p^-2), exactly. N >= 2.
Int sl2_order_mod(std::int64_t N);

/// Index of the level-N group in PSL2(Z) for N >= 3: |SL2(Z/NZ)| / 2.
Int psl2_index(std::int64_t N);

/// [[0, -1], [1, N]]: determinant 1, trace N, hyperbolic, primitive.
IntMat2 trace_witness(std::int64_t N);

/// -beta^2 for tr(beta) = +-N: lies in the level-N group and has trace
/// exactly -(N^2 - 2). Throws unless det(beta) = 1 and tr(beta) = +-N.
IntMat2 systole_witness(const IntMat2& beta, std::int64_t N);

/// Exhaustive enumeration of level-N matrices with all |entries| <= height,
/// N >= 3. Elements are produced by solving the determinant identity
/// x + w + xw - zy = 0 over multiples of N: for each admissible first
/// column the remaining entries form an arithmetic progression. The
/// callback order is deterministic (ascending first column, then d).
void enumerate_gamma_n(std::int64_t N, const EnumerationWindow& window,
                       const std::function<void(const Mat2i&)>& sink);

/// Vector form, sorted lexicographically by (a, b, c, d).
std::vector<Mat2i> enumerate_gamma_n(std::int64_t N, const EnumerationWindow& window);

/// Summary of a full window scan, partitioned by leading entry and merged
/// deterministically; used by the verification suites.
struct GammaNScanResult {
  std::int64_t n = 0;
  std::int64_t height = 0;
  std::int64_t total = 0;
  std::int64_t parabolic_or_identity = 0;       // |trace| = 2 (includes I)
  std::int64_t min_hyperbolic_abs_trace = 0;    // 0 if no hyperbolic element seen
  std::vector<Mat2i> gap_violations;            // elements with 2 < |tr| < N^2 - 2
};

GammaNScanResult scan_gamma_n(std::int64_t N, const EnumerationWindow& window,
                              unsigned threads = 0);

/// Integer quaternion coordinates; the algebra is (p, -1 | Q).
struct QuatCoords {
  std::int64_t x0 = 0, x1 = 0, x2 = 0, x3 = 0;

  std::int64_t reduced_trace() const { return 2 * x0; }

  friend bool operator==(const QuatCoords& a, const QuatCoords& b) {
    return a.x0 == b.x0 && a.x1 == b.x1 && a.x2 == b.x2 && a.x3 == b.x3;
  }
  friend bool operator<(const QuatCoords& a, const QuatCoords& b) {
    if (a.x0 != b.x0) return a.x0 < b.x0;
    if (a.x1 != b.x1) return a.x1 < b.x1;
    if (a.x2 != b.x2) return a.x2 < b.x2;
    return a.x3 < b.x3;
  }
};

/// All integer quaternions of reduced norm one in (p, -1 | Q) with
/// coordinates bounded by the window, sorted lexicographically.
/// Requires p prime, p = 3 mod 4.
std::vector<QuatCoords> quat_enumerate(std::int64_t p, const EnumerationWindow& window);

/// x0 = 1 and x1, x2, x3 = 0 mod N.
bool quat_in_congruence(const QuatCoords& x, std::int64_t N);
/// Same, for exact quaternions; throws on non-integral coordinates.
bool quat_in_congruence(const Quaternion& x, std::int64_t N);

Quaternion to_quaternion(const QuatCoords& c, std::int64_t p);

}  // namespace conglab
