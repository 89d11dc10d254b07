#pragma once

// Hyperbolic-plane evaluators and the certified bound reports for the
// level-N congruence surfaces. Everything here is double precision;
// verdict comparisons carry a 1e-9 relative slack on the side of
// reporting failure, so rounding can never turn a failing bound green.

#include <cstdint>
#include <vector>

#include "conglab/congruence.hpp"
#include "conglab/mat2.hpp"
#include "conglab/modular.hpp"
#include "conglab/numeric.hpp"

namespace conglab {

/// Area of the base modular orbifold (pi/3), the constant v0 of the
/// bound reports.
double modular_orbifold_area();

struct UpperHalfPoint {
  double re = 0.0;
  double im = 1.0;

  UpperHalfPoint() = default;
  UpperHalfPoint(double re_in, double im_in);
};

/// z -> (az + b) / (cz + d); requires det = 1.
UpperHalfPoint mobius_apply(const IntMat2& m, const UpperHalfPoint& z);

/// Hyperbolic distance in the upper half-plane.
double hyp_distance(const UpperHalfPoint& z, const UpperHalfPoint& w);

/// 2 arccosh(|t| / 2) for |t| > 2; the translation length of a hyperbolic
/// element of trace t.
double translation_length(const Int& t);
double translation_length(std::int64_t t);

/// 2 pi (2g - 2) for genus g >= 2.
double gauss_bonnet_area(std::int64_t genus);

/// 2 pi (cosh(R) - 1) for R >= 0.
double ball_area(double radius);

// Right-hand sides of the published upper bounds, as plain evaluators.
// Additive constants default to 0 and multiplicative ones to 1.
double rhs_sys_area(double area);                                    // 2 log(area/pi + 2)
double rhs_sys_vol(double vol, int dim, double c = 0.0);             // 2/(n-1) log(vol) + c
double rhs_sys_noncompact(double vol, double d1 = 0.0);              // 2 log(vol) + d1
double rhs_sys_dim3(double vol, double d2 = 0.0);                    // 4/3 log(vol) + d2
double rhs_kiss_genus(double genus, double U = 1.0);                 // U g^2 / log g
double rhs_kiss_cusped(double genus, double cusps, double C = 1.0);  // C (g+n) g / log(g+1)
double rhs_kiss_vol(double vol, double A = 1.0);                     // A vol^2 / log(1+vol)

/// v0 * [PSL2(Z) : level-N group] for the modular setting, N >= 3;
/// checks the strict bound area < v0 N^3 exactly on the index.
/// The quaternionic covolume is not computed by this library, so the
/// quaternionic setting is rejected here.
double area_s_n(std::int64_t N, Setting setting = Setting::Modular);

struct BoundReport {
  std::int64_t N = 0;
  Setting setting = Setting::Modular;
  std::int64_t mu0 = 0;  // primitive classes of trace +-N, both signs pooled
  Int index;
  double area = 0.0;
  double sys_lower = 0.0;  // 2 arccosh((N^2 - 2)/2)
  Int kiss_lower;          // mu0(N) * index / 2
  double epsilon = 0.0;
  bool mu0_precondition = false;  // mu0(N) >= N^(1 - epsilon)
  bool verdict_kiss = false;      // kiss_lower >= area^(4/3 - eps) / (2 v0^2)
  bool verdict_sys = false;       // sys_lower >= 4/3 log(area) - (2 log 2 + 4/3 log v0)
};

/// One row of the certified bound table; N >= 5, 0 < epsilon < 4/3.
BoundReport bound_report(std::int64_t N, double epsilon, ClassTable& table);

/// LHS >= RHS with a relative 1e-9 margin required to pass.
bool verdict_geq(double lhs, double rhs);

struct PgtRow {
  std::int64_t t = 0;
  std::int64_t mu0 = 0;
  std::int64_t cumulative = 0;  // sum of mu0 over traces <= t
  double reference = 0.0;       // sum of s / log(s) over traces <= t
  double ratio = 0.0;           // cumulative / reference
};

/// Per-trace class-count statistics for traces 3..t_max (t_max >= 10),
/// with the running comparison against the t/log t reference mass.
std::vector<PgtRow> pgt_statistics(std::int64_t t_max, ClassTable& table);

}  // namespace conglab
