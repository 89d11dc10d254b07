#include "conglab/geometry.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace conglab {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kVerdictSlack = 1e-9;
}  // namespace

double modular_orbifold_area() { return kPi / 3.0; }

UpperHalfPoint::UpperHalfPoint(double re_in, double im_in) : re(re_in), im(im_in) {
  if (!(im > 0.0)) throw std::invalid_argument("UpperHalfPoint: imaginary part must be positive");
}

UpperHalfPoint mobius_apply(const IntMat2& m, const UpperHalfPoint& z) {
  if (m.det() != 1) throw std::domain_error("mobius_apply: determinant must be 1");
  std::complex<double> zc(z.re, z.im);
  std::complex<double> w = (to_double(m.a) * zc + to_double(m.b)) /
                           (to_double(m.c) * zc + to_double(m.d));
  return UpperHalfPoint(w.real(), w.imag());
}

double hyp_distance(const UpperHalfPoint& z, const UpperHalfPoint& w) {
  const double dx = z.re - w.re;
  const double dy = z.im - w.im;
  return std::acosh(1.0 + (dx * dx + dy * dy) / (2.0 * z.im * w.im));
}

double translation_length(const Int& t) {
  Int a = abs(t);
  if (a <= 2) throw std::domain_error("translation_length: |trace| must exceed 2");
  return 2.0 * std::acosh(to_double(a) / 2.0);
}

double translation_length(std::int64_t t) { return translation_length(Int(t)); }

double gauss_bonnet_area(std::int64_t genus) {
  if (genus < 2) throw std::domain_error("gauss_bonnet_area: genus must be >= 2");
  return 2.0 * kPi * (2.0 * static_cast<double>(genus) - 2.0);
}

double ball_area(double radius) {
  if (radius < 0.0) throw std::domain_error("ball_area: radius must be nonnegative");
  return 2.0 * kPi * (std::cosh(radius) - 1.0);
}

double rhs_sys_area(double area) {
  if (area <= 0.0) throw std::domain_error("rhs_sys_area: area must be positive");
  return 2.0 * std::log(area / kPi + 2.0);
}

double rhs_sys_vol(double vol, int dim, double c) {
  if (vol <= 0.0) throw std::domain_error("rhs_sys_vol: volume must be positive");
  if (dim < 2) throw std::domain_error("rhs_sys_vol: dimension must be >= 2");
  return 2.0 / (dim - 1) * std::log(vol) + c;
}

double rhs_sys_noncompact(double vol, double d1) {
  if (vol <= 0.0) throw std::domain_error("rhs_sys_noncompact: volume must be positive");
  return 2.0 * std::log(vol) + d1;
}

double rhs_sys_dim3(double vol, double d2) {
  if (vol <= 0.0) throw std::domain_error("rhs_sys_dim3: volume must be positive");
  return 4.0 / 3.0 * std::log(vol) + d2;
}

double rhs_kiss_genus(double genus, double U) {
  if (genus <= 1.0) throw std::domain_error("rhs_kiss_genus: genus must exceed 1");
  return U * genus * genus / std::log(genus);
}

double rhs_kiss_cusped(double genus, double cusps, double C) {
  if (genus < 1.0) throw std::domain_error("rhs_kiss_cusped: genus must be >= 1");
  if (cusps < 0.0) throw std::domain_error("rhs_kiss_cusped: cusp count must be >= 0");
  return C * (genus + cusps) * genus / std::log(genus + 1.0);
}

double rhs_kiss_vol(double vol, double A) {
  if (vol <= 0.0) throw std::domain_error("rhs_kiss_vol: volume must be positive");
  return A * vol * vol / std::log1p(vol);
}

double area_s_n(std::int64_t N, Setting setting) {
  if (setting == Setting::Quaternionic)
    throw std::domain_error("area_s_n: quaternionic area requires an external v0 input");
  if (N < 3) throw std::domain_error("area_s_n: N must be >= 3");
  Int index = psl2_index(N);
  if (index >= Int(N) * N * N)
    throw std::logic_error("area_s_n: index bound violated");  // exact: index < N^3
  return modular_orbifold_area() * to_double(index);
}

bool verdict_geq(double lhs, double rhs) {
  return lhs - rhs >= kVerdictSlack * std::max(std::abs(lhs), std::abs(rhs));
}

BoundReport bound_report(std::int64_t N, double epsilon, ClassTable& table) {
  if (N < 5) throw std::domain_error("bound_report: N must be >= 5");
  if (!(epsilon > 0.0) || !(epsilon < 4.0 / 3.0))
    throw std::domain_error("bound_report: epsilon must lie in (0, 4/3)");

  BoundReport r;
  r.N = N;
  r.setting = Setting::Modular;
  r.epsilon = epsilon;
  // The chain counts primitive classes of trace +-N pooled over both signs
  // (twice the per-sign count); the class-count growth guarantee is stated
  // for that pooled count.
  r.mu0 = table.mu0(N).mu0_sl2;
  r.index = psl2_index(N);
  r.area = area_s_n(N);
  r.sys_lower = 2.0 * std::acosh((static_cast<double>(N) * N - 2.0) / 2.0);
  Int doubled = Int(r.mu0) * r.index;
  if (doubled % 2 != 0) throw std::logic_error("bound_report: odd kissing product");
  r.kiss_lower = doubled / 2;

  const double v0 = modular_orbifold_area();
  const double rhs_kiss = std::pow(r.area, 4.0 / 3.0 - epsilon) / (2.0 * v0 * v0);
  const double rhs_sys = 4.0 / 3.0 * std::log(r.area) - (2.0 * std::log(2.0) + 4.0 / 3.0 * std::log(v0));
  r.verdict_kiss = verdict_geq(to_double(r.kiss_lower), rhs_kiss);
  r.verdict_sys = verdict_geq(r.sys_lower, rhs_sys);
  r.mu0_precondition =
      static_cast<double>(r.mu0) >= std::pow(static_cast<double>(N), 1.0 - epsilon);
  return r;
}

std::vector<PgtRow> pgt_statistics(std::int64_t t_max, ClassTable& table) {
  if (t_max < 10) throw std::domain_error("pgt_statistics: t_max must be >= 10");
  std::vector<PgtRow> rows;
  rows.reserve(static_cast<std::size_t>(t_max - 2));
  std::int64_t cumulative = 0;
  double reference = 0.0;
  for (std::int64_t t = 3; t <= t_max; ++t) {
    PgtRow row;
    row.t = t;
    row.mu0 = table.mu0(t).mu0;
    cumulative += row.mu0;
    reference += static_cast<double>(t) / std::log(static_cast<double>(t));
    row.cumulative = cumulative;
    row.reference = reference;
    row.ratio = cumulative / reference;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace conglab
