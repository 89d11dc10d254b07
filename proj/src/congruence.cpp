#include "conglab/congruence.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "conglab/arith.hpp"

namespace conglab {

CongruenceLevel CongruenceLevel::modular(std::int64_t N) {
  if (N < 2) throw std::domain_error("CongruenceLevel: N must be >= 2");
  return CongruenceLevel{N, Setting::Modular, 0};
}

CongruenceLevel CongruenceLevel::quaternionic(std::int64_t p, std::int64_t N) {
  if (N < 2) throw std::domain_error("CongruenceLevel: N must be >= 2");
  if (!is_prime_i64(p) || p % 4 != 3)
    throw std::domain_error("CongruenceLevel: p must be a prime = 3 mod 4");
  return CongruenceLevel{N, Setting::Quaternionic, p};
}

bool in_gamma_n(const IntMat2& m, std::int64_t N) {
  if (N < 2) throw std::domain_error("in_gamma_n: N must be >= 2");
  if (m.det() != 1) throw std::domain_error("in_gamma_n: determinant must be 1");
  return (m.a - 1) % N == 0 && m.b % N == 0 && m.c % N == 0 && (m.d - 1) % N == 0;
}

bool in_gamma_n(const Mat2i& m, std::int64_t N) {
  if (N < 2) throw std::domain_error("in_gamma_n: N must be >= 2");
  if (m.det() != 1) throw std::domain_error("in_gamma_n: determinant must be 1");
  return (m.a - 1) % N == 0 && m.b % N == 0 && m.c % N == 0 && (m.d - 1) % N == 0;
}

Int sl2_order_mod(std::int64_t N) {
  if (N < 2) throw std::domain_error("sl2_order_mod: N must be >= 2");
  Int order = Int(N) * N * N;
  for (const auto& [p, e] : factor_i64(N)) {
    (void)e;
    order = order / (Int(p) * p) * (Int(p) * p - 1);
  }
  return order;
}

Int psl2_index(std::int64_t N) {
  if (N < 3) throw std::domain_error("psl2_index: N must be >= 3");
  Int order = sl2_order_mod(N);
  // -I is not congruent to I mod N for N >= 3, so the index halves.
  return order / 2;
}

IntMat2 trace_witness(std::int64_t N) {
  if (N < 3) throw std::domain_error("trace_witness: N must be >= 3");
  return IntMat2{0, -1, 1, Int(N)};
}

IntMat2 systole_witness(const IntMat2& beta, std::int64_t N) {
  if (N < 3) throw std::domain_error("systole_witness: N must be >= 3");
  if (beta.det() != 1) throw std::domain_error("systole_witness: determinant must be 1");
  if (abs(beta.trace()) != N)
    throw std::domain_error("systole_witness: trace must be +-N");
  IntMat2 w = -(beta * beta);
  // Cayley-Hamilton gives -beta^2 = -tr(beta) beta + I, so both checks are
  // identities; failure would mean a library bug.
  if (!in_gamma_n(w, N)) throw std::logic_error("systole_witness: result not in level group");
  if (w.trace() != -(Int(N) * N - 2))
    throw std::logic_error("systole_witness: trace identity failed");
  return w;
}

namespace {

constexpr std::int64_t kMaxEnumerationHeight = 10'000'000;

void check_enumeration_args(std::int64_t N, const EnumerationWindow& window) {
  if (N < 3) throw std::domain_error("enumerate_gamma_n: N must be >= 3");
  if (N > 1'000'000'000) throw std::domain_error("enumerate_gamma_n: N out of range");
  if (window.height < 1) throw std::domain_error("enumeration window height must be >= 1");
  if (window.height > kMaxEnumerationHeight)
    throw std::domain_error("enumeration window height too large for exact 64-bit scan");
}

/// Scans all level-N matrices [[a, b], [c, d]] with |entries| <= H whose
/// first-column entry a lies in [a_lo, a_hi]. For a fixed admissible first
/// column (a, c), the determinant identity pins d to an arithmetic
/// progression mod N|c| and b = (ad - 1)/c.
template <class Sink>
void scan_first_columns(std::int64_t N, std::int64_t H, std::int64_t a_lo, std::int64_t a_hi,
                        Sink&& sink) {
  const auto first_a = [&](std::int64_t lo) {
    std::int64_t a = lo + mod_floor(1 - lo, N);  // smallest a >= lo with a = 1 mod N
    return a;
  };
  for (std::int64_t a = first_a(a_lo); a <= a_hi; a += N) {
    if (a == 1) {
      // c = 0 forces a = d = 1 (N >= 3): the unipotent family [[1, b], [0, 1]].
      for (std::int64_t b = -(H / N) * N; b <= H; b += N) sink(Mat2i{1, b, 0, 1});
    }
    for (std::int64_t c = -(H / N) * N; c <= H; c += N) {
      if (c == 0) continue;
      if (gcd_i64(a, c) != 1) continue;
      const std::int64_t absc = c < 0 ? -c : c;
      const std::int64_t m = N * absc;
      // d = a^{-1} mod N|c| makes d = 1 mod N and b = (ad-1)/c = 0 mod N.
      const std::int64_t d0 = mod_inverse(a, m);
      for (std::int64_t d = d0 - ((d0 + H) / m) * m; d <= H; d += m) {
        const std::int64_t b = (a * d - 1) / c;
        if (b < -H || b > H) continue;
        sink(Mat2i{a, b, c, d});
      }
    }
  }
}

}  // namespace

void enumerate_gamma_n(std::int64_t N, const EnumerationWindow& window,
                       const std::function<void(const Mat2i&)>& sink) {
  check_enumeration_args(N, window);
  scan_first_columns(N, window.height, -window.height, window.height,
                     [&](const Mat2i& m) { sink(m); });
}

std::vector<Mat2i> enumerate_gamma_n(std::int64_t N, const EnumerationWindow& window) {
  std::vector<Mat2i> out;
  enumerate_gamma_n(N, window, [&](const Mat2i& m) { out.push_back(m); });
  std::sort(out.begin(), out.end(), [](const Mat2i& x, const Mat2i& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    if (x.c != y.c) return x.c < y.c;
    return x.d < y.d;
  });
  return out;
}

GammaNScanResult scan_gamma_n(std::int64_t N, const EnumerationWindow& window, unsigned threads) {
  check_enumeration_args(N, window);
  const std::int64_t H = window.height;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::int64_t gap = N * N - 2;  // N <= 10^9, no overflow

  // Partition the leading-entry range into per-thread slices; merge the
  // per-slice results in slice order so the outcome is deterministic.
  std::vector<GammaNScanResult> partial(threads);
  std::vector<std::thread> pool;
  const std::int64_t span = 2 * H + 1;
  for (unsigned ti = 0; ti < threads; ++ti) {
    const std::int64_t lo = -H + span * ti / threads;
    const std::int64_t hi = -H + span * (ti + 1) / threads - 1;
    pool.emplace_back([&, ti, lo, hi] {
      GammaNScanResult& r = partial[ti];
      scan_first_columns(N, H, lo, hi, [&](const Mat2i& m) {
        ++r.total;
        std::int64_t t = m.a + m.d;
        if (t < 0) t = -t;
        if (t == 2) {
          ++r.parabolic_or_identity;
          return;
        }
        if (t > 2) {
          if (r.min_hyperbolic_abs_trace == 0 || t < r.min_hyperbolic_abs_trace)
            r.min_hyperbolic_abs_trace = t;
          if (t < gap) r.gap_violations.push_back(m);
        } else {
          r.gap_violations.push_back(m);  // elliptic element: impossible in the level group
        }
      });
    });
  }
  for (auto& th : pool) th.join();

  GammaNScanResult merged;
  merged.n = N;
  merged.height = H;
  for (const auto& r : partial) {
    merged.total += r.total;
    merged.parabolic_or_identity += r.parabolic_or_identity;
    if (r.min_hyperbolic_abs_trace != 0 &&
        (merged.min_hyperbolic_abs_trace == 0 ||
         r.min_hyperbolic_abs_trace < merged.min_hyperbolic_abs_trace))
      merged.min_hyperbolic_abs_trace = r.min_hyperbolic_abs_trace;
    merged.gap_violations.insert(merged.gap_violations.end(), r.gap_violations.begin(),
                                 r.gap_violations.end());
  }
  return merged;
}

std::vector<QuatCoords> quat_enumerate(std::int64_t p, const EnumerationWindow& window) {
  if (!is_prime_i64(p) || p % 4 != 3)
    throw std::domain_error("quat_enumerate: p must be a prime = 3 mod 4");
  if (window.height < 1) throw std::domain_error("enumeration window height must be >= 1");
  if (window.height > 10'000)
    throw std::domain_error("enumeration window height too large for this scan");
  const std::int64_t H = window.height;

  std::vector<QuatCoords> out;
  for (std::int64_t x1 = -H; x1 <= H; ++x1) {
    for (std::int64_t x3 = -H; x3 <= H; ++x3) {
      // norm 1 <=> x0^2 + x2^2 = 1 + p (x1^2 + x3^2)
      const std::int64_t rhs = 1 + p * (x1 * x1 + x3 * x3);
      const std::int64_t x0_max = std::min(H, isqrt_i64(rhs));
      for (std::int64_t x0 = 0; x0 <= x0_max; ++x0) {
        const std::int64_t rem = rhs - x0 * x0;
        std::int64_t x2;
        if (!is_square_i64(rem, &x2)) continue;
        if (x2 > H) continue;
        out.push_back(QuatCoords{x0, x1, x2, x3});
        if (x2 != 0) out.push_back(QuatCoords{x0, x1, -x2, x3});
        if (x0 != 0) {
          out.push_back(QuatCoords{-x0, x1, x2, x3});
          if (x2 != 0) out.push_back(QuatCoords{-x0, x1, -x2, x3});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool quat_in_congruence(const QuatCoords& x, std::int64_t N) {
  if (N < 2) throw std::domain_error("quat_in_congruence: N must be >= 2");
  return mod_floor(x.x0 - 1, N) == 0 && x.x1 % N == 0 && x.x2 % N == 0 && x.x3 % N == 0;
}

bool quat_in_congruence(const Quaternion& x, std::int64_t N) {
  if (N < 2) throw std::domain_error("quat_in_congruence: N must be >= 2");
  if (!x.is_integral())
    throw std::domain_error("quat_in_congruence: coordinates must be integral");
  return (num(x.x0()) - 1) % N == 0 && num(x.x1()) % N == 0 && num(x.x2()) % N == 0 &&
         num(x.x3()) % N == 0;
}

Quaternion to_quaternion(const QuatCoords& c, std::int64_t p) {
  QuaternionAlgebra alg{Rational(p), Rational(-1)};
  return Quaternion(alg, Rational(c.x0), Rational(c.x1), Rational(c.x2), Rational(c.x3));
}

}  // namespace conglab
