#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "conglab/congruence.hpp"
#include "conglab/modular.hpp"
#include "oracles.hpp"

using namespace conglab;

namespace {

std::mt19937 rng(31337);

IntMat2 random_sl2_word(int len = 10) {
  const IntMat2 S{0, -1, 1, 0};
  const IntMat2 T{1, 1, 0, 1};
  const IntMat2 Tinv{1, -1, 0, 1};
  IntMat2 g = IntMat2::identity();
  std::uniform_int_distribution<int> pick(0, 2);
  for (int i = 0; i < len; ++i) {
    switch (pick(rng)) {
      case 0: g = g * S; break;
      case 1: g = g * T; break;
      default: g = g * Tinv; break;
    }
  }
  return g;
}

}  // namespace

TEST_CASE("membership in the level group") {
  CHECK(in_gamma_n(IntMat2{1, 5, 0, 1}, 5));
  CHECK(!in_gamma_n(IntMat2{1, 1, 0, 1}, 5));
  CHECK(in_gamma_n(IntMat2::identity(), 7));
  CHECK(!in_gamma_n(-IntMat2::identity(), 3));
  CHECK(in_gamma_n(IntMat2{1, 5, -5, -24}, 5));
  CHECK_THROWS_AS(in_gamma_n(IntMat2{2, 0, 0, 2}, 5), std::domain_error);
  CHECK_THROWS_AS(in_gamma_n(IntMat2::identity(), 1), std::domain_error);
}

TEST_CASE("group orders modulo N") {
  CHECK(sl2_order_mod(2) == 6);
  CHECK(sl2_order_mod(3) == 24);
  CHECK(sl2_order_mod(5) == 120);
  for (std::int64_t N = 2; N <= 12; ++N) {
    CAPTURE(N);
    CHECK(sl2_order_mod(N) == oracle::brute_force_sl2_order(N));
    CHECK(sl2_order_mod(N) < Int(N) * N * N);
  }
  for (std::int64_t N = 2; N <= 200; ++N) CHECK(sl2_order_mod(N) < Int(N) * N * N);
  CHECK_THROWS_AS(sl2_order_mod(1), std::domain_error);
}

TEST_CASE("index in PSL2") {
  CHECK(psl2_index(3) == 12);
  CHECK(psl2_index(5) == 60);
  CHECK(psl2_index(7) == 168);  // 7^3 (1 - 1/49) / 2
  CHECK_THROWS_AS(psl2_index(2), std::domain_error);
}

TEST_CASE("trace witness") {
  CHECK(trace_witness(3) == IntMat2{0, -1, 1, 3});
  ClassTable table;
  for (std::int64_t N = 3; N <= 50; ++N) {
    IntMat2 w = trace_witness(N);
    CHECK(w.det() == 1);
    CHECK(classify(w) == ElementKind::Hyperbolic);
    CHECK(is_primitive(w, table));
  }
  CHECK_THROWS_AS(trace_witness(2), std::domain_error);
}

TEST_CASE("systole witness -beta^2") {
  IntMat2 w = systole_witness(trace_witness(3), 3);
  CHECK(w == IntMat2{1, 3, -3, -8});
  CHECK(w.trace() == -7);

  CHECK(systole_witness(trace_witness(5), 5).trace() == -23);

  for (std::int64_t N = 3; N <= 200; ++N) {
    IntMat2 beta = trace_witness(N);
    IntMat2 sys = systole_witness(beta, N);
    CHECK(in_gamma_n(sys, N));
    CHECK(sys.trace() == -(Int(N) * N - 2));
  }

  // conjugated and negated witnesses work too (trace -N case)
  for (std::int64_t N = 3; N <= 20; ++N) {
    IntMat2 g = random_sl2_word();
    IntMat2 beta = g * trace_witness(N) * g.inverse_unimodular();
    CHECK(in_gamma_n(systole_witness(beta, N), N));
    CHECK(systole_witness(-beta, N).trace() == -(Int(N) * N - 2));
  }

  CHECK_THROWS_AS(systole_witness(IntMat2{0, -1, 1, 4}, 3), std::domain_error);
  CHECK_THROWS_AS(systole_witness(IntMat2{2, 3, 1, 2}, 3), std::domain_error);
}

TEST_CASE("window enumeration basics") {
  auto small = enumerate_gamma_n(5, EnumerationWindow{3});
  // only the identity fits in a height-3 window at level 5
  REQUIRE(small.size() == 1);
  CHECK(to_int_mat(small[0]) == IntMat2::identity());

  auto window = enumerate_gamma_n(5, EnumerationWindow{100});
  std::set<std::array<std::int64_t, 4>> seen;
  bool has_unipotent = false;
  for (const Mat2i& m : window) {
    CHECK(m.det() == 1);
    CHECK(in_gamma_n(m, 5));
    CHECK(std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)}) <= 100);
    seen.insert({m.a, m.b, m.c, m.d});
    if (m == Mat2i{1, 5, 0, 1}) has_unipotent = true;
    std::int64_t t = std::abs(m.a + m.d);
    if (t != 2) CHECK(t >= 23);  // N^2 - 2 at level 5
  }
  CHECK(seen.size() == window.size());  // no duplicates
  CHECK(has_unipotent);

  CHECK_THROWS_AS(enumerate_gamma_n(2, EnumerationWindow{10}), std::domain_error);
  CHECK_THROWS_AS(enumerate_gamma_n(5, EnumerationWindow{0}), std::domain_error);
}

TEST_CASE("window enumeration is exhaustive (cross-check by direct scan)") {
  const std::int64_t N = 4, H = 40;
  std::set<std::array<std::int64_t, 4>> direct;
  for (std::int64_t a = -H; a <= H; ++a)
    for (std::int64_t b = -H; b <= H; ++b)
      for (std::int64_t c = -H; c <= H; ++c) {
        if (a == 0) {
          if (b * c != -1) continue;
          for (std::int64_t d = -H; d <= H; ++d)
            if ((a - 1) % N == 0 && b % N == 0 && c % N == 0 && (d - 1) % N == 0)
              direct.insert({a, b, c, d});
          continue;
        }
        std::int64_t numv = 1 + b * c;
        if (numv % a != 0) continue;
        std::int64_t d = numv / a;
        if (d < -H || d > H) continue;
        if ((a - 1) % N == 0 && b % N == 0 && c % N == 0 && (d - 1) % N == 0)
          direct.insert({a, b, c, d});
      }
  auto fast = enumerate_gamma_n(N, EnumerationWindow{H});
  std::set<std::array<std::int64_t, 4>> got;
  for (const Mat2i& m : fast) got.insert({m.a, m.b, m.c, m.d});
  CHECK(got == direct);
}

TEST_CASE("level groups are closed under product and inverse within the window") {
  const std::int64_t N = 5, H = 60;
  auto window = enumerate_gamma_n(N, EnumerationWindow{H});
  std::set<std::array<std::int64_t, 4>> set;
  for (const Mat2i& m : window) set.insert({m.a, m.b, m.c, m.d});
  for (const Mat2i& x : window) {
    Mat2i inv{x.d, -x.b, -x.c, x.a};
    CHECK(set.count({inv.a, inv.b, inv.c, inv.d}) == 1);  // same entry bound
    for (const Mat2i& y : window) {
      Mat2i p = x * y;
      if (std::max({std::abs(p.a), std::abs(p.b), std::abs(p.c), std::abs(p.d)}) <= H)
        CHECK(set.count({p.a, p.b, p.c, p.d}) == 1);
    }
  }
}

TEST_CASE("parallel scan merges deterministically") {
  GammaNScanResult one = scan_gamma_n(5, EnumerationWindow{400}, 1);
  GammaNScanResult four = scan_gamma_n(5, EnumerationWindow{400}, 4);
  CHECK(one.total == four.total);
  CHECK(one.parabolic_or_identity == four.parabolic_or_identity);
  CHECK(one.min_hyperbolic_abs_trace == four.min_hyperbolic_abs_trace);
  CHECK(one.gap_violations.empty());
  CHECK(four.gap_violations.empty());
  CHECK(one.total ==
        static_cast<std::int64_t>(enumerate_gamma_n(5, EnumerationWindow{400}).size()));
  CHECK(one.min_hyperbolic_abs_trace == 23);
}

TEST_CASE("quaternion unit enumeration at p = 3") {
  auto units = quat_enumerate(3, EnumerationWindow{10});
  std::set<std::array<std::int64_t, 4>> set;
  for (const QuatCoords& q : units) {
    // reduced norm is 1
    CHECK(q.x0 * q.x0 - 3 * q.x1 * q.x1 + q.x2 * q.x2 - 3 * q.x3 * q.x3 == 1);
    set.insert({q.x0, q.x1, q.x2, q.x3});
  }
  CHECK(set.size() == units.size());
  CHECK(set.count({1, 0, 0, 0}) == 1);
  CHECK(set.count({0, 0, 1, 0}) == 1);  // trace-zero unit j
  CHECK(set.count({2, 0, 0, 1}) == 1);  // trace 4, hyperbolic
  CHECK(std::is_sorted(units.begin(), units.end()));

  // division signature: no |trace| = 2 other than +-1
  for (const QuatCoords& q : units) {
    if (std::abs(q.reduced_trace()) == 2) {
      CHECK(std::abs(q.x0) == 1);
      CHECK(q.x1 == 0);
      CHECK(q.x2 == 0);
      CHECK(q.x3 == 0);
    }
  }
  CHECK_THROWS_AS(quat_enumerate(5, EnumerationWindow{5}), std::domain_error);
  CHECK_THROWS_AS(quat_enumerate(4, EnumerationWindow{5}), std::domain_error);
}

TEST_CASE("quaternionic enumeration is exhaustive (direct cross-check)") {
  const std::int64_t H = 12, p = 7;
  std::set<std::array<std::int64_t, 4>> direct;
  for (std::int64_t x0 = -H; x0 <= H; ++x0)
    for (std::int64_t x1 = -H; x1 <= H; ++x1)
      for (std::int64_t x2 = -H; x2 <= H; ++x2)
        for (std::int64_t x3 = -H; x3 <= H; ++x3)
          if (x0 * x0 - p * x1 * x1 + x2 * x2 - p * x3 * x3 == 1)
            direct.insert({x0, x1, x2, x3});
  std::set<std::array<std::int64_t, 4>> got;
  for (const QuatCoords& q : quat_enumerate(p, EnumerationWindow{H}))
    got.insert({q.x0, q.x1, q.x2, q.x3});
  CHECK(got == direct);
}

TEST_CASE("quaternionic congruence membership") {
  CHECK(quat_in_congruence(QuatCoords{1, 0, 0, 0}, 3));
  CHECK(quat_in_congruence(QuatCoords{1, 0, 0, 0}, 97));
  CHECK(!quat_in_congruence(QuatCoords{2, 0, 0, 1}, 3));
  CHECK(quat_in_congruence(QuatCoords{10, 3, 6, 6}, 3));

  QuaternionAlgebra alg{Rational(3), Rational(-1)};
  CHECK(quat_in_congruence(Quaternion(alg, 10, 3, 6, 6), 3));
  CHECK_THROWS_AS(quat_in_congruence(Quaternion(alg, Rational(1, 2), 0, 0, 0), 3),
                  std::domain_error);
}

TEST_CASE("quaternionic congruence trace gap within a desk window") {
  auto units = quat_enumerate(3, EnumerationWindow{60});
  for (std::int64_t N : {3, 5, 7}) {
    for (const QuatCoords& q : units) {
      if (!quat_in_congruence(q, N)) continue;
      std::int64_t t = std::abs(q.reduced_trace());
      if (t == 2) {
        // only the identity: x0 = -1 is never congruent to 1 mod N
        CHECK(q.x0 == 1);
        continue;
      }
      CAPTURE(N);
      CHECK(t >= 2 * N * N - 2);
      // the sharpening behind the gap: x0 = 1 mod N^2
      CHECK((q.x0 - 1) % (N * N) == 0);
    }
  }
}

TEST_CASE("congruence level constructors") {
  CHECK(CongruenceLevel::modular(7).setting == Setting::Modular);
  CHECK(CongruenceLevel::quaternionic(3, 5).p == 3);
  CHECK_THROWS_AS(CongruenceLevel::modular(1), std::domain_error);
  CHECK_THROWS_AS(CongruenceLevel::quaternionic(5, 3), std::domain_error);
  CHECK_THROWS_AS(CongruenceLevel::quaternionic(9, 3), std::domain_error);
}
