#include "doctest.h"

#include <cmath>

#include "triobs/observability.hpp"
#include "triobs/quadrature.hpp"

using namespace triobs;

namespace {
SpectralContext& ctx8() {
  static SpectralContext ctx(build_half_equilateral_tiling(), mode_box(8, 8), 48);
  return ctx;
}
}  // namespace

TEST_CASE("t_alpha: closed form against adaptive quadrature") {
  InfResult r = t_alpha(0.125, 64);
  CHECK(r.argmin_k == 1);
  CHECK(r.value == doctest::Approx(2.1199288045806e-3).epsilon(1e-10));

  // independent oracle: adaptive Simpson of the integrand at the argmin
  for (double alpha : {0.05, 0.125, strip_alpha_max()}) {
    InfResult t = t_alpha(alpha, 64);
    int k = t.argmin_k == 0 ? 64 : t.argmin_k;
    double direct = adaptive_simpson(
        [&](double x) {
          double s = std::sin(M_PI * k * x / kSqrt3);
          return s * s;
        },
        0.0, alpha, 1e-13);
    if (t.argmin_k != 0) CHECK(t.value == doctest::Approx(direct).epsilon(1e-10));
    CHECK(t.value < alpha / 2.0);
    CHECK(t.value > 0.0);
  }

  // positivity and monotonicity across the admissible range
  double prev = 0.0;
  for (int i = 1; i <= 20; ++i) {
    double alpha = 0.01 * i;
    if (alpha > strip_alpha_max()) break;
    double v = t_alpha(alpha, 64).value;
    CHECK(v > prev);
    prev = v;
  }

  CHECK_THROWS_AS(t_alpha(0.3, 64), std::invalid_argument);
  CHECK_THROWS_AS(t_alpha(0.0, 64), std::invalid_argument);
  CHECK_THROWS_AS(t_alpha(0.125, 8), std::invalid_argument);
}

TEST_CASE("rect_constants: full observation, geometry factor, validity") {
  // full intervals: every k integrates to exactly l/2, so the infimum is exact
  for (int k = 1; k <= 64; ++k) {
    CHECK(sin_sq_integral({0.0, kSqrt3}, kSqrt3, k) ==
          doctest::Approx(kSqrt3 / 2.0).epsilon(1e-14));
    CHECK(sin_sq_integral({0.0, 1.0}, 1.0, k) == doctest::Approx(0.5).epsilon(1e-14));
  }
  RectObsConstants rc = rect_constants(kSqrt3, 1.0, {0.0, kSqrt3}, {0.0, 1.0}, 10.0, 64);
  CHECK(rc.t1 == doctest::Approx(kSqrt3 / 2.0).epsilon(1e-14));
  CHECK(rc.t2 == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(rc.m == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(rc.geometry_factor == doctest::Approx(40.0 / 3.0).epsilon(1e-12));
  CHECK(rc.valid);

  // T below the threshold flags the constant invalid
  RectObsConstants low =
      rect_constants(kSqrt3, 1.0, {0.0, 0.125}, {0.0, 0.125}, 1.0, 64);
  CHECK(low.time_threshold > 1.0);
  CHECK(low.c <= 0.0);
  CHECK_FALSE(low.valid);

  CHECK_THROWS_AS(rect_constants(kSqrt3, 1.0, {0.5, 0.5}, {0.0, 1.0}, 1.0, 64),
                  std::invalid_argument);
  CHECK_THROWS_AS(rect_constants(-1.0, 1.0, {0.0, 0.1}, {0.0, 0.1}, 1.0, 64),
                  std::invalid_argument);
  CHECK_THROWS_AS(rect_constants(kSqrt3, 1.0, {0.0, 0.1}, {0.0, 0.1}, 0.0, 64),
                  std::invalid_argument);
}

TEST_CASE("strip_constants: thresholds, published formula inconsistency") {
  StripObsConstants sc = strip_constants(0.125, 110.0, 64);
  CHECK(sc.r_alpha == doctest::Approx(1.0 - 0.125 * (3.0 + kSqrt3)).epsilon(1e-15));
  CHECK(sc.m_alpha == doctest::Approx(sc.t_alpha / kSqrt3).epsilon(1e-14));
  CHECK(sc.m_is_t_over_sqrt3);
  CHECK(sc.geometry_factor == 40.0 / 3.0);  // exactly
  CHECK(sc.T_alpha_derived == doctest::Approx(104.3732108736).epsilon(1e-10));
  CHECK(sc.T_alpha_paper == doctest::Approx(0.62582846620779).epsilon(1e-10));
  CHECK(sc.published_threshold_inconsistent);
  CHECK(sc.c_valid);

  // m_alpha = t_alpha / sqrt3 across the admissible range (the rescaled
  // integral over the shorter interval can never exceed the unit-scale one)
  for (int i = 1; i <= 21; ++i) {
    double alpha = std::min(0.01 * i, strip_alpha_max());
    StripObsConstants s = strip_constants(alpha, 10.0, 64);
    CHECK(s.m_is_t_over_sqrt3);
    CHECK(s.t_alpha / kSqrt3 <= s.t_alpha_prime + 1e-15);
  }

  // c_alpha changes sign exactly at the derived threshold
  double Td = sc.T_alpha_derived;
  CHECK(strip_constants(0.125, Td * (1.0 - 1e-9), 64).c_alpha < 0.0);
  CHECK(strip_constants(0.125, Td * (1.0 + 1e-9), 64).c_alpha > 0.0);
  // bisection confirms the root within the bracket
  double lo = Td * (1.0 - 1e-9), hi = Td * (1.0 + 1e-9);
  for (int i = 0; i < 60; ++i) {
    double mid = 0.5 * (lo + hi);
    (strip_constants(0.125, mid, 64).c_alpha < 0.0 ? lo : hi) = mid;
  }
  CHECK(std::abs(0.5 * (lo + hi) - Td) / Td < 1e-9);

  CHECK_THROWS_AS(strip_constants(0.25, 10.0, 64), std::invalid_argument);
  CHECK_THROWS_AS(strip_constants(0.125, -1.0, 64), std::invalid_argument);
}

TEST_CASE("observed_energy: separable closed form on the rectangle") {
  SpectralContext& ctx = ctx8();
  WaveState s(WaveBasis::RectSine, {{1, 1}});
  s.c[0] = 1.0;
  Region rect = Region::rectangle(unit_height_rectangle());
  double T = 2.0;
  ObservedInfo info;
  double got = observed_energy(s, rect, T, 16, 8, ctx, &info);
  double w = omega({1, 1});
  double expect = kSqrt3 / 4.0 * (T / 2.0 + std::sin(2.0 * w * T) / (4.0 * w));
  CHECK(got == doctest::Approx(expect).epsilon(1e-9));
  CHECK(info.resolution_rel_diff < 1e-8);

  WaveState zero(WaveBasis::RectSine, {{1, 1}});
  CHECK(observed_energy(zero, rect, T, 8, 8, ctx) == 0.0);
}

TEST_CASE("observed_energy: under-resolved quadrature raises ResolutionError") {
  SpectralContext& ctx = ctx8();
  WaveState s = random_triangle_state(mode_box(8, 8), 5, 0);
  Region strip = strip_region(0.125);
  CHECK_THROWS_AS(observed_energy(s, strip, 11.0, 2, 1, ctx), ResolutionError);
}

TEST_CASE("check_inequality: strip observation with the derived constants") {
  SpectralContext& ctx = ctx8();
  std::vector<Mode> modes = mode_box(6, 6);
  std::vector<WaveState> states;
  for (int i = 0; i < 5; ++i) states.push_back(random_triangle_state(modes, 31337, i));

  StripObsConstants sc = strip_constants(0.125, 1.0, 64);
  double T = 1.05 * sc.T_alpha_derived;
  sc = strip_constants(0.125, T, 64);
  REQUIRE(sc.c_valid);

  Region strip = strip_region(0.125);
  ObservabilityReport rep = check_inequality(states, strip, T, sc.c_alpha, /*c2=*/T,
                                             Direction::Both, ctx, 16, 8);
  CHECK(rep.constant_valid);
  CHECK(rep.all_pass);
  for (const StateCheck& chk : rep.states) {
    CHECK(chk.margin_lower >= 0.0);
    CHECK(chk.margin_upper >= 0.0);  // conservation envelope c2 = T
    CHECK(chk.resolution_rel_diff < 1e-8);
  }

  // zero state: both sides vanish
  std::vector<WaveState> zero = {WaveState(WaveBasis::TriangleFolded, modes)};
  ObservabilityReport zrep =
      check_inequality(zero, strip, 2.0, 1.0, 2.0, Direction::Both, ctx, 12, 8);
  CHECK(zrep.states.front().observed == 0.0);
  CHECK(zrep.states.front().margin_lower == 0.0);

  // an absurd constant fails through the verdict, not through an exception
  ObservabilityReport bad = check_inequality({states.front()}, strip, 2.0, 1e9, 1e-12,
                                             Direction::Both, ctx, 16, 8);
  CHECK(bad.constant_valid);
  CHECK_FALSE(bad.all_pass);
  CHECK(bad.states.front().margin_lower < 0.0);
  CHECK(bad.states.front().margin_upper < 0.0);

  CHECK_THROWS_AS(check_inequality({}, strip, 2.0, 1.0, 2.0, Direction::Both, ctx, 8, 8),
                  std::invalid_argument);
}

TEST_CASE("rectangle-side inequality: the source estimate on the L-strip") {
  // the triangle bound descends from the rectangle one; check the rectangle
  // estimate directly on sine-basis states with the same constant
  SpectralContext& ctx = ctx8();
  StripObsConstants sc = strip_constants(0.125, 1.0, 64);
  double T = 1.05 * sc.T_alpha_derived;
  sc = strip_constants(0.125, T, 64);

  std::vector<Mode> modes = mode_box(6, 6);
  std::vector<WaveState> states;
  for (int i = 0; i < 5; ++i) {
    WaveState s(WaveBasis::RectSine, modes);
    CounterRng rng(515, i);
    for (std::size_t m = 0; m < s.size(); ++m) {
      s.c[m] = rng.normal(2 * m);
      s.d[m] = rng.normal(2 * m + 1);
    }
    states.push_back(std::move(s));
  }
  ObservabilityReport rep = check_inequality(states, rect_strip_region(0.125), T,
                                             sc.c_alpha, T, Direction::Both, ctx, 16, 8);
  CHECK(rep.all_pass);
  for (const StateCheck& chk : rep.states) CHECK(chk.margin_lower >= 0.0);
}

TEST_CASE("tile pullback cells: total mass equals the strip area") {
  // sum_h |K_h^{-1} S cap T| = |S cap R| exactly, overlap or not
  const Tiling& t = ctx8().tiling;
  for (double alpha : {0.05, 0.125}) {
    Region sbar = rect_strip_region(alpha);
    std::vector<ConvexPolygon> cells = tile_pullback_cells(t, sbar);
    double total = 0.0;
    for (const ConvexPolygon& c : cells) total += c.area();
    double expect = alpha * kSqrt3 + alpha * (1.0 - alpha);
    CHECK(total == doctest::Approx(expect).epsilon(1e-12));
  }
  // the pieces overlap: their union inside T is smaller than their sum
  Region s125 = strip_region(0.125);
  std::vector<ConvexPolygon> cells = tile_pullback_cells(t, rect_strip_region(0.125));
  double total = 0.0;
  for (const ConvexPolygon& c : cells) total += c.area();
  CHECK(total > s125.area() * 1.05);
}

TEST_CASE("equivalence_check: N^2 transport and verdict agreement") {
  SpectralContext& ctx = ctx8();
  Region strip = strip_region(0.125);
  Region sbar = rect_strip_region(0.125);

  for (int i = 0; i < 2; ++i) {
    WaveState s = random_triangle_state(mode_box(8, 8), 808, i);
    EquivalenceReport rep = equivalence_check(s, sbar, 2.0, 1e-4, 1e4, ctx, &strip, 24, 8);

    CHECK(rep.energy_ratio == doctest::Approx(36.0).epsilon(1e-10));
    CHECK(rep.observed_ratio == doctest::Approx(36.0).epsilon(1e-6));
    REQUIRE(rep.observed_t_union.has_value());
    // the set-union integral is strictly smaller: the pullbacks overlap near
    // the vertices, which is why the transport identity needs the tile sum
    CHECK(rep.union_excess > 0.01);
    CHECK(rep.lower_t == rep.lower_r);
    CHECK(rep.upper_t == rep.upper_r);
  }

  // zero state: all four quantities vanish
  WaveState zero(WaveBasis::TriangleFolded, mode_box(8, 8));
  EquivalenceReport zrep = equivalence_check(zero, sbar, 2.0, 1.0, 1.0, ctx, &strip, 12, 8);
  CHECK(zrep.energy_t.total() == 0.0);
  CHECK(zrep.energy_r.total() == 0.0);
  CHECK(zrep.observed_t_tiles == 0.0);
  CHECK(zrep.observed_r == 0.0);

  // s_bar = R: the pullback is all of T and the tile sum is six copies
  WaveState s = random_triangle_state(mode_box(6, 6), 909, 0);
  Region rect = Region::rectangle(unit_height_rectangle());
  Region tri = Region::triangle(half_equilateral_triangle());
  EquivalenceReport full = equivalence_check(s, rect, 2.0, 1e-4, 1e4, ctx, &tri, 24, 8);
  CHECK(full.observed_ratio == doctest::Approx(36.0).epsilon(1e-6));
  CHECK(full.observed_t_tiles ==
        doctest::Approx(6.0 * *full.observed_t_union).epsilon(1e-6));
}
