#include "doctest.h"

#include <cmath>

#include "triobs/wave.hpp"

using namespace triobs;

namespace {
SpectralContext& ctx8() {
  static SpectralContext ctx(build_half_equilateral_tiling(), mode_box(8, 8), 48);
  return ctx;
}
}  // namespace

TEST_CASE("evaluate: initial data and velocity") {
  SpectralContext& ctx = ctx8();
  WaveState s = random_triangle_state(mode_box(6, 6), 11, 0);
  CounterRng rng(12);
  Region tri = Region::triangle(ctx.tiling.base);

  for (std::uint64_t i = 0; i < 20; ++i) {
    Point2 p = sample_region(rng, tri, i);
    // u(0,p) = sum c_k e_k(p)
    double direct = 0.0;
    for (std::size_t m = 0; m < s.size(); ++m)
      direct += s.c[m] * ctx.folded.eval(ctx.folded.index_of(s.modes[m]), p);
    CHECK(evaluate(s, 0.0, p, ctx) == doctest::Approx(direct).epsilon(1e-12));

    // du/dt(0,p) = sum d_k e_k(p), via central difference
    double h = 1e-6;
    double vel = (evaluate(s, h, p, ctx) - evaluate(s, -h, p, ctx)) / (2.0 * h);
    double expect = 0.0;
    for (std::size_t m = 0; m < s.size(); ++m)
      expect += s.d[m] * ctx.folded.eval(ctx.folded.index_of(s.modes[m]), p);
    CHECK(vel == doctest::Approx(expect).epsilon(1e-5));
  }
}

TEST_CASE("single cosine mode is periodic") {
  SpectralContext& ctx = ctx8();
  WaveState s(WaveBasis::TriangleFolded, {{1, 3}});
  s.c[0] = 1.0;
  double period = 2.0 * M_PI / omega({1, 3});
  Point2 p{0.15, 0.4};
  CHECK(evaluate(s, period, p, ctx) == doctest::Approx(evaluate(s, 0.0, p, ctx)).epsilon(1e-10));
}

TEST_CASE("modal amplitudes solve a'' + gamma a = 0 and conserve energy") {
  WaveState s = random_triangle_state(mode_box(4, 4), 3, 1);
  double h = 1e-5;
  for (std::size_t m = 0; m < s.size(); ++m) {
    double gamma = eigenvalue(s.modes[m]);
    for (double t : {0.3, 1.7}) {
      double a2 = (modal_amplitude(s, m, t + h) - 2.0 * modal_amplitude(s, m, t) +
                   modal_amplitude(s, m, t - h)) /
                  (h * h);
      CHECK(std::abs(a2 + gamma * modal_amplitude(s, m, t)) < 1e-4);
    }
    // gamma a(t)^2 + a'(t)^2 is constant
    double q0 = gamma * std::pow(modal_amplitude(s, m, 0.0), 2) +
                std::pow(modal_velocity(s, m, 0.0), 2);
    double q1 = gamma * std::pow(modal_amplitude(s, m, 2.31), 2) +
                std::pow(modal_velocity(s, m, 2.31), 2);
    CHECK(q0 == doctest::Approx(q1).epsilon(1e-10));
  }
}

TEST_CASE("prolong_state: coefficients, pointwise transport, round trip") {
  SpectralContext& ctx = ctx8();
  WaveState s = random_triangle_state(mode_box(6, 6), 21, 2);
  WaveState bar = prolong_state(s, ctx);
  CHECK(bar.basis == WaveBasis::RectFolded);
  for (std::size_t m = 0; m < s.size(); ++m) {
    CHECK(bar.c[m] == doctest::Approx(6.0 * s.c[m]).epsilon(1e-15));
    CHECK(bar.d[m] == doctest::Approx(6.0 * s.d[m]).epsilon(1e-15));
  }

  // single-mode example: {(1,1):1} -> {(1,1):6}
  WaveState single(WaveBasis::TriangleFolded, {{1, 1}});
  single.c[0] = 1.0;
  CHECK(prolong_state(single, ctx).c[0] == doctest::Approx(6.0).epsilon(1e-15));

  // ubar(t, K_h p) = delta_h * 6 * u(t, p)
  CounterRng rng(22);
  Region tri = Region::triangle(ctx.tiling.base);
  for (std::uint64_t i = 0; i < 100; ++i) {
    Point2 p = sample_region(rng, tri, i);
    double t = rng.uniform(100000 + i, 0.0, 2.0);
    int h = static_cast<int>(rng.bits(200000 + i) % 6);
    double u = evaluate(s, t, p, ctx);
    double ub = evaluate(bar, t, ctx.tiling.transforms[h](p), ctx);
    CHECK(std::abs(ub - ctx.tiling.delta[h] * 6.0 * u) < 1e-10);
    // and ubar = 6 u on T itself
    CHECK(std::abs(evaluate(bar, t, p, ctx) - 6.0 * u) < 1e-10);
  }

  WaveState back = fold_state(bar, ctx);
  CHECK(back.basis == WaveBasis::TriangleFolded);
  for (std::size_t m = 0; m < s.size(); ++m) {
    CHECK(back.c[m] == doctest::Approx(s.c[m]).epsilon(1e-12));
    CHECK(back.d[m] == doctest::Approx(s.d[m]).epsilon(1e-12));
  }

  // zero state stays zero
  WaveState zero(WaveBasis::TriangleFolded, {{1, 3}});
  WaveState zbar = prolong_state(zero, ctx);
  CHECK(zbar.c[0] == 0.0);
  CHECK(zbar.d[0] == 0.0);

  CHECK_THROWS_AS(prolong_state(bar, ctx), std::invalid_argument);
  CHECK_THROWS_AS(fold_state(s, ctx), std::invalid_argument);
}

TEST_CASE("energy pairs: rectangle sine norms and the N^2 transport") {
  SpectralContext& ctx = ctx8();

  WaveState r(WaveBasis::RectSine, {{1, 1}});
  r.c[0] = 1.0;
  EnergyPair e = energy_pair(r, ctx);
  CHECK(e.e0 == doctest::Approx(kSqrt3 / 4.0).epsilon(1e-15));
  CHECK(e.e_minus1 == 0.0);

  WaveState rv(WaveBasis::RectSine, {{1, 1}});
  rv.d[0] = 1.0;
  EnergyPair ev = energy_pair(rv, ctx);
  CHECK(ev.e0 == 0.0);
  CHECK(ev.e_minus1 ==
        doctest::Approx(kSqrt3 / 4.0 / (4.0 * M_PI * M_PI / 3.0)).epsilon(1e-14));

  // triangle survivor: ||e_k||_T^2 = sqrt3/2
  WaveState ts(WaveBasis::TriangleFolded, {{1, 3}});
  ts.c[0] = 1.0;
  EnergyPair et = energy_pair(ts, ctx);
  CHECK(et.e0 == doctest::Approx(kSqrt3 / 2.0).epsilon(1e-10));

  // prolonged pair is exactly 36x the original
  WaveState s = random_triangle_state(mode_box(8, 8), 77, 5);
  EnergyPair a = energy_pair(s, ctx);
  EnergyPair b = energy_pair(prolong_state(s, ctx), ctx);
  CHECK(b.e0 == doctest::Approx(36.0 * a.e0).epsilon(1e-12));
  CHECK(b.e_minus1 == doctest::Approx(36.0 * a.e_minus1).epsilon(1e-12));

  // null modes carry no energy
  WaveState dead(WaveBasis::TriangleFolded, {{1, 1}, {2, 1}});
  dead.c = {3.0, 4.0};
  dead.d = {1.0, 2.0};
  EnergyPair de = energy_pair(dead, ctx);
  CHECK(std::abs(de.e0) < 1e-9);
  CHECK(std::abs(de.e_minus1) < 1e-9);
}

TEST_CASE("field-level conservation of the modal energy sum") {
  SpectralContext& ctx = ctx8();
  WaveState s = random_triangle_state(mode_box(5, 5), 404, 9);
  auto quantity = [&](double t) {
    double acc = 0.0;
    for (std::size_t m = 0; m < s.size(); ++m) {
      int idx = ctx.folded.index_of(s.modes[m]);
      double w2 = ctx.folded.norm_sq_triangle(idx);
      double gamma = eigenvalue(s.modes[m]);
      acc += w2 * (gamma * std::pow(modal_amplitude(s, m, t), 2) +
                   std::pow(modal_velocity(s, m, t), 2));
    }
    return acc;
  };
  double q0 = quantity(0.0);
  for (double t : {0.37, 1.94, 7.5}) CHECK(quantity(t) == doctest::Approx(q0).epsilon(1e-10));
}
