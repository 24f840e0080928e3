#include "triobs/wave.hpp"

#include <cmath>
#include <stdexcept>

namespace triobs {

namespace {
constexpr double kRectSineNormSq = kSqrt3 / 4.0;  // ||ebar_k||^2 on R, every k

double basis_value(WaveBasis basis, const SpectralContext& ctx, Mode k, int idx, Point2 p) {
  if (basis == WaveBasis::RectSine) return rect_eigenfunction(k, p);
  return ctx.folded.eval(idx, p);
}
}  // namespace

WaveState::WaveState(WaveBasis basis_, std::vector<Mode> modes_)
    : basis(basis_), modes(std::move(modes_)), c(modes.size(), 0.0), d(modes.size(), 0.0) {
  for (Mode k : modes) validate_mode(k);
}

double modal_amplitude(const WaveState& s, std::size_t idx, double t) {
  double w = omega(s.modes[idx]);
  return s.c[idx] * std::cos(w * t) + s.d[idx] / w * std::sin(w * t);
}

double modal_velocity(const WaveState& s, std::size_t idx, double t) {
  double w = omega(s.modes[idx]);
  return -s.c[idx] * w * std::sin(w * t) + s.d[idx] * std::cos(w * t);
}

double evaluate(const WaveState& s, double t, Point2 p, const SpectralContext& ctx) {
  double acc = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    int idx = s.basis == WaveBasis::RectSine ? -1 : ctx.folded.index_of(s.modes[i]);
    if (s.basis != WaveBasis::RectSine && idx < 0)
      throw std::invalid_argument("evaluate: state mode missing from context basis");
    acc += modal_amplitude(s, i, t) * basis_value(s.basis, ctx, s.modes[i], idx, p);
  }
  return acc;
}

WaveState prolong_state(const WaveState& s, const SpectralContext& ctx) {
  if (s.basis != WaveBasis::TriangleFolded)
    throw std::invalid_argument("prolong_state: expects a triangle state");
  const double n = ctx.tiling.tile_count();
  WaveState out(WaveBasis::RectFolded, s.modes);
  for (std::size_t i = 0; i < s.size(); ++i) {
    out.c[i] = n * s.c[i];
    out.d[i] = n * s.d[i];
  }
  return out;
}

WaveState fold_state(const WaveState& s_bar, const SpectralContext& ctx) {
  if (s_bar.basis != WaveBasis::RectFolded)
    throw std::invalid_argument("fold_state: expects a prolonged rectangle state");
  const double n = ctx.tiling.tile_count();
  WaveState out(WaveBasis::TriangleFolded, s_bar.modes);
  for (std::size_t i = 0; i < s_bar.size(); ++i) {
    out.c[i] = s_bar.c[i] / n;
    out.d[i] = s_bar.d[i] / n;
  }
  return out;
}

EnergyPair energy_pair(const WaveState& s, const SpectralContext& ctx) {
  EnergyPair e;
  if (s.basis == WaveBasis::RectSine) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      double g = eigenvalue(s.modes[i]);
      e.e0 += s.c[i] * s.c[i] * kRectSineNormSq;
      e.e_minus1 += s.d[i] * s.d[i] * kRectSineNormSq / g;
    }
    return e;
  }
  // folded bases: full Gram form; cross terms matter only inside coincidence
  // classes of the folded family
  std::vector<int> idx(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    idx[i] = ctx.folded.index_of(s.modes[i]);
    if (idx[i] < 0)
      throw std::invalid_argument("energy_pair: state mode missing from context basis");
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    double wi = omega(s.modes[i]);
    for (std::size_t j = 0; j < s.size(); ++j) {
      double g = ctx.folded.gram(idx[i], idx[j]);
      if (g == 0.0) continue;
      e.e0 += s.c[i] * s.c[j] * g;
      e.e_minus1 += s.d[i] * s.d[j] * g / (wi * omega(s.modes[j]));
    }
  }
  return e;
}

WaveState random_triangle_state(const std::vector<Mode>& modes, std::uint64_t seed,
                                std::uint64_t stream) {
  WaveState s(WaveBasis::TriangleFolded, modes);
  CounterRng rng(seed, stream);
  for (std::size_t i = 0; i < s.size(); ++i) {
    s.c[i] = rng.normal(2 * i);
    s.d[i] = rng.normal(2 * i + 1);
  }
  return s;
}

}  // namespace triobs
