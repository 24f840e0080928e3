#ifndef TRIOBS_WAVE_HPP_
#define TRIOBS_WAVE_HPP_

#include <cstdint>
#include <vector>

#include "triobs/spectral.hpp"

// Closed-form spectral solutions of the Dirichlet wave equation,
//
//   u(t,x) = sum_k [ c_k cos(w_k t) + (d_k / w_k) sin(w_k t) ] basis_k(x),
//
// the real form of the exponential expansion.  Prolonging a triangle state
// multiplies every coefficient by N = 6 and re-reads the same folded modes on
// the rectangle; folding divides by 6 and round-trips exactly.
//
// Energy convention: D^s energies are coefficient quadratic forms weighted by
// the triangle Gram of the folded basis (rectangle-sine states use the exact
// diagonal sqrt3/4).  Prolonged states keep the triangle Gram, which makes
// the N^2 transport identities exact; the honest L^2(R) norm of a prolonged
// state is 6x the reported D^0 value.

namespace triobs {

enum class WaveBasis {
  RectSine,        // ebar_k on R
  TriangleFolded,  // e_k on T
  RectFolded,      // e_k read on R (image of the prolongation)
};

struct WaveState {
  WaveBasis basis = WaveBasis::TriangleFolded;
  std::vector<Mode> modes;
  std::vector<double> c;  // position data coefficients (u0)
  std::vector<double> d;  // velocity data coefficients (u1)

  WaveState() = default;
  WaveState(WaveBasis basis_, std::vector<Mode> modes_);

  std::size_t size() const { return modes.size(); }
};

struct EnergyPair {
  double e0 = 0.0;       // ||u0||_0^2
  double e_minus1 = 0.0; // ||u1||_{-1}^2
  double total() const { return e0 + e_minus1; }
};

// Shared evaluation context: the tiling plus the folded-basis cache that
// provides values, norms and the triangle Gram.
struct SpectralContext {
  Tiling tiling;
  FoldedBasis folded;

  SpectralContext(const Tiling& t, std::vector<Mode> modes, int quad_order)
      : tiling(t), folded(t, std::move(modes), quad_order) {}
};

double evaluate(const WaveState& s, double t, Point2 p, const SpectralContext& ctx);

// Modal amplitude a_k(t) and its time derivative.
double modal_amplitude(const WaveState& s, std::size_t idx, double t);
double modal_velocity(const WaveState& s, std::size_t idx, double t);

WaveState prolong_state(const WaveState& s, const SpectralContext& ctx);
WaveState fold_state(const WaveState& s_bar, const SpectralContext& ctx);

EnergyPair energy_pair(const WaveState& s, const SpectralContext& ctx);

// i.i.d. standard-normal coefficients over the given modes (counter-based,
// reproducible); basis TriangleFolded.
WaveState random_triangle_state(const std::vector<Mode>& modes, std::uint64_t seed,
                                std::uint64_t stream);

}  // namespace triobs

#endif  // TRIOBS_WAVE_HPP_
