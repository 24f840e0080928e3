#ifndef TRIOBS_OBSERVABILITY_HPP_
#define TRIOBS_OBSERVABILITY_HPP_

#include <optional>
#include <stdexcept>
#include <vector>

#include "triobs/wave.hpp"

// Observability constants and inequality verification.
//
// Rectangle condition (sides l1, l2, observed strips over J1, J2):
//   t_i = inf_k int_{J_i} sin^2(pi k x / l_i) dx,   m = min(t1/l1, t2/l2),
//   valid once  (l1^2+l2^2)(l1^4+l2^4) / (T^2 l1^2 l2^2) < m,
//   c = (T/pi) (m - geometry/T^2).
// The infima use sin^2: with plain sin the integrals decay like 1/k and the
// condition is vacuous.  For the edge strips of the triangle (l1 = sqrt3,
// l2 = 1, J = (0,alpha)) the geometry factor is exactly 40/3 and the
// operative threshold is T_alpha = sqrt(40 / (3 m_alpha)); the published
// closed form 8 sqrt((5/sqrt3) t_alpha) is inconsistent (it shrinks with the
// observed region and fails the positivity of c) and is reported as such.

namespace triobs {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
};

// int_J sin^2(pi k x / L) dx, closed form.
double sin_sq_integral(Interval j, double length_scale, int k);

struct InfResult {
  double value = 0.0;
  int argmin_k = 0;  // 0 marks the k->infinity limit |J|/2
};

// inf over k in {1..k_max} plus the limit |J|/2.
InfResult inf_sin_sq_integral(Interval j, double length_scale, int k_max);

// t_alpha = inf_k int_0^alpha sin^2(pi k x / sqrt3) dx.  Requires
// 0 < alpha <= 1/(3+sqrt3) and k_max >= 16.
InfResult t_alpha(double alpha, int k_max);

struct RectObsConstants {
  double l1 = 0.0, l2 = 0.0;
  Interval j1, j2;
  double t1 = 0.0, t2 = 0.0;
  int t1_argmin = 0, t2_argmin = 0;
  double m = 0.0;
  double geometry_factor = 0.0;  // (l1^2+l2^2)(l1^4+l2^4)/(l1^2 l2^2)
  double time_threshold = 0.0;   // sqrt(geometry_factor / m)
  double T = 0.0;
  double c = 0.0;     // (T/pi)(m - geometry_factor/T^2)
  bool valid = false; // T above threshold, c > 0
  bool m_zero = false;
};

RectObsConstants rect_constants(double l1, double l2, Interval j1, Interval j2, double T,
                                int k_max);

struct StripObsConstants {
  double alpha = 0.0;
  double r_alpha = 0.0;
  double t_alpha = 0.0;
  int t_alpha_argmin = 0;
  double t_alpha_prime = 0.0;
  double m_alpha = 0.0;
  bool m_is_t_over_sqrt3 = false;
  double geometry_factor = 0.0;   // exactly 40/3
  double T_alpha_derived = 0.0;   // sqrt(40 / (3 m_alpha))
  double T_alpha_paper = 0.0;     // 8 sqrt((5/sqrt3) t_alpha) as published
  bool published_threshold_inconsistent = false;  // c(T_alpha_paper) <= 0
  double T = 0.0;
  double c_alpha = 0.0;  // (T/pi)(t_alpha/sqrt3 - 40/(3T^2))
  bool c_valid = false;
};

StripObsConstants strip_constants(double alpha, double T, int k_max);

class ResolutionError : public std::runtime_error {
 public:
  explicit ResolutionError(const std::string& what) : std::runtime_error(what) {}
};

// int_0^T int_region |u|^2 dx dt through the bilinear factorization
// O = sum_jk (int a_j a_k dt)(int b_j b_k dx): the space Gram is cached, the
// time Gram uses composite Gauss panels no longer than the shortest modal
// period with `time_nodes_per_period` nodes each.  Every evaluation runs at
// the requested and at doubled resolution; a relative shift above 1e-6
// raises ResolutionError.
class ObservedEnergyEvaluator {
 public:
  ObservedEnergyEvaluator(const SpectralContext& ctx, WaveBasis basis,
                          std::vector<Mode> modes, std::vector<ConvexPolygon> cells,
                          double T, int space_order, int time_nodes_per_period);

  struct Result {
    double value = 0.0;
    double resolution_rel_diff = 0.0;
  };

  Result observed(const WaveState& s) const;

 private:
  std::vector<double> space_gram(int order) const;
  std::vector<double> time_gram(const WaveState& s, int nodes_per_period) const;

  const SpectralContext& ctx_;
  WaveBasis basis_;
  std::vector<Mode> modes_;
  std::vector<ConvexPolygon> cells_;
  double T_;
  int space_order_;
  int time_nodes_;
  std::vector<double> sg_coarse_, sg_fine_;
};

struct ObservedInfo {
  double resolution_rel_diff = 0.0;
};

double observed_energy(const WaveState& s, const Region& region, double T, int space_order,
                       int time_nodes_per_period, const SpectralContext& ctx,
                       ObservedInfo* info = nullptr);

enum class Direction { Lower, Upper, Both };

struct StateCheck {
  EnergyPair energy;
  double observed = 0.0;
  double margin_lower = 0.0;  // O - c1 E
  double margin_upper = 0.0;  // c2 E - O
  double resolution_rel_diff = 0.0;
};

struct ObservabilityReport {
  Direction direction = Direction::Lower;
  double c1 = 0.0, c2 = 0.0;
  double T = 0.0;
  bool constant_valid = false;  // c1 > 0 where the lower bound is requested
  std::vector<StateCheck> states;
  bool all_pass = false;
};

ObservabilityReport check_inequality(const std::vector<WaveState>& states,
                                     const Region& region, double T, double c1, double c2,
                                     Direction direction, const SpectralContext& ctx,
                                     int space_order, int time_nodes_per_period);

// Convex pieces of K_h^{-1}(cell) intersect base, over all tiles h and all
// cells of s_bar; integrating over them realizes sum_h int_{K_h^{-1} S_bar
// cap T}, the tile-sum that the prolongation transport identity scales by
// exactly N^2.  The pieces overlap wherever several tiles pull the strip
// back to the same spot, so their sum can exceed the set-union integral.
std::vector<ConvexPolygon> tile_pullback_cells(const Tiling& t, const Region& s_bar);

struct EquivalenceReport {
  EnergyPair energy_t, energy_r;
  double observed_t_tiles = 0.0;  // tile-sum on T
  double observed_r = 0.0;        // over s_bar on R
  std::optional<double> observed_t_union;  // over the set union, when supplied
  double energy_ratio = 0.0;      // energy_r.total() / energy_t.total()
  double observed_ratio = 0.0;    // observed_r / observed_t_tiles
  double union_excess = 0.0;      // (tiles - union)/union, when union supplied
  // verdicts with the same constants on both sides
  bool lower_t = false, lower_r = false, upper_t = false, upper_r = false;
  double resolution_rel_diff = 0.0;
};

// Computes both sides of the transport identity for the same constants:
// triangle state s against (tile-sum over pullback pieces, optional set
// union), prolonged state against s_bar.
EquivalenceReport equivalence_check(const WaveState& s, const Region& s_bar, double T,
                                    double c1, double c2, const SpectralContext& ctx,
                                    const Region* s_union, int space_order,
                                    int time_nodes_per_period);

}  // namespace triobs

#endif  // TRIOBS_OBSERVABILITY_HPP_
