#ifndef TRIOBS_TILING_HPP_
#define TRIOBS_TILING_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "triobs/geometry.hpp"
#include "triobs/region.hpp"

// The half-equilateral triangle T with vertices (0,0), (1/sqrt3,0), (0,1),
// the rectangle R = (0,sqrt3)x(0,1), and the six rigid maps that tile R by T
// with sign vector delta = (1,-1,1,1,-1,1).  The transforms are fixed
// geometrically (reflection across the hypotenuse, rotation by pi/3 about
// (0,1), the point symmetry about the center of R, and their compositions);
// construction self-checks against the tiling and edge-identity oracles.

namespace triobs {

inline constexpr double kSqrt3 = 1.7320508075688772935274463415058724;

Triangle half_equilateral_triangle();      // T
Rectangle unit_height_rectangle();         // R
Triangle half_equilateral_prime();         // T viewed inside R' = (0,1/sqrt3)x(0,1)

struct Tiling {
  Triangle base;
  std::vector<RigidTransform> transforms;
  std::vector<int> delta;  // entries in {-1,+1}

  Tiling(Triangle base_, std::vector<RigidTransform> transforms_, std::vector<int> delta_);

  int tile_count() const { return static_cast<int>(transforms.size()); }
};

// The six-map tiling of R by T.  Throws std::logic_error if the constructed
// transforms fail their own verification oracle.
Tiling build_half_equilateral_tiling();

// The two-map non-admissible tiling of R' = (0,1/sqrt3)x(0,1): the identity
// and the point symmetry about the center of R'.
Tiling build_nonadmissible_pair_tiling();

struct TilingReport {
  std::size_t n_samples = 0;
  std::size_t n_used = 0;  // samples outside the boundary band
  double fraction_once = 0.0;
  double fraction_uncovered = 0.0;
  double fraction_multi = 0.0;
  double area_defect = 0.0;  // N * area(base) - area(target)
  bool pass = false;         // covered exactly once everywhere sampled, tiny defect
};

// Monte-Carlo cover/disjointness check: uniform points in `target`, points
// within `boundary_band` of any tile edge are excluded from the statistics.
TilingReport verify_tiling(const Tiling& t, const Region& target, std::size_t n_samples,
                           std::uint64_t seed, double boundary_band = 1e-9);

struct EdgeIdentity {
  std::string label;
  double max_deviation = 0.0;
};

struct EdgeIdentityReport {
  std::vector<EdgeIdentity> identities;  // the nine identities, corrected form
  double printed_variant_deviation = 0.0;  // K3 = K5 tested on the 02-edge as printed
  double max_deviation = 0.0;              // over the nine corrected identities
  bool pass = false;                       // max_deviation < tol
};

// Checks the nine matching/landing identities behind admissibility along the
// three edges of T, at n_lambda points per edge.  The first-block identity is
// checked on the 01-edge (its published form names the 02-edge, on which it
// is geometrically false; the deviation of that variant is reported too).
EdgeIdentityReport check_edge_identities(const Tiling& t, int n_lambda = 100,
                                         double tol = 1e-12);

// S_alpha = T \ cl(r_alpha T + (alpha,alpha)) with r_alpha = 1 - alpha(3+sqrt3).
// Requires 0 < alpha <= 1/(3+sqrt3); at the upper endpoint the removed set
// degenerates to the incenter of T.
Region strip_region(double alpha);

// L-shaped observation region of R: (0,sqrt3)x(0,alpha) union (0,alpha)x(0,1).
Region rect_strip_region(double alpha);

// Membership: p in base and K_h(p) in s_bar for some h.
Region pullback_union(const Tiling& t, Region s_bar);

double strip_alpha_max();  // 1/(3+sqrt3)

struct EqualityReport {
  std::size_t n_samples = 0;
  std::size_t n_used = 0;
  std::size_t disagreements = 0;
  std::vector<Point2> examples;  // up to 8 disagreement locations
};

// Samples the union of both bounding boxes; points within boundary_eps of
// either region's constituent boundaries are excluded.
EqualityReport verify_region_equality(const Region& a, const Region& b,
                                      std::size_t n_samples, double boundary_eps,
                                      std::uint64_t seed);

}  // namespace triobs

#endif  // TRIOBS_TILING_HPP_
