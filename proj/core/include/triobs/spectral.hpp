#ifndef TRIOBS_SPECTRAL_HPP_
#define TRIOBS_SPECTRAL_HPP_

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "triobs/quadrature.hpp"
#include "triobs/rng.hpp"
#include "triobs/tiling.hpp"

// Dirichlet eigenpairs on the rectangle and their foldings onto the triangle.
//
//   ebar_k(x) = sin(pi k1 x1 / sqrt3) sin(pi k2 x2),  gamma_k = pi^2 (k1^2/3 + k2^2)
//   e_k(x)    = sum_h delta_h ebar_k(K_h x)
//
// The folded family spans L^2(T) but is not index-faithful: modes with
// k1+k2 odd, k1 = k2 or k1 = 3 k2 fold to zero, and distinct surviving
// indices can produce the same function.  The basis object detects both
// numerically and the callers decide what to do with them.

namespace triobs {

struct Mode {
  int k1 = 1;
  int k2 = 1;

  friend bool operator<(Mode a, Mode b) {
    return a.k1 != b.k1 ? a.k1 < b.k1 : a.k2 < b.k2;
  }
  friend bool operator==(Mode a, Mode b) { return a.k1 == b.k1 && a.k2 == b.k2; }
};

inline void validate_mode(Mode k) {
  if (k.k1 < 1 || k.k2 < 1) throw std::invalid_argument("Mode: indices must be >= 1");
}

inline double eigenvalue(Mode k) {
  return M_PI * M_PI * (k.k1 * k.k1 / 3.0 + static_cast<double>(k.k2) * k.k2);
}

inline double omega(Mode k) { return std::sqrt(eigenvalue(k)); }

struct EigenPair {
  Mode mode;
  double gamma = 0.0;  // Dirichlet eigenvalue, shared by ebar_k and e_k
  double omega = 0.0;  // sqrt(gamma)
};

inline EigenPair eigenpair(Mode k) {
  validate_mode(k);
  return {k, eigenvalue(k), omega(k)};
}

inline double rect_eigenfunction(Mode k, Point2 p) {
  return std::sin(M_PI * k.k1 * p.x1 / kSqrt3) * std::sin(M_PI * k.k2 * p.x2);
}

inline double folded_eigenfunction(const Tiling& t, Mode k, Point2 p) {
  double s = 0.0;
  for (std::size_t h = 0; h < t.transforms.size(); ++h)
    s += t.delta[h] * rect_eigenfunction(k, t.transforms[h](p));
  return s;
}

enum class DomainTag { TriangleT, RectangleR };

struct SpectralField {
  DomainTag domain = DomainTag::TriangleT;
  std::map<Mode, double> coeffs;
};

// (sum_k gamma_k^s c_k^2)^(1/2): the spectral-scale coefficient norm.
double sobolev_norm(const SpectralField& f, double s);

inline std::vector<Mode> mode_box(int k1_max, int k2_max) {
  std::vector<Mode> m;
  for (int a = 1; a <= k1_max; ++a)
    for (int b = 1; b <= k2_max; ++b) m.push_back({a, b});
  return m;
}

class DegenerateModeError : public std::runtime_error {
 public:
  explicit DegenerateModeError(const std::string& what) : std::runtime_error(what) {}
};

// Folded eigenfunctions over a fixed mode list with cached L^2(T) norms and
// Gram matrix (computed by a Duffy rule of the given order on T).
class FoldedBasis {
 public:
  static constexpr double kNullNormSq = 1e-12;

  FoldedBasis(const Tiling& tiling, std::vector<Mode> modes, int quad_order);

  const Tiling& tiling() const { return tiling_; }
  const std::vector<Mode>& modes() const { return modes_; }
  int size() const { return static_cast<int>(modes_.size()); }
  int quad_order() const { return quad_order_; }
  int index_of(Mode k) const;  // -1 when absent

  double eval(int idx, Point2 p) const { return folded_eigenfunction(tiling_, modes_[idx], p); }
  double norm_sq_triangle(int idx) const { return gram_[idx * modes_.size() + idx]; }
  bool is_null(int idx) const { return norm_sq_triangle(idx) < kNullNormSq; }
  // <e_i, e_j> over T
  double gram(int i, int j) const { return gram_[i * modes_.size() + j]; }

 private:
  Tiling tiling_;
  std::vector<Mode> modes_;
  int quad_order_;
  std::vector<double> gram_;
};

struct ModeStructure {
  std::vector<Mode> null_modes;                    // fold to (numerically) zero
  std::vector<std::vector<Mode>> coincidences;     // groups of proportional survivors
  double max_cross_normalized = 0.0;               // off-class normalized inner product
};

// Normalized-Gram classification: |g_ij|/sqrt(g_ii g_jj) > 1 - 1e-6 with equal
// eigenvalue marks a coincidence; everything else should be orthogonal.
ModeStructure classify_modes(const FoldedBasis& basis);

// Coefficients of f against the rectangle sine basis over `rule`'s domain R:
// c_k = <f, ebar_k> / <ebar_k, ebar_k>, both by quadrature.
SpectralField project_rect(const std::function<double(Point2)>& f,
                           const std::vector<Mode>& modes, const QuadratureRule& rule);

// Coefficients against the folded basis over T.  Throws DegenerateModeError
// if any requested mode folds to zero.
SpectralField project_folded(const std::function<double(Point2)>& f,
                             const std::vector<Mode>& modes, const FoldedBasis& basis,
                             const QuadratureRule& rule);

class TileSeamError : public std::runtime_error {
 public:
  explicit TileSeamError(const std::string& what) : std::runtime_error(what) {}
};

// Index h of the unique open tile K_h(base) containing y; points within
// seam_tol of a tile boundary (or outside every tile) raise TileSeamError.
int locate_tile(const Tiling& t, Point2 y, double seam_tol = 1e-12);

// P_delta f: evaluable on the tiled domain, (P f)(K_h x) = delta_h f(x).
inline std::function<double(Point2)> prolong(const Tiling& t,
                                             std::function<double(Point2)> f) {
  return [t, f = std::move(f)](Point2 y) {
    int h = locate_tile(t, y);
    return t.delta[h] * f(t.transforms[h].inverse()(y));
  };
}

// F_delta g: (1/N^2) sum_h delta_h g(K_h x), evaluable on the base.
inline std::function<double(Point2)> fold(const Tiling& t, std::function<double(Point2)> g) {
  const double scale = 1.0 / (static_cast<double>(t.tile_count()) * t.tile_count());
  return [t, g = std::move(g), scale](Point2 x) {
    double s = 0.0;
    for (std::size_t h = 0; h < t.transforms.size(); ++h)
      s += t.delta[h] * g(t.transforms[h](x));
    return scale * s;
  };
}

struct AdmissibilityEntry {
  std::vector<int> delta;
  double max_trace = 0.0;  // max |F_delta phi| over the sampled base boundary
  Point2 argmax;
};

struct AdmissibilityReport {
  std::vector<AdmissibilityEntry> entries;
};

// Evaluates the folding trace on the boundary of the base triangle for each
// candidate sign vector, maximized over the trial fields and the samples
// (boundary_samples points per edge).  Trial fields must vanish on the
// boundary of the tiled domain.
AdmissibilityReport check_admissibility(
    const Tiling& t, const std::vector<std::function<double(Point2)>>& trial_fields,
    const std::vector<std::vector<int>>& sign_vectors, int boundary_samples);

// Random H_0^1 trial field on an axis-aligned rectangle: a normal combination
// of the first kmax x kmax products of domain-adapted sines.
std::function<double(Point2)> random_sine_combination(const Rectangle& domain, int kmax,
                                                      std::uint64_t seed,
                                                      std::uint64_t stream);

}  // namespace triobs

#endif  // TRIOBS_SPECTRAL_HPP_
