#include "triobs/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "triobs/parallel.hpp"

namespace triobs {

double sobolev_norm(const SpectralField& f, double s) {
  double acc = 0.0;
  for (const auto& [k, c] : f.coeffs) acc += std::pow(eigenvalue(k), s) * c * c;
  return std::sqrt(acc);
}

FoldedBasis::FoldedBasis(const Tiling& tiling, std::vector<Mode> modes, int quad_order)
    : tiling_(tiling), modes_(std::move(modes)), quad_order_(quad_order) {
  for (Mode k : modes_) validate_mode(k);
  QuadratureRule rule = triangle_rule(tiling_.base, quad_order_);

  const std::size_t n = modes_.size();
  const std::size_t q = rule.size();
  std::vector<double> values(n * q);
  parallel_chunks(n, 1, [&](std::size_t, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i)
      for (std::size_t a = 0; a < q; ++a)
        values[i * q + a] = folded_eigenfunction(tiling_, modes_[i], rule.nodes[a]);
  });

  gram_.assign(n * n, 0.0);
  parallel_chunks(n, 1, [&](std::size_t, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        double s = 0.0;
        const double* vi = &values[i * q];
        const double* vj = &values[j * q];
        for (std::size_t a = 0; a < q; ++a) s += rule.weights[a] * vi[a] * vj[a];
        gram_[i * n + j] = s;
        gram_[j * n + i] = s;
      }
    }
  });
}

int FoldedBasis::index_of(Mode k) const {
  for (std::size_t i = 0; i < modes_.size(); ++i)
    if (modes_[i] == k) return static_cast<int>(i);
  return -1;
}

ModeStructure classify_modes(const FoldedBasis& basis) {
  ModeStructure ms;
  const int n = basis.size();
  std::vector<int> cls(n, -1);
  for (int i = 0; i < n; ++i)
    if (basis.is_null(i)) ms.null_modes.push_back(basis.modes()[i]);

  std::vector<std::vector<int>> groups;
  for (int i = 0; i < n; ++i) {
    if (basis.is_null(i)) continue;
    for (int j = i + 1; j < n; ++j) {
      if (basis.is_null(j)) continue;
      double g = std::abs(basis.gram(i, j)) /
                 std::sqrt(basis.norm_sq_triangle(i) * basis.norm_sq_triangle(j));
      bool same_gamma =
          std::abs(eigenvalue(basis.modes()[i]) - eigenvalue(basis.modes()[j])) < 1e-9;
      if (g > 1.0 - 1e-6 && same_gamma) {
        if (cls[i] < 0 && cls[j] < 0) {
          cls[i] = cls[j] = static_cast<int>(groups.size());
          groups.push_back({i, j});
        } else if (cls[i] >= 0 && cls[j] < 0) {
          cls[j] = cls[i];
          groups[cls[i]].push_back(j);
        } else if (cls[j] >= 0 && cls[i] < 0) {
          cls[i] = cls[j];
          groups[cls[j]].push_back(i);
        }
      } else {
        ms.max_cross_normalized = std::max(ms.max_cross_normalized, g);
      }
    }
  }
  for (const auto& g : groups) {
    std::vector<Mode> group;
    for (int i : g) group.push_back(basis.modes()[i]);
    std::sort(group.begin(), group.end());
    ms.coincidences.push_back(std::move(group));
  }
  return ms;
}

SpectralField project_rect(const std::function<double(Point2)>& f,
                           const std::vector<Mode>& modes, const QuadratureRule& rule) {
  SpectralField out;
  out.domain = DomainTag::RectangleR;
  for (Mode k : modes) {
    validate_mode(k);
    double num = 0.0, den = 0.0;
    for (std::size_t a = 0; a < rule.size(); ++a) {
      double b = rect_eigenfunction(k, rule.nodes[a]);
      num += rule.weights[a] * f(rule.nodes[a]) * b;
      den += rule.weights[a] * b * b;
    }
    if (den < 1e-12) throw DegenerateModeError("project_rect: degenerate mode");
    out.coeffs[k] = num / den;
  }
  return out;
}

SpectralField project_folded(const std::function<double(Point2)>& f,
                             const std::vector<Mode>& modes, const FoldedBasis& basis,
                             const QuadratureRule& rule) {
  SpectralField out;
  out.domain = DomainTag::TriangleT;
  for (Mode k : modes) {
    int idx = basis.index_of(k);
    if (idx < 0) throw std::invalid_argument("project_folded: mode not in basis");
    if (basis.is_null(idx))
      throw DegenerateModeError("project_folded: degenerate mode (folds to zero)");
    double num = 0.0, den = 0.0;
    for (std::size_t a = 0; a < rule.size(); ++a) {
      double b = basis.eval(idx, rule.nodes[a]);
      num += rule.weights[a] * f(rule.nodes[a]) * b;
      den += rule.weights[a] * b * b;
    }
    out.coeffs[k] = num / den;
  }
  return out;
}

int locate_tile(const Tiling& t, Point2 y, double seam_tol) {
  int found = -1;
  for (std::size_t h = 0; h < t.transforms.size(); ++h) {
    Point2 x = t.transforms[h].inverse()(y);
    if (!t.base.contains_open(x)) continue;
    if (t.base.boundary_distance(x) <= seam_tol)
      throw TileSeamError("evaluation point lies on a tile seam");
    if (found >= 0) throw TileSeamError("evaluation point claimed by two tiles");
    found = static_cast<int>(h);
  }
  if (found < 0) throw TileSeamError("evaluation point outside every open tile");
  return found;
}

AdmissibilityReport check_admissibility(
    const Tiling& t, const std::vector<std::function<double(Point2)>>& trial_fields,
    const std::vector<std::vector<int>>& sign_vectors, int boundary_samples) {
  if (boundary_samples < 2)
    throw std::invalid_argument("check_admissibility: need at least 2 samples per edge");
  const double inv_n2 = 1.0 / (static_cast<double>(t.tile_count()) * t.tile_count());

  std::vector<Point2> samples;
  samples.reserve(3 * static_cast<std::size_t>(boundary_samples));
  for (int edge = 0; edge < 3; ++edge) {
    Point2 a = t.base.v[edge];
    Point2 b = t.base.v[(edge + 1) % 3];
    for (int s = 0; s < boundary_samples; ++s) {
      double lambda = static_cast<double>(s) / (boundary_samples - 1);
      samples.push_back(a + lambda * (b - a));
    }
  }

  // cache phi(K_h x) once per (field, transform, sample)
  AdmissibilityReport rep;
  const std::size_t nh = t.transforms.size();
  std::vector<double> vals(trial_fields.size() * nh * samples.size());
  for (std::size_t f = 0; f < trial_fields.size(); ++f)
    for (std::size_t h = 0; h < nh; ++h)
      for (std::size_t s = 0; s < samples.size(); ++s)
        vals[(f * nh + h) * samples.size() + s] = trial_fields[f](t.transforms[h](samples[s]));

  for (const std::vector<int>& delta : sign_vectors) {
    if (delta.size() != nh)
      throw std::invalid_argument("check_admissibility: sign vector length mismatch");
    AdmissibilityEntry entry;
    entry.delta = delta;
    for (std::size_t f = 0; f < trial_fields.size(); ++f) {
      for (std::size_t s = 0; s < samples.size(); ++s) {
        double acc = 0.0;
        for (std::size_t h = 0; h < nh; ++h)
          acc += delta[h] * vals[(f * nh + h) * samples.size() + s];
        double trace = std::abs(acc) * inv_n2;
        if (trace > entry.max_trace) {
          entry.max_trace = trace;
          entry.argmax = samples[s];
        }
      }
    }
    rep.entries.push_back(std::move(entry));
  }
  return rep;
}

std::function<double(Point2)> random_sine_combination(const Rectangle& domain, int kmax,
                                                      std::uint64_t seed,
                                                      std::uint64_t stream) {
  CounterRng rng(seed, stream);
  const double l1 = domain.hi.x1 - domain.lo.x1;
  const double l2 = domain.hi.x2 - domain.lo.x2;
  const Point2 lo = domain.lo;
  std::vector<double> coeff(static_cast<std::size_t>(kmax) * kmax);
  for (std::size_t i = 0; i < coeff.size(); ++i) coeff[i] = rng.normal(i);
  return [=](Point2 p) {
    double s = 0.0;
    for (int a = 1; a <= kmax; ++a)
      for (int b = 1; b <= kmax; ++b)
        s += coeff[(a - 1) * kmax + (b - 1)] * std::sin(M_PI * a * (p.x1 - lo.x1) / l1) *
             std::sin(M_PI * b * (p.x2 - lo.x2) / l2);
    return s;
  };
}

}  // namespace triobs
