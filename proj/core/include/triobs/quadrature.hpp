#ifndef TRIOBS_QUADRATURE_HPP_
#define TRIOBS_QUADRATURE_HPP_

#include <functional>
#include <vector>

#include "triobs/geometry.hpp"
#include "triobs/region.hpp"

// Quadrature for the integrals behind the inner products, norms and observed
// energies.  Rectangles get tensor Gauss-Legendre; triangles get a collapsed
// (Duffy) Gauss-Legendre rule, which is exact for total degree <= 2n-2 and
// spectrally accurate for the trigonometric integrands used here.  Polygons
// are fan-triangulated.  `order` is the node count per axis.

namespace triobs {

struct QuadratureRule {
  std::vector<Point2> nodes;
  std::vector<double> weights;

  double total_weight() const {
    double s = 0.0;
    for (double w : weights) s += w;
    return s;
  }
  std::size_t size() const { return nodes.size(); }
};

// Nodes and weights on [-1,1]; Newton iteration on the Legendre recurrence.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

QuadratureRule tensor_rectangle_rule(const Rectangle& r, int order);
QuadratureRule triangle_rule(const Triangle& t, int order);
QuadratureRule convex_polygon_rule(const ConvexPolygon& poly, int order);
// Over the region's convex cells; throws when the region has none.
QuadratureRule region_rule(const Region& region, int order);

template <typename F, typename G>
double inner_product(F&& f, G&& g, const QuadratureRule& rule) {
  double s = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i)
    s += rule.weights[i] * f(rule.nodes[i]) * g(rule.nodes[i]);
  return s;
}

template <typename F>
double integral(F&& f, const QuadratureRule& rule) {
  double s = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) s += rule.weights[i] * f(rule.nodes[i]);
  return s;
}

// Adaptive Simpson on [a,b]; used as an independent oracle against the
// closed-form antiderivatives.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12, int max_depth = 40);

}  // namespace triobs

#endif  // TRIOBS_QUADRATURE_HPP_
