#include "triobs/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace triobs {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Tricomi initial guess, then Newton on P_n
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) nodes[n / 2] = 0.0;
}

QuadratureRule tensor_rectangle_rule(const Rectangle& r, int order) {
  std::vector<double> x, w;
  gauss_legendre(order, x, w);
  QuadratureRule rule;
  rule.nodes.reserve(static_cast<std::size_t>(order) * order);
  rule.weights.reserve(static_cast<std::size_t>(order) * order);
  const double cx = 0.5 * (r.lo.x1 + r.hi.x1), hx = 0.5 * (r.hi.x1 - r.lo.x1);
  const double cy = 0.5 * (r.lo.x2 + r.hi.x2), hy = 0.5 * (r.hi.x2 - r.lo.x2);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) {
      rule.nodes.push_back({cx + hx * x[i], cy + hy * x[j]});
      rule.weights.push_back(w[i] * w[j] * hx * hy);
    }
  return rule;
}

QuadratureRule triangle_rule(const Triangle& t, int order) {
  std::vector<double> x, w;
  gauss_legendre(order, x, w);
  QuadratureRule rule;
  rule.nodes.reserve(static_cast<std::size_t>(order) * order);
  rule.weights.reserve(static_cast<std::size_t>(order) * order);
  const Point2 a = t.v[0], ab = t.v[1] - t.v[0], ac = t.v[2] - t.v[0];
  const double jac = cross(ab, ac);  // twice the area, positive for CCW
  for (int i = 0; i < order; ++i) {
    const double xi = 0.5 * (x[i] + 1.0);
    const double wi = 0.5 * w[i];
    for (int j = 0; j < order; ++j) {
      const double eta = 0.5 * (x[j] + 1.0);
      const double wj = 0.5 * w[j];
      // Duffy collapse: (xi, eta) in [0,1]^2 -> (xi, eta (1 - xi))
      const double u = xi, v = eta * (1.0 - xi);
      rule.nodes.push_back(a + u * ab + v * ac);
      rule.weights.push_back(wi * wj * (1.0 - xi) * jac);
    }
  }
  return rule;
}

namespace {
// fan triangulation of elongated boxes makes thin, slowly-converging cells;
// axis-aligned rectangles go through the tensor rule instead
bool axis_aligned_rectangle(const ConvexPolygon& poly, Rectangle& out) {
  if (poly.v.size() != 4) return false;
  double x1 = poly.v[0].x1, x2 = poly.v[0].x1, y1 = poly.v[0].x2, y2 = poly.v[0].x2;
  for (const Point2& p : poly.v) {
    x1 = std::min(x1, p.x1);
    x2 = std::max(x2, p.x1);
    y1 = std::min(y1, p.x2);
    y2 = std::max(y2, p.x2);
  }
  for (const Point2& p : poly.v) {
    bool on_x = std::abs(p.x1 - x1) < 1e-14 || std::abs(p.x1 - x2) < 1e-14;
    bool on_y = std::abs(p.x2 - y1) < 1e-14 || std::abs(p.x2 - y2) < 1e-14;
    if (!(on_x && on_y)) return false;
  }
  if (!(x1 < x2 && y1 < y2)) return false;
  out = Rectangle({x1, y1}, {x2, y2});
  return true;
}
}  // namespace

QuadratureRule convex_polygon_rule(const ConvexPolygon& poly, int order) {
  QuadratureRule rule;
  if (poly.v.size() < 3) return rule;
  Rectangle box({0, 0}, {1, 1});
  if (axis_aligned_rectangle(poly, box)) {
    // keep each tensor patch within unit extent so `order` nodes resolve it
    int nx = static_cast<int>(std::ceil(box.hi.x1 - box.lo.x1 - 1e-12));
    int ny = static_cast<int>(std::ceil(box.hi.x2 - box.lo.x2 - 1e-12));
    nx = std::max(nx, 1);
    ny = std::max(ny, 1);
    for (int i = 0; i < nx; ++i)
      for (int j = 0; j < ny; ++j) {
        double x0 = box.lo.x1 + (box.hi.x1 - box.lo.x1) * i / nx;
        double x1 = box.lo.x1 + (box.hi.x1 - box.lo.x1) * (i + 1) / nx;
        double y0 = box.lo.x2 + (box.hi.x2 - box.lo.x2) * j / ny;
        double y1 = box.lo.x2 + (box.hi.x2 - box.lo.x2) * (j + 1) / ny;
        QuadratureRule part = tensor_rectangle_rule(Rectangle({x0, y0}, {x1, y1}), order);
        rule.nodes.insert(rule.nodes.end(), part.nodes.begin(), part.nodes.end());
        rule.weights.insert(rule.weights.end(), part.weights.begin(), part.weights.end());
      }
    return rule;
  }
  for (std::size_t i = 1; i + 1 < poly.v.size(); ++i) {
    Triangle t(poly.v[0], poly.v[i], poly.v[i + 1]);
    QuadratureRule part = triangle_rule(t, order);
    rule.nodes.insert(rule.nodes.end(), part.nodes.begin(), part.nodes.end());
    rule.weights.insert(rule.weights.end(), part.weights.begin(), part.weights.end());
  }
  return rule;
}

QuadratureRule region_rule(const Region& region, int order) {
  if (order < 1) throw std::invalid_argument("region_rule: order must be >= 1");
  QuadratureRule rule;
  for (const ConvexPolygon& cell : region.cells()) {
    QuadratureRule part = convex_polygon_rule(cell, order);
    rule.nodes.insert(rule.nodes.end(), part.nodes.begin(), part.nodes.end());
    rule.weights.insert(rule.weights.end(), part.weights.begin(), part.weights.end());
  }
  return rule;
}

namespace {
double simpson(double a, double fa, double b, double fb, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double fa, double b,
                     double fb, double m, double fm, double whole, double tol, int depth) {
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = simpson(a, fa, m, fm, flm);
  double right = simpson(m, fm, b, fb, frm);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}
}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth) {
  double m = 0.5 * (a + b);
  double fa = f(a), fb = f(b), fm = f(m);
  double whole = simpson(a, fa, b, fb, fm);
  return adaptive_step(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

}  // namespace triobs
