#ifndef TRIOBS_GEOMETRY_HPP_
#define TRIOBS_GEOMETRY_HPP_

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

// Planar points, 2x2 matrices and rigid transformations.
// All angles are radians; all coordinates are dimensionless lengths.

namespace triobs {

struct Point2 {
  double x1 = 0.0;
  double x2 = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x1 + b.x1, a.x2 + b.x2}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x1 - b.x1, a.x2 - b.x2}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x1, s * p.x2}; }
inline double dot(Point2 a, Point2 b) { return a.x1 * b.x1 + a.x2 * b.x2; }
inline double cross(Point2 a, Point2 b) { return a.x1 * b.x2 - a.x2 * b.x1; }
inline double norm(Point2 p) { return std::hypot(p.x1, p.x2); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }

struct Mat2 {
  double a00 = 1.0, a01 = 0.0;
  double a10 = 0.0, a11 = 1.0;

  Point2 operator*(Point2 p) const {
    return {a00 * p.x1 + a01 * p.x2, a10 * p.x1 + a11 * p.x2};
  }
  Mat2 operator*(const Mat2& o) const {
    return {a00 * o.a00 + a01 * o.a10, a00 * o.a01 + a01 * o.a11,
            a10 * o.a00 + a11 * o.a10, a10 * o.a01 + a11 * o.a11};
  }
  Mat2 transpose() const { return {a00, a10, a01, a11}; }
  double det() const { return a00 * a11 - a01 * a10; }
};

// Orthogonal linear part plus translation.  The linear part must satisfy
// A^T A = I to within 1e-12 and det A = +-1; factories below guarantee this.
struct RigidTransform {
  Mat2 linear;
  Point2 shift;

  Point2 operator()(Point2 p) const { return linear * p + shift; }

  double linear_det() const { return linear.det(); }

  // max-norm deviation of A^T A from the identity
  double orthogonality_defect() const {
    Mat2 g = linear.transpose() * linear;
    double d = std::abs(g.a00 - 1.0);
    d = std::max(d, std::abs(g.a11 - 1.0));
    d = std::max(d, std::abs(g.a01));
    d = std::max(d, std::abs(g.a10));
    return d;
  }

  RigidTransform inverse() const {
    Mat2 t = linear.transpose();  // orthogonal, so A^-1 = A^T
    Point2 s = t * shift;
    return {t, {-s.x1, -s.x2}};
  }

  // composition: (a * b)(x) = a(b(x))
  friend RigidTransform operator*(const RigidTransform& a, const RigidTransform& b) {
    return {a.linear * b.linear, a.linear * b.shift + a.shift};
  }

  static RigidTransform identity() { return {}; }

  static RigidTransform rotation(double angle, Point2 center) {
    double c = std::cos(angle), s = std::sin(angle);
    Mat2 r{c, -s, s, c};
    Point2 rc = r * center;
    return {r, center - rc};
  }

  // reflection across the line n . x = offset
  static RigidTransform reflection(Point2 n, double offset) {
    double nn = dot(n, n);
    if (nn <= 0.0) throw std::invalid_argument("reflection: zero normal");
    double f = 2.0 / nn;
    Mat2 r{1.0 - f * n.x1 * n.x1, -f * n.x1 * n.x2,
           -f * n.x1 * n.x2, 1.0 - f * n.x2 * n.x2};
    return {r, {f * offset * n.x1, f * offset * n.x2}};
  }

  static RigidTransform point_symmetry(Point2 center) {
    return {{-1.0, 0.0, 0.0, -1.0}, {2.0 * center.x1, 2.0 * center.x2}};
  }
};

inline void validate_rigid(const RigidTransform& t, double tol = 1e-12) {
  if (t.orthogonality_defect() > tol)
    throw std::invalid_argument("RigidTransform: linear part is not orthogonal");
  if (std::abs(std::abs(t.linear_det()) - 1.0) > tol)
    throw std::invalid_argument("RigidTransform: |det| != 1");
}

double dist_point_segment(Point2 p, Point2 a, Point2 b);

}  // namespace triobs

#endif  // TRIOBS_GEOMETRY_HPP_
