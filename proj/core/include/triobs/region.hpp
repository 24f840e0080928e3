#ifndef TRIOBS_REGION_HPP_
#define TRIOBS_REGION_HPP_

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "triobs/geometry.hpp"

// Planar regions with exact half-plane membership predicates.  Each region
// answers open-set membership, a conservative distance to any constituent
// boundary (used to carve exclusion bands around measure-zero sets in the
// sampling checks), and, when available, a decomposition into convex cells
// with pairwise disjoint interiors for quadrature.
//
// Membership of points within ~1e-12 of a boundary is unspecified.

namespace triobs {

struct ConvexPolygon {
  std::vector<Point2> v;  // CCW, no repeated consecutive vertices

  explicit ConvexPolygon(const std::vector<Point2>& verts);
  ConvexPolygon() = default;

  double area() const;
  bool contains_open(Point2 p) const;
  bool contains_closed(Point2 p, double tol = 0.0) const;
  double boundary_distance(Point2 p) const;
  void bounding_box(Point2& lo, Point2& hi) const;
};

// Sutherland-Hodgman clip of a convex polygon against the half-plane
// n . x <= c.  Returns an empty polygon when the intersection is empty.
ConvexPolygon clip_halfplane(const ConvexPolygon& poly, Point2 n, double c);

// Intersection of two convex polygons.
ConvexPolygon clip_convex(const ConvexPolygon& subject, const ConvexPolygon& window);

struct Triangle {
  std::array<Point2, 3> v;  // CCW after construction

  Triangle(Point2 a, Point2 b, Point2 c);

  double area() const;
  bool contains_open(Point2 p) const;
  bool contains_closed(Point2 p, double tol = 0.0) const;
  double boundary_distance(Point2 p) const;
  ConvexPolygon polygon() const { return ConvexPolygon({v[0], v[1], v[2]}); }
};

struct Rectangle {
  Point2 lo, hi;

  Rectangle(Point2 lo_, Point2 hi_);

  double area() const { return (hi.x1 - lo.x1) * (hi.x2 - lo.x2); }
  bool contains_open(Point2 p) const {
    return p.x1 > lo.x1 && p.x1 < hi.x1 && p.x2 > lo.x2 && p.x2 < hi.x2;
  }
  double boundary_distance(Point2 p) const;
  ConvexPolygon polygon() const {
    return ConvexPolygon({lo, {hi.x1, lo.x2}, hi, {lo.x1, hi.x2}});
  }
};

class Region;
struct Tiling;

// The regions the artifact needs: the two primitive shapes, finite unions,
// a triangle minus a closed scaled copy (edge strips), and the pullback of a
// region through the tiling maps (predicate only, no quadrature cells).
class Region {
 public:
  static Region triangle(const Triangle& t);
  static Region rectangle(const Rectangle& r);
  static Region empty();
  // Open union of `parts`; `cells` must decompose the union into convex
  // pieces with disjoint interiors (used for quadrature).
  static Region union_of(std::vector<Region> parts, std::vector<ConvexPolygon> cells);
  // outer \ cl(inner); the inner triangle is given by raw vertices and may be
  // degenerate (all vertices equal: only that point is removed).
  static Region difference(const Triangle& outer, std::array<Point2, 3> inner,
                           std::vector<ConvexPolygon> cells);
  static Region pullback_union(std::vector<RigidTransform> maps, const Triangle& base,
                               Region target);

  bool contains(Point2 p) const;
  // Lower bound proxy: distance to the nearest constituent primitive boundary.
  // Always <= the true distance to the region boundary, which makes
  // band-exclusion conservative.
  double boundary_proximity(Point2 p) const;
  void bounding_box(Point2& lo, Point2& hi) const;
  double area() const;  // exact for cell-backed regions
  bool has_cells() const;
  const std::vector<ConvexPolygon>& cells() const;  // throws when !has_cells()

 private:
  struct Union_ {
    std::vector<std::shared_ptr<const Region>> parts;
  };
  struct Difference_ {
    Triangle outer;
    std::array<Point2, 3> inner;  // membership uses closed inner; may be degenerate
  };
  struct Pullback_ {
    std::vector<RigidTransform> maps;
    Triangle base;
    std::shared_ptr<const Region> target;
  };
  using Impl = std::variant<Triangle, Rectangle, Union_, Difference_, Pullback_>;

  explicit Region(Impl impl) : impl_(std::move(impl)) {}

  Impl impl_;
  std::vector<ConvexPolygon> cells_;
  bool has_cells_ = false;
};

}  // namespace triobs

#endif  // TRIOBS_REGION_HPP_
