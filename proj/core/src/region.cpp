#include "triobs/region.hpp"

#include <algorithm>
#include <limits>

namespace triobs {

namespace {

constexpr double kDegenerate = 1e-15;

double shoelace(const std::vector<Point2>& v) {
  double s = 0.0;
  for (size_t i = 0; i < v.size(); ++i) {
    const Point2& a = v[i];
    const Point2& b = v[(i + 1) % v.size()];
    s += cross(a, b);
  }
  return 0.5 * s;
}

// Closed membership for a possibly degenerate triangle given by raw vertices.
bool closed_tri_contains(const std::array<Point2, 3>& t, Point2 p) {
  double twice = cross(t[1] - t[0], t[2] - t[0]);
  if (std::abs(twice) < 1e-30) {
    // collapsed to a point (the only degenerate case the artifact produces)
    return p.x1 == t[0].x1 && p.x2 == t[0].x2;
  }
  double sign = twice > 0.0 ? 1.0 : -1.0;
  return sign * cross(t[1] - t[0], p - t[0]) >= 0.0 &&
         sign * cross(t[2] - t[1], p - t[1]) >= 0.0 &&
         sign * cross(t[0] - t[2], p - t[2]) >= 0.0;
}

double tri_boundary_distance(const std::array<Point2, 3>& t, Point2 p) {
  return std::min({dist_point_segment(p, t[0], t[1]), dist_point_segment(p, t[1], t[2]),
                   dist_point_segment(p, t[2], t[0])});
}

}  // namespace

ConvexPolygon::ConvexPolygon(const std::vector<Point2>& verts) {
  // drop repeated consecutive vertices, enforce CCW
  for (const Point2& p : verts) {
    if (v.empty() || dist(v.back(), p) > kDegenerate) v.push_back(p);
  }
  while (v.size() >= 2 && dist(v.front(), v.back()) <= kDegenerate) v.pop_back();
  if (v.size() >= 3 && shoelace(v) < 0.0) std::reverse(v.begin(), v.end());
}

double ConvexPolygon::area() const {
  if (v.size() < 3) return 0.0;
  return shoelace(v);
}

bool ConvexPolygon::contains_open(Point2 p) const {
  if (v.size() < 3) return false;
  for (size_t i = 0; i < v.size(); ++i) {
    const Point2& a = v[i];
    const Point2& b = v[(i + 1) % v.size()];
    if (cross(b - a, p - a) <= 0.0) return false;
  }
  return true;
}

bool ConvexPolygon::contains_closed(Point2 p, double tol) const {
  if (v.empty()) return false;
  if (v.size() == 1) return dist(p, v[0]) <= tol;
  if (v.size() == 2) return dist_point_segment(p, v[0], v[1]) <= tol;
  for (size_t i = 0; i < v.size(); ++i) {
    const Point2& a = v[i];
    const Point2& b = v[(i + 1) % v.size()];
    // scale-aware slack: tol is interpreted as a distance
    if (cross(b - a, p - a) < -tol * dist(a, b)) return false;
  }
  return true;
}

double ConvexPolygon::boundary_distance(Point2 p) const {
  double d = std::numeric_limits<double>::infinity();
  if (v.size() == 1) return dist(p, v[0]);
  for (size_t i = 0; i < v.size(); ++i)
    d = std::min(d, dist_point_segment(p, v[i], v[(i + 1) % v.size()]));
  return d;
}

void ConvexPolygon::bounding_box(Point2& lo, Point2& hi) const {
  lo = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  hi = {-lo.x1, -lo.x2};
  for (const Point2& p : v) {
    lo.x1 = std::min(lo.x1, p.x1);
    lo.x2 = std::min(lo.x2, p.x2);
    hi.x1 = std::max(hi.x1, p.x1);
    hi.x2 = std::max(hi.x2, p.x2);
  }
}

ConvexPolygon clip_halfplane(const ConvexPolygon& poly, Point2 n, double c) {
  const std::vector<Point2>& in = poly.v;
  if (in.empty()) return poly;
  std::vector<Point2> out;
  out.reserve(in.size() + 1);
  for (size_t i = 0; i < in.size(); ++i) {
    Point2 a = in[i];
    Point2 b = in[(i + 1) % in.size()];
    double da = dot(n, a) - c;
    double db = dot(n, b) - c;
    if (da <= 0.0) out.push_back(a);
    if ((da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0)) {
      double t = da / (da - db);
      out.push_back(a + t * (b - a));
    }
  }
  return ConvexPolygon(std::move(out));
}

ConvexPolygon clip_convex(const ConvexPolygon& subject, const ConvexPolygon& window) {
  ConvexPolygon r = subject;
  for (size_t i = 0; i < window.v.size() && !r.v.empty(); ++i) {
    Point2 a = window.v[i];
    Point2 b = window.v[(i + 1) % window.v.size()];
    Point2 edge = b - a;
    Point2 n{edge.x2, -edge.x1};  // inward for CCW window is n.x <= n.a
    r = clip_halfplane(r, n, dot(n, a));
  }
  return r;
}

Triangle::Triangle(Point2 a, Point2 b, Point2 c) : v{a, b, c} {
  double twice = cross(b - a, c - a);
  if (std::abs(twice) < 2e-12)
    throw std::invalid_argument("Triangle: vertices are (near) collinear");
  if (twice < 0.0) std::swap(v[1], v[2]);
}

double Triangle::area() const { return 0.5 * cross(v[1] - v[0], v[2] - v[0]); }

bool Triangle::contains_open(Point2 p) const {
  return cross(v[1] - v[0], p - v[0]) > 0.0 && cross(v[2] - v[1], p - v[1]) > 0.0 &&
         cross(v[0] - v[2], p - v[2]) > 0.0;
}

bool Triangle::contains_closed(Point2 p, double tol) const {
  return cross(v[1] - v[0], p - v[0]) >= -tol * dist(v[0], v[1]) &&
         cross(v[2] - v[1], p - v[1]) >= -tol * dist(v[1], v[2]) &&
         cross(v[0] - v[2], p - v[2]) >= -tol * dist(v[2], v[0]);
}

double Triangle::boundary_distance(Point2 p) const {
  return std::min({dist_point_segment(p, v[0], v[1]), dist_point_segment(p, v[1], v[2]),
                   dist_point_segment(p, v[2], v[0])});
}

Rectangle::Rectangle(Point2 lo_, Point2 hi_) : lo(lo_), hi(hi_) {
  if (!(lo.x1 < hi.x1 && lo.x2 < hi.x2))
    throw std::invalid_argument("Rectangle: lo must be componentwise below hi");
}

double Rectangle::boundary_distance(Point2 p) const {
  if (contains_open(p))
    return std::min({p.x1 - lo.x1, hi.x1 - p.x1, p.x2 - lo.x2, hi.x2 - p.x2});
  return polygon().boundary_distance(p);
}

Region Region::triangle(const Triangle& t) {
  Region r{Impl{t}};
  r.cells_ = {t.polygon()};
  r.has_cells_ = true;
  return r;
}

Region Region::rectangle(const Rectangle& rect) {
  Region r{Impl{rect}};
  r.cells_ = {rect.polygon()};
  r.has_cells_ = true;
  return r;
}

Region Region::empty() {
  Region r{Impl{Union_{}}};
  r.has_cells_ = true;
  return r;
}

Region Region::union_of(std::vector<Region> parts, std::vector<ConvexPolygon> cells) {
  Union_ u;
  for (Region& p : parts) u.parts.push_back(std::make_shared<Region>(std::move(p)));
  Region r{Impl{std::move(u)}};
  r.cells_ = std::move(cells);
  r.has_cells_ = true;
  return r;
}

Region Region::difference(const Triangle& outer, std::array<Point2, 3> inner,
                          std::vector<ConvexPolygon> cells) {
  Region r{Impl{Difference_{outer, inner}}};
  r.cells_ = std::move(cells);
  r.has_cells_ = true;
  return r;
}

Region Region::pullback_union(std::vector<RigidTransform> maps, const Triangle& base,
                              Region target) {
  Pullback_ p{std::move(maps), base, std::make_shared<Region>(std::move(target))};
  return Region{Impl{std::move(p)}};
}

bool Region::contains(Point2 p) const {
  return std::visit(
      [&](const auto& impl) -> bool {
        using T = std::decay_t<decltype(impl)>;
        if constexpr (std::is_same_v<T, Triangle>) {
          return impl.contains_open(p);
        } else if constexpr (std::is_same_v<T, Rectangle>) {
          return impl.contains_open(p);
        } else if constexpr (std::is_same_v<T, Union_>) {
          for (const auto& part : impl.parts)
            if (part->contains(p)) return true;
          return false;
        } else if constexpr (std::is_same_v<T, Difference_>) {
          if (!impl.outer.contains_open(p)) return false;
          return !closed_tri_contains(impl.inner, p);
        } else {  // Pullback_
          if (!impl.base.contains_open(p)) return false;
          for (const RigidTransform& k : impl.maps)
            if (impl.target->contains(k(p))) return true;
          return false;
        }
      },
      impl_);
}

double Region::boundary_proximity(Point2 p) const {
  return std::visit(
      [&](const auto& impl) -> double {
        using T = std::decay_t<decltype(impl)>;
        if constexpr (std::is_same_v<T, Triangle>) {
          return impl.boundary_distance(p);
        } else if constexpr (std::is_same_v<T, Rectangle>) {
          return impl.boundary_distance(p);
        } else if constexpr (std::is_same_v<T, Union_>) {
          double d = std::numeric_limits<double>::infinity();
          for (const auto& part : impl.parts)
            d = std::min(d, part->boundary_proximity(p));
          return d;
        } else if constexpr (std::is_same_v<T, Difference_>) {
          return std::min(impl.outer.boundary_distance(p),
                          tri_boundary_distance(impl.inner, p));
        } else {  // Pullback_
          double d = impl.base.boundary_distance(p);
          for (const RigidTransform& k : impl.maps)
            d = std::min(d, impl.target->boundary_proximity(k(p)));
          return d;
        }
      },
      impl_);
}

void Region::bounding_box(Point2& lo, Point2& hi) const {
  if (has_cells_ && !cells_.empty()) {
    cells_[0].bounding_box(lo, hi);
    for (size_t i = 1; i < cells_.size(); ++i) {
      Point2 l, h;
      cells_[i].bounding_box(l, h);
      lo.x1 = std::min(lo.x1, l.x1);
      lo.x2 = std::min(lo.x2, l.x2);
      hi.x1 = std::max(hi.x1, h.x1);
      hi.x2 = std::max(hi.x2, h.x2);
    }
    return;
  }
  if (const auto* pb = std::get_if<Pullback_>(&impl_)) {
    pb->base.polygon().bounding_box(lo, hi);
    return;
  }
  throw std::logic_error("Region: no bounding box available");
}

double Region::area() const {
  if (!has_cells_) throw std::logic_error("Region: area needs a cell decomposition");
  double a = 0.0;
  for (const ConvexPolygon& c : cells_) a += c.area();
  return a;
}

bool Region::has_cells() const { return has_cells_; }

const std::vector<ConvexPolygon>& Region::cells() const {
  if (!has_cells_)
    throw std::logic_error("Region: no convex cell decomposition for this region kind");
  return cells_;
}

}  // namespace triobs
