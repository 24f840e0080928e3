#include "triobs/tiling.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>

#include "triobs/parallel.hpp"
#include "triobs/rng.hpp"

namespace triobs {

namespace {
const Point2 kV0{0.0, 0.0};
const Point2 kV1{1.0 / kSqrt3, 0.0};
const Point2 kV2{0.0, 1.0};

Point2 edge_point(int i, int j, double lambda) {
  const Point2 verts[3] = {kV0, kV1, kV2};
  return lambda * verts[i] + (1.0 - lambda) * verts[j];
}

double rect_boundary_distance(Point2 p) {
  Rectangle r = unit_height_rectangle();
  return std::min({std::abs(p.x1 - r.lo.x1), std::abs(r.hi.x1 - p.x1),
                   std::abs(p.x2 - r.lo.x2), std::abs(r.hi.x2 - p.x2)});
}
}  // namespace

Triangle half_equilateral_triangle() { return Triangle(kV0, kV1, kV2); }

Rectangle unit_height_rectangle() { return Rectangle({0.0, 0.0}, {kSqrt3, 1.0}); }

Triangle half_equilateral_prime() { return Triangle(kV0, kV1, kV2); }

Tiling::Tiling(Triangle base_, std::vector<RigidTransform> transforms_,
               std::vector<int> delta_)
    : base(base_), transforms(std::move(transforms_)), delta(std::move(delta_)) {
  if (transforms.empty() || transforms.size() != delta.size())
    throw std::invalid_argument("Tiling: transforms/delta size mismatch");
  for (const RigidTransform& k : transforms) validate_rigid(k);
  for (int d : delta)
    if (d != 1 && d != -1) throw std::invalid_argument("Tiling: delta entries must be +-1");
}

Tiling build_half_equilateral_tiling() {
  // K1 = id
  // K2 = reflection across the hypotenuse line sqrt3*x1 + x2 = 1
  // K3 = rotation by +pi/3 about (0,1)
  // K6 = point symmetry about the center of R
  // K4 = K6 * K3,  K5 = K6 * K2
  RigidTransform k1 = RigidTransform::identity();
  RigidTransform k2 = RigidTransform::reflection({kSqrt3, 1.0}, 1.0);
  RigidTransform k3 = RigidTransform::rotation(M_PI / 3.0, kV2);
  RigidTransform k6 = RigidTransform::point_symmetry({kSqrt3 / 2.0, 0.5});
  RigidTransform k4 = k6 * k3;
  RigidTransform k5 = k6 * k2;

  Tiling t(half_equilateral_triangle(), {k1, k2, k3, k4, k5, k6}, {1, -1, 1, 1, -1, 1});

  // self-check: orientation signs, edge identities, quick cover probe
  for (int h = 0; h < 6; ++h) {
    if (std::abs(t.transforms[h].linear_det() - t.delta[h]) > 1e-12)
      throw std::logic_error("half-equilateral tiling: delta/orientation mismatch");
  }
  EdgeIdentityReport edges = check_edge_identities(t, 25);
  if (!edges.pass)
    throw std::logic_error("half-equilateral tiling: edge identities failed");
  TilingReport cover = verify_tiling(t, Region::rectangle(unit_height_rectangle()), 2000, 12345);
  if (!cover.pass)
    throw std::logic_error("half-equilateral tiling: cover self-check failed");
  return t;
}

Tiling build_nonadmissible_pair_tiling() {
  RigidTransform k1 = RigidTransform::identity();
  RigidTransform k2 = RigidTransform::point_symmetry({0.5 / kSqrt3, 0.5});
  return Tiling(half_equilateral_prime(), {k1, k2}, {1, -1});
}

TilingReport verify_tiling(const Tiling& t, const Region& target, std::size_t n_samples,
                           std::uint64_t seed, double boundary_band) {
  if (n_samples == 0) throw std::invalid_argument("verify_tiling: n_samples must be >= 1");

  std::vector<RigidTransform> inv;
  inv.reserve(t.transforms.size());
  for (const RigidTransform& k : t.transforms) inv.push_back(k.inverse());

  CounterRng rng(seed, /*stream=*/1);
  const std::size_t chunk = 8192;
  const std::size_t n_chunks = (n_samples + chunk - 1) / chunk;
  struct Tally {
    std::size_t used = 0, once = 0, zero = 0, multi = 0;
  };
  std::vector<Tally> tallies(n_chunks);

  parallel_chunks(n_samples, chunk, [&](std::size_t ci, std::size_t b, std::size_t e) {
    Tally& tl = tallies[ci];
    for (std::size_t i = b; i < e; ++i) {
      Point2 p = sample_region(rng, target, i);
      double prox = target.boundary_proximity(p);
      int count = 0;
      for (const RigidTransform& k : inv) {
        Point2 x = k(p);
        prox = std::min(prox, t.base.boundary_distance(x));
        if (t.base.contains_open(x)) ++count;
      }
      if (prox <= boundary_band) continue;
      ++tl.used;
      if (count == 1)
        ++tl.once;
      else if (count == 0)
        ++tl.zero;
      else
        ++tl.multi;
    }
  });

  TilingReport rep;
  rep.n_samples = n_samples;
  for (const Tally& tl : tallies) {
    rep.n_used += tl.used;
    rep.fraction_once += static_cast<double>(tl.once);
    rep.fraction_uncovered += static_cast<double>(tl.zero);
    rep.fraction_multi += static_cast<double>(tl.multi);
  }
  if (rep.n_used > 0) {
    rep.fraction_once /= static_cast<double>(rep.n_used);
    rep.fraction_uncovered /= static_cast<double>(rep.n_used);
    rep.fraction_multi /= static_cast<double>(rep.n_used);
  }
  rep.area_defect = t.tile_count() * t.base.area() - target.area();
  rep.pass = rep.n_used > 0 && rep.fraction_once == 1.0 && std::abs(rep.area_defect) < 1e-12;
  return rep;
}

EdgeIdentityReport check_edge_identities(const Tiling& t, int n_lambda, double tol) {
  if (t.tile_count() != 6)
    throw std::invalid_argument("check_edge_identities: needs the six-map tiling");
  const auto& K = t.transforms;

  EdgeIdentityReport rep;
  auto match = [&](int ha, int hb, int i, int j, const std::string& label) {
    double dev = 0.0;
    for (int s = 0; s < n_lambda; ++s) {
      double lambda = n_lambda == 1 ? 0.5 : static_cast<double>(s) / (n_lambda - 1);
      Point2 x = edge_point(i, j, lambda);
      dev = std::max(dev, dist(K[ha](x), K[hb](x)));
    }
    rep.identities.push_back({label, dev});
    return dev;
  };
  auto lands = [&](int ha, int hb, int i, int j, const std::string& label) {
    double dev = 0.0;
    for (int s = 0; s < n_lambda; ++s) {
      double lambda = n_lambda == 1 ? 0.5 : static_cast<double>(s) / (n_lambda - 1);
      Point2 x = edge_point(i, j, lambda);
      dev = std::max(dev, rect_boundary_distance(K[ha](x)));
      dev = std::max(dev, rect_boundary_distance(K[hb](x)));
    }
    rep.identities.push_back({label, dev});
    return dev;
  };

  match(1, 3, 0, 1, "K2=K4 on edge01");
  match(2, 4, 0, 1, "K3=K5 on edge01");
  match(1, 2, 0, 2, "K2=K3 on edge02");
  match(3, 4, 0, 2, "K4=K5 on edge02");
  match(0, 1, 1, 2, "K1=K2 on edge12");
  match(4, 5, 1, 2, "K5=K6 on edge12");
  lands(0, 5, 0, 1, "K1,K6 edge01 -> bdry R");
  lands(0, 5, 0, 2, "K1,K6 edge02 -> bdry R");
  lands(2, 3, 1, 2, "K3,K4 edge12 -> bdry R");

  for (const EdgeIdentity& id : rep.identities)
    rep.max_deviation = std::max(rep.max_deviation, id.max_deviation);

  // published variant of the second identity (names the 02-edge)
  for (int s = 0; s < n_lambda; ++s) {
    double lambda = n_lambda == 1 ? 0.5 : static_cast<double>(s) / (n_lambda - 1);
    Point2 x = edge_point(0, 2, lambda);
    rep.printed_variant_deviation =
        std::max(rep.printed_variant_deviation, dist(K[2](x), K[4](x)));
  }

  rep.pass = rep.max_deviation < tol;
  return rep;
}

double strip_alpha_max() { return 1.0 / (3.0 + kSqrt3); }

Region strip_region(double alpha) {
  if (!(alpha > 0.0 && alpha <= strip_alpha_max() + 1e-15))
    throw std::invalid_argument("strip_region: alpha must lie in (0, 1/(3+sqrt3)]");
  double r = 1.0 - alpha * (3.0 + kSqrt3);
  if (r < 0.0) r = 0.0;

  Point2 a{alpha, alpha};
  Point2 b{alpha + r / kSqrt3, alpha};
  Point2 c{alpha, alpha + r};

  Triangle outer = half_equilateral_triangle();
  std::vector<ConvexPolygon> cells;
  cells.push_back(ConvexPolygon({kV0, kV1, b, a}));  // along the bottom edge
  cells.push_back(ConvexPolygon({kV1, kV2, c, b}));  // along the hypotenuse
  cells.push_back(ConvexPolygon({kV2, kV0, a, c}));  // along the left edge
  // r = 0 collapses the inner triangle to the incenter; only that point is removed
  return Region::difference(outer, {a, b, c}, std::move(cells));
}

Region rect_strip_region(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("rect_strip_region: alpha must lie in (0,1)");
  Rectangle bottom({0.0, 0.0}, {kSqrt3, alpha});
  Rectangle left({0.0, 0.0}, {alpha, 1.0});
  // disjoint quadrature cells: full bottom strip + the left strip above it
  std::vector<ConvexPolygon> cells = {bottom.polygon(),
                                      Rectangle({0.0, alpha}, {alpha, 1.0}).polygon()};
  std::vector<Region> parts;
  parts.push_back(Region::rectangle(bottom));
  parts.push_back(Region::rectangle(left));
  return Region::union_of(std::move(parts), std::move(cells));
}

Region pullback_union(const Tiling& t, Region s_bar) {
  return Region::pullback_union(t.transforms, t.base, std::move(s_bar));
}

EqualityReport verify_region_equality(const Region& a, const Region& b,
                                      std::size_t n_samples, double boundary_eps,
                                      std::uint64_t seed) {
  if (n_samples == 0)
    throw std::invalid_argument("verify_region_equality: n_samples must be >= 1");
  if (!(boundary_eps > 0.0))
    throw std::invalid_argument("verify_region_equality: boundary_eps must be > 0");

  Point2 lo_a, hi_a, lo_b, hi_b;
  a.bounding_box(lo_a, hi_a);
  b.bounding_box(lo_b, hi_b);
  Point2 lo{std::min(lo_a.x1, lo_b.x1), std::min(lo_a.x2, lo_b.x2)};
  Point2 hi{std::max(hi_a.x1, hi_b.x1), std::max(hi_a.x2, hi_b.x2)};

  CounterRng rng(seed, /*stream=*/2);
  const std::size_t chunk = 8192;
  const std::size_t n_chunks = (n_samples + chunk - 1) / chunk;
  struct Tally {
    std::size_t used = 0, bad = 0;
    std::vector<Point2> examples;
  };
  std::vector<Tally> tallies(n_chunks);

  parallel_chunks(n_samples, chunk, [&](std::size_t ci, std::size_t begin, std::size_t end) {
    Tally& tl = tallies[ci];
    for (std::size_t i = begin; i < end; ++i) {
      Point2 p = rng.point_in_box(i, lo, hi);
      if (a.boundary_proximity(p) <= boundary_eps) continue;
      if (b.boundary_proximity(p) <= boundary_eps) continue;
      ++tl.used;
      if (a.contains(p) != b.contains(p)) {
        ++tl.bad;
        if (tl.examples.size() < 8) tl.examples.push_back(p);
      }
    }
  });

  EqualityReport rep;
  rep.n_samples = n_samples;
  for (const Tally& tl : tallies) {
    rep.n_used += tl.used;
    rep.disagreements += tl.bad;
    for (const Point2& p : tl.examples)
      if (rep.examples.size() < 8) rep.examples.push_back(p);
  }
  return rep;
}

}  // namespace triobs
