#include "doctest.h"

#include <cmath>

#include "triobs/quadrature.hpp"
#include "triobs/spectral.hpp"
#include "triobs/tiling.hpp"

using namespace triobs;

namespace {
// int_T x^a y^b over the reference triangle (0,0),(1,0),(0,1) equals
// a! b! / (a+b+2)!
double ref_triangle_monomial(int a, int b) {
  auto fact = [](int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  return fact(a) * fact(b) / fact(a + b + 2);
}
}  // namespace

TEST_CASE("gauss-legendre: polynomial exactness and weight sums") {
  for (int n : {1, 2, 5, 16, 33}) {
    std::vector<double> x, w;
    gauss_legendre(n, x, w);
    double sum = 0.0;
    for (double wi : w) sum += wi;
    CHECK(sum == doctest::Approx(2.0).epsilon(1e-14));
    // exact for degree 2n-1
    int deg = 2 * n - 1;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += w[i] * std::pow(x[i], deg);
    CHECK(std::abs(acc) < 1e-13);  // odd power integrates to zero
    if (n >= 2) {
      acc = 0.0;
      for (int i = 0; i < n; ++i) acc += w[i] * std::pow(x[i], 2 * n - 2);
      CHECK(acc == doctest::Approx(2.0 / (2.0 * n - 1.0)).epsilon(1e-12));
    }
  }
  std::vector<double> x, w;
  CHECK_THROWS_AS(gauss_legendre(0, x, w), std::invalid_argument);
}

TEST_CASE("rectangle rule: area and separable sine products") {
  Rectangle r = unit_height_rectangle();
  QuadratureRule rule = tensor_rectangle_rule(r, 32);
  CHECK(rule.total_weight() == doctest::Approx(kSqrt3).epsilon(1e-14));

  // exact for total degree <= 2n-1: int x^a y^b = l1^(a+1)/(a+1) * l2^(b+1)/(b+1)
  for (int n : {2, 3, 5}) {
    QuadratureRule small = tensor_rectangle_rule(r, n);
    for (int a = 0; a <= 2 * n - 1; ++a)
      for (int b = 0; a + b <= 2 * n - 1; ++b) {
        double acc = 0.0;
        for (std::size_t i = 0; i < small.size(); ++i)
          acc += small.weights[i] * std::pow(small.nodes[i].x1, a) *
                 std::pow(small.nodes[i].x2, b);
        double exact = std::pow(kSqrt3, a + 1) / (a + 1) / (b + 1);
        INFO("n=" << n << " a=" << a << " b=" << b);
        CHECK(acc == doctest::Approx(exact).epsilon(1e-12));
      }
  }

  // ||ebar_(1,1)||^2 = sqrt3/4
  double n2 = inner_product([](Point2 p) { return rect_eigenfunction({1, 1}, p); },
                            [](Point2 p) { return rect_eigenfunction({1, 1}, p); }, rule);
  CHECK(n2 == doctest::Approx(kSqrt3 / 4.0).epsilon(1e-12));

  // sine orthogonality across modes
  double ip = inner_product([](Point2 p) { return rect_eigenfunction({1, 1}, p); },
                            [](Point2 p) { return rect_eigenfunction({2, 1}, p); }, rule);
  CHECK(std::abs(ip) < 1e-12);
}

TEST_CASE("triangle rule: area, monomials, node placement") {
  Triangle ref({0, 0}, {1, 0}, {0, 1});
  for (int order : {4, 8, 16}) {
    QuadratureRule rule = triangle_rule(ref, order);
    CHECK(rule.total_weight() == doctest::Approx(0.5).epsilon(1e-14));
    for (int a = 0; a + 0 <= order && a <= 6; ++a)
      for (int b = 0; a + b <= std::min(order, 6); ++b) {
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.size(); ++i)
          acc += rule.weights[i] * std::pow(rule.nodes[i].x1, a) *
                 std::pow(rule.nodes[i].x2, b);
        INFO("a=" << a << " b=" << b << " order=" << order);
        CHECK(acc == doctest::Approx(ref_triangle_monomial(a, b)).epsilon(1e-12));
      }
    for (const Point2& p : rule.nodes) CHECK(ref.contains_closed(p, 1e-12));
  }

  Triangle t = half_equilateral_triangle();
  QuadratureRule rule = triangle_rule(t, 24);
  CHECK(rule.total_weight() == doctest::Approx(1.0 / (2.0 * kSqrt3)).epsilon(1e-13));
}

TEST_CASE("region rule over strip cells matches the area difference") {
  Region s = strip_region(0.125);
  QuadratureRule rule = region_rule(s, 12);
  double r = 1.0 - 0.125 * (3.0 + kSqrt3);
  double expect = half_equilateral_triangle().area() * (1.0 - r * r);
  CHECK(rule.total_weight() == doctest::Approx(expect).epsilon(1e-13));
  CHECK_THROWS_AS(region_rule(s, 0), std::invalid_argument);
}

TEST_CASE("doubling gate: trigonometric integrands converge") {
  Triangle t = half_equilateral_triangle();
  auto f = [](Point2 p) {
    double v = rect_eigenfunction({6, 6}, p);
    return v * v;
  };
  QuadratureRule a = triangle_rule(t, 24);
  QuadratureRule b = triangle_rule(t, 48);
  double ia = integral(f, a), ib = integral(f, b);
  CHECK(std::abs(ia - ib) / std::abs(ib) < 1e-10);
}

TEST_CASE("adaptive simpson agrees with closed forms") {
  double v = adaptive_simpson([](double x) { return std::sin(x); }, 0.0, M_PI);
  CHECK(v == doctest::Approx(2.0).epsilon(1e-12));
  double w = adaptive_simpson([](double x) { return x * x * std::exp(-x); }, 0.0, 3.0);
  CHECK(w == doctest::Approx(2.0 - 17.0 * std::exp(-3.0)).epsilon(1e-11));
}
