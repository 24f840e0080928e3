#include "triobs/observability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "triobs/parallel.hpp"

namespace triobs {

double sin_sq_integral(Interval j, double length_scale, int k) {
  const double w = 2.0 * M_PI * k / length_scale;
  return 0.5 * j.length() - (std::sin(w * j.hi) - std::sin(w * j.lo)) / (2.0 * w);
}

InfResult inf_sin_sq_integral(Interval j, double length_scale, int k_max) {
  InfResult r{0.5 * j.length(), 0};  // k -> infinity limit
  for (int k = 1; k <= k_max; ++k) {
    double v = sin_sq_integral(j, length_scale, k);
    if (v < r.value) r = {v, k};
  }
  return r;
}

InfResult t_alpha(double alpha, int k_max) {
  if (!(alpha > 0.0 && alpha <= strip_alpha_max() + 1e-15))
    throw std::invalid_argument("t_alpha: alpha must lie in (0, 1/(3+sqrt3)]");
  if (k_max < 16) throw std::invalid_argument("t_alpha: k_max must be >= 16");
  return inf_sin_sq_integral({0.0, alpha}, kSqrt3, k_max);
}

RectObsConstants rect_constants(double l1, double l2, Interval j1, Interval j2, double T,
                                int k_max) {
  if (!(l1 > 0.0 && l2 > 0.0)) throw std::invalid_argument("rect_constants: sides must be > 0");
  if (!(T > 0.0)) throw std::invalid_argument("rect_constants: T must be > 0");
  if (k_max < 1) throw std::invalid_argument("rect_constants: k_max must be >= 1");
  if (!(j1.length() > 0.0 && j1.lo >= 0.0 && j1.hi <= l1))
    throw std::invalid_argument("rect_constants: J1 must be a nonempty subinterval of (0,l1)");
  if (!(j2.length() > 0.0 && j2.lo >= 0.0 && j2.hi <= l2))
    throw std::invalid_argument("rect_constants: J2 must be a nonempty subinterval of (0,l2)");

  RectObsConstants rc;
  rc.l1 = l1;
  rc.l2 = l2;
  rc.j1 = j1;
  rc.j2 = j2;
  InfResult r1 = inf_sin_sq_integral(j1, l1, k_max);
  InfResult r2 = inf_sin_sq_integral(j2, l2, k_max);
  rc.t1 = r1.value;
  rc.t2 = r2.value;
  rc.t1_argmin = r1.argmin_k;
  rc.t2_argmin = r2.argmin_k;
  rc.m = std::min(rc.t1 / l1, rc.t2 / l2);
  rc.m_zero = rc.m <= 0.0;
  rc.geometry_factor = (l1 * l1 + l2 * l2) * (l1 * l1 * l1 * l1 + l2 * l2 * l2 * l2) /
                       (l1 * l1 * l2 * l2);
  rc.time_threshold = rc.m_zero ? std::numeric_limits<double>::infinity()
                                : std::sqrt(rc.geometry_factor / rc.m);
  rc.T = T;
  rc.c = T / M_PI * (rc.m - rc.geometry_factor / (T * T));
  rc.valid = !rc.m_zero && rc.c > 0.0;
  return rc;
}

StripObsConstants strip_constants(double alpha, double T, int k_max) {
  if (!(T > 0.0)) throw std::invalid_argument("strip_constants: T must be > 0");
  StripObsConstants sc;
  sc.alpha = alpha;
  InfResult ta = t_alpha(alpha, k_max);  // validates alpha, k_max
  sc.r_alpha = std::max(0.0, 1.0 - alpha * (3.0 + kSqrt3));
  sc.t_alpha = ta.value;
  sc.t_alpha_argmin = ta.argmin_k;
  sc.t_alpha_prime = inf_sin_sq_integral({0.0, alpha}, 1.0, k_max).value;
  sc.m_alpha = std::min(sc.t_alpha / kSqrt3, sc.t_alpha_prime);
  sc.m_is_t_over_sqrt3 = sc.t_alpha / kSqrt3 <= sc.t_alpha_prime;
  sc.geometry_factor = 40.0 / 3.0;  // (3+1)(9+1)/3 for l1 = sqrt3, l2 = 1
  sc.T_alpha_derived = std::sqrt(sc.geometry_factor / sc.m_alpha);
  sc.T_alpha_paper = 8.0 * std::sqrt(5.0 / kSqrt3 * sc.t_alpha);
  sc.T = T;
  auto c_of = [&](double time) {
    return time / M_PI * (sc.t_alpha / kSqrt3 - sc.geometry_factor / (time * time));
  };
  sc.c_alpha = c_of(T);
  sc.c_valid = sc.c_alpha > 0.0;
  sc.published_threshold_inconsistent = c_of(sc.T_alpha_paper) <= 0.0;
  return sc;
}

ObservedEnergyEvaluator::ObservedEnergyEvaluator(const SpectralContext& ctx, WaveBasis basis,
                                                 std::vector<Mode> modes,
                                                 std::vector<ConvexPolygon> cells, double T,
                                                 int space_order, int time_nodes_per_period)
    : ctx_(ctx),
      basis_(basis),
      modes_(std::move(modes)),
      cells_(std::move(cells)),
      T_(T),
      space_order_(space_order),
      time_nodes_(time_nodes_per_period) {
  if (!(T > 0.0)) throw std::invalid_argument("observed energy: T must be > 0");
  if (space_order_ < 1 || time_nodes_ < 1)
    throw std::invalid_argument("observed energy: resolutions must be >= 1");
  sg_coarse_ = space_gram(space_order_);
  sg_fine_ = space_gram(2 * space_order_);
}

std::vector<double> ObservedEnergyEvaluator::space_gram(int order) const {
  QuadratureRule rule;
  for (const ConvexPolygon& cell : cells_) {
    QuadratureRule part = convex_polygon_rule(cell, order);
    rule.nodes.insert(rule.nodes.end(), part.nodes.begin(), part.nodes.end());
    rule.weights.insert(rule.weights.end(), part.weights.begin(), part.weights.end());
  }
  const std::size_t n = modes_.size();
  const std::size_t q = rule.size();
  std::vector<double> values(n * q);
  parallel_chunks(n, 1, [&](std::size_t, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      int idx = basis_ == WaveBasis::RectSine ? -1 : ctx_.folded.index_of(modes_[i]);
      for (std::size_t a = 0; a < q; ++a)
        values[i * q + a] = basis_ == WaveBasis::RectSine
                                ? rect_eigenfunction(modes_[i], rule.nodes[a])
                                : ctx_.folded.eval(idx, rule.nodes[a]);
    }
  });
  std::vector<double> g(n * n, 0.0);
  parallel_chunks(n, 1, [&](std::size_t, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i)
      for (std::size_t j = i; j < n; ++j) {
        double s = 0.0;
        const double* vi = &values[i * q];
        const double* vj = &values[j * q];
        for (std::size_t a = 0; a < q; ++a) s += rule.weights[a] * vi[a] * vj[a];
        g[i * n + j] = s;
        g[j * n + i] = s;
      }
  });
  return g;
}

std::vector<double> ObservedEnergyEvaluator::time_gram(const WaveState& s,
                                                       int nodes_per_period) const {
  const std::size_t n = modes_.size();
  double omega_max = 0.0;
  for (Mode k : modes_) omega_max = std::max(omega_max, omega(k));
  const double period = 2.0 * M_PI / omega_max;
  const std::size_t panels = static_cast<std::size_t>(std::ceil(T_ / period));
  const double dt = T_ / static_cast<double>(panels);

  std::vector<double> gl_x, gl_w;
  gauss_legendre(nodes_per_period, gl_x, gl_w);

  const std::size_t q = panels * static_cast<std::size_t>(nodes_per_period);
  std::vector<double> amp(n * q);
  std::vector<double> wt(q);
  for (std::size_t p = 0; p < panels; ++p) {
    double t0 = p * dt;
    for (int a = 0; a < nodes_per_period; ++a) {
      std::size_t col = p * nodes_per_period + a;
      double t = t0 + 0.5 * dt * (gl_x[a] + 1.0);
      wt[col] = 0.5 * dt * gl_w[a];
      for (std::size_t i = 0; i < n; ++i) amp[i * q + col] = modal_amplitude(s, i, t);
    }
  }
  std::vector<double> g(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      double acc = 0.0;
      const double* ai = &amp[i * q];
      const double* aj = &amp[j * q];
      for (std::size_t a = 0; a < q; ++a) acc += wt[a] * ai[a] * aj[a];
      g[i * n + j] = acc;
      g[j * n + i] = acc;
    }
  return g;
}

ObservedEnergyEvaluator::Result ObservedEnergyEvaluator::observed(const WaveState& s) const {
  if (s.basis != basis_)
    throw std::invalid_argument("observed: state basis must match evaluator basis");
  if (s.modes.size() != modes_.size())
    throw std::invalid_argument("observed: state modes must match evaluator modes");
  for (std::size_t i = 0; i < modes_.size(); ++i)
    if (!(s.modes[i] == modes_[i]))
      throw std::invalid_argument("observed: state modes must match evaluator modes");

  const std::size_t n = modes_.size();
  auto contract = [n](const std::vector<double>& tg, const std::vector<double>& sg) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n * n; ++i) acc += tg[i] * sg[i];
    return acc;
  };
  std::vector<double> tg_c = time_gram(s, time_nodes_);
  std::vector<double> tg_f = time_gram(s, 2 * time_nodes_);
  double coarse = contract(tg_c, sg_coarse_);
  double fine = contract(tg_f, sg_fine_);

  Result r;
  r.value = fine;
  double scale = std::max({std::abs(fine), std::abs(coarse), 1e-300});
  r.resolution_rel_diff = std::abs(fine - coarse) / scale;
  if (std::abs(fine) > 1e-14 && r.resolution_rel_diff > 1e-6)
    throw ResolutionError("observed energy did not converge under doubling");
  return r;
}

double observed_energy(const WaveState& s, const Region& region, double T, int space_order,
                       int time_nodes_per_period, const SpectralContext& ctx,
                       ObservedInfo* info) {
  ObservedEnergyEvaluator ev(ctx, s.basis, s.modes, region.cells(), T, space_order,
                             time_nodes_per_period);
  auto r = ev.observed(s);
  if (info) info->resolution_rel_diff = r.resolution_rel_diff;
  return r.value;
}

ObservabilityReport check_inequality(const std::vector<WaveState>& states,
                                     const Region& region, double T, double c1, double c2,
                                     Direction direction, const SpectralContext& ctx,
                                     int space_order, int time_nodes_per_period) {
  if (states.empty()) throw std::invalid_argument("check_inequality: no states");
  for (const WaveState& s : states)
    if (s.basis != states.front().basis)
      throw std::invalid_argument("check_inequality: states must share a basis");

  ObservabilityReport rep;
  rep.direction = direction;
  rep.c1 = c1;
  rep.c2 = c2;
  rep.T = T;
  rep.constant_valid = direction == Direction::Upper || c1 > 0.0;

  ObservedEnergyEvaluator ev(ctx, states.front().basis, states.front().modes, region.cells(),
                             T, space_order, time_nodes_per_period);
  rep.all_pass = rep.constant_valid;
  for (const WaveState& s : states) {
    StateCheck chk;
    chk.energy = energy_pair(s, ctx);
    auto r = ev.observed(s);
    chk.observed = r.value;
    chk.resolution_rel_diff = r.resolution_rel_diff;
    double e = chk.energy.total();
    chk.margin_lower = chk.observed - c1 * e;
    chk.margin_upper = c2 * e - chk.observed;
    bool ok = true;
    if (direction != Direction::Upper) ok = ok && chk.margin_lower >= 0.0;
    if (direction != Direction::Lower) ok = ok && chk.margin_upper >= 0.0;
    rep.all_pass = rep.all_pass && ok;
    rep.states.push_back(chk);
  }
  return rep;
}

std::vector<ConvexPolygon> tile_pullback_cells(const Tiling& t, const Region& s_bar) {
  std::vector<ConvexPolygon> out;
  ConvexPolygon base = t.base.polygon();
  for (const RigidTransform& k : t.transforms) {
    RigidTransform inv = k.inverse();
    for (const ConvexPolygon& cell : s_bar.cells()) {
      std::vector<Point2> back;
      back.reserve(cell.v.size());
      for (Point2 p : cell.v) back.push_back(inv(p));
      ConvexPolygon piece = clip_convex(ConvexPolygon(std::move(back)), base);
      if (piece.area() > 1e-18) out.push_back(std::move(piece));
    }
  }
  return out;
}

EquivalenceReport equivalence_check(const WaveState& s, const Region& s_bar, double T,
                                    double c1, double c2, const SpectralContext& ctx,
                                    const Region* s_union, int space_order,
                                    int time_nodes_per_period) {
  if (s.basis != WaveBasis::TriangleFolded)
    throw std::invalid_argument("equivalence_check: expects a triangle state");

  EquivalenceReport rep;
  WaveState prolonged = prolong_state(s, ctx);
  rep.energy_t = energy_pair(s, ctx);
  rep.energy_r = energy_pair(prolonged, ctx);

  ObservedEnergyEvaluator ev_tiles(ctx, WaveBasis::TriangleFolded, s.modes,
                                   tile_pullback_cells(ctx.tiling, s_bar), T, space_order,
                                   time_nodes_per_period);
  ObservedEnergyEvaluator ev_rect(ctx, WaveBasis::RectFolded, s.modes, s_bar.cells(), T,
                                  space_order, time_nodes_per_period);
  auto rt = ev_tiles.observed(s);
  auto rr = ev_rect.observed(prolonged);
  rep.observed_t_tiles = rt.value;
  rep.observed_r = rr.value;
  rep.resolution_rel_diff = std::max(rt.resolution_rel_diff, rr.resolution_rel_diff);

  if (s_union) {
    ObservedEnergyEvaluator ev_union(ctx, WaveBasis::TriangleFolded, s.modes,
                                     s_union->cells(), T, space_order,
                                     time_nodes_per_period);
    auto ru = ev_union.observed(s);
    rep.observed_t_union = ru.value;
    if (ru.value > 0.0) rep.union_excess = (rt.value - ru.value) / ru.value;
  }

  double et = rep.energy_t.total(), er = rep.energy_r.total();
  rep.energy_ratio = et > 0.0 ? er / et : 0.0;
  rep.observed_ratio = rt.value > 0.0 ? rr.value / rt.value : 0.0;
  rep.lower_t = rt.value - c1 * et >= 0.0;
  rep.lower_r = rr.value - c1 * er >= 0.0;
  rep.upper_t = c2 * et - rt.value >= 0.0;
  rep.upper_r = c2 * er - rr.value >= 0.0;
  return rep;
}

}  // namespace triobs
