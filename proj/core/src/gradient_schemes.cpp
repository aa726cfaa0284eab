#include "hamint/gradient_schemes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

namespace hamint {

namespace {

constexpr double kDegenerateOmegaSq = 1e-12;

// Below this separation (relative to max(1, |a|, |b|)) the difference
// quotient loses up to eps |f| / |b - a| to cancellation; a midpoint series in
// u = (b - a)/2 is used instead. The first omitted term is O(u^16), below
// 1e-25 at the switch.
constexpr double kSeriesSwitch = 0.05;
constexpr int kSeriesOrder = 15;

// [f(b) - f(a)]/(b - a). Near coincidence it becomes sum_{k odd} f_k(m) u^{k-1}
// with f_k the Taylor coefficients at m = (a + b)/2, which keeps it symmetric
// in (a, b).
template <class F, class FJet>
double divided_difference(double a, double b, F f, FJet f_jet) {
  const double width = b - a;
  if (std::abs(width) >= kSeriesSwitch * std::max({1.0, std::abs(a), std::abs(b)})) {
    return (f(b) - f(a)) / width;
  }
  const double u = 0.5 * width;
  const Jet c = f_jet(Jet::variable(0.5 * (a + b), kSeriesOrder));
  const double u2 = u * u;
  double acc = 0.0;
  for (int k = kSeriesOrder % 2 == 1 ? kSeriesOrder : kSeriesOrder - 1; k >= 1; k -= 2) acc = acc * u2 + c[k];
  return acc;
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

void SolverConfig::validate() const {
  if (!(tol > 0.0)) throw UsageError("solver tolerance must be positive");
  if (max_iter < 1) throw UsageError("solver max_iter must be at least 1");
  if (!(divergence_guard > 0.0)) throw UsageError("divergence guard must be positive");
}

double momentum_divided_difference(const HamiltonianSystem& sys, const PhaseState& s_n,
                                   const PhaseState& s_next) {
  const double p0 = s_n.p;
  const double p1 = s_next.p;
  if (sys.is_separable()) {
    if (const auto& dd = sys.kinetic_divided_difference()) return dd(p0, p1);
    if (sys.has_unit_mass()) return 0.5 * (p0 + p1);
    return divided_difference(
        p0, p1, [&](double p) { return sys.kinetic(p); }, [&](const Jet& p) { return sys.kinetic(p); });
  }
  auto at = [&](double x) {
    return divided_difference(
        p0, p1, [&](double p) { return sys.energy(x, p); },
        [&](const Jet& p) { return sys.energy(Jet::constant(x, p.order()), p); });
  };
  return 0.5 * (at(s_next.x) + at(s_n.x));
}

double position_divided_difference(const HamiltonianSystem& sys, const PhaseState& s_n,
                                   const PhaseState& s_next) {
  const double x0 = s_n.x;
  const double x1 = s_next.x;
  if (sys.is_separable()) {
    if (const auto& dd = sys.potential_divided_difference()) return dd(x0, x1);
    return divided_difference(
        x0, x1, [&](double x) { return sys.potential(x); }, [&](const Jet& x) { return sys.potential(x); });
  }
  auto at = [&](double p) {
    return divided_difference(
        x0, x1, [&](double x) { return sys.energy(x, p); },
        [&](const Jet& x) { return sys.energy(x, Jet::constant(p, x.order())); });
  };
  return 0.5 * (at(s_next.p) + at(s_n.p));
}

Residual discrete_gradient_residual(const HamiltonianSystem& sys, const PhaseState& s_n,
                                    const PhaseState& s_next, double delta) {
  if (!(delta > 0.0) && !(delta < 0.0)) throw UsageError("delta must be nonzero");
  return {(s_next.x - s_n.x) / delta - momentum_divided_difference(sys, s_n, s_next),
          (s_next.p - s_n.p) / delta + position_divided_difference(sys, s_n, s_next)};
}

double delta_gr(double h) { return h; }

double delta_lex(double omega_sq, double h) {
  if (std::abs(omega_sq) <= kDegenerateOmegaSq) return h + h * h * h * omega_sq / 12.0;
  if (omega_sq > 0.0) {
    const double omega = std::sqrt(omega_sq);
    if (std::abs(h) * omega >= std::numbers::pi) {
      throw ResonanceError("locally exact delta: h*omega = " + std::to_string(std::abs(h) * omega) +
                           " reaches the tan pole at pi");
    }
    return 2.0 / omega * std::tan(0.5 * h * omega);
  }
  const double mu = std::sqrt(-omega_sq);
  return 2.0 / mu * std::tanh(0.5 * h * mu);
}

namespace {

// sum_{j=1..N} c_j u^{j-1} with jet coefficients.
Jet horner(std::span<const Jet> c, const Jet& u) {
  Jet acc = c.back();
  for (std::size_t j = c.size() - 1; j-- > 0;) acc = acc * u + c[j];
  return acc;
}

// G_p along the truncated flow, as a series of order N-1 in h:
// divided differences expanded in powers of dp = p(h) - p_n.
Jet momentum_dd_series(const HamiltonianSystem& sys, const PhaseState& s, const FlowSeries& f,
                       const Jet& dp, int n) {
  const Jet du = with_order(dp, n - 1);
  if (sys.is_separable()) {
    if (sys.has_unit_mass()) return s.p + 0.5 * du;
    const Jet t = sys.kinetic(Jet::variable(s.p, n));
    std::vector<Jet> c;
    for (int j = 1; j <= n; ++j) c.push_back(Jet::constant(t[j], n - 1));
    return horner(c, du);
  }
  // (1/j!) d^j_p H at (x(h), p_n) as h-series, and at (x_n, p_n).
  const Jet2 e_moving = sys.energy(Jet2::constant(with_order(f.x, n - 1), n),
                                   Jet2::variable(Jet::constant(s.p, n - 1), n));
  const Jet e_fixed = sys.energy(Jet::constant(s.x, n), Jet::variable(s.p, n));
  std::vector<Jet> c;
  for (int j = 1; j <= n; ++j) c.push_back(0.5 * (e_moving[j] + e_fixed[j]));
  return horner(c, du);
}

Jet position_dd_series(const HamiltonianSystem& sys, const PhaseState& s, const FlowSeries& f,
                       const Jet& dx, int n) {
  const Jet du = with_order(dx, n - 1);
  if (sys.is_separable()) {
    const Jet v = sys.potential(Jet::variable(s.x, n));
    std::vector<Jet> c;
    for (int j = 1; j <= n; ++j) c.push_back(Jet::constant(v[j], n - 1));
    return horner(c, du);
  }
  const Jet2 e_moving = sys.energy(Jet2::variable(Jet::constant(s.x, n - 1), n),
                                   Jet2::constant(with_order(f.p, n - 1), n));
  const Jet e_fixed = sys.energy(Jet::variable(s.x, n), Jet::constant(s.p, n));
  std::vector<Jet> c;
  for (int j = 1; j <= n; ++j) c.push_back(0.5 * (e_moving[j] + e_fixed[j]));
  return horner(c, du);
}

}  // namespace

Jet delta_series_coeffs(const HamiltonianSystem& sys, const PhaseState& s, int order) {
  if (order < 1 || order > kMaxSeriesOrder) {
    throw UsageError("delta series order must lie in [1, " + std::to_string(kMaxSeriesOrder) + "]");
  }
  const int n = order;
  const FlowSeries f = taylor_flow_coeffs(sys, s, n);
  // Constant terms cancel exactly, so dividing out one power of h is exact.
  const Jet dx = f.x - s.x;
  const Jet dp = f.p - s.p;
  const Jet dx_h = shift(dx, -1);
  const Jet dp_h = shift(dp, -1);

  Jet delta_over_h(n - 1);
  const double hp = dx_h[0];
  const double hx = -dp_h[0];
  if (hp == 0.0 && hx == 0.0) {
    // Equilibrium: the flow is constant.
    delta_over_h[0] = 1.0;
  } else if (std::abs(hp) >= std::abs(hx)) {
    // 2 dx dp / D with D = 2 dp G_p  =>  delta = dx / G_p.
    delta_over_h = dx_h / momentum_dd_series(sys, s, f, dp, n);
  } else {
    // D = -2 dx G_x (up to the flow's O(h^{N+1}) energy defect)  =>  delta = -dp / G_x.
    delta_over_h = -dp_h / position_dd_series(sys, s, f, dx, n);
  }
  return shift(with_order(delta_over_h, n), 1);
}

double delta_series(const HamiltonianSystem& sys, const PhaseState& s, double h, int order) {
  return evaluate(delta_series_coeffs(sys, s, order), h);
}

void prime(ModifiedGradient& rule, const HamiltonianSystem& sys, double h) {
  rule.cached_delta = delta_lex(frequency_squared(sys, {rule.x_bar, rule.p_bar, 0.0}), h);
  rule.cached_h = h;
}

namespace {

struct DeltaSource {
  std::optional<double> fixed;  // set unless delta depends on the iterate
  const DeltaRule* rule;
};

DeltaSource start_delta(const HamiltonianSystem& sys, const DeltaRule& rule, const PhaseState& s_n, double h) {
  DeltaSource src{std::nullopt, &rule};
  std::visit(Overloaded{
                 [&](const ConstantStep&) { src.fixed = delta_gr(h); },
                 [&](const ModifiedGradient& r) {
                   if (r.cached_delta && r.cached_h == h) {
                     src.fixed = *r.cached_delta;
                   } else {
                     src.fixed = delta_lex(frequency_squared(sys, {r.x_bar, r.p_bar, 0.0}), h);
                   }
                 },
                 [&](const LocallyExact&) { src.fixed = delta_lex(frequency_squared(sys, s_n), h); },
                 [&](const SymmetricLocallyExact&) {},
                 [&](const SeriesDelta& r) { src.fixed = delta_series(sys, s_n, h, r.order); },
                 [&](const CustomDelta& r) {
                   if (!r.fn) throw UsageError("custom delta rule has no function");
                 },
             },
             rule);
  return src;
}

double iterate_delta(const HamiltonianSystem& sys, const DeltaSource& src, const PhaseState& s_n,
                     const PhaseState& it, double h) {
  if (src.fixed) return *src.fixed;
  if (const auto* custom = std::get_if<CustomDelta>(src.rule)) return custom->fn(h, s_n, it);
  const PhaseState mid{0.5 * (s_n.x + it.x), 0.5 * (s_n.p + it.p), s_n.t + 0.5 * h};
  return delta_lex(frequency_squared(sys, mid), h);
}

}  // namespace

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace

GradientStep solve_gradient_step(const HamiltonianSystem& sys, const DeltaRule& rule, const PhaseState& s_n,
                                 double h, const SolverConfig& cfg) {
  cfg.validate();
  if (!(std::abs(h) > 0.0) || !std::isfinite(h)) throw UsageError("step size must be finite and nonzero");
  const DeltaSource src = start_delta(sys, rule, s_n, h);

  const auto [hx, hp] = sys.gradient(s_n.x, s_n.p);
  GradientStep out;
  out.state = {s_n.x + h * hp, s_n.p - h * hx, s_n.t + h};
  for (int iter = 1; iter <= cfg.max_iter; ++iter) {
    const double delta = iterate_delta(sys, src, s_n, out.state, h);
    const PhaseState next{s_n.x + delta * momentum_divided_difference(sys, s_n, out.state),
                          s_n.p - delta * position_divided_difference(sys, s_n, out.state), s_n.t + h};
    const double dx = std::abs(next.x - out.state.x);
    const double dp = std::abs(next.p - out.state.p);
    out.state = next;
    out.iterations = iter;
    out.delta = delta;
    out.last_increment = std::max(dx, dp);
    if (!std::isfinite(out.last_increment) || out.last_increment > cfg.divergence_guard) {
      throw DivergenceError("fixed-point iteration diverged (increment " + sci(out.last_increment) + " after " +
                                std::to_string(iter) + " iterations)",
                            out.last_increment);
    }
    // One ulp of the larger component feeds back into the other through the
    // Jacobian, so the test is on the state norm rather than per component.
    const double scale = std::max({1.0, std::abs(next.x), std::abs(next.p)});
    if (out.last_increment <= cfg.tol * scale) return out;
  }
  throw NonConvergenceError("fixed-point iteration did not reach tol " + sci(cfg.tol) + " in " +
                                std::to_string(cfg.max_iter) + " iterations (last increment " +
                                sci(out.last_increment) + ")",
                            out.last_increment);
}

PhaseState step_gradient(const HamiltonianSystem& sys, const DeltaRule& rule, const PhaseState& s_n, double h,
                         const SolverConfig& cfg) {
  return solve_gradient_step(sys, rule, s_n, h, cfg).state;
}

AffineStepMap local_exactness_matrix(const HamiltonianSystem& sys, const DeltaRule& rule,
                                     const PhaseState& s_bar, double h) {
  const double delta = std::visit(
      Overloaded{
          [&](const ConstantStep&) { return delta_gr(h); },
          [&](const ModifiedGradient& r) {
            return r.cached_delta && r.cached_h == h
                       ? *r.cached_delta
                       : delta_lex(frequency_squared(sys, {r.x_bar, r.p_bar, 0.0}), h);
          },
          [&](const LocallyExact&) { return delta_lex(frequency_squared(sys, s_bar), h); },
          [&](const SymmetricLocallyExact&) { return delta_lex(frequency_squared(sys, s_bar), h); },
          [&](const SeriesDelta& r) { return delta_series(sys, s_bar, h, r.order); },
          [&](const CustomDelta& r) -> double {
            if (!r.fn) throw UsageError("custom delta rule has no function");
            return r.fn(h, s_bar, s_bar);
          },
      },
      rule);
  const LinearSystem lin = linearize(sys, s_bar);
  const double quarter = 0.25 * lin.omega_sq * delta * delta;
  const double scale = 1.0 / (1.0 + quarter);
  AffineStepMap map;
  map.M = scale * ((1.0 - quarter) * Eigen::Matrix2d::Identity() + delta * lin.A);
  map.w = scale * (delta * lin.b + 0.5 * delta * delta * (lin.A * lin.b));
  return map;
}

}  // namespace hamint
