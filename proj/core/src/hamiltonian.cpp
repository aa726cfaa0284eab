#include "hamint/hamiltonian.hpp"

#include <string>

namespace hamint {

std::pair<double, double> HamiltonianSystem::gradient(double x, double p) const {
  if (const auto& g = std::get<GradientFn<double>>(gradients_)) return g(x, p);
  if (separable_) {
    const auto& slot = std::get<Slot<Jet>>(parts_);
    return {slot.potential(Jet::variable(x, 1))[1], slot.kinetic(Jet::variable(p, 1))[1]};
  }
  const auto& h = std::get<EnergyFn<Jet>>(energy_);
  const double hx = h(Jet::variable(x, 1), Jet::constant(p, 1))[1];
  const double hp = h(Jet::constant(x, 1), Jet::variable(p, 1))[1];
  return {hx, hp};
}

std::pair<Jet, Jet> HamiltonianSystem::gradient(const Jet& x, const Jet& p) const {
  if (const auto& g = std::get<GradientFn<Jet>>(gradients_)) return g(x, p);
  // Outer variable of order 1 carries the derivative direction.
  if (separable_) {
    const auto& slot = std::get<Slot<Jet2>>(parts_);
    return {slot.potential(Jet2::variable(x, 1))[1], slot.kinetic(Jet2::variable(p, 1))[1]};
  }
  const auto& h = std::get<EnergyFn<Jet2>>(energy_);
  Jet hx = h(Jet2::variable(x, 1), Jet2::constant(p, 1))[1];
  Jet hp = h(Jet2::constant(x, 1), Jet2::variable(p, 1))[1];
  return {hx, hp};
}

double eval_energy(const HamiltonianSystem& sys, const PhaseState& s) {
  return sys.energy(s.x, s.p);
}

namespace {

void check_partials_order(int max_order) {
  if (max_order < 1 || max_order > 3) {
    throw UsageError("partials order must be 1, 2 or 3, got " + std::to_string(max_order));
  }
}

}  // namespace

Partials jet_partials(const HamiltonianSystem& sys, const PhaseState& s, int max_order) {
  check_partials_order(max_order);
  const int m = max_order;
  // Outer series in dx, inner in dp: e[i][j] = d^i_x d^j_p H / (i! j!).
  const Jet2 x = Jet2::variable(Jet::constant(s.x, m), m);
  const Jet2 p = Jet2::constant(Jet::variable(s.p, m), m);
  const Jet2 e = sys.energy(x, p);
  auto d = [&](int i, int j) {
    static constexpr double kFactorial[] = {1.0, 1.0, 2.0, 6.0};
    return e[i][j] * kFactorial[i] * kFactorial[j];
  };
  Partials out;
  out.order = m;
  out.value = d(0, 0);
  out.hx = d(1, 0);
  out.hp = d(0, 1);
  if (m >= 2) {
    out.hxx = d(2, 0);
    out.hxp = d(1, 1);
    out.hpp = d(0, 2);
  }
  if (m >= 3) {
    out.hxxx = d(3, 0);
    out.hxxp = d(2, 1);
    out.hxpp = d(1, 2);
    out.hppp = d(0, 3);
  }
  return out;
}

Partials eval_partials(const HamiltonianSystem& sys, const PhaseState& s, int max_order) {
  check_partials_order(max_order);
  if (auto oracle = sys.oracle_partials(s.x, s.p, max_order)) {
    oracle->order = max_order;
    return *oracle;
  }
  return jet_partials(sys, s, max_order);
}

double frequency_squared(const HamiltonianSystem& sys, const PhaseState& at) {
  const Partials d = eval_partials(sys, at, 2);
  return d.hxx * d.hpp - d.hxp * d.hxp;
}

LinearSystem linearize(const HamiltonianSystem& sys, const PhaseState& at) {
  const Partials d = eval_partials(sys, at, 2);
  LinearSystem lin;
  lin.A << d.hxp, d.hpp, -d.hxx, -d.hxp;
  lin.b << d.hp, -d.hx;
  lin.omega_sq = d.hxx * d.hpp - d.hxp * d.hxp;
  return lin;
}

FlowSeries taylor_flow_coeffs(const HamiltonianSystem& sys, const PhaseState& s, int order) {
  if (order < 1 || order > kMaxSeriesOrder) {
    throw UsageError("Taylor order must lie in [1, " + std::to_string(kMaxSeriesOrder) + "], got " +
                     std::to_string(order));
  }
  // Picard: each sweep fixes one more coefficient of
  // x = x_n + int H_p(x, p), p = p_n - int H_x(x, p).
  // Sweep m only needs the iterate to order m.
  FlowSeries f{Jet::constant(s.x, 0), Jet::constant(s.p, 0)};
  for (int m = 1; m <= order; ++m) {
    auto [hx, hp] = sys.gradient(with_order(f.x, m), with_order(f.p, m));
    f.x = s.x + integrate(hp);
    f.p = s.p - integrate(hx);
  }
  return f;
}

}  // namespace hamint
