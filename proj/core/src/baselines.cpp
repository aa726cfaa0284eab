#include "hamint/baselines.hpp"

#include <cmath>
#include <string>

namespace hamint {

namespace {

void require_unit_mass(const HamiltonianSystem& sys, const char* scheme) {
  if (!sys.has_unit_mass()) {
    throw UnsupportedSchemeError(std::string(scheme) + " needs a separable system with T = p^2/2; '" +
                                 sys.name() + "' is not");
  }
}

double force(const HamiltonianSystem& sys, double x) { return sys.gradient(x, 0.0).first; }

}  // namespace

PhaseState step_leapfrog(const HamiltonianSystem& sys, const PhaseState& s, double h) {
  require_unit_mass(sys, "leap-frog");
  const double x_half = s.x + h * 0.5 * s.p;
  const double p_next = s.p - h * 1.0 * force(sys, x_half);
  return {x_half + h * 0.5 * p_next, p_next, s.t + h};
}

PhaseState step_rk4(const HamiltonianSystem& sys, const PhaseState& s, double h) {
  auto rhs = [&](double x, double p) {
    const auto [hx, hp] = sys.gradient(x, p);
    return std::pair{hp, -hx};
  };
  const auto [k1x, k1p] = rhs(s.x, s.p);
  const auto [k2x, k2p] = rhs(s.x + 0.5 * h * k1x, s.p + 0.5 * h * k1p);
  const auto [k3x, k3p] = rhs(s.x + 0.5 * h * k2x, s.p + 0.5 * h * k2p);
  const auto [k4x, k4p] = rhs(s.x + h * k3x, s.p + h * k3p);
  return {s.x + h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x),
          s.p + h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p), s.t + h};
}

PhaseState step_taylor(const HamiltonianSystem& sys, const PhaseState& s, double h, int order) {
  const FlowSeries f = taylor_flow_coeffs(sys, s, order);
  return {evaluate(f.x, h), evaluate(f.p, h), s.t + h};
}

SymplecticCoeffs sp_coefficients(int half_order) {
  if (half_order < 1 || half_order > 4) {
    throw UnsupportedSchemeError("SP-2M is available for M in [1, 4], got M = " + std::to_string(half_order));
  }
  SymplecticCoeffs out{1, {0.5, 0.5}, {1.0, 0.0}};
  for (int m = 1; m < half_order; ++m) {
    const double y = 1.0 / (2.0 - std::pow(2.0, 1.0 / (2 * m + 1)));
    const double fractions[3] = {y, 1.0 - 2.0 * y, y};
    SymplecticCoeffs next{m + 1, {}, {}};
    for (double f : fractions) {
      for (std::size_t i = 0; i < out.c.size(); ++i) {
        const double ci = f * out.c[i];
        const double di = f * out.d[i];
        if (i == 0 && !next.c.empty()) {
          // The previous substep ended with a drift and no kick: merge the drifts.
          next.c.back() += ci;
          next.d.back() = di;
        } else {
          next.c.push_back(ci);
          next.d.push_back(di);
        }
      }
    }
    out = std::move(next);
  }
  return out;
}

PhaseState step_symplectic(const HamiltonianSystem& sys, const PhaseState& s, double h,
                           const SymplecticCoeffs& coeffs) {
  require_unit_mass(sys, "SP-2M");
  double x = s.x;
  double p = s.p;
  for (std::size_t i = 0; i < coeffs.c.size(); ++i) {
    x += h * coeffs.c[i] * p;
    if (coeffs.d[i] != 0.0) p -= h * coeffs.d[i] * force(sys, x);
  }
  return {x, p, s.t + h};
}

}  // namespace hamint
