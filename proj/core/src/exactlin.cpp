#include "hamint/exactlin.hpp"

#include <cmath>
#include <limits>

namespace hamint {

namespace {

constexpr double kDegenerateOmegaSq = 1e-12;

// With z = omega_sq h^2:
//   C = cos(sqrt z), S = sin(sqrt z)/sqrt z, U = (1 - cos(sqrt z))/z
// continued to z < 0 through cosh/sinh.
struct StepFunctions {
  double C, S, U;
};

StepFunctions step_functions(double omega_sq, double h) {
  if (std::abs(omega_sq) < kDegenerateOmegaSq) {
    const double z = omega_sq * h * h;
    return {1.0 - z / 2.0 + z * z / 24.0, 1.0 - z / 6.0 + z * z / 120.0, 0.5 - z / 24.0 + z * z / 720.0};
  }
  if (omega_sq > 0.0) {
    const double omega = std::sqrt(omega_sq);
    const double th = h * omega;
    const double half = std::sin(0.5 * th);
    // 1 - cos = 2 sin^2(th/2) avoids cancellation at small th.
    return {std::cos(th), std::sin(th) / th, 2.0 * half * half / (th * th)};
  }
  const double mu = std::sqrt(-omega_sq);
  const double th = h * mu;
  const double half = std::sinh(0.5 * th);
  return {std::cosh(th), std::sinh(th) / th, 2.0 * half * half / (th * th)};
}

}  // namespace

AffineStepMap exact_step_map(const LinearSystem& lin, double h) {
  AffineStepMap map;
  if (h == 0.0) return map;
  const StepFunctions f = step_functions(lin.omega_sq, h);
  map.M = f.C * Eigen::Matrix2d::Identity() + (h * f.S) * lin.A;
  map.w = (h * f.S) * lin.b + (h * h * f.U) * (lin.A * lin.b);
  return map;
}

PhaseState exact_linear_step(const HamiltonianSystem& sys, const PhaseState& s, double h) {
  const AffineStepMap map = exact_step_map(linearize(sys, s), h);
  return {s.x + map.w.x(), s.p + map.w.y(), s.t + h};
}

double exact_exp_growth_delta(double a, double h) {
  const double ah = a * h;
  if (std::abs(ah) < 1e-8) return h * (1.0 + 0.5 * ah);
  return std::expm1(ah) / a;
}

double exact_harmonic_recurrence(double omega, double h, double x_n, double x_nm1) {
  if (!(omega > 0.0)) throw UsageError("harmonic recurrence needs omega > 0");
  return 2.0 * std::cos(omega * h) * x_n - x_nm1;
}

double exact_harmonic_momentum(double omega, double h, double x_n, double x_np1) {
  if (!(omega > 0.0)) throw UsageError("harmonic recurrence needs omega > 0");
  const double th = omega * h;
  const double s = std::sin(th);
  if (std::abs(s) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(th))) {
    throw DegenerateStepError("sin(omega h) vanishes; momentum is not recoverable from positions");
  }
  return omega * (x_np1 - std::cos(th) * x_n) / s;
}

double exact_harmonic_delta(double omega, double h) {
  if (!(omega > 0.0)) throw UsageError("harmonic delta needs omega > 0");
  return 2.0 / omega * std::sin(0.5 * omega * h);
}

}  // namespace hamint
