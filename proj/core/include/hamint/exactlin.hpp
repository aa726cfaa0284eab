#pragma once

#include <Eigen/Dense>

#include "hamint/hamiltonian.hpp"

namespace hamint {

/// v -> M v + w.
struct AffineStepMap {
  Eigen::Matrix2d M = Eigen::Matrix2d::Identity();
  Eigen::Vector2d w = Eigen::Vector2d::Zero();

  Eigen::Vector2d apply(const Eigen::Vector2d& v) const { return M * v + w; }
};

/// `second` after `first`.
inline AffineStepMap compose(const AffineStepMap& second, const AffineStepMap& first) {
  return {second.M * first.M, second.M * first.w + second.w};
}

/// Exact time-h map of d/dt v = A v + b for trace-free A with A^2 = -omega_sq I:
/// M = e^{hA}, w = h phi1(hA) b. Valid for singular A.
AffineStepMap exact_step_map(const LinearSystem& lin, double h);

/// Exact step of the linearization at the current state: s + w. Exact for
/// quadratic H, second order otherwise.
PhaseState exact_linear_step(const HamiltonianSystem& sys, const PhaseState& s, double h);

/// (e^{ah} - 1)/a, continuous through a = 0.
double exact_exp_growth_delta(double a, double h);

/// x_{n+1} = 2 cos(omega h) x_n - x_{n-1}.
double exact_harmonic_recurrence(double omega, double h, double x_n, double x_nm1);

/// p_n = omega (x_{n+1} - cos(omega h) x_n) / sin(omega h), with p = dx/dt.
/// Throws DegenerateStepError
/// when sin(omega h) vanishes to rounding.
double exact_harmonic_momentum(double omega, double h, double x_n, double x_np1);

/// (2/omega) sin(omega h / 2): the denominator that makes the central second
/// difference exact for the harmonic oscillator.
double exact_harmonic_delta(double omega, double h);

}  // namespace hamint
