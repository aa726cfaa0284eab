#pragma once

// Non-standard discrete gradient schemes
//
//   (x' - x)/delta = G_p(x, x'; p, p'),   (p' - p)/delta = -G_x(x, x'; p, p'),
//
// where G_p averages the p-divided differences of H at x and x', and G_x the
// x-divided differences at p and p'. Any positive delta conserves H exactly;
// the rules below choose delta to raise accuracy.

#include <functional>
#include <optional>
#include <variant>

#include "hamint/exactlin.hpp"
#include "hamint/hamiltonian.hpp"
#include "hamint/jet.hpp"

namespace hamint {

/// delta = h (GR).
struct ConstantStep {};

/// delta = delta_lex at a fixed point, usually a stable equilibrium (MOD-GR).
struct ModifiedGradient {
  double x_bar = 0.0;
  double p_bar = 0.0;
  std::optional<double> cached_delta;
  double cached_h = 0.0;
};

/// delta = delta_lex at the step's start point (GR-LEX).
struct LocallyExact {};

/// delta = delta_lex at the midpoint of the step, re-evaluated every iteration (GR-SLEX).
struct SymmetricLocallyExact {};

/// delta = order-N truncation of the delta of the exact flow (GR-N).
struct SeriesDelta {
  int order = 3;
};

/// Arbitrary delta(h, s_n, s_next); s_next is the current iterate.
struct CustomDelta {
  std::function<double(double h, const PhaseState& s_n, const PhaseState& s_next)> fn;
};

using DeltaRule =
    std::variant<ConstantStep, ModifiedGradient, LocallyExact, SymmetricLocallyExact, SeriesDelta, CustomDelta>;

struct SolverConfig {
  /// Fixed-point increment tolerance, relative to max(1, |x|, |p|).
  double tol = 1e-15;
  int max_iter = 100;
  /// Abort once an increment exceeds this.
  double divergence_guard = 1e6;

  void validate() const;
};

struct Residual {
  double rx = 0.0;
  double rp = 0.0;
};

/// Residual of the scheme equations at a candidate s_next.
Residual discrete_gradient_residual(const HamiltonianSystem& sys, const PhaseState& s_n,
                                    const PhaseState& s_next, double delta);

/// G_p: [H(x',p') + H(x,p') - H(x',p) - H(x,p)] / (2 (p' - p)), limit-safe.
double momentum_divided_difference(const HamiltonianSystem& sys, const PhaseState& s_n,
                                   const PhaseState& s_next);
/// G_x: [H(x',p') + H(x',p) - H(x,p') - H(x,p)] / (2 (x' - x)), limit-safe.
double position_divided_difference(const HamiltonianSystem& sys, const PhaseState& s_n,
                                   const PhaseState& s_next);

double delta_gr(double h);

/// (2/omega) tan(h omega/2) with omega^2 = omega_sq; tanh form for
/// omega_sq < 0, series h + h^3 omega_sq/12 near zero. Odd in h.
/// Throws ResonanceError when |h| omega >= pi.
double delta_lex(double omega_sq, double h);

/// Coefficients a_0..a_N of the delta series at s (a_0 = 0, a_1 = 1, a_2 = 0).
Jet delta_series_coeffs(const HamiltonianSystem& sys, const PhaseState& s, int order);

/// sum_{k=1..N} a_k(s) h^k.
double delta_series(const HamiltonianSystem& sys, const PhaseState& s, double h, int order);

/// Sets the MOD-GR cache for step size h.
void prime(ModifiedGradient& rule, const HamiltonianSystem& sys, double h);

struct GradientStep {
  PhaseState state;
  int iterations = 0;
  double delta = 0.0;
  double last_increment = 0.0;
};

/// One implicit step solved by fixed-point iteration from an explicit Euler
/// predictor. Throws NonConvergenceError / DivergenceError / ResonanceError.
GradientStep solve_gradient_step(const HamiltonianSystem& sys, const DeltaRule& rule, const PhaseState& s_n,
                                 double h, const SolverConfig& cfg = {});

PhaseState step_gradient(const HamiltonianSystem& sys, const DeltaRule& rule, const PhaseState& s_n, double h,
                         const SolverConfig& cfg = {});

/// Linearization of the scheme about s_bar with delta frozen at its s_bar
/// value: xi' = M xi + w.
AffineStepMap local_exactness_matrix(const HamiltonianSystem& sys, const DeltaRule& rule,
                                     const PhaseState& s_bar, double h);

}  // namespace hamint
