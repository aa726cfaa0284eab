#pragma once

#include <cstdint>

#include "hamint/hamiltonian.hpp"

namespace hamint {

/// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2.
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;
};

/// Complete elliptic integral of the first kind, modulus k in [0, 1).
double elliptic_K(double k);

/// K(k) carried to double-double precision.
DoubleDouble elliptic_K_dd(double k);

struct JacobiElliptic {
  double sn = 0.0;
  double cn = 1.0;
  double dn = 1.0;
  double am = 0.0;  // amplitude, continuous in u
};

/// sn, cn, dn and am of (u, k) by the descending Landen (AGM) scheme.
JacobiElliptic jacobi_sn_cn_dn(double u, double k);

enum class OrbitRegime { libration, separatrix, rotation };

/// Pendulum orbit through x = 0 with momentum p0.
struct PendulumOrbit {
  double p0 = 0.0;
  OrbitRegime regime = OrbitRegime::libration;
  double modulus = 0.0;  // |p0|/2 when librating, 2/|p0| when rotating
  double period = 0.0;   // libration: 4K; rotation: 2 k K (x advances by 2 pi)
  DoubleDouble period_dd;
  double energy = 0.0;
};

PendulumOrbit pendulum_orbit(double p0);

/// Period of the orbit; throws DomainError at the separatrix and at rest.
double pendulum_period(double p0);

/// Exact state at time t, x unwrapped in the rotation regime.
PhaseState pendulum_exact(double p0, double t);

/// Exact state at t = n h, with n h formed and reduced by the period in
/// double-double arithmetic so that long runs keep full phase accuracy.
PhaseState pendulum_exact_at_step(const PendulumOrbit& orbit, std::int64_t n, double h);

}  // namespace hamint
