#pragma once

#include <vector>

#include "hamint/hamiltonian.hpp"

namespace hamint {

/// Drift/kick weights of an explicit composition step for H = p^2/2 + V(x):
/// for i = 1..K+1, x += h c_i p, then p -= h d_i V'(x). d_{K+1} = 0.
struct SymplecticCoeffs {
  int half_order = 1;  // M; the scheme has order 2M
  std::vector<double> c;
  std::vector<double> d;
};

/// Position (drift-kick-drift) leap-frog. Same map as SP-2.
PhaseState step_leapfrog(const HamiltonianSystem& sys, const PhaseState& s, double h);

/// Classical four-stage Runge-Kutta.
PhaseState step_rk4(const HamiltonianSystem& sys, const PhaseState& s, double h);

/// Degree-N Taylor polynomial of the flow (TAY-N), N in [1, 16].
PhaseState step_taylor(const HamiltonianSystem& sys, const PhaseState& s, double h, int order);

/// SP-2M weights for M in [1, 4] by Yoshida triple-jump composition of SP-2.
SymplecticCoeffs sp_coefficients(int half_order);

PhaseState step_symplectic(const HamiltonianSystem& sys, const PhaseState& s, double h,
                           const SymplecticCoeffs& coeffs);

}  // namespace hamint
