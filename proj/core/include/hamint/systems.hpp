#pragma once

#include <string_view>

#include "hamint/hamiltonian.hpp"

namespace hamint {

/// H = p^2/2 - cos x.
HamiltonianSystem pendulum();

/// H = p^2/2 + omega^2 x^2 / 2.
HamiltonianSystem harmonic(double omega = 1.0);

/// H = p^2/2 + x^2/2 + alpha x p. Non-separable; linear flow for |alpha| != 1.
HamiltonianSystem crossterm(double alpha);

/// Resolves "pendulum", "harmonic[:omega]" and "crossterm:alpha".
HamiltonianSystem make_system(std::string_view spec);

}  // namespace hamint
