#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "hamint/baselines.hpp"
#include "hamint/gradient_schemes.hpp"
#include "hamint/hamiltonian.hpp"

namespace hamint {

enum class SchemeKind {
  gr,
  mod_gr,
  gr_lex,
  gr_slex,
  gr_series,  // gr-N
  leapfrog,
  rk4,
  taylor,      // tay-N
  symplectic,  // sp-2M
  exact_lin,
};

struct SchemeId {
  SchemeKind kind = SchemeKind::gr;
  int order = 0;  // N of gr-N and tay-N, 2M of sp-2M; unused otherwise

  friend bool operator==(const SchemeId&, const SchemeId&) = default;
};

/// Parses gr, mod-gr, gr-lex, gr-slex, gr-N, lf, rk4, tay-N, sp-2M, exact-lin.
/// Throws UsageError for anything else.
SchemeId parse_scheme(std::string_view text);
std::string to_string(const SchemeId& id);

bool is_gradient_scheme(const SchemeId& id);

/// Order of accuracy the scheme is designed for.
int nominal_order(const SchemeId& id);

/// A configured one-step map phi_h for one system. Throws
/// UnsupportedSchemeError on construction if the pair is incompatible.
class Stepper {
 public:
  Stepper(const SchemeId& id, const HamiltonianSystem& sys, double h, const SolverConfig& cfg = {});

  const SchemeId& scheme() const noexcept { return id_; }
  double h() const noexcept { return h_; }

  PhaseState step(const PhaseState& s);

  /// Fixed-point iterations of the last step; 0 for explicit schemes.
  int last_iterations() const noexcept { return last_iterations_; }

 private:
  SchemeId id_;
  const HamiltonianSystem* sys_;
  double h_;
  SolverConfig cfg_;
  DeltaRule rule_;
  SymplecticCoeffs sp_;
  int last_iterations_ = 0;
};

}  // namespace hamint
