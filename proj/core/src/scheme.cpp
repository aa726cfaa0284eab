#include "hamint/scheme.hpp"

#include <charconv>
#include <cmath>

#include "hamint/errors.hpp"
#include "hamint/exactlin.hpp"

namespace hamint {

namespace {

int parse_suffix(std::string_view text, std::string_view prefix) {
  const std::string_view digits = text.substr(prefix.size());
  int value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw UsageError("malformed scheme id '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

SchemeId parse_scheme(std::string_view text) {
  if (text == "gr") return {SchemeKind::gr, 0};
  if (text == "mod-gr") return {SchemeKind::mod_gr, 0};
  if (text == "gr-lex") return {SchemeKind::gr_lex, 0};
  if (text == "gr-slex") return {SchemeKind::gr_slex, 0};
  if (text == "lf") return {SchemeKind::leapfrog, 0};
  if (text == "rk4") return {SchemeKind::rk4, 0};
  if (text == "exact-lin") return {SchemeKind::exact_lin, 0};
  if (text.starts_with("gr-")) {
    const int n = parse_suffix(text, "gr-");
    if (n < 1 || n > kMaxSeriesOrder) {
      throw UnsupportedSchemeError("gr-N needs N in [1, " + std::to_string(kMaxSeriesOrder) + "]");
    }
    return {SchemeKind::gr_series, n};
  }
  if (text.starts_with("tay-")) {
    const int n = parse_suffix(text, "tay-");
    if (n < 1 || n > kMaxSeriesOrder) {
      throw UnsupportedSchemeError("tay-N needs N in [1, " + std::to_string(kMaxSeriesOrder) + "]");
    }
    return {SchemeKind::taylor, n};
  }
  if (text.starts_with("sp-")) {
    const int n = parse_suffix(text, "sp-");
    if (n < 2 || n > 8 || n % 2 != 0) throw UnsupportedSchemeError("sp-2M needs 2M in {2, 4, 6, 8}");
    return {SchemeKind::symplectic, n};
  }
  throw UsageError("unknown scheme '" + std::string(text) + "'");
}

std::string to_string(const SchemeId& id) {
  switch (id.kind) {
    case SchemeKind::gr: return "gr";
    case SchemeKind::mod_gr: return "mod-gr";
    case SchemeKind::gr_lex: return "gr-lex";
    case SchemeKind::gr_slex: return "gr-slex";
    case SchemeKind::gr_series: return "gr-" + std::to_string(id.order);
    case SchemeKind::leapfrog: return "lf";
    case SchemeKind::rk4: return "rk4";
    case SchemeKind::taylor: return "tay-" + std::to_string(id.order);
    case SchemeKind::symplectic: return "sp-" + std::to_string(id.order);
    case SchemeKind::exact_lin: return "exact-lin";
  }
  return "?";
}

bool is_gradient_scheme(const SchemeId& id) {
  switch (id.kind) {
    case SchemeKind::gr:
    case SchemeKind::mod_gr:
    case SchemeKind::gr_lex:
    case SchemeKind::gr_slex:
    case SchemeKind::gr_series: return true;
    default: return false;
  }
}

int nominal_order(const SchemeId& id) {
  switch (id.kind) {
    case SchemeKind::gr:
    case SchemeKind::mod_gr:
    case SchemeKind::leapfrog: return 2;
    case SchemeKind::gr_lex: return 3;
    case SchemeKind::gr_slex:
    case SchemeKind::rk4: return 4;
    // delta is exact to O(h^{N+1}) but the underlying discrete gradient
    // limits nothing else, so GR-1 and GR-2 coincide with GR.
    case SchemeKind::gr_series: return id.order < 2 ? 2 : id.order;
    case SchemeKind::taylor:
    case SchemeKind::symplectic: return id.order;
    case SchemeKind::exact_lin: return 0;
  }
  return 0;
}

Stepper::Stepper(const SchemeId& id, const HamiltonianSystem& sys, double h, const SolverConfig& cfg)
    : id_(id), sys_(&sys), h_(h), cfg_(cfg) {
  cfg_.validate();
  if (!std::isfinite(h) || h == 0.0) throw UsageError("step size must be finite and non-zero");
  switch (id.kind) {
    case SchemeKind::gr: rule_ = ConstantStep{}; break;
    case SchemeKind::mod_gr: {
      ModifiedGradient rule;
      prime(rule, sys, h);
      rule_ = rule;
      break;
    }
    case SchemeKind::gr_lex: rule_ = LocallyExact{}; break;
    case SchemeKind::gr_slex: rule_ = SymmetricLocallyExact{}; break;
    case SchemeKind::gr_series: rule_ = SeriesDelta{id.order}; break;
    case SchemeKind::leapfrog:
    case SchemeKind::symplectic:
      if (!sys.has_unit_mass()) {
        throw UnsupportedSchemeError(to_string(id) + " needs a separable system with T = p^2/2; '" + sys.name() +
                                     "' is not");
      }
      if (id.kind == SchemeKind::symplectic) sp_ = sp_coefficients(id.order / 2);
      break;
    case SchemeKind::exact_lin:
      if (!sys.is_quadratic()) {
        throw UnsupportedSchemeError("exact-lin needs a quadratic Hamiltonian; '" + sys.name() + "' is not");
      }
      break;
    case SchemeKind::taylor:
      if (id.order < 1 || id.order > kMaxSeriesOrder) throw UnsupportedSchemeError("tay-N order out of range");
      break;
    case SchemeKind::rk4: break;
  }
}

PhaseState Stepper::step(const PhaseState& s) {
  last_iterations_ = 0;
  switch (id_.kind) {
    case SchemeKind::leapfrog: return step_leapfrog(*sys_, s, h_);
    case SchemeKind::rk4: return step_rk4(*sys_, s, h_);
    case SchemeKind::taylor: return step_taylor(*sys_, s, h_, id_.order);
    case SchemeKind::symplectic: return step_symplectic(*sys_, s, h_, sp_);
    case SchemeKind::exact_lin: return exact_linear_step(*sys_, s, h_);
    default: break;
  }
  const GradientStep g = solve_gradient_step(*sys_, rule_, s, h_, cfg_);
  last_iterations_ = g.iterations;
  return g.state;
}

}  // namespace hamint
