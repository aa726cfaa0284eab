#pragma once

#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <utility>

#include <Eigen/Dense>

#include "hamint/errors.hpp"
#include "hamint/jet.hpp"

namespace hamint {

/// A point of the one-dimensional phase plane, tagged with its time.
struct PhaseState {
  double x = 0.0;
  double p = 0.0;
  double t = 0.0;
};

/// Mixed partial derivatives of H at a point, up to third order.
/// Entries above `order` are left at zero.
struct Partials {
  int order = 1;
  double value = 0.0;
  double hx = 0.0, hp = 0.0;
  double hxx = 0.0, hxp = 0.0, hpp = 0.0;
  double hxxx = 0.0, hxxp = 0.0, hxpp = 0.0, hppp = 0.0;
};

/// Linearized flow d(xi, eta)/dt = A (xi, eta) + b about a fixed point of the
/// phase plane. A is trace-free and A^2 = -omega_sq I.
struct LinearSystem {
  Eigen::Matrix2d A = Eigen::Matrix2d::Zero();
  Eigen::Vector2d b = Eigen::Vector2d::Zero();
  double omega_sq = 0.0;
};

/// A time-independent Hamiltonian H(x, p).
///
/// The energy program is supplied as a generic callable and instantiated for
/// every scalar the library evaluates over: double, Jet and Jet2. Optional
/// closed-form oracles (gradient, partials, divided differences) give fast
/// paths; without them everything is derived from jet evaluation.
class HamiltonianSystem {
 public:
  template <class S>
  using EnergyFn = std::function<S(const S&, const S&)>;
  template <class S>
  using PartFn = std::function<S(const S&)>;
  template <class S>
  using GradientFn = std::function<std::pair<S, S>(const S&, const S&)>;
  using PartialsFn = std::function<Partials(double x, double p, int order)>;
  using DividedDifferenceFn = std::function<double(double a, double b)>;

  /// H given as one program F(x, p).
  template <class F>
  static HamiltonianSystem general(std::string name, F energy) {
    HamiltonianSystem sys(std::move(name));
    sys.install_energy<double>(energy);
    sys.install_energy<Jet>(energy);
    sys.install_energy<Jet2>(energy);
    return sys;
  }

  /// H = T(p) + V(x).
  template <class K, class V>
  static HamiltonianSystem separable(std::string name, K kinetic, V potential) {
    HamiltonianSystem sys(std::move(name));
    sys.separable_ = true;
    sys.install_parts<double>(kinetic, potential);
    sys.install_parts<Jet>(kinetic, potential);
    sys.install_parts<Jet2>(kinetic, potential);
    return sys;
  }

  /// Closed-form (H_x, H_p), instantiated for double and Jet.
  template <class G>
  HamiltonianSystem& with_gradient(G grad) {
    std::get<GradientFn<double>>(gradients_) = [grad](const double& x, const double& p) {
      return std::pair<double, double>(grad(x, p));
    };
    std::get<GradientFn<Jet>>(gradients_) = [grad](const Jet& x, const Jet& p) {
      return std::pair<Jet, Jet>(grad(x, p));
    };
    return *this;
  }

  HamiltonianSystem& with_partials(PartialsFn fn) {
    partials_ = std::move(fn);
    return *this;
  }

  /// Well-conditioned divided differences [T(b) - T(a)]/(b - a) and the same
  /// for V. Only meaningful for separable systems.
  HamiltonianSystem& with_divided_differences(DividedDifferenceFn kinetic,
                                              DividedDifferenceFn potential) {
    kinetic_dd_ = std::move(kinetic);
    potential_dd_ = std::move(potential);
    return *this;
  }

  /// Declares T(p) = p^2/2 (required by leap-frog and SP-2M).
  HamiltonianSystem& with_unit_mass() {
    unit_mass_ = true;
    return *this;
  }

  /// Declares H quadratic, so its flow is linear and known in closed form.
  HamiltonianSystem& with_quadratic() {
    quadratic_ = true;
    return *this;
  }

  const std::string& name() const noexcept { return name_; }
  bool is_separable() const noexcept { return separable_; }
  bool has_unit_mass() const noexcept { return separable_ && unit_mass_; }
  bool is_quadratic() const noexcept { return quadratic_; }
  bool has_partials_oracle() const noexcept { return static_cast<bool>(partials_); }
  bool has_gradient_oracle() const noexcept {
    return static_cast<bool>(std::get<GradientFn<double>>(gradients_));
  }

  template <class S>
  S energy(const S& x, const S& p) const {
    return std::get<EnergyFn<S>>(energy_)(x, p);
  }
  template <class S>
  S kinetic(const S& p) const {
    require_separable();
    return std::get<Slot<S>>(parts_).kinetic(p);
  }
  template <class S>
  S potential(const S& x) const {
    require_separable();
    return std::get<Slot<S>>(parts_).potential(x);
  }

  /// (H_x, H_p) at a point.
  std::pair<double, double> gradient(double x, double p) const;
  /// (H_x, H_p) along jet-valued arguments.
  std::pair<Jet, Jet> gradient(const Jet& x, const Jet& p) const;

  std::optional<Partials> oracle_partials(double x, double p, int order) const {
    if (!partials_) return std::nullopt;
    return partials_(x, p, order);
  }
  const DividedDifferenceFn& kinetic_divided_difference() const { return kinetic_dd_; }
  const DividedDifferenceFn& potential_divided_difference() const { return potential_dd_; }

 private:
  template <class S>
  struct Slot {
    PartFn<S> kinetic;
    PartFn<S> potential;
  };

  explicit HamiltonianSystem(std::string name) : name_(std::move(name)) {}

  template <class S, class F>
  void install_energy(const F& f) {
    std::get<EnergyFn<S>>(energy_) = [f](const S& x, const S& p) -> S { return f(x, p); };
  }

  template <class S, class K, class V>
  void install_parts(const K& kinetic, const V& potential) {
    auto& slot = std::get<Slot<S>>(parts_);
    slot.kinetic = [kinetic](const S& p) -> S { return kinetic(p); };
    slot.potential = [potential](const S& x) -> S { return potential(x); };
    std::get<EnergyFn<S>>(energy_) = [kinetic, potential](const S& x, const S& p) -> S {
      return kinetic(p) + potential(x);
    };
  }

  void require_separable() const {
    if (!separable_) throw UnsupportedSchemeError("system '" + name_ + "' is not separable");
  }

  std::string name_;
  bool separable_ = false;
  bool unit_mass_ = false;
  bool quadratic_ = false;
  std::tuple<EnergyFn<double>, EnergyFn<Jet>, EnergyFn<Jet2>> energy_;
  std::tuple<Slot<double>, Slot<Jet>, Slot<Jet2>> parts_;
  std::tuple<GradientFn<double>, GradientFn<Jet>> gradients_;
  PartialsFn partials_;
  DividedDifferenceFn kinetic_dd_;
  DividedDifferenceFn potential_dd_;
};

/// Taylor expansion of the exact flow from a state, in monomial coefficients:
/// x(t + h) = sum_k x[k] h^k, and the same for p.
struct FlowSeries {
  Jet x;
  Jet p;
};

double eval_energy(const HamiltonianSystem& sys, const PhaseState& s);

/// Partials up to max_order (1..3). Uses the closed-form oracle when the
/// system has one, otherwise jet_partials.
Partials eval_partials(const HamiltonianSystem& sys, const PhaseState& s, int max_order);

/// Partials from a bivariate jet evaluation of H(x + dx, p + dp).
Partials jet_partials(const HamiltonianSystem& sys, const PhaseState& s, int max_order);

LinearSystem linearize(const HamiltonianSystem& sys, const PhaseState& at);

/// H_xx H_pp - H_xp^2 at a point.
double frequency_squared(const HamiltonianSystem& sys, const PhaseState& at);

/// Flow Taylor coefficients to order N (1..16) by Picard iteration over jets.
FlowSeries taylor_flow_coeffs(const HamiltonianSystem& sys, const PhaseState& s, int order);

}  // namespace hamint
