#include "hamint/systems.hpp"

#include <charconv>
#include <cmath>
#include <string>

namespace hamint {

namespace {

// sin(z)/z without cancellation near z = 0.
double sinc(double z) {
  if (std::abs(z) < 1e-4) return 1.0 - z * z / 6.0;
  return std::sin(z) / z;
}

double parse_parameter(std::string_view spec, std::string_view text) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    throw UsageError("bad system parameter in '" + std::string(spec) + "'");
  }
  return value;
}

}  // namespace

HamiltonianSystem pendulum() {
  auto sys = HamiltonianSystem::separable(
      "pendulum", [](const auto& p) { return 0.5 * p * p; },
      [](const auto& x) {
        using std::cos;
        return -cos(x);
      });
  sys.with_unit_mass()
      .with_gradient([](const auto& x, const auto& p) {
        using std::sin;
        return std::pair{sin(x), p};
      })
      .with_partials([](double x, double p, int) {
        Partials d;
        const double s = std::sin(x);
        const double c = std::cos(x);
        d.value = 0.5 * p * p - c;
        d.hx = s;
        d.hp = p;
        d.hxx = c;
        d.hpp = 1.0;
        d.hxxx = -s;
        return d;
      })
      .with_divided_differences(
          [](double a, double b) { return 0.5 * (a + b); },
          // (cos a - cos b)/(b - a) = sin(mid) sinc(half-width)
          [](double a, double b) { return std::sin(0.5 * (a + b)) * sinc(0.5 * (b - a)); });
  return sys;
}

HamiltonianSystem harmonic(double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw UsageError("harmonic frequency must be positive");
  const double w2 = omega * omega;
  auto sys = HamiltonianSystem::separable(
      "harmonic:" + std::to_string(omega), [](const auto& p) { return 0.5 * p * p; },
      [w2](const auto& x) { return (0.5 * w2) * x * x; });
  sys.with_unit_mass()
      .with_quadratic()
      .with_gradient([w2](const auto& x, const auto& p) { return std::pair{w2 * x, p}; })
      .with_partials([w2](double x, double p, int) {
        Partials d;
        d.value = 0.5 * p * p + 0.5 * w2 * x * x;
        d.hx = w2 * x;
        d.hp = p;
        d.hxx = w2;
        d.hpp = 1.0;
        return d;
      })
      .with_divided_differences([](double a, double b) { return 0.5 * (a + b); },
                                [w2](double a, double b) { return 0.5 * w2 * (a + b); });
  return sys;
}

HamiltonianSystem crossterm(double alpha) {
  if (!std::isfinite(alpha)) throw UsageError("crossterm coupling must be finite");
  auto sys = HamiltonianSystem::general(
      "crossterm:" + std::to_string(alpha),
      [alpha](const auto& x, const auto& p) { return 0.5 * p * p + 0.5 * x * x + alpha * x * p; });
  sys.with_quadratic()
      .with_gradient([alpha](const auto& x, const auto& p) { return std::pair{x + alpha * p, p + alpha * x}; })
      .with_partials([alpha](double x, double p, int) {
        Partials d;
        d.value = 0.5 * p * p + 0.5 * x * x + alpha * x * p;
        d.hx = x + alpha * p;
        d.hp = p + alpha * x;
        d.hxx = 1.0;
        d.hxp = alpha;
        d.hpp = 1.0;
        return d;
      });
  return sys;
}

HamiltonianSystem make_system(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view head = spec.substr(0, colon);
  const bool has_param = colon != std::string_view::npos;
  const std::string_view param = has_param ? spec.substr(colon + 1) : std::string_view{};
  if (head == "pendulum" && !has_param) return pendulum();
  if (head == "harmonic") return harmonic(has_param ? parse_parameter(spec, param) : 1.0);
  if (head == "crossterm" && has_param) return crossterm(parse_parameter(spec, param));
  throw UsageError("unknown system '" + std::string(spec) +
                   "' (expected pendulum, harmonic[:omega] or crossterm:alpha)");
}

}  // namespace hamint
