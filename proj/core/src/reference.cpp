#include "hamint/reference.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace hamint {

namespace {

// Error-free transformations and the few double-double operations needed to
// carry K(k) and t mod T past double precision.
DoubleDouble quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

DoubleDouble two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

DoubleDouble two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

DoubleDouble operator+(DoubleDouble a, DoubleDouble b) {
  DoubleDouble s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return quick_two_sum(s.hi, s.lo);
}

DoubleDouble operator-(DoubleDouble a) { return {-a.hi, -a.lo}; }
DoubleDouble operator-(DoubleDouble a, DoubleDouble b) { return a + (-b); }

DoubleDouble operator*(DoubleDouble a, DoubleDouble b) {
  DoubleDouble p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

DoubleDouble operator/(DoubleDouble a, DoubleDouble b) {
  const double q1 = a.hi / b.hi;
  DoubleDouble r = a - DoubleDouble{q1, 0.0} * b;
  const double q2 = r.hi / b.hi;
  r = r - DoubleDouble{q2, 0.0} * b;
  const double q3 = r.hi / b.hi;
  return quick_two_sum(q1, q2) + DoubleDouble{q3, 0.0};
}

DoubleDouble sqrt_dd(DoubleDouble a) {
  if (a.hi <= 0.0) return {0.0, 0.0};
  const double x = std::sqrt(a.hi);
  const DoubleDouble xx = two_prod(x, x);
  const double correction = ((a - xx).hi) / (2.0 * x);
  return two_sum(x, correction);
}

double to_double(DoubleDouble a) { return a.hi + a.lo; }

constexpr DoubleDouble kPiDD{3.141592653589793116, 1.2246467991473532072e-16};

void check_modulus(double k) {
  if (!(k >= 0.0) || !(k < 1.0)) {
    throw DomainError("elliptic modulus must lie in [0, 1), got " + std::to_string(k));
  }
}

// K = pi / (2 AGM(1, k')), k'^2 = (1 - k)(1 + k).
DoubleDouble agm_K(DoubleDouble k) {
  const DoubleDouble one{1.0, 0.0};
  DoubleDouble a = one;
  DoubleDouble b = sqrt_dd((one - k) * (one + k));
  for (int i = 0; i < 32; ++i) {
    const DoubleDouble diff = a - b;
    if (std::abs(diff.hi) <= 1e-31 * a.hi) break;
    const DoubleDouble next_a = (a + b) * DoubleDouble{0.5, 0.0};
    b = sqrt_dd(a * b);
    a = next_a;
  }
  return kPiDD / (a * DoubleDouble{2.0, 0.0});
}

}  // namespace

DoubleDouble elliptic_K_dd(double k) {
  check_modulus(k);
  return agm_K({k, 0.0});
}

double elliptic_K(double k) { return to_double(elliptic_K_dd(k)); }

JacobiElliptic jacobi_sn_cn_dn(double u, double k) {
  check_modulus(k);
  if (k == 0.0) return {std::sin(u), std::cos(u), 1.0, u};

  constexpr int kMaxLevels = 16;
  std::array<double, kMaxLevels + 1> a{};
  std::array<double, kMaxLevels + 1> c{};
  a[0] = 1.0;
  c[0] = k;
  double b = std::sqrt((1.0 - k) * (1.0 + k));
  int n = 0;
  while (n < kMaxLevels && std::abs(c[n]) > std::numeric_limits<double>::epsilon() * a[n]) {
    a[n + 1] = 0.5 * (a[n] + b);
    c[n + 1] = 0.5 * (a[n] - b);
    b = std::sqrt(a[n] * b);
    ++n;
  }
  double phi = std::ldexp(a[n] * u, n);
  double phi_above = phi;
  for (int i = n; i >= 1; --i) {
    phi_above = phi;
    phi = 0.5 * (phi + std::asin(c[i] / a[i] * std::sin(phi)));
  }
  const double sn = std::sin(phi);
  const double cn = std::cos(phi);
  // sqrt(1 - k^2 sn^2) is the more accurate dn except where dn is small.
  const double dn_sqrt = std::sqrt((1.0 - k * sn) * (1.0 + k * sn));
  const double dn = dn_sqrt >= 0.1 ? dn_sqrt : cn / std::cos(phi_above - phi);
  return {sn, cn, dn, phi};
}

PendulumOrbit pendulum_orbit(double p0) {
  if (!std::isfinite(p0)) throw DomainError("initial momentum must be finite");
  PendulumOrbit orbit;
  orbit.p0 = p0;
  orbit.energy = 0.5 * p0 * p0 - 1.0;
  const double a = std::abs(p0);
  if (a == 2.0) {
    orbit.regime = OrbitRegime::separatrix;
    orbit.modulus = 1.0;
    orbit.period = std::numeric_limits<double>::infinity();
    orbit.period_dd = {orbit.period, 0.0};
    return orbit;
  }
  if (a < 2.0) {
    orbit.regime = OrbitRegime::libration;
    orbit.modulus = 0.5 * a;
    orbit.period_dd = elliptic_K_dd(orbit.modulus) * DoubleDouble{4.0, 0.0};
  } else {
    orbit.regime = OrbitRegime::rotation;
    orbit.modulus = 2.0 / a;
    // k = 2/|p0| would be rounded in double, and K is steep near k = 1.
    const DoubleDouble k_dd = DoubleDouble{2.0, 0.0} / DoubleDouble{a, 0.0};
    orbit.period_dd = agm_K(k_dd) * k_dd * DoubleDouble{2.0, 0.0};
  }
  orbit.period = to_double(orbit.period_dd);
  return orbit;
}

double pendulum_period(double p0) {
  if (p0 == 0.0) throw DomainError("pendulum at rest in its equilibrium has no period");
  const PendulumOrbit orbit = pendulum_orbit(p0);
  if (orbit.regime == OrbitRegime::separatrix) throw DomainError("separatrix orbit has infinite period");
  return orbit.period;
}

namespace {

PhaseState exact_at(const PendulumOrbit& orbit, DoubleDouble t) {
  const double time = to_double(t);
  const double sign = orbit.p0 < 0.0 ? -1.0 : 1.0;
  if (orbit.p0 == 0.0) return {0.0, 0.0, time};
  if (orbit.regime == OrbitRegime::separatrix) {
    return {sign * 2.0 * std::atan(std::sinh(time)), sign * 2.0 / std::cosh(time), time};
  }
  // t = m T + r with 0 <= r < T.
  const DoubleDouble& period = orbit.period_dd;
  double m = std::floor(time / period.hi);
  DoubleDouble r = t - DoubleDouble{m, 0.0} * period;
  if (r.hi < 0.0) {
    r = r + period;
    m -= 1.0;
  } else if (r.hi >= period.hi) {
    r = r - period;
    m += 1.0;
  }
  const double k = orbit.modulus;
  const double reduced = to_double(r);
  if (orbit.regime == OrbitRegime::libration) {
    const JacobiElliptic j = jacobi_sn_cn_dn(reduced, k);
    return {sign * 2.0 * std::asin(k * j.sn), sign * 2.0 * k * j.cn, time};
  }
  const JacobiElliptic j = jacobi_sn_cn_dn(reduced / k, k);
  return {sign * (2.0 * j.am + 2.0 * std::numbers::pi * m), sign * 2.0 / k * j.dn, time};
}

}  // namespace

PhaseState pendulum_exact(double p0, double t) {
  if (!std::isfinite(t)) throw DomainError("time must be finite");
  return exact_at(pendulum_orbit(p0), {t, 0.0});
}

PhaseState pendulum_exact_at_step(const PendulumOrbit& orbit, std::int64_t n, double h) {
  return exact_at(orbit, two_prod(static_cast<double>(n), h));
}

}  // namespace hamint
