#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "hamint/baselines.hpp"
#include "hamint/reference.hpp"
#include "hamint/systems.hpp"

using namespace hamint;

TEST(Leapfrog, BitwiseEqualToSp2) {
  const HamiltonianSystem sys = pendulum();
  const SymplecticCoeffs sp2 = sp_coefficients(1);
  PhaseState a{0.3, 1.2, 0.0}, b = a;
  for (int n = 0; n < 1000; ++n) {
    a = step_leapfrog(sys, a, 0.1);
    b = step_symplectic(sys, b, 0.1, sp2);
    ASSERT_EQ(a.x, b.x) << n;
    ASSERT_EQ(a.p, b.p) << n;
  }
}

TEST(Leapfrog, IsDriftKickDrift) {
  const double x = 0.3, p = 1.2, h = 0.1;
  const PhaseState s = step_leapfrog(pendulum(), {x, p, 0.0}, h);
  const double xh = x + 0.5 * h * p;
  const double pn = p - h * std::sin(xh);
  EXPECT_DOUBLE_EQ(s.x, xh + 0.5 * h * pn);
  EXPECT_DOUBLE_EQ(s.p, pn);
  EXPECT_DOUBLE_EQ(s.t, h);
}

TEST(Symplectic, CoefficientsAreConsistent) {
  for (int m = 1; m <= 4; ++m) {
    const SymplecticCoeffs c = sp_coefficients(m);
    EXPECT_EQ(c.half_order, m);
    ASSERT_EQ(c.c.size(), c.d.size());
    EXPECT_NEAR(std::accumulate(c.c.begin(), c.c.end(), 0.0), 1.0, 1e-14) << m;
    EXPECT_NEAR(std::accumulate(c.d.begin(), c.d.end(), 0.0), 1.0, 1e-14) << m;
    EXPECT_EQ(c.d.back(), 0.0);
    // Symmetric composition: c reversed equals c; d_i = d_{K-i}.
    const std::size_t k = c.c.size();
    for (std::size_t i = 0; i < k; ++i) EXPECT_NEAR(c.c[i], c.c[k - 1 - i], 1e-15);
    for (std::size_t i = 0; i + 1 < k; ++i) EXPECT_NEAR(c.d[i], c.d[k - 2 - i], 1e-15);
    EXPECT_EQ(k, static_cast<std::size_t>(std::pow(3, m - 1)) + 1);
  }
}

TEST(Symplectic, FourthOrderClosedForms) {
  const double cbrt2 = std::cbrt(2.0);
  const double c1 = 1.0 / (2.0 * (2.0 - cbrt2));
  const double c2 = (1.0 - cbrt2) / (2.0 * (2.0 - cbrt2));
  const double d1 = 1.0 / (2.0 - cbrt2);
  const double d2 = -cbrt2 / (2.0 - cbrt2);
  const SymplecticCoeffs c = sp_coefficients(2);
  ASSERT_EQ(c.c.size(), 4u);
  EXPECT_NEAR(c.c[0], c1, 1e-15);
  EXPECT_NEAR(c.c[1], c2, 1e-15);
  EXPECT_NEAR(c.d[0], d1, 1e-15);
  EXPECT_NEAR(c.d[1], d2, 1e-15);
}

TEST(Symplectic, OutOfRangeThrows) {
  EXPECT_THROW(sp_coefficients(0), UnsupportedSchemeError);
  EXPECT_THROW(sp_coefficients(5), UnsupportedSchemeError);
  EXPECT_THROW(step_symplectic(crossterm(0.3), {0, 1, 0}, 0.1, sp_coefficients(1)), UnsupportedSchemeError);
  EXPECT_THROW(step_leapfrog(crossterm(0.3), {0, 1, 0}, 0.1), UnsupportedSchemeError);
}

TEST(Symplectic, StepMapHasUnitJacobian) {
  const HamiltonianSystem sys = pendulum();
  const double eps = 1e-5;
  for (int m = 1; m <= 4; ++m) {
    const SymplecticCoeffs c = sp_coefficients(m);
    const PhaseState s{0.7, 0.4, 0.0};
    auto f = [&](double x, double p) { return step_symplectic(sys, {x, p, 0.0}, 0.3, c); };
    const PhaseState xp = f(s.x + eps, s.p), xm = f(s.x - eps, s.p);
    const PhaseState pp = f(s.x, s.p + eps), pm = f(s.x, s.p - eps);
    const double j = ((xp.x - xm.x) * (pp.p - pm.p) - (pp.x - pm.x) * (xp.p - xm.p)) / (4 * eps * eps);
    EXPECT_NEAR(j, 1.0, 1e-9) << m;
  }
}

TEST(Rk4, OneStepMatchesHandStages) {
  const HamiltonianSystem sys = harmonic(1.0);
  const double h = 0.1;
  const PhaseState s = step_rk4(sys, {1.0, 0.0, 0.0}, h);
  // RK4 on x'' = -x reproduces the degree-4 Taylor polynomial of the flow.
  EXPECT_NEAR(s.x, 1 - h * h / 2 + std::pow(h, 4) / 24, 1e-16);
  EXPECT_NEAR(s.p, -h + std::pow(h, 3) / 6, 1e-16);
}

TEST(Rk4, FourthOrderOnHarmonic) {
  const HamiltonianSystem sys = harmonic(1.0);
  auto err = [&](double h) {
    PhaseState s{1.0, 0.0, 0.0};
    const int n = static_cast<int>(std::lround(2.0 / h));
    for (int i = 0; i < n; ++i) s = step_rk4(sys, s, h);
    return std::hypot(s.x - std::cos(n * h), s.p + std::sin(n * h));
  };
  EXPECT_NEAR(std::log2(err(0.1) / err(0.05)), 4.0, 0.1);
}

TEST(Taylor, MatchesExactPendulumToOrder) {
  const double p0 = 1.1;
  const PhaseState s0{0.0, p0, 0.0};
  for (int order : {2, 5, 8}) {
    auto err = [&](double h) {
      const PhaseState s = step_taylor(pendulum(), s0, h, order);
      const PhaseState e = pendulum_exact(p0, h);
      return std::max(std::abs(s.x - e.x), std::abs(s.p - e.p));
    };
    const double slope = std::log2(err(0.2) / err(0.1));
    EXPECT_GT(slope, order + 0.6) << order;
  }
}

TEST(Taylor, FirstOrderIsEuler) {
  const PhaseState s = step_taylor(pendulum(), {0.3, 1.2, 0.0}, 0.1, 1);
  EXPECT_NEAR(s.x, 0.3 + 0.1 * 1.2, 1e-16);
  EXPECT_NEAR(s.p, 1.2 - 0.1 * std::sin(0.3), 1e-16);
}

TEST(Taylor, OrderOutOfRangeThrows) {
  EXPECT_THROW(step_taylor(pendulum(), {0, 1, 0}, 0.1, 0), UsageError);
  EXPECT_THROW(step_taylor(pendulum(), {0, 1, 0}, 0.1, 17), UsageError);
}
