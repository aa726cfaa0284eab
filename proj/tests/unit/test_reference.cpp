#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/ellint_1.hpp>
#include <cmath>
#include <numbers>

#include "hamint/reference.hpp"
#include "hamint/systems.hpp"

using namespace hamint;

namespace {

double K_by_quadrature(double k) {
  auto f = [k](double th) { return 1.0 / std::sqrt(1.0 - k * k * std::sin(th) * std::sin(th)); };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, std::numbers::pi / 2, 15, 1e-15);
}

}  // namespace

TEST(EllipticK, AgreesWithQuadratureAndBoost) {
  for (double k : {0.0, 0.1, 0.5, 0.9, 0.95}) {
    EXPECT_NEAR(elliptic_K(k), K_by_quadrature(k), 2e-15 * elliptic_K(k)) << k;
    EXPECT_NEAR(elliptic_K(k), boost::math::ellint_1(k), 2e-15 * elliptic_K(k)) << k;
  }
  // Near k = 1 quadrature struggles; use the library value.
  EXPECT_NEAR(elliptic_K(0.999), boost::math::ellint_1(0.999), 1e-14);
}

TEST(EllipticK, HighPrecisionValues) {
  // 25-digit reference values at the double nearest each modulus.
  EXPECT_NEAR(elliptic_K(0.5), 1.6857503548125960428712036578, 4e-16);
  EXPECT_NEAR(elliptic_K(0.9), 2.28054913842277033245478041287, 4e-16);
  EXPECT_NEAR(elliptic_K(0.999), 4.495596395842143727877838, 1e-15);
  EXPECT_DOUBLE_EQ(elliptic_K(0.0), std::numbers::pi / 2);
}

TEST(EllipticK, ModulusOutsideRangeThrows) {
  EXPECT_THROW(elliptic_K(1.0), DomainError);
  EXPECT_THROW(elliptic_K(-0.1), DomainError);
  EXPECT_THROW(elliptic_K(std::nan("")), DomainError);
}

TEST(Jacobi, FrozenHighPrecisionValues) {
  struct Case {
    double u, k, sn, cn, dn;
  };
  const Case cases[] = {
      {0.7, 0.6, 0.629917115323486779034633376663, 0.776662364108456756444114209937, 0.925825898328683256360892302415},
      {2.3, 0.9, 0.999964054622227373832425315904, -0.008478765445220732035887533836, 0.435956684161872614703138895308},
      {-1.1, 0.3, -0.884002981059476154820664500919, 0.467481261098195723899883024818, 0.964193178597015564077795023655},
      {5.0, 0.99, 0.94061008075153522552770942536, -0.339488845160765749455590461278, 0.364498487975488670718234848405},
  };
  for (const Case& c : cases) {
    const JacobiElliptic j = jacobi_sn_cn_dn(c.u, c.k);
    EXPECT_NEAR(j.sn, c.sn, 1e-14) << c.u;
    EXPECT_NEAR(j.cn, c.cn, 1e-14) << c.u;
    EXPECT_NEAR(j.dn, c.dn, 1e-14) << c.u;
  }
}

TEST(Jacobi, Identities) {
  for (double k : {0.2, 0.7, 0.95}) {
    for (double u = -6.0; u <= 6.0; u += 0.37) {
      const JacobiElliptic j = jacobi_sn_cn_dn(u, k);
      EXPECT_NEAR(j.sn * j.sn + j.cn * j.cn, 1.0, 1e-15);
      EXPECT_NEAR(j.dn * j.dn + k * k * j.sn * j.sn, 1.0, 1e-15);
      EXPECT_NEAR(std::sin(j.am), j.sn, 1e-15);
    }
  }
  const JacobiElliptic z = jacobi_sn_cn_dn(1.3, 0.0);
  EXPECT_DOUBLE_EQ(z.sn, std::sin(1.3));
  EXPECT_DOUBLE_EQ(z.dn, 1.0);
}

TEST(Jacobi, AmplitudeIsContinuousAndQuarterPeriodAtK) {
  const double k = 0.8;
  const double K = elliptic_K(k);
  EXPECT_NEAR(jacobi_sn_cn_dn(K, k).am, std::numbers::pi / 2, 1e-14);
  EXPECT_NEAR(jacobi_sn_cn_dn(4 * K, k).am, 2 * std::numbers::pi, 1e-13);
  double prev = jacobi_sn_cn_dn(0.0, k).am;
  for (double u = 0.05; u < 10.0; u += 0.05) {
    const double am = jacobi_sn_cn_dn(u, k).am;
    EXPECT_GT(am, prev);
    prev = am;
  }
}

TEST(Pendulum, Regimes) {
  EXPECT_EQ(pendulum_orbit(1.8).regime, OrbitRegime::libration);
  EXPECT_EQ(pendulum_orbit(-2.0).regime, OrbitRegime::separatrix);
  EXPECT_EQ(pendulum_orbit(2.001).regime, OrbitRegime::rotation);
  EXPECT_DOUBLE_EQ(pendulum_orbit(1.8).modulus, 0.9);
  EXPECT_DOUBLE_EQ(pendulum_orbit(2.5).modulus, 0.8);
}

TEST(Pendulum, Periods) {
  EXPECT_NEAR(pendulum_period(1.8), 9.12219655369108132981912165146, 2e-15);
  EXPECT_NEAR(pendulum_period(2.001), 9.678174561903253941868646, 4e-15);
  EXPECT_NEAR(pendulum_period(1e-4), 2 * std::numbers::pi, 1e-8);
  EXPECT_THROW(pendulum_period(0.0), DomainError);
  EXPECT_THROW(pendulum_period(2.0), DomainError);
  EXPECT_THROW(pendulum_orbit(INFINITY), DomainError);
}

TEST(Pendulum, ExactSolutionSatisfiesEquations) {
  // Energy conservation and x' = p, p' = -sin x by central differences.
  for (double p0 : {0.5, 1.8, -1.3, 2.0, 2.5, -3.0}) {
    const double e0 = 0.5 * p0 * p0 - 1.0;
    const double d = 1e-5;
    for (double t = 0.1; t < 20.0; t += 1.3) {
      const PhaseState s = pendulum_exact(p0, t);
      EXPECT_NEAR(0.5 * s.p * s.p - std::cos(s.x), e0, 1e-14) << p0 << " " << t;
      const PhaseState a = pendulum_exact(p0, t - d), b = pendulum_exact(p0, t + d);
      EXPECT_NEAR((b.x - a.x) / (2 * d), s.p, 1e-8) << p0 << " " << t;
      EXPECT_NEAR((b.p - a.p) / (2 * d), -std::sin(s.x), 1e-8) << p0 << " " << t;
    }
  }
}

TEST(Pendulum, InitialStateAndPeriodicity) {
  for (double p0 : {0.5, 1.8, 2.5}) {
    const PhaseState s0 = pendulum_exact(p0, 0.0);
    EXPECT_NEAR(s0.x, 0.0, 1e-16);
    EXPECT_NEAR(s0.p, p0, 1e-15);
    const double T = pendulum_period(p0);
    const PhaseState s1 = pendulum_exact(p0, 3 * T);
    EXPECT_NEAR(s1.p, p0, 1e-13);
    if (p0 > 2.0) {
      EXPECT_NEAR(s1.x, 6 * std::numbers::pi, 1e-13);
    } else {
      EXPECT_NEAR(s1.x, 0.0, 1e-13);
    }
  }
}

TEST(Pendulum, RotationReferenceValue) {
  const PhaseState s = pendulum_exact(2.5, 3.7);
  EXPECT_NEAR(s.x, 7.5021675132835256625, 1e-14);
  EXPECT_NEAR(s.p, 2.2224317212241299691, 1e-14);
}

TEST(Pendulum, SeparatrixClosedForm) {
  const PhaseState s = pendulum_exact(2.0, 1.5);
  EXPECT_NEAR(s.x, 2 * std::atan(std::sinh(1.5)), 1e-15);
  EXPECT_NEAR(s.p, 2 / std::cosh(1.5), 1e-15);
}

TEST(Pendulum, LongRunPhaseKeepsFullPrecision) {
  // t = 1e7 * fl(0.1) reduced in double-double; 40-digit reference.
  const PhaseState s = pendulum_exact_at_step(pendulum_orbit(1.8), 10'000'000, 0.1);
  EXPECT_NEAR(s.x, -2.2103496444493756938, 1e-12);
  EXPECT_NEAR(s.p, -0.21523429196065479455, 1e-12);
  EXPECT_DOUBLE_EQ(s.t, 1e6);
}
