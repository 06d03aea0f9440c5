#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "infoatom/error.hpp"
#include "infoatom/numerics.hpp"

namespace num = infoatom::numerics;
using std::numbers::pi;

TEST(Integrate, ExponentialHalfLine) {
  const auto r = num::integrate_semi_infinite([](double x) { return std::exp(-x); }, 1e-10);
  EXPECT_NEAR(r.value, 1.0, 1e-10);
  EXPECT_GE(r.error_estimate, 0.0);
  EXPECT_GT(r.evaluations, 0u);
}

TEST(Integrate, GammaThreeOverEight) {
  const auto r = num::integrate_semi_infinite([](double x) { return x * x * std::exp(-2 * x); }, 1e-10);
  EXPECT_NEAR(r.value, 0.25, 0.25e-10);
}

TEST(Integrate, HydrogenMomentumSecondMoment) {
  // algebraic k^-4 tail
  const auto f = [](double k) {
    return 4 * pi * std::pow(k, 4) * 8 / (pi * pi * std::pow(1 + k * k, 4));
  };
  const auto r = num::integrate_semi_infinite(f, 1e-10);
  EXPECT_NEAR(r.value, 1.0, 1e-9);
}

TEST(Integrate, FiniteInterval) {
  const auto r = num::integrate([](double x) { return std::sin(x); }, 0.0, pi);
  EXPECT_NEAR(r.value, 2.0, 1e-12);
  EXPECT_EQ(num::integrate([](double x) { return x; }, 1.0, 1.0).value, 0.0);
}

TEST(Integrate, ZeroIntegrandTerminates) {
  const auto r = num::integrate_semi_infinite([](double) { return 0.0; }, 1e-12);
  EXPECT_EQ(r.value, 0.0);
}

TEST(Integrate, LinearityOnRandomExponentialMixtures) {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> rate(0.2, 8.0);
  std::uniform_real_distribution<double> weight(-3.0, 3.0);
  std::uniform_int_distribution<int> power(0, 4);
  const double tol = 1e-10;
  for (int trial = 0; trial < 25; ++trial) {
    const double za = rate(rng), zb = rate(rng);
    const int pa = power(rng), pb = power(rng);
    const double a = weight(rng), b = weight(rng);
    auto f = [&](double x) { return std::pow(x, pa) * std::exp(-za * x); };
    auto g = [&](double x) { return std::pow(x, pb) * std::exp(-zb * x); };
    const double If = num::integrate_semi_infinite(f, tol).value;
    const double Ig = num::integrate_semi_infinite(g, tol).value;
    const double Ih = num::integrate_semi_infinite([&](double x) { return a * f(x) + b * g(x); }, tol).value;
    const double expected = a * If + b * Ig;
    const double scale = std::abs(a * If) + std::abs(b * Ig);
    EXPECT_NEAR(Ih, expected, 2 * tol * scale) << "trial " << trial;
    // against the exact Gamma-function value too
    EXPECT_NEAR(If, std::tgamma(pa + 1) / std::pow(za, pa + 1), 1e-9 * If);
  }
}

TEST(Integrate, NanReportsAbscissa) {
  try {
    num::integrate([](double x) { return x > 0.5 ? std::nan("") : 1.0; }, 0.0, 1.0);
    FAIL() << "expected IntegrationError";
  } catch (const infoatom::IntegrationError& e) {
    ASSERT_TRUE(e.abscissa().has_value());
    EXPECT_GT(*e.abscissa(), 0.5);
  }
}

TEST(Integrate, BudgetExhaustionCarriesEstimate) {
  num::IntegrationOptions opts;
  opts.max_evaluations = 100;
  opts.rel_tol = 1e-14;
  try {
    num::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, opts);
    FAIL() << "expected IntegrationError";
  } catch (const infoatom::IntegrationError& e) {
    EXPECT_GT(e.best_estimate(), 1.5);
    EXPECT_LT(e.best_estimate(), 2.5);
  }
}

TEST(SphericalBessel, SpecialValues) {
  EXPECT_EQ(num::spherical_bessel(0, 0.0), 1.0);
  EXPECT_NEAR(num::spherical_bessel(0, pi), 0.0, 1e-16);
  EXPECT_NEAR(num::spherical_bessel(1, 1e-8), 3.3333333333333333e-9, 1e-22);
  for (int l = 1; l <= 3; ++l) EXPECT_EQ(num::spherical_bessel(l, 0.0), 0.0);
}

TEST(SphericalBessel, MatchesStandardLibrary) {
  for (int l = 0; l <= num::kMaxBesselOrder; ++l) {
    for (double x = 1e-6; x < 200.0; x *= 1.07) {
      const double ref = std::sph_bessel(static_cast<unsigned>(l), x);
      const double got = num::spherical_bessel(l, x);
      // 12 significant digits away from zeros; absolute near them
      EXPECT_NEAR(got, ref, 1e-12 * std::max(std::abs(ref), 1.0 / std::max(x, 1.0)))
          << "l=" << l << " x=" << x;
    }
  }
}

TEST(SphericalBessel, Recurrence) {
  for (int l = 1; l < num::kMaxBesselOrder; ++l) {
    for (double x = 0.1; x <= 50.0; x += 0.0731) {
      const double lhs = num::spherical_bessel(l - 1, x) + num::spherical_bessel(l + 1, x);
      const double rhs = (2 * l + 1) / x * num::spherical_bessel(l, x);
      const double scale = std::max({std::abs(lhs), std::abs(num::spherical_bessel(l - 1, x)),
                                     std::abs(num::spherical_bessel(l + 1, x))});
      EXPECT_NEAR(lhs, rhs, 1e-10 * scale) << "l=" << l << " x=" << x;
    }
  }
}

TEST(SphericalBessel, Errors) {
  EXPECT_THROW(num::spherical_bessel(4, 1.0), infoatom::DomainError);
  EXPECT_THROW(num::spherical_bessel(-1, 1.0), infoatom::DomainError);
  EXPECT_THROW(num::spherical_bessel(0, -1.0), infoatom::DomainError);
}

TEST(LinearFit, ExactLine) {
  const std::vector<std::pair<double, double>> pts = {{0, 1}, {1, 3}, {2, 5}};
  const auto f = num::linear_fit(pts);
  EXPECT_NEAR(f.slope, 2.0, 1e-14);
  EXPECT_NEAR(f.intercept, 1.0, 1e-14);
  EXPECT_NEAR(f.r_squared, 1.0, 1e-14);
}

TEST(LinearFit, NoLinearTrend) {
  const std::vector<std::pair<double, double>> pts = {{0, 0}, {1, 1}, {2, 0}};
  const auto f = num::linear_fit(pts);
  EXPECT_NEAR(f.slope, 0.0, 1e-15);
  EXPECT_NEAR(f.intercept, 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(f.r_squared, 0.0, 1e-15);
}

TEST(LinearFit, ConstantDataIsPerfect) {
  const std::vector<std::pair<double, double>> pts = {{1, 2}, {2, 2}, {3, 2}};
  const auto f = num::linear_fit(pts);
  EXPECT_EQ(f.slope, 0.0);
  EXPECT_NEAR(f.intercept, 2.0, 1e-15);
  EXPECT_EQ(f.r_squared, 1.0);
}

TEST(LinearFit, RecoversNoiselessLine) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double m = u(rng), c = u(rng);
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < 12; ++i) {
      const double x = u(rng);
      pts.emplace_back(x, m * x + c);
    }
    const auto f = num::linear_fit(pts);
    EXPECT_NEAR(f.slope, m, 1e-12 * std::max(1.0, std::abs(m)));
    EXPECT_NEAR(f.intercept, c, 1e-12 * std::max(1.0, std::abs(c)));
  }
}

TEST(LinearFit, Errors) {
  const std::vector<std::pair<double, double>> one = {{1, 1}};
  const std::vector<std::pair<double, double>> same_x = {{1, 1}, {1, 2}};
  EXPECT_THROW(num::linear_fit(one), infoatom::DomainError);
  EXPECT_THROW(num::linear_fit(same_x), infoatom::DomainError);
}
