#include <cmath>
#include <map>
#include <numbers>
#include <tuple>

#include <gtest/gtest.h>

#include "infoatom/basis.hpp"
#include "infoatom/error.hpp"
#include "infoatom/transform.hpp"
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "oracle.hpp"

using namespace infoatom;
using std::numbers::pi;

namespace {

const double kSqrt2OverPi = std::sqrt(2.0 / pi);

double hydrogen_momentum(double k) { return 4.0 * kSqrt2OverPi / std::pow(1.0 + k * k, 2); }

// sqrt(2/pi) integral r^2 S(r) j_l(kr) dr with std::sph_bessel, summed over
// panels of at most half an oscillation, one Boost Gauss-Kronrod rule each.
double bessel_oracle(const SlaterPrimitive& p, int l, double k) {
  const auto f = [&](double r) {
    return r * r * p.value(r) * std::sph_bessel(static_cast<unsigned>(l), k * r);
  };
  const double width = 0.5 * (k > 0.0 ? std::min(2.0 * pi / k, 1.0 / p.zeta()) : 1.0 / p.zeta());
  const double end = (p.n() + 60.0) / p.zeta();
  double sum = 0.0;
  for (double a = 0.0; a < end; a += width) {
    sum += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, a + width, 0);
  }
  return kSqrt2OverPi * sum;
}

}  // namespace

TEST(MomentumPrimitive, HydrogenClosedForm) {
  const SlaterPrimitive p(1, 1.0);
  EXPECT_NEAR(sto_momentum_primitive(p, 0, 0.0), 4.0 * kSqrt2OverPi, 1e-14);
  EXPECT_NEAR(sto_momentum_primitive(p, 0, 0.0), 3.191538, 1e-6);
  EXPECT_NEAR(sto_momentum_primitive(p, 0, 1.0), kSqrt2OverPi, 1e-15);
  EXPECT_NEAR(sto_momentum_primitive(p, 0, 1.0), 0.797885, 1e-6);
  for (double k = 1e-3; k < 1e3; k *= 1.9) {
    EXPECT_NEAR(sto_momentum_primitive(p, 0, k), hydrogen_momentum(k), 1e-14 * hydrogen_momentum(k));
    const double dk = -16.0 * kSqrt2OverPi * k / std::pow(1.0 + k * k, 3);
    EXPECT_NEAR(sto_momentum_primitive_derivative(p, 0, k), dk, 1e-13 * std::abs(dk));
  }
}

TEST(MomentumPrimitive, AgreesWithIndependentBesselQuadrature) {
  for (int n = 1; n <= 5; ++n) {
    for (int l = 0; l < n && l <= 3; ++l) {
      for (double zeta : {0.6, 2.3, 9.0}) {
        const SlaterPrimitive p(n, zeta);
        // |j_l| <= 1, so sqrt(2/pi) * int r^2 |chi| dr bounds the transform
        const double bound = kSqrt2OverPi * p.normalization() * std::tgamma(n + 2.0) / std::pow(zeta, n + 2);
        for (double k : {0.0, 0.01, 0.3, 1.0, 4.0, 15.0}) {
          const double ref = bessel_oracle(p, l, k);
          const double got = sto_momentum_primitive(p, l, k);
          EXPECT_NEAR(got, ref, 1e-9 * std::max(std::abs(ref), 1e-3 * bound))
              << "n=" << n << " l=" << l << " zeta=" << zeta << " k=" << k;
        }
      }
    }
  }
}

TEST(MomentumPrimitive, AgreesWithLibraryQuadratureOnLogGrid) {
  for (int n = 1; n <= 4; ++n) {
    for (int l = 0; l < n; ++l) {
      const SlaterPrimitive p(n, 1.7);
      for (double k = 1e-3; k <= 1e3; k *= 10.0) {
        const double closed = sto_momentum_primitive(p, l, k);
        const double quad = sto_momentum_primitive_quadrature(p, l, k);
        EXPECT_NEAR(quad, closed, 1e-8 * std::abs(closed)) << "n=" << n << " l=" << l << " k=" << k;
      }
    }
  }
}

TEST(MomentumPrimitive, DerivativeMatchesFiniteDifference) {
  for (int n = 1; n <= 5; ++n) {
    for (int l = 0; l < n && l <= 3; ++l) {
      const SlaterPrimitive p(n, 1.3);
      for (double k : {0.05, 0.5, 2.0, 7.0}) {
        const double h = 1e-5 * std::max(1.0, k);
        const double fd = (sto_momentum_primitive(p, l, k + h) - sto_momentum_primitive(p, l, k - h)) / (2 * h);
        EXPECT_NEAR(sto_momentum_primitive_derivative(p, l, k), fd, 1e-7 * (1e-3 + std::abs(fd)))
            << "n=" << n << " l=" << l << " k=" << k;
      }
    }
  }
}

TEST(MomentumPrimitive, RejectsInvalidOrder) {
  EXPECT_THROW(sto_momentum_primitive(SlaterPrimitive(2, 1.0), 2, 1.0), DomainError);
  EXPECT_THROW(MomentumPrimitive(SlaterPrimitive(1, 1.0), 1), DomainError);
}

TEST(Gegenbauer, LowOrders) {
  const double a = 2.5, x = 0.37;
  EXPECT_EQ(gegenbauer(0, a, x), 1.0);
  EXPECT_NEAR(gegenbauer(1, a, x), 2 * a * x, 1e-15);
  EXPECT_NEAR(gegenbauer(2, a, x), -a + 2 * a * (1 + a) * x * x, 1e-14);
  // C_m^{(1)}(cos t) = sin((m+1)t)/sin t
  const double t = 0.9;
  for (int m = 0; m < 8; ++m) {
    EXPECT_NEAR(gegenbauer(m, 1.0, std::cos(t)), std::sin((m + 1) * t) / std::sin(t), 1e-13);
  }
}

TEST(MomentumOrbital, HydrogenAndLinearity) {
  const OrbitalShell h(1, 0, 1.0, {{1.0, SlaterPrimitive(1, 1.0)}});
  const MomentumOrbital m(h);
  const MomentumOrbital doubled(h.scaled(2.0));
  for (double k = 0.0; k < 20.0; k += 0.37) {
    EXPECT_NEAR(m.value(k), hydrogen_momentum(k), 1e-15);
    EXPECT_DOUBLE_EQ(doubled.value(k), 2.0 * m.value(k));
  }
  EXPECT_NEAR(momentum_orbital_norm(h), 1.0, 1e-12);
  // Boost oracle for Parseval
  EXPECT_NEAR(oracle::half_line([&](double k) { return std::pow(m.value(k) * k, 2); }), 1.0, 1e-12);
}

TEST(MomentumOrbital, ParsevalForDatasetShells) {
  for (int z : {2, 10, 26, 36, 54}) {
    const AtomBasis b = load_basis_file(basis_file_path(oracle::basis_dir(), z));
    for (const OrbitalShell& s : b.shells()) {
      const MomentumOrbital m(s);
      const double ref = oracle::half_line([&](double k) { return std::pow(m.value(k) * k, 2); }, 20.0);
      EXPECT_NEAR(ref, s.analytic_norm(), 1e-9) << b.symbol() << " " << s.label();
      EXPECT_NEAR(momentum_orbital_norm(s), s.analytic_norm(), 1e-9) << b.symbol() << " " << s.label();
    }
  }
}
