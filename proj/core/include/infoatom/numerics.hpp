#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>

namespace infoatom::numerics {

struct IntegrationResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

struct IntegrationOptions {
  double rel_tol = 1e-10;
  /// Absolute error floor; stops refinement on integrals whose value is ~0.
  double abs_floor = 1e-14;
  /// Upper end of the first panel of a semi-infinite integral. Subsequent
  /// panels double in length, so this only needs to be the right order of
  /// magnitude.
  double initial_cutoff = 1.0;
  std::size_t max_evaluations = 4'000'000;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature on [a, b].
///
/// Throws IntegrationError when the evaluation budget runs out (carrying the
/// best estimate) or when the integrand returns a non-finite value (carrying
/// the offending abscissa).
IntegrationResult integrate(const Integrand& f, double a, double b,
                            const IntegrationOptions& opts = {});

/// Integral of f over (0, inf).
///
/// (0, R] is integrated adaptively, then panels (R, 2R], (2R, 4R], ... are
/// added until two consecutive panels each contribute less than
/// max(rel_tol * |value|, abs_floor).
IntegrationResult integrate_semi_infinite(const Integrand& f,
                                          const IntegrationOptions& opts);
IntegrationResult integrate_semi_infinite(const Integrand& f, double rel_tol);

/// Spherical Bessel function of the first kind j_l(x), l in [0, 3], x >= 0.
double spherical_bessel(int l, double x);
inline constexpr int kMaxBesselOrder = 3;

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares y = slope * x + intercept.
///
/// r_squared is 1 - SS_res / SS_tot, clamped to [0, 1]; data with zero
/// variance in y is a perfect constant fit and reports 1.
LineFit linear_fit(std::span<const std::pair<double, double>> points);

}  // namespace infoatom::numerics
