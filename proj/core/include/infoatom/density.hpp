#pragma once

#include <functional>
#include <string_view>

#include "infoatom/basis.hpp"
#include "infoatom/numerics.hpp"

namespace infoatom {

enum class Space { position, momentum };

std::string_view to_string(Space space) noexcept;

/// Spherically symmetric 3-D probability density, normalized so that
/// 4 pi integral_0^inf d(x) x^2 dx = 1.
class RadialDensity {
 public:
  using Function = std::function<double(double)>;

  /// `scale` is the length (position) or momentum scale on which the
  /// density varies; it seeds the first quadrature panel.
  RadialDensity(Space space, Function value, Function derivative, double electron_count,
                double scale = 1.0);

  double operator()(double x) const { return value_(x); }
  double value(double x) const { return value_(x); }
  double derivative(double x) const { return derivative_(x); }

  Space space() const noexcept { return space_; }
  double electron_count() const noexcept { return electron_count_; }
  double scale() const noexcept { return scale_; }

  /// Integration options for this density at relative tolerance `rel_tol`.
  numerics::IntegrationOptions integration_options(double rel_tol) const;

 private:
  Space space_;
  Function value_;
  Function derivative_;
  double electron_count_;
  double scale_;
};

/// rho(r) = (1 / 4 pi N) sum_shells w_nl R_nl(r)^2 / <R_nl|R_nl>.
///
/// Each shell is rescaled by its closed-form norm, so the density has unit
/// norm even though tabulated coefficients are only normalized to ~1e-7, and
/// N rho is exactly the occupation-weighted sum of the orbital densities.
RadialDensity position_density(const AtomBasis& basis);

/// n(k) built the same way from the momentum orbitals R~_nl(k).
RadialDensity momentum_density(const AtomBasis& basis);

/// One-electron density of a single shell, (1/4pi) R^2 / <R|R> or the
/// momentum analogue. Independent of the occupation.
RadialDensity orbital_density(const AtomBasis& basis, int n, int l, Space space);

/// Isotropic 3-D Gaussian with per-component standard deviation sigma.
RadialDensity gaussian_density(double sigma, Space space = Space::position);

/// Radial moment <x^order> = 4 pi integral x^(2+order) d(x) dx for
/// -2 <= order <= 4.
double radial_moment(const RadialDensity& d, int order, double rel_tol = 1e-10);

/// 4 pi integral d(x) x^2 dx; 1 for a well-formed density.
double normalization(const RadialDensity& d, double rel_tol = 1e-10);

/// Radial variance <x^2> - <x>^2.
double variance(const RadialDensity& d, double rel_tol = 1e-10);

}  // namespace infoatom
