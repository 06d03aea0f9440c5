#pragma once

#include <utility>
#include <vector>

#include "infoatom/basis.hpp"

namespace infoatom {

/// Momentum-space STO primitive
///   S~_l(k) = sqrt(2/pi) * integral_0^inf r^2 S(r) j_l(kr) dr
/// from the closed form
///   S~_l(k) = sqrt(2/pi) N 2^l l! (n-l)! k^l rho^-(n+l+2) C_{n-l}^{(l+1)}(zeta/rho),
/// rho = sqrt(zeta^2 + k^2) and C the Gegenbauer polynomial. Requires n >= l+1.
double sto_momentum_primitive(const SlaterPrimitive& p, int l, double k);

/// d/dk of sto_momentum_primitive.
double sto_momentum_primitive_derivative(const SlaterPrimitive& p, int l, double k);

/// Same transform by direct quadrature of the spherical-Bessel integral.
/// Slow; exists to cross-check the closed form. l <= numerics::kMaxBesselOrder.
double sto_momentum_primitive_quadrature(const SlaterPrimitive& p, int l, double k,
                                         double rel_tol = 1e-12);

/// Gegenbauer polynomial C_m^{(alpha)}(x) by three-term recurrence.
double gegenbauer(int m, double alpha, double x);

/// Closed-form S~_l(k) with the k-independent prefactor precomputed.
class MomentumPrimitive {
 public:
  MomentumPrimitive(const SlaterPrimitive& p, int l);

  double value(double k) const;
  double derivative(double k) const;

 private:
  int l_;
  int degree_;  // n - l
  int power_;   // n + l + 2
  double zeta_;
  double amplitude_;  // sqrt(2/pi) N 2^l l! (n-l)!
};

/// R~_nl(k) = sum_j C_j S~_jl(k) for one shell.
class MomentumOrbital {
 public:
  explicit MomentumOrbital(const OrbitalShell& shell);

  int n() const noexcept { return n_; }
  int l() const noexcept { return l_; }

  double value(double k) const;
  double derivative(double k) const;

 private:
  int n_;
  int l_;
  std::vector<std::pair<double, MomentumPrimitive>> terms_;
};

MomentumOrbital momentum_orbital(const OrbitalShell& shell);

/// integral_0^inf R~_nl(k)^2 k^2 dk by quadrature. Equals <R|R> (Parseval).
double momentum_orbital_norm(const OrbitalShell& shell, double rel_tol = 1e-12);

}  // namespace infoatom
