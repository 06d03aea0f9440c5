#include "infoatom/transform.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>
#include <numbers>
#include <string>

#include "infoatom/error.hpp"
#include "infoatom/numerics.hpp"

namespace infoatom {
namespace {

const double kSqrt2OverPi = std::sqrt(2.0 / std::numbers::pi);

void check_order(int n, int l) {
  if (l < 0) throw DomainError("momentum transform: l must be >= 0");
  if (n < l + 1) {
    throw DomainError("momentum transform: n_jl = " + std::to_string(n) +
                      " requires l <= " + std::to_string(n - 1));
  }
}

double amplitude(const SlaterPrimitive& p, int l) {
  return kSqrt2OverPi * p.normalization() * std::ldexp(1.0, l) * std::tgamma(l + 1.0) *
         std::tgamma(p.n() - l + 1.0);
}

// k^l rho^-power C_degree^{(l+1)}(zeta/rho)
double closed_form(int l, int degree, int power, double zeta, double k) {
  const double rho = std::hypot(zeta, k);
  const double x = zeta / rho;
  return std::pow(k, l) * std::pow(rho, -power) * gegenbauer(degree, l + 1.0, x);
}

double closed_form_derivative(int l, int degree, int power, double zeta, double k) {
  const double rho = std::hypot(zeta, k);
  const double x = zeta / rho;
  const double alpha = l + 1.0;
  const double rho_p = std::pow(rho, -power);
  const double c = gegenbauer(degree, alpha, x);
  // d/dx C_m^{(a)}(x) = 2a C_{m-1}^{(a+1)}(x);  dx/dk = -zeta k / rho^3
  const double dc = degree > 0 ? 2.0 * alpha * gegenbauer(degree - 1, alpha + 1.0, x) : 0.0;
  const double kl = std::pow(k, l);
  double out = -power * kl * k * rho_p / (rho * rho) * c - kl * k * zeta * rho_p / (rho * rho * rho) * dc;
  if (l > 0) out += l * std::pow(k, l - 1) * rho_p * c;
  return out;
}

}  // namespace

double gegenbauer(int m, double alpha, double x) {
  if (m < 0) throw DomainError("gegenbauer: degree must be >= 0");
  if (m == 0) return 1.0;
  double prev = 1.0;
  double curr = 2.0 * alpha * x;
  for (int j = 2; j <= m; ++j) {
    const double next = (2.0 * x * (j + alpha - 1.0) * curr - (j + 2.0 * alpha - 2.0) * prev) / j;
    prev = curr;
    curr = next;
  }
  return curr;
}

MomentumPrimitive::MomentumPrimitive(const SlaterPrimitive& p, int l)
    : l_(l), degree_(p.n() - l), power_(p.n() + l + 2), zeta_(p.zeta()) {
  check_order(p.n(), l);
  amplitude_ = amplitude(p, l);
}

double MomentumPrimitive::value(double k) const {
  return amplitude_ * closed_form(l_, degree_, power_, zeta_, k);
}

double MomentumPrimitive::derivative(double k) const {
  return amplitude_ * closed_form_derivative(l_, degree_, power_, zeta_, k);
}

double sto_momentum_primitive(const SlaterPrimitive& p, int l, double k) {
  if (!(k >= 0.0)) throw DomainError("momentum transform: k must be >= 0");
  return MomentumPrimitive(p, l).value(k);
}

double sto_momentum_primitive_derivative(const SlaterPrimitive& p, int l, double k) {
  if (!(k >= 0.0)) throw DomainError("momentum transform: k must be >= 0");
  return MomentumPrimitive(p, l).derivative(k);
}

double sto_momentum_primitive_quadrature(const SlaterPrimitive& p, int l, double k,
                                         double rel_tol) {
  check_order(p.n(), l);
  if (!(k >= 0.0)) throw DomainError("momentum transform: k must be >= 0");
  numerics::IntegrationOptions opts;
  opts.rel_tol = rel_tol;
  opts.abs_floor = 0.0;
  opts.max_evaluations = 20'000'000;
  const int n = p.n();
  const double zeta = p.zeta();

  if (k <= zeta) {
    // Few oscillations over the decay length: integrate along the real axis.
    opts.initial_cutoff = 1.0 / zeta;
    const auto res = numerics::integrate_semi_infinite(
        [&p, l, k](double r) { return r * r * p.value(r) * numerics::spherical_bessel(l, k * r); },
        opts);
    return kSqrt2OverPi * res.value;
  }

  // On the real axis the integrand oscillates and cancels to many digits.
  // Instead write j_l(x) = Re h_l(x) with
  //   h_l(x) = (-i)^(l+1) e^(ix) / x * sum_m (l+m)! / (m! (l-m)!) (i / 2x)^m.
  // r^(n+1) h_l(kr) has no pole at 0 because n >= l+1, so the path can be
  // rotated to r = s e^(i phi), phi = atan(k / zeta), where
  // e^((ik - zeta) r) = e^(-rho s) and nothing oscillates.
  using cplx = std::complex<double>;
  const double rho = std::hypot(zeta, k);
  const cplx dir = std::polar(1.0, std::atan2(k, zeta));
  const cplx i(0.0, 1.0);
  std::vector<cplx> coef;  // c_m (i / 2k)^m dir^(n-m)
  for (int m = 0; m <= l; ++m) {
    const double c = std::tgamma(l + m + 1.0) / (std::tgamma(m + 1.0) * std::tgamma(l - m + 1.0));
    coef.push_back(c * std::pow(i / (2.0 * k), m) * std::pow(dir, n - m));
  }
  const cplx front = std::pow(-i, l + 1) / k * dir;
  opts.initial_cutoff = (n + 1.0) / rho;
  const auto res = numerics::integrate_semi_infinite(
      [&](double s) {
        cplx sum = 0.0;
        for (int m = 0; m <= l; ++m) sum += coef[static_cast<std::size_t>(m)] * std::pow(s, n - m);
        return std::real(front * sum) * std::exp(-rho * s);
      },
      opts);
  return kSqrt2OverPi * p.normalization() * res.value;
}

MomentumOrbital::MomentumOrbital(const OrbitalShell& shell) : n_(shell.n()), l_(shell.l()) {
  terms_.reserve(shell.terms().size());
  for (const ExpansionTerm& t : shell.terms()) {
    terms_.emplace_back(t.coefficient, MomentumPrimitive(t.primitive, l_));
  }
}

double MomentumOrbital::value(double k) const {
  double sum = 0.0;
  for (const auto& [c, p] : terms_) sum += c * p.value(k);
  return sum;
}

double MomentumOrbital::derivative(double k) const {
  double sum = 0.0;
  for (const auto& [c, p] : terms_) sum += c * p.derivative(k);
  return sum;
}

MomentumOrbital momentum_orbital(const OrbitalShell& shell) { return MomentumOrbital(shell); }

double momentum_orbital_norm(const OrbitalShell& shell, double rel_tol) {
  const MomentumOrbital orbital(shell);
  double zeta_max = 0.0;
  for (const ExpansionTerm& t : shell.terms()) zeta_max = std::max(zeta_max, t.primitive.zeta());
  numerics::IntegrationOptions opts;
  opts.rel_tol = rel_tol;
  opts.initial_cutoff = zeta_max;
  return numerics::integrate_semi_infinite(
             [&orbital](double k) {
               const double v = orbital.value(k);
               return v * v * k * k;
             },
             opts)
      .value;
}

}  // namespace infoatom
