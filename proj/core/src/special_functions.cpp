#include <cmath>
#include <limits>
#include <string>

#include "infoatom/error.hpp"
#include "infoatom/numerics.hpp"

namespace infoatom::numerics {
namespace {

// j_l(x) = x^l / (2l+1)!! * sum_k (-x^2/2)^k / (k! (2l+3)(2l+5)...(2l+2k+1))
double bessel_series(int l, double x) {
  double prefactor = 1.0;
  for (int i = 0; i < l; ++i) prefactor *= x / (2.0 * i + 3.0);
  const double half_x2 = -0.5 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 64; ++k) {
    term *= half_x2 / (k * (2.0 * l + 2.0 * k + 1.0));
    sum += term;
    if (std::abs(term) <= std::numeric_limits<double>::epsilon() * std::abs(sum)) break;
  }
  return prefactor * sum;
}

// Below this the closed forms cancel catastrophically; the series needs only
// a handful of terms here.
double series_threshold(int l) { return l == 0 ? 0.1 : 1.5; }

}  // namespace

double spherical_bessel(int l, double x) {
  if (l < 0 || l > kMaxBesselOrder) {
    throw DomainError("spherical_bessel: unsupported order l = " + std::to_string(l));
  }
  if (!(x >= 0.0)) throw DomainError("spherical_bessel: x must be >= 0");
  if (x < series_threshold(l)) return bessel_series(l, x);

  const double s = std::sin(x);
  const double c = std::cos(x);
  const double inv = 1.0 / x;
  switch (l) {
    case 0:
      return s * inv;
    case 1:
      return (s * inv - c) * inv;
    case 2:
      return ((3.0 * inv * inv - 1.0) * s - 3.0 * c * inv) * inv;
    default:
      return ((15.0 * inv * inv * inv - 6.0 * inv) * s - (15.0 * inv * inv - 1.0) * c) * inv;
  }
}

}  // namespace infoatom::numerics
