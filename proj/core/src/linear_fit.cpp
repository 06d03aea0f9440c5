#include <algorithm>
#include <cmath>

#include "infoatom/error.hpp"
#include "infoatom/numerics.hpp"

namespace infoatom::numerics {

LineFit linear_fit(std::span<const std::pair<double, double>> points) {
  if (points.size() < 2) throw DomainError("linear_fit: need at least 2 points");

  const double n = static_cast<double>(points.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& [x, y] : points) {
    mean_x += x;
    mean_y += y;
  }
  mean_x /= n;
  mean_y /= n;

  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (const auto& [x, y] : points) {
    const double dx = x - mean_x;
    const double dy = y - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (!(sxx > 0.0)) throw DomainError("linear_fit: x values are all identical");

  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  if (syy == 0.0) {
    fit.r_squared = 1.0;
    return fit;
  }
  double ss_res = 0.0;
  for (const auto& [x, y] : points) {
    const double r = y - (fit.slope * x + fit.intercept);
    ss_res += r * r;
  }
  fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  return fit;
}

}  // namespace infoatom::numerics
