#include "infoatom/measures.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "infoatom/error.hpp"

namespace infoatom {
namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

using Field = double MeasureSet::*;

constexpr std::array<Field, kMeasureNames.size()> kFields = {
    &MeasureSet::shannon_position,        &MeasureSet::shannon_momentum,
    &MeasureSet::shannon_total,           &MeasureSet::fisher_position,
    &MeasureSet::fisher_momentum,         &MeasureSet::fisher_total,
    &MeasureSet::disequilibrium_position, &MeasureSet::disequilibrium_momentum,
    &MeasureSet::disequilibrium_total,    &MeasureSet::lmc_position,
    &MeasureSet::lmc_momentum,            &MeasureSet::lmc_total,
    &MeasureSet::fisher_shannon_position, &MeasureSet::fisher_shannon_momentum,
    &MeasureSet::fisher_shannon_total,    &MeasureSet::variance_position,
    &MeasureSet::variance_momentum,       &MeasureSet::mu2};

double integrate_density(const RadialDensity& d, double rel_tol,
                         const numerics::Integrand& integrand) {
  return kFourPi * numerics::integrate_semi_infinite(integrand, d.integration_options(rel_tol)).value;
}

// Runs `fn`, prefixing any failure with the measure it belongs to.
template <typename Fn>
double labelled(std::string_view label, Fn&& fn) {
  try {
    return std::forward<Fn>(fn)();
  } catch (const IntegrationError& e) {
    throw IntegrationError(std::string(label) + ": " + e.what(), e.best_estimate(), e.abscissa());
  } catch (const Error& e) {
    throw Error(std::string(label) + ": " + e.what());
  }
}

}  // namespace

bool MeasureSet::satisfies_cramer_rao() const noexcept {
  return fisher_position * variance_position >= 1.0 &&
         fisher_momentum * variance_momentum >= 1.0;
}

double MeasureSet::get(std::string_view name) const {
  for (std::size_t i = 0; i < kMeasureNames.size(); ++i) {
    if (kMeasureNames[i] == name) return this->*kFields[i];
  }
  throw AnalysisError("unknown measure '" + std::string(name) + "'");
}

void MeasureSet::set(std::string_view name, double value) {
  for (std::size_t i = 0; i < kMeasureNames.size(); ++i) {
    if (kMeasureNames[i] == name) {
      this->*kFields[i] = value;
      return;
    }
  }
  throw AnalysisError("unknown measure '" + std::string(name) + "'");
}

bool is_measure_name(std::string_view name) noexcept {
  for (std::string_view m : kMeasureNames) {
    if (m == name) return true;
  }
  return false;
}

double shannon_entropy(const RadialDensity& d, double rel_tol) {
  return -integrate_density(d, rel_tol, [&d](double x) {
    const double v = d(x);
    return v < kDensityFloor ? 0.0 : v * std::log(v) * x * x;
  });
}

double fisher_information(const RadialDensity& d, double rel_tol) {
  return integrate_density(d, rel_tol, [&d](double x) {
    const double v = d(x);
    if (v < kDensityFloor) return 0.0;
    const double g = d.derivative(x);
    return g * g / v * x * x;
  });
}

double disequilibrium(const RadialDensity& d, double rel_tol) {
  return integrate_density(d, rel_tol, [&d](double x) {
    const double v = d(x);
    return v * v * x * x;
  });
}

double lmc_complexity(double entropy, double disequilibrium) {
  if (!(disequilibrium > 0.0)) throw DomainError("lmc_complexity: D must be > 0");
  return std::exp(entropy) * disequilibrium;
}

double fisher_shannon_plane(double entropy, double fisher) {
  if (!(fisher >= 0.0)) throw DomainError("fisher_shannon_plane: I must be >= 0");
  constexpr double kDim = 3.0;
  const double power = std::exp(2.0 * entropy / kDim) / (2.0 * std::numbers::pi * std::numbers::e);
  return power * fisher / kDim;
}

MeasureSet measure_set(const RadialDensity& position, const RadialDensity& momentum,
                       double rel_tol) {
  MeasureSet m;
  m.shannon_position = labelled("S_r", [&] { return shannon_entropy(position, rel_tol); });
  m.shannon_momentum = labelled("S_k", [&] { return shannon_entropy(momentum, rel_tol); });
  m.fisher_position = labelled("I_r", [&] { return fisher_information(position, rel_tol); });
  m.fisher_momentum = labelled("I_k", [&] { return fisher_information(momentum, rel_tol); });
  m.disequilibrium_position = labelled("D_r", [&] { return disequilibrium(position, rel_tol); });
  m.disequilibrium_momentum = labelled("D_k", [&] { return disequilibrium(momentum, rel_tol); });
  m.variance_position = labelled("V_r", [&] { return variance(position, rel_tol); });
  m.mu2 = labelled("mu2", [&] { return radial_moment(momentum, 2, rel_tol); });
  const double mean_k = labelled("V_k", [&] { return radial_moment(momentum, 1, rel_tol); });
  m.variance_momentum = m.mu2 - mean_k * mean_k;

  m.lmc_position = labelled("C_r", [&] {
    return lmc_complexity(m.shannon_position, m.disequilibrium_position);
  });
  m.lmc_momentum = labelled("C_k", [&] {
    return lmc_complexity(m.shannon_momentum, m.disequilibrium_momentum);
  });
  m.fisher_shannon_position = fisher_shannon_plane(m.shannon_position, m.fisher_position);
  m.fisher_shannon_momentum = fisher_shannon_plane(m.shannon_momentum, m.fisher_momentum);

  m.shannon_total = m.shannon_position + m.shannon_momentum;
  m.fisher_total = m.fisher_position * m.fisher_momentum;
  m.disequilibrium_total = m.disequilibrium_position * m.disequilibrium_momentum;
  m.lmc_total = m.lmc_position * m.lmc_momentum;
  m.fisher_shannon_total = m.fisher_shannon_position * m.fisher_shannon_momentum;
  return m;
}

MeasureSet measure_set(const AtomBasis& basis, double rel_tol) {
  return measure_set(position_density(basis), momentum_density(basis), rel_tol);
}

DeBruijnCheck de_bruijn_check(double sigma, double t_step) {
  if (!(sigma > 0.0)) throw DomainError("de_bruijn_check: sigma must be > 0");
  if (!(t_step > 0.0)) throw DomainError("de_bruijn_check: t_step must be > 0");
  const double var = sigma * sigma;
  if (!(t_step < var)) throw DomainError("de_bruijn_check: t_step must be < sigma^2");

  // Entropy of N(0, var + t): the sum of the variable and sqrt(t) z.
  auto entropy = [](double v) {
    return 0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e * v);
  };
  DeBruijnCheck out;
  out.finite_difference = (entropy(var + t_step) - entropy(var - t_step)) / (2.0 * t_step);

  // 1-D Fisher information of the unsmoothed density, by quadrature over the
  // half line (the integrand is even).
  const double peak = 1.0 / std::sqrt(2.0 * std::numbers::pi * var);
  numerics::IntegrationOptions opts;
  opts.rel_tol = 1e-13;
  opts.initial_cutoff = sigma;
  const auto half = numerics::integrate_semi_infinite(
      [=](double x) {
        const double f = peak * std::exp(-0.5 * x * x / var);
        const double g = -x / var * f;
        return f < kDensityFloor ? 0.0 : g * g / f;
      },
      opts);
  out.half_fisher = 0.5 * (2.0 * half.value);
  return out;
}

}  // namespace infoatom
