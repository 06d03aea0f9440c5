#include "infoatom/density.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "infoatom/error.hpp"
#include "infoatom/transform.hpp"

namespace infoatom {
namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

struct PositionPrimitive {
  explicit PositionPrimitive(const SlaterPrimitive& p, int /*l*/) : p(p) {}
  double value(double r) const { return p.value(r); }
  double derivative(double r) const { return p.derivative(r); }
  SlaterPrimitive p;
};

// Weighted sum of squared orbitals sharing a pool of primitives. RHF tables
// reuse one primitive set for all shells of a given l, so each distinct
// primitive is evaluated once per point.
template <typename Primitive>
class ShellExpansion {
 public:
  void add_shell(const OrbitalShell& shell, double weight) {
    Row row{weight, {}};
    for (const ExpansionTerm& t : shell.terms()) {
      row.coefficients.emplace_back(intern(t.primitive, shell.l()), t.coefficient);
    }
    rows_.push_back(std::move(row));
  }

  double value(double x) const {
    std::vector<double> vals(primitives_.size());
    for (std::size_t i = 0; i < primitives_.size(); ++i) vals[i] = primitives_[i].value(x);
    double sum = 0.0;
    for (const Row& row : rows_) {
      double orbital = 0.0;
      for (const auto& [idx, c] : row.coefficients) orbital += c * vals[idx];
      sum += row.weight * orbital * orbital;
    }
    return sum;
  }

  double derivative(double x) const {
    std::vector<double> vals(primitives_.size());
    std::vector<double> ders(primitives_.size());
    for (std::size_t i = 0; i < primitives_.size(); ++i) {
      vals[i] = primitives_[i].value(x);
      ders[i] = primitives_[i].derivative(x);
    }
    double sum = 0.0;
    for (const Row& row : rows_) {
      double orbital = 0.0;
      double slope = 0.0;
      for (const auto& [idx, c] : row.coefficients) {
        orbital += c * vals[idx];
        slope += c * ders[idx];
      }
      sum += 2.0 * row.weight * orbital * slope;
    }
    return sum;
  }

 private:
  struct Key {
    int n;
    double zeta;
    int l;
    bool operator==(const Key&) const = default;
  };
  struct Row {
    double weight;
    std::vector<std::pair<std::size_t, double>> coefficients;
  };

  std::size_t intern(const SlaterPrimitive& p, int l) {
    const Key key{p.n(), p.zeta(), l};
    for (std::size_t i = 0; i < keys_.size(); ++i) {
      if (keys_[i] == key) return i;
    }
    keys_.push_back(key);
    primitives_.emplace_back(p, l);
    return primitives_.size() - 1;
  }

  std::vector<Key> keys_;
  std::vector<Primitive> primitives_;
  std::vector<Row> rows_;
};

template <typename Primitive>
RadialDensity make_density(Space space, std::shared_ptr<const ShellExpansion<Primitive>> expansion,
                           double electron_count) {
  return RadialDensity(
      space, [expansion](double x) { return expansion->value(x); },
      [expansion](double x) { return expansion->derivative(x); }, electron_count);
}

template <typename Primitive>
RadialDensity atom_density(const AtomBasis& basis, Space space) {
  auto expansion = std::make_shared<ShellExpansion<Primitive>>();
  const double n = basis.electron_count();
  for (const OrbitalShell& s : basis.shells()) {
    expansion->add_shell(s, s.occupation() / (kFourPi * n * s.analytic_norm()));
  }
  return make_density<Primitive>(space, std::move(expansion), basis.electron_count());
}

template <typename Primitive>
RadialDensity single_shell_density(const OrbitalShell& shell, Space space) {
  auto expansion = std::make_shared<ShellExpansion<Primitive>>();
  expansion->add_shell(shell, 1.0 / (kFourPi * shell.analytic_norm()));
  return make_density<Primitive>(space, std::move(expansion), 1.0);
}

}  // namespace

std::string_view to_string(Space space) noexcept {
  return space == Space::position ? "position" : "momentum";
}

RadialDensity::RadialDensity(Space space, Function value, Function derivative,
                             double electron_count, double scale)
    : space_(space),
      value_(std::move(value)),
      derivative_(std::move(derivative)),
      electron_count_(electron_count),
      scale_(scale) {
  if (!value_ || !derivative_) throw DomainError("RadialDensity: functions must be callable");
  if (!(scale_ > 0.0)) throw DomainError("RadialDensity: scale must be > 0");
}

numerics::IntegrationOptions RadialDensity::integration_options(double rel_tol) const {
  numerics::IntegrationOptions opts;
  opts.rel_tol = rel_tol;
  opts.initial_cutoff = scale_;
  return opts;
}

RadialDensity position_density(const AtomBasis& basis) {
  return atom_density<PositionPrimitive>(basis, Space::position);
}

RadialDensity momentum_density(const AtomBasis& basis) {
  return atom_density<MomentumPrimitive>(basis, Space::momentum);
}

RadialDensity orbital_density(const AtomBasis& basis, int n, int l, Space space) {
  const OrbitalShell& shell = basis.shell(n, l);
  if (space == Space::position) return single_shell_density<PositionPrimitive>(shell, space);
  return single_shell_density<MomentumPrimitive>(shell, space);
}

RadialDensity gaussian_density(double sigma, Space space) {
  if (!(sigma > 0.0)) throw DomainError("gaussian_density: sigma must be > 0");
  const double var = sigma * sigma;
  const double peak = std::pow(2.0 * std::numbers::pi * var, -1.5);
  return RadialDensity(
      space, [=](double x) { return peak * std::exp(-0.5 * x * x / var); },
      [=](double x) { return -x / var * peak * std::exp(-0.5 * x * x / var); }, 1.0, sigma);
}

double radial_moment(const RadialDensity& d, int order, double rel_tol) {
  if (order < -2 || order > 4) {
    throw DomainError("radial_moment: order " + std::to_string(order) +
                      " outside the convergent range [-2, 4]");
  }
  const int power = 2 + order;
  const auto res = numerics::integrate_semi_infinite(
      [&d, power](double x) { return std::pow(x, power) * d(x); },
      d.integration_options(rel_tol));
  return kFourPi * res.value;
}

double normalization(const RadialDensity& d, double rel_tol) {
  return radial_moment(d, 0, rel_tol);
}

double variance(const RadialDensity& d, double rel_tol) {
  const double m1 = radial_moment(d, 1, rel_tol);
  const double m2 = radial_moment(d, 2, rel_tol);
  return m2 - m1 * m1;
}

}  // namespace infoatom
