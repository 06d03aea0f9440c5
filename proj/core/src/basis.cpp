#include "infoatom/basis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <utility>

#include "infoatom/error.hpp"

namespace infoatom {
namespace {

constexpr std::array<std::string_view, kMaxSupportedZ> kSymbols = {
    "H",  "He", "Li", "Be", "B",  "C",  "N",  "O",  "F",  "Ne", "Na", "Mg", "Al", "Si",
    "P",  "S",  "Cl", "Ar", "K",  "Ca", "Sc", "Ti", "V",  "Cr", "Mn", "Fe", "Co", "Ni",
    "Cu", "Zn", "Ga", "Ge", "As", "Se", "Br", "Kr", "Rb", "Sr", "Y",  "Zr", "Nb", "Mo",
    "Tc", "Ru", "Rh", "Pd", "Ag", "Cd", "In", "Sn", "Sb", "Te", "I",  "Xe"};

}  // namespace

std::string shell_label(int n, int l) {
  static constexpr std::string_view kLetters = "spdfghik";
  std::string out = std::to_string(n);
  if (l >= 0 && l < static_cast<int>(kLetters.size())) {
    out += kLetters[static_cast<std::size_t>(l)];
  } else {
    out += "(l=" + std::to_string(l) + ")";
  }
  return out;
}

namespace {

// log of (2 zeta)^(n + 1/2) / sqrt((2n)!)
double log_normalization(int n, double zeta) {
  return (n + 0.5) * std::log(2.0 * zeta) - 0.5 * std::lgamma(2.0 * n + 1.0);
}

}  // namespace

SlaterPrimitive::SlaterPrimitive(int n, double zeta) : n_(n), zeta_(zeta) {
  if (n < 1) throw BasisError("Slater primitive: n_jl must be >= 1");
  if (!(zeta > 0.0) || !std::isfinite(zeta)) {
    throw BasisError("Slater primitive: zeta must be finite and > 0");
  }
  norm_ = std::exp(log_normalization(n, zeta));
  if (!std::isfinite(norm_) || !(norm_ > 0.0)) {
    throw BasisError("Slater primitive: normalization factor is not finite");
  }
}

double SlaterPrimitive::value(double r) const {
  return norm_ * std::pow(r, n_ - 1) * std::exp(-zeta_ * r);
}

double SlaterPrimitive::derivative(double r) const {
  const double e = std::exp(-zeta_ * r);
  if (n_ == 1) return -zeta_ * norm_ * e;
  return norm_ * e * std::pow(r, n_ - 2) * ((n_ - 1) - zeta_ * r);
}

OrbitalShell::OrbitalShell(int n, int l, double occupation, std::vector<ExpansionTerm> terms)
    : n_(n), l_(l), occupation_(occupation), terms_(std::move(terms)) {
  const std::string name = shell_label(n, l);
  if (n < 1) throw BasisError("shell " + name + ": n must be >= 1");
  if (l < 0) throw BasisError("shell " + name + ": l must be >= 0");
  if (l >= n) throw BasisError("shell " + name + ": l must be < n");
  if (!(occupation > 0.0) || occupation > capacity()) {
    throw BasisError("shell " + name + ": occupation out of range (0, " +
                     std::to_string(static_cast<int>(capacity())) + "]");
  }
  if (terms_.empty()) throw BasisError("shell " + name + ": terms must be non-empty");
  for (const ExpansionTerm& t : terms_) {
    if (t.primitive.n() < l + 1) throw BasisError("shell " + name + ": n_jl must be >= l+1");
    if (!std::isfinite(t.coefficient)) {
      throw BasisError("shell " + name + ": coefficient is not finite");
    }
  }
}

std::string OrbitalShell::label() const { return shell_label(n_, l_); }

double OrbitalShell::analytic_norm() const {
  double sum = 0.0;
  for (const ExpansionTerm& a : terms_) {
    for (const ExpansionTerm& b : terms_) {
      const int na = a.primitive.n();
      const int nb = b.primitive.n();
      const double za = a.primitive.zeta();
      const double zb = b.primitive.zeta();
      // <S_a|S_b> = N_a N_b (n_a + n_b)! / (zeta_a + zeta_b)^(n_a + n_b + 1)
      const double log_overlap = log_normalization(na, za) + log_normalization(nb, zb) +
                                 std::lgamma(na + nb + 1.0) -
                                 (na + nb + 1.0) * std::log(za + zb);
      sum += a.coefficient * b.coefficient * std::exp(log_overlap);
    }
  }
  return sum;
}

OrbitalShell OrbitalShell::scaled(double factor) const {
  std::vector<ExpansionTerm> terms = terms_;
  for (ExpansionTerm& t : terms) t.coefficient *= factor;
  return OrbitalShell(n_, l_, occupation_, std::move(terms));
}

AtomBasis::AtomBasis(int atomic_number, std::string symbol, std::vector<OrbitalShell> shells)
    : z_(atomic_number), symbol_(std::move(symbol)), shells_(std::move(shells)) {
  if (z_ < 1) throw BasisError("atomic_number must be >= 1");
  if (shells_.empty()) throw BasisError("shells must be non-empty");
  std::set<std::pair<int, int>> seen;
  for (const OrbitalShell& s : shells_) {
    if (!seen.emplace(s.n(), s.l()).second) {
      throw BasisError("duplicate shell " + s.label());
    }
  }
  const double count = electron_count();
  if (std::abs(count - z_) > 1e-9) {
    throw BasisError("electron count mismatch: occupations sum to " + std::to_string(count) +
                     " but Z = " + std::to_string(z_));
  }
}

double AtomBasis::electron_count() const noexcept {
  double sum = 0.0;
  for (const OrbitalShell& s : shells_) sum += s.occupation();
  return sum;
}

const OrbitalShell* AtomBasis::find_shell(int n, int l) const noexcept {
  for (const OrbitalShell& s : shells_) {
    if (s.n() == n && s.l() == l) return &s;
  }
  return nullptr;
}

const OrbitalShell& AtomBasis::shell(int n, int l) const {
  if (const OrbitalShell* s = find_shell(n, l)) return *s;
  throw BasisError(symbol_ + ": no shell " + shell_label(n, l) + " (n=" + std::to_string(n) +
                   ", l=" + std::to_string(l) + ")");
}

int AtomBasis::outermost_n() const noexcept {
  int n = 0;
  for (const OrbitalShell& s : shells_) n = std::max(n, s.n());
  return n;
}

double radial_orbital(const OrbitalShell& shell, double r) {
  double sum = 0.0;
  for (const ExpansionTerm& t : shell.terms()) sum += t.coefficient * t.primitive.value(r);
  return sum;
}

double radial_orbital_derivative(const OrbitalShell& shell, double r) {
  double sum = 0.0;
  for (const ExpansionTerm& t : shell.terms()) sum += t.coefficient * t.primitive.derivative(r);
  return sum;
}

double BasisDiagnostics::max_shell_deviation() const noexcept {
  double worst = 0.0;
  for (const ShellDeviation& s : shells) worst = std::max(worst, s.deviation);
  return worst;
}

BasisDiagnostics validate(const AtomBasis& basis, double rel_tol) {
  BasisDiagnostics out;
  numerics::IntegrationOptions opts;
  opts.rel_tol = rel_tol;
  for (const OrbitalShell& shell : basis.shells()) {
    const auto norm = numerics::integrate_semi_infinite(
        [&shell](double r) {
          const double v = radial_orbital(shell, r);
          return v * v * r * r;
        },
        opts);
    out.shells.push_back({shell.n(), shell.l(), std::abs(norm.value - 1.0)});
  }
  out.electron_count_deviation = std::abs(basis.electron_count() - basis.atomic_number());
  return out;
}

std::string_view element_symbol(int z) {
  if (z < 1 || z > kMaxSupportedZ) {
    throw DomainError("Z out of supported range: " + std::to_string(z));
  }
  return kSymbols[static_cast<std::size_t>(z - 1)];
}

std::filesystem::path basis_file_path(const std::filesystem::path& dir, int z) {
  std::string name = (z < 10 ? "0" : "") + std::to_string(z) + "_";
  name += element_symbol(z);
  name += ".json";
  return dir / name;
}

}  // namespace infoatom
