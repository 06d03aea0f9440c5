#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "infoatom/numerics.hpp"

namespace infoatom {

/// Spectroscopic label such as "1s" or "3d".
std::string shell_label(int n, int l);

/// Normalized Slater-type primitive N r^(n-1) exp(-zeta r).
class SlaterPrimitive {
 public:
  SlaterPrimitive(int n, double zeta);

  int n() const noexcept { return n_; }
  double zeta() const noexcept { return zeta_; }
  /// (2 zeta)^(n + 1/2) / sqrt((2n)!)
  double normalization() const noexcept { return norm_; }

  double value(double r) const;
  double derivative(double r) const;

 private:
  int n_;
  double zeta_;
  double norm_;
};

struct ExpansionTerm {
  double coefficient;
  SlaterPrimitive primitive;
};

/// One (n, l) radial orbital R_nl(r) = sum_j C_j S_j(r) with its occupation.
class OrbitalShell {
 public:
  OrbitalShell(int n, int l, double occupation, std::vector<ExpansionTerm> terms);

  int n() const noexcept { return n_; }
  int l() const noexcept { return l_; }
  double occupation() const noexcept { return occupation_; }
  const std::vector<ExpansionTerm>& terms() const noexcept { return terms_; }

  /// Occupation of a filled subshell, 2(2l+1).
  double capacity() const noexcept { return 2.0 * (2 * l_ + 1); }
  bool closed() const noexcept { return occupation_ == capacity(); }
  /// Spectroscopic label, e.g. "3d".
  std::string label() const;

  /// <R|R> from the closed-form STO overlap integrals.
  double analytic_norm() const;

  /// Copy with every coefficient multiplied by `factor`.
  OrbitalShell scaled(double factor) const;

 private:
  int n_;
  int l_;
  double occupation_;
  std::vector<ExpansionTerm> terms_;
};

/// Neutral-atom Roothaan-Hartree-Fock description; immutable once built.
class AtomBasis {
 public:
  AtomBasis(int atomic_number, std::string symbol, std::vector<OrbitalShell> shells);

  int atomic_number() const noexcept { return z_; }
  const std::string& symbol() const noexcept { return symbol_; }
  const std::vector<OrbitalShell>& shells() const noexcept { return shells_; }

  /// Sum of occupations (equals Z).
  double electron_count() const noexcept;
  const OrbitalShell* find_shell(int n, int l) const noexcept;
  const OrbitalShell& shell(int n, int l) const;
  int outermost_n() const noexcept;

 private:
  int z_;
  std::string symbol_;
  std::vector<OrbitalShell> shells_;
};

/// Radial orbital R_nl(r) in Bohr^(-3/2).
double radial_orbital(const OrbitalShell& shell, double r);
/// dR_nl/dr, exact term by term.
double radial_orbital_derivative(const OrbitalShell& shell, double r);

struct ShellDeviation {
  int n;
  int l;
  double deviation;
};

struct BasisDiagnostics {
  std::vector<ShellDeviation> shells;
  double electron_count_deviation = 0.0;

  double max_shell_deviation() const noexcept;
};

/// Per-shell |<R|R> - 1| by quadrature; never throws on bad data.
BasisDiagnostics validate(const AtomBasis& basis, double rel_tol = 1e-12);

inline constexpr double kNormWarnTolerance = 1e-6;
inline constexpr double kNormRejectTolerance = 1e-4;

struct ParseOptions {
  /// Reject shells whose analytic norm deviates from 1 by more than
  /// kNormRejectTolerance. Diagnostic tooling switches this off.
  bool enforce_normalization = true;
};

/// Parse a JSON basis document (one atom).
AtomBasis parse_basis(std::string_view document, const ParseOptions& opts = {});
AtomBasis load_basis_file(const std::filesystem::path& path, const ParseOptions& opts = {});

inline constexpr int kMaxSupportedZ = 54;

/// Element symbol for 1 <= z <= kMaxSupportedZ.
std::string_view element_symbol(int z);

/// `<dir>/<ZZ>_<Symbol>.json`
std::filesystem::path basis_file_path(const std::filesystem::path& dir, int z);

}  // namespace infoatom
