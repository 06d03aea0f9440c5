#pragma once

#include <array>
#include <string_view>

#include "infoatom/basis.hpp"
#include "infoatom/density.hpp"

namespace infoatom {

/// Every information and complexity functional for one atom, in both spaces.
/// Totals are derived arithmetically from the per-space values.
struct MeasureSet {
  double shannon_position = 0.0;   // S_r (nats)
  double shannon_momentum = 0.0;   // S_k
  double shannon_total = 0.0;      // S_r + S_k
  double fisher_position = 0.0;    // I_r (Bohr^-2)
  double fisher_momentum = 0.0;    // I_k (Bohr^2)
  double fisher_total = 0.0;       // I_r * I_k
  double disequilibrium_position = 0.0;  // D_r (Bohr^-3)
  double disequilibrium_momentum = 0.0;  // D_k (Bohr^3)
  double disequilibrium_total = 0.0;     // D_r * D_k
  double lmc_position = 0.0;
  double lmc_momentum = 0.0;
  double lmc_total = 0.0;
  double fisher_shannon_position = 0.0;
  double fisher_shannon_momentum = 0.0;
  double fisher_shannon_total = 0.0;
  double variance_position = 0.0;  // <r^2> - <r>^2
  double variance_momentum = 0.0;  // <k^2> - <k>^2
  double mu2 = 0.0;                // <k^2>

  /// I_r V_r >= 1 and I_k V_k >= 1.
  bool satisfies_cramer_rao() const noexcept;

  /// Value by column name ("S_r", "I_k", ..., "mu2"). Throws AnalysisError
  /// for an unknown name.
  double get(std::string_view name) const;
  void set(std::string_view name, double value);
};

/// Column names in output order.
inline constexpr std::array<std::string_view, 18> kMeasureNames = {
    "S_r", "S_k", "S_T", "I_r", "I_k", "I_T", "D_r", "D_k", "D_T",
    "C_r", "C_k", "C_T", "P_r", "P_k", "P_T", "V_r", "V_k", "mu2"};

bool is_measure_name(std::string_view name) noexcept;

/// Densities below this are treated as zero inside log and ratio integrands.
inline constexpr double kDensityFloor = 1e-300;

/// S = -4 pi integral d ln d x^2 dx
double shannon_entropy(const RadialDensity& d, double rel_tol = 1e-10);
/// I = 4 pi integral (d')^2 / d x^2 dx
double fisher_information(const RadialDensity& d, double rel_tol = 1e-10);
/// D = 4 pi integral d^2 x^2 dx
double disequilibrium(const RadialDensity& d, double rel_tol = 1e-10);

/// C = e^S D
double lmc_complexity(double entropy, double disequilibrium);
/// P = (1/3) J I with entropy power J = e^(2S/3) / (2 pi e), dimension 3.
double fisher_shannon_plane(double entropy, double fisher);

MeasureSet measure_set(const RadialDensity& position, const RadialDensity& momentum,
                       double rel_tol = 1e-10);
MeasureSet measure_set(const AtomBasis& basis, double rel_tol = 1e-10);

struct DeBruijnCheck {
  double finite_difference;  // dS/dt at t = 0, central difference
  double half_fisher;        // I / 2
};

/// Entropy growth of a 1-D Gaussian of variance sigma^2 under Gaussian
/// smoothing of variance t, against half its Fisher information.
DeBruijnCheck de_bruijn_check(double sigma, double t_step);

}  // namespace infoatom
