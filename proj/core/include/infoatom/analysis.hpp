#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "infoatom/basis.hpp"
#include "infoatom/measures.hpp"
#include "infoatom/numerics.hpp"

namespace infoatom {

enum class Property { radius, ionization_energy, electronegativity, polarizability };
enum class PropertyTransform { direct, inverse };

inline constexpr std::array<Property, 4> kAllProperties = {
    Property::radius, Property::ionization_energy, Property::electronegativity,
    Property::polarizability};

std::string_view to_string(Property p) noexcept;
std::string_view to_string(PropertyTransform t) noexcept;
std::optional<Property> parse_property(std::string_view name) noexcept;
std::optional<PropertyTransform> parse_transform(std::string_view name) noexcept;

/// 1 pm in Bohr.
inline constexpr double kBohrPerPicometre = 1.0 / 52.917721090;

/// Experimental (or reference) properties of one element. Missing values are
/// allowed; present ones are > 0.
struct PropertyRecord {
  int atomic_number = 0;
  std::string symbol;
  std::optional<double> radius_pm;
  std::optional<double> ionization_energy;   // hartree
  std::optional<double> electronegativity;   // Pauling scale
  std::optional<double> polarizability;      // a.u.

  /// Value in atomic units (radius converted to Bohr).
  std::optional<double> get(Property p) const;
};

/// Parse the delimited properties table
/// `Z, symbol, radius_pm, ionization_energy_au, electronegativity_pauling,
/// polarizability_au`. A header row is optional. Errors carry the 1-based row.
std::vector<PropertyRecord> parse_properties(std::string_view text);
std::vector<PropertyRecord> load_properties_file(const std::filesystem::path& path);

/// Pearson correlation coefficient, clamped to [-1, 1].
double pearson(std::span<const double> x, std::span<const double> y);

struct MeasureRow {
  int atomic_number = 0;
  std::string symbol;
  MeasureSet measures;
};

struct CorrelationEntry {
  std::string measure;
  std::string target;
  PropertyTransform transform = PropertyTransform::direct;
  double r = 0.0;
  std::size_t samples = 0;
};

struct CorrelationReport {
  /// Sorted by (measure, target).
  std::vector<CorrelationEntry> entries;
  /// Pairs that were skipped and why.
  std::vector<std::string> diagnostics;

  const CorrelationEntry* find(std::string_view measure, std::string_view target) const noexcept;
};

/// Pearson coefficient for every (measure, target) pair, computed over the
/// atoms where both values exist. A target is a property name ("radius",
/// "ionization_energy", "electronegativity", "polarizability") or a measure
/// name, the latter giving measure-vs-measure correlations. `transforms`
/// maps target names to direct/inverse; unlisted targets are direct.
CorrelationReport correlation_matrix(
    std::span<const MeasureRow> table, std::span<const PropertyRecord> properties,
    std::span<const std::string> measures, std::span<const std::string> targets,
    const std::map<std::string, PropertyTransform, std::less<>>& transforms = {});

enum class ExtremumKind { minimum, maximum };

struct Extremum {
  int atomic_number;
  double value;
  ExtremumKind kind;
};

/// Strict interior local extrema of a Z-sorted series by three-point
/// comparison. A run of equal values counts once, at its first element.
std::vector<Extremum> periodicity_extrema(std::span<const std::pair<int, double>> series);

struct OrbitalMomentRecord {
  int atomic_number = 0;
  std::string symbol;
  int n = 0;
  int l = 0;
  double fisher_momentum = 0.0;  // I_k of the one-electron orbital density
  double mu2 = 0.0;              // <k^2> of the same density
  /// Shell fully occupied in every atom of the study.
  bool closed_shell = false;
};

struct ShellFit {
  int n = 0;
  int l = 0;
  std::string label;
  std::size_t points = 0;
  numerics::LineFit fit;  // ln mu2 = slope * ln I_k + intercept
  bool closed_shell = false;
  /// Closed and below the outermost principal shell in every atom, so the
  /// linearity threshold applies.
  bool core_shell = false;
};

inline constexpr double kCoreShellMinRSquared = 0.99;

struct OrbitalStudy {
  std::vector<OrbitalMomentRecord> records;  // sorted by (Z, n, l)
  std::vector<ShellFit> fits;                // sorted by (n, l)
  std::vector<std::string> diagnostics;
};

/// Per-orbital momentum Fisher information and second moment across a run of
/// atoms, with a log-log line fit per shell. Needs at least two atoms.
OrbitalStudy orbital_moment_study(std::span<const AtomBasis> bases, double rel_tol = 1e-10);

}  // namespace infoatom
