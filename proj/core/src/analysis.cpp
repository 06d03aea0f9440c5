#include "infoatom/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <tuple>

#include "infoatom/density.hpp"
#include "infoatom/error.hpp"

namespace infoatom {
namespace {

std::optional<double> target_value(const MeasureRow& row, const PropertyRecord* props,
                                   std::string_view target) {
  if (const auto p = parse_property(target)) {
    if (props == nullptr) return std::nullopt;
    return props->get(*p);
  }
  return row.measures.get(target);
}

}  // namespace

std::string_view to_string(Property p) noexcept {
  switch (p) {
    case Property::radius:
      return "radius";
    case Property::ionization_energy:
      return "ionization_energy";
    case Property::electronegativity:
      return "electronegativity";
    case Property::polarizability:
      return "polarizability";
  }
  return "?";
}

std::string_view to_string(PropertyTransform t) noexcept {
  return t == PropertyTransform::direct ? "direct" : "inverse";
}

std::optional<Property> parse_property(std::string_view name) noexcept {
  for (Property p : kAllProperties) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

std::optional<PropertyTransform> parse_transform(std::string_view name) noexcept {
  if (name == "direct") return PropertyTransform::direct;
  if (name == "inverse") return PropertyTransform::inverse;
  return std::nullopt;
}

std::optional<double> PropertyRecord::get(Property p) const {
  switch (p) {
    case Property::radius:
      if (radius_pm) return *radius_pm * kBohrPerPicometre;
      return std::nullopt;
    case Property::ionization_energy:
      return ionization_energy;
    case Property::electronegativity:
      return electronegativity;
    case Property::polarizability:
      return polarizability;
  }
  return std::nullopt;
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw AnalysisError("pearson: length mismatch");
  if (x.size() < 2) throw AnalysisError("pearson: need at least 2 samples");
  const double n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 && syy == 0.0) throw AnalysisError("pearson: both samples are constant");
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return std::clamp(sxy / (std::sqrt(sxx) * std::sqrt(syy)), -1.0, 1.0);
}

const CorrelationEntry* CorrelationReport::find(std::string_view measure,
                                                std::string_view target) const noexcept {
  for (const CorrelationEntry& e : entries) {
    if (e.measure == measure && e.target == target) return &e;
  }
  return nullptr;
}

CorrelationReport correlation_matrix(
    std::span<const MeasureRow> table, std::span<const PropertyRecord> properties,
    std::span<const std::string> measures, std::span<const std::string> targets,
    const std::map<std::string, PropertyTransform, std::less<>>& transforms) {
  for (const std::string& m : measures) {
    if (!is_measure_name(m)) throw AnalysisError("unknown measure '" + m + "'");
  }
  for (const std::string& t : targets) {
    if (!parse_property(t) && !is_measure_name(t)) {
      throw AnalysisError("unknown property or measure '" + t + "'");
    }
  }
  for (const auto& [name, tf] : transforms) {
    if (!parse_property(name) && !is_measure_name(name)) {
      throw AnalysisError("transform given for unknown target '" + name + "'");
    }
  }

  std::map<int, const PropertyRecord*> by_z;
  for (const PropertyRecord& p : properties) by_z[p.atomic_number] = &p;

  std::set<std::pair<std::string, std::string>> pairs;
  for (const std::string& m : measures) {
    for (const std::string& t : targets) pairs.emplace(m, t);
  }

  CorrelationReport report;
  for (const auto& [measure, target] : pairs) {
    const auto tf_it = transforms.find(target);
    const PropertyTransform tf =
        tf_it == transforms.end() ? PropertyTransform::direct : tf_it->second;
    std::vector<double> xs;
    std::vector<double> ys;
    for (const MeasureRow& row : table) {
      const auto it = by_z.find(row.atomic_number);
      const PropertyRecord* props = it == by_z.end() ? nullptr : it->second;
      std::optional<double> y = target_value(row, props, target);
      if (!y) continue;
      if (tf == PropertyTransform::inverse) {
        if (*y == 0.0) continue;
        y = 1.0 / *y;
      }
      xs.push_back(row.measures.get(measure));
      ys.push_back(*y);
    }
    if (xs.size() < 2) {
      report.diagnostics.push_back(measure + " vs " + target + ": only " +
                                   std::to_string(xs.size()) + " overlapping atoms; pair omitted");
      continue;
    }
    try {
      report.entries.push_back({measure, target, tf, pearson(xs, ys), xs.size()});
    } catch (const AnalysisError& e) {
      report.diagnostics.push_back(measure + " vs " + target + ": " + e.what() + "; pair omitted");
    }
  }
  return report;
}

std::vector<Extremum> periodicity_extrema(std::span<const std::pair<int, double>> series) {
  for (std::size_t i = 1; i < series.size(); ++i) {
    if (series[i].first <= series[i - 1].first) {
      throw AnalysisError("periodicity_extrema: series must be strictly sorted by Z");
    }
  }
  // Collapse runs of equal values onto their first element.
  std::vector<std::pair<int, double>> runs;
  for (const auto& point : series) {
    if (runs.empty() || runs.back().second != point.second) runs.push_back(point);
  }
  std::vector<Extremum> out;
  for (std::size_t i = 1; i + 1 < runs.size(); ++i) {
    const double prev = runs[i - 1].second;
    const double here = runs[i].second;
    const double next = runs[i + 1].second;
    if (here < prev && here < next) {
      out.push_back({runs[i].first, here, ExtremumKind::minimum});
    } else if (here > prev && here > next) {
      out.push_back({runs[i].first, here, ExtremumKind::maximum});
    }
  }
  return out;
}

OrbitalStudy orbital_moment_study(std::span<const AtomBasis> bases, double rel_tol) {
  if (bases.size() < 2) {
    throw AnalysisError("orbital_moment_study: need at least 2 atoms for a line fit");
  }
  std::vector<const AtomBasis*> atoms;
  for (const AtomBasis& b : bases) atoms.push_back(&b);
  std::sort(atoms.begin(), atoms.end(), [](const AtomBasis* a, const AtomBasis* b) {
    return a->atomic_number() < b->atomic_number();
  });

  // Shell-level flags over the whole range.
  std::map<std::pair<int, int>, bool> closed;
  std::map<std::pair<int, int>, bool> core;
  for (const AtomBasis* atom : atoms) {
    for (const OrbitalShell& s : atom->shells()) {
      const auto key = std::make_pair(s.n(), s.l());
      closed.try_emplace(key, true);
      core.try_emplace(key, true);
    }
  }
  for (auto& [key, is_closed] : closed) {
    for (const AtomBasis* atom : atoms) {
      const OrbitalShell* s = atom->find_shell(key.first, key.second);
      if (s == nullptr || !s->closed()) is_closed = false;
      if (s == nullptr || !s->closed() || s->n() >= atom->outermost_n()) core[key] = false;
    }
  }

  OrbitalStudy study;
  std::map<std::pair<int, int>, std::vector<std::pair<double, double>>> points;
  for (const AtomBasis* atom : atoms) {
    for (const OrbitalShell& s : atom->shells()) {
      const RadialDensity d = orbital_density(*atom, s.n(), s.l(), Space::momentum);
      OrbitalMomentRecord rec;
      rec.atomic_number = atom->atomic_number();
      rec.symbol = atom->symbol();
      rec.n = s.n();
      rec.l = s.l();
      rec.fisher_momentum = fisher_information(d, rel_tol);
      rec.mu2 = radial_moment(d, 2, rel_tol);
      rec.closed_shell = closed.at({s.n(), s.l()});
      points[{s.n(), s.l()}].emplace_back(std::log(rec.fisher_momentum), std::log(rec.mu2));
      study.records.push_back(std::move(rec));
    }
  }
  std::sort(study.records.begin(), study.records.end(), [](const auto& a, const auto& b) {
    return std::tie(a.atomic_number, a.n, a.l) < std::tie(b.atomic_number, b.n, b.l);
  });

  for (const auto& [key, pts] : points) {
    const std::string label = shell_label(key.first, key.second);
    if (pts.size() < 2) {
      study.diagnostics.push_back(label + ": present in " + std::to_string(pts.size()) +
                                  " atom(s); no fit");
      continue;
    }
    ShellFit fit;
    fit.n = key.first;
    fit.l = key.second;
    fit.label = label;
    fit.points = pts.size();
    fit.fit = numerics::linear_fit(pts);
    fit.closed_shell = closed.at(key);
    fit.core_shell = core.at(key);
    study.fits.push_back(std::move(fit));
  }
  return study;
}

}  // namespace infoatom
