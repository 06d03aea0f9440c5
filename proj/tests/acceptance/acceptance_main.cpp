// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. `--only N` runs a single criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "app.hpp"
#include "infoatom/infoatom.hpp"

using namespace infoatom;
using std::numbers::pi;

namespace {

const std::string kDataDir = INFOATOM_ACCEPTANCE_DATA_DIR;
const std::string kBasisDir = kDataDir + "/basis";

struct Verdict {
  bool pass = true;
  std::vector<std::string> details;

  void check(bool ok, const std::string& what) {
    if (!ok) pass = false;
    details.push_back(std::string(ok ? "  ok   " : "  FAIL ") + what);
  }
  void info(const std::string& what) { details.push_back("  info " + what); }
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const std::vector<AtomBasis>& atoms() {
  static const std::vector<AtomBasis> all = [] {
    std::vector<AtomBasis> out;
    for (int z = 1; z <= kMaxSupportedZ; ++z) out.push_back(load_basis_file(basis_file_path(kBasisDir, z)));
    return out;
  }();
  return all;
}

const std::vector<MeasureRow>& table() {
  static const std::vector<MeasureRow> rows = [] {
    std::vector<MeasureRow> out;
    for (const AtomBasis& b : atoms()) out.push_back({b.atomic_number(), b.symbol(), measure_set(b, 1e-10)});
    return out;
  }();
  return rows;
}

Verdict hydrogen_suite() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  const AtomBasis h = load_basis_file(basis_file_path(kBasisDir, 1));
  const MeasureSet m = measure_set(h);
  const RadialDensity rho = position_density(h);
  const double r1 = radial_moment(rho, 1);
  const double r2 = radial_moment(rho, 2);
  const double elapsed = seconds_since(t0);

  const std::vector<std::tuple<const char*, double, double>> cases = {
      {"S_r", m.shannon_position, 3.0 + std::log(pi)},
      {"I_r", m.fisher_position, 4.0},
      {"I_k", m.fisher_momentum, 12.0},
      {"D_r", m.disequilibrium_position, 1.0 / (8.0 * pi)},
      {"D_k", m.disequilibrium_momentum, 33.0 / (16.0 * pi * pi)},
      {"<r>", r1, 1.5},
      {"<r^2>", r2, 3.0},
      {"mu2", m.mu2, 1.0},
      {"C_r", m.lmc_position, std::exp(3.0) / 8.0},
  };
  for (const auto& [name, got, want] : cases) {
    const double err = std::abs(got - want);
    v.check(err <= 1e-6, std::string(name) + " = " + fmt(got) + ", expected " + fmt(want) + ", |err| " + fmt(err));
  }
  v.check(elapsed < 1.0, "runtime " + fmt(elapsed) + " s < 1 s");
  return v;
}

Verdict gaussian_suite() {
  Verdict v;
  for (double sigma : {0.5, 1.0, 2.0}) {
    const RadialDensity g = gaussian_density(sigma);
    const double s = shannon_entropy(g);
    const double i = fisher_information(g);
    const double d = disequilibrium(g);
    const double p = fisher_shannon_plane(s, i);
    const double s_want = 1.5 * std::log(2.0 * pi * std::numbers::e * sigma * sigma);
    const double i_want = 3.0 / (sigma * sigma);
    const double d_want = std::pow(4.0 * pi * sigma * sigma, -1.5);
    const std::string tag = "sigma=" + fmt(sigma) + " ";
    v.check(std::abs(s - s_want) <= 1e-8, tag + "S err " + fmt(std::abs(s - s_want)));
    v.check(std::abs(i - i_want) <= 1e-8, tag + "I err " + fmt(std::abs(i - i_want)));
    v.check(std::abs(d - d_want) <= 1e-8, tag + "D err " + fmt(std::abs(d - d_want)));
    v.check(std::abs(p - 1.0) <= 1e-8, tag + "P err " + fmt(std::abs(p - 1.0)));
  }
  return v;
}

Verdict dataset_integrity() {
  Verdict v;
  double worst_norm = 0.0;
  double worst_parseval = 0.0;
  std::string worst_norm_at;
  std::string worst_parseval_at;
  for (const AtomBasis& b : atoms()) {
    if (b.atomic_number() < 2) continue;
    for (Space space : {Space::position, Space::momentum}) {
      const RadialDensity d = space == Space::position ? position_density(b) : momentum_density(b);
      const double dev = std::abs(normalization(d, 1e-12) - 1.0);
      if (dev > worst_norm) {
        worst_norm = dev;
        worst_norm_at = b.symbol() + " " + std::string(to_string(space));
      }
    }
    for (const OrbitalShell& s : b.shells()) {
      const double analytic = s.analytic_norm();
      const double dev = std::abs(momentum_orbital_norm(s) - analytic) / analytic;
      if (dev > worst_parseval) {
        worst_parseval = dev;
        worst_parseval_at = b.symbol() + " " + s.label();
      }
    }
  }
  v.check(worst_norm <= 1e-6, "max density normalization deviation " + fmt(worst_norm) + " (" + worst_norm_at + ")");
  v.check(worst_parseval <= 1e-6,
          "max shell Parseval deviation " + fmt(worst_parseval) + " (" + worst_parseval_at + ")");

  // Every distinct (n, zeta, l) primitive in the dataset, 25 points from 1e-3 to 1e3.
  std::set<std::tuple<int, double, int>> primitives;
  for (const AtomBasis& b : atoms()) {
    for (const OrbitalShell& s : b.shells()) {
      for (const ExpansionTerm& t : s.terms()) primitives.insert({t.primitive.n(), t.primitive.zeta(), s.l()});
    }
  }
  double worst = 0.0;
  std::string worst_at;
  std::size_t evaluations = 0;
  for (const auto& [n, zeta, l] : primitives) {
    const SlaterPrimitive p(n, zeta);
    for (int i = 0; i <= 24; ++i) {
      const double k = std::pow(10.0, -3.0 + 0.25 * i);
      const double closed = sto_momentum_primitive(p, l, k);
      const double quad = sto_momentum_primitive_quadrature(p, l, k);
      const double rel = std::abs(quad - closed) / std::abs(closed);
      ++evaluations;
      if (!(rel <= worst)) {
        worst = rel;
        worst_at = "n=" + std::to_string(n) + " l=" + std::to_string(l) + " zeta=" + fmt(zeta) + " k=" + fmt(k);
      }
    }
  }
  v.check(worst <= 1e-8, std::to_string(primitives.size()) + " primitives, " + std::to_string(evaluations) +
                             " points: max closed-form vs quadrature relative difference " + fmt(worst) +
                             " (" + worst_at + ")");
  return v;
}

Verdict cramer_rao() {
  Verdict v;
  double min_r = INFINITY;
  double min_k = INFINITY;
  int failures = 0;
  for (const MeasureRow& row : table()) {
    const MeasureSet& m = row.measures;
    min_r = std::min(min_r, m.fisher_position * m.variance_position);
    min_k = std::min(min_k, m.fisher_momentum * m.variance_momentum);
    if (!m.satisfies_cramer_rao()) ++failures;
  }
  v.check(failures == 0, std::to_string(failures) + " of " + std::to_string(table().size()) + " atoms violate");
  v.info("min I_r V_r = " + fmt(min_r) + ", min I_k V_k = " + fmt(min_k));
  return v;
}

Verdict periodicity() {
  Verdict v;
  std::vector<std::pair<int, double>> series;
  for (const MeasureRow& row : table()) series.emplace_back(row.atomic_number, row.measures.fisher_momentum);
  std::vector<int> minima;
  for (const Extremum& e : periodicity_extrema(series)) {
    if (e.kind == ExtremumKind::minimum) minima.push_back(e.atomic_number);
  }
  std::string all;
  for (int z : minima) all += (all.empty() ? "" : ",") + std::to_string(z);
  v.info("I_k local minima at Z = " + all);
  for (int noble : {2, 10, 18, 36}) {
    const bool found = std::any_of(minima.begin(), minima.end(), [&](int z) { return std::abs(z - noble) <= 1; });
    v.check(found, "minimum within 1 of Z=" + std::to_string(noble));
  }
  return v;
}

Verdict property_ranking() {
  Verdict v;
  const std::vector<PropertyRecord> props = load_properties_file(kDataDir + "/properties.csv");
  const std::vector<std::string> measures = {"I_k", "C_k", "P_k", "S_k", "D_k"};
  const std::vector<std::string> targets = {"radius", "polarizability", "ionization_energy"};
  const CorrelationReport rep = correlation_matrix(table(), props, measures, targets);
  for (const std::string& d : rep.diagnostics) v.info(d);
  for (const std::string& t : targets) {
    std::string line = t + ":";
    for (const std::string& m : measures) line += " " + m + "=" + fmt(rep.find(m, t)->r);
    v.info(line);
    for (const char* strong : {"I_k", "C_k", "P_k"}) {
      for (const char* weak : {"S_k", "D_k"}) {
        const double a = std::abs(rep.find(strong, t)->r);
        const double b = std::abs(rep.find(weak, t)->r);
        v.check(a > b, t + ": |r(" + strong + ")| " + fmt(a) + " > |r(" + weak + ")| " + fmt(b));
      }
    }
  }
  const double d_radius = rep.find("D_k", "radius")->r;
  v.check(d_radius < 0.0, "r(D_k, radius) = " + fmt(d_radius) + " < 0");
  return v;
}

Verdict orbital_fits() {
  Verdict v;
  std::vector<AtomBasis> range(atoms().begin() + 32, atoms().begin() + 39);  // Z = 33..39
  const OrbitalStudy study = orbital_moment_study(range, 1e-10);
  const std::set<std::string> thresholded = {"1s", "2s", "2p", "3s", "3p", "3d"};
  const std::set<std::string> reported = {"4s", "4p", "5s"};
  std::set<std::string> seen;
  for (const ShellFit& f : study.fits) {
    seen.insert(f.label);
    const std::string line = f.label + ": " + std::to_string(f.points) + " points, slope " + fmt(f.fit.slope) +
                             ", r^2 " + fmt(f.fit.r_squared);
    if (thresholded.count(f.label)) {
      v.check(f.core_shell && f.fit.r_squared >= kCoreShellMinRSquared, line + " (>= 0.99, closed core)");
    } else {
      v.info(line + " (reported)");
    }
  }
  for (const std::string& s : thresholded) v.check(seen.count(s) == 1, s + " fitted");
  for (const std::string& s : reported) v.check(seen.count(s) == 1, s + " reported");
  return v;
}

Verdict de_bruijn() {
  Verdict v;
  for (double sigma : {1.0, 2.0}) {
    const DeBruijnCheck c = de_bruijn_check(sigma, 1e-5);
    const double diff = std::abs(c.finite_difference - c.half_fisher);
    v.check(diff <= 1e-9, "sigma=" + fmt(sigma) + " |dS/dt - I/2| = " + fmt(diff));
  }
  return v;
}

Verdict determinism() {
  Verdict v;
  const std::vector<std::string> args = {"compute", "--range", "1:54", "--tol", "1e-10", "--basis-dir", kBasisDir};
  std::vector<std::string> outputs;
  double slowest = 0.0;
  for (int i = 0; i < 2; ++i) {
    std::ostringstream out, err;
    const auto t0 = std::chrono::steady_clock::now();
    const int code = cli::run(args, out, err);
    slowest = std::max(slowest, seconds_since(t0));
    v.check(code == 0, "run " + std::to_string(i + 1) + " exit status " + std::to_string(code));
    outputs.push_back(out.str());
  }
  v.check(!outputs[0].empty() && outputs[0] == outputs[1],
          "byte-identical output (" + std::to_string(outputs[0].size()) + " bytes)");
  v.check(slowest < 300.0, "slowest run " + fmt(slowest) + " s < 300 s");
  return v;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "hydrogen closed forms", hydrogen_suite},
      {2, "gaussian fixtures", gaussian_suite},
      {3, "dataset integrity", dataset_integrity},
      {4, "cramer-rao", cramer_rao},
      {5, "I_k periodicity", periodicity},
      {6, "property correlation ranking", property_ranking},
      {7, "orbital log-log fits Z=33..39", orbital_fits},
      {8, "de bruijn identity", de_bruijn},
      {9, "determinism and runtime", determinism},
  };
  int only = 0;
  bool verbose = true;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
    else if (std::strcmp(argv[i], "--quiet") == 0) verbose = false;
    else {
      std::fprintf(stderr, "usage: %s [--only N] [--quiet]\n", argv[0]);
      return 2;
    }
  }

  int failed = 0;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.check(false, std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(t0);
    if (!v.pass) ++failed;
    std::printf("%s criterion %d: %s (%.2f s)\n", v.pass ? "PASS" : "FAIL", c.id, c.name, elapsed);
    if (verbose) {
      for (const std::string& d : v.details) std::printf("%s\n", d.c_str());
    }
    std::fflush(stdout);
  }
  std::printf("%d criterion(s) failed\n", failed);
  return failed == 0 ? 0 : 1;
}
