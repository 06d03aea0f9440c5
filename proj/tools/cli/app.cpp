#include "app.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "infoatom/infoatom.hpp"
#include "output.hpp"

#ifndef INFOATOM_DEFAULT_DATA_DIR
#define INFOATOM_DEFAULT_DATA_DIR "data"
#endif

namespace infoatom::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

constexpr const char* kBasisDirEnv = "INFOATOM_BASIS_DIR";

// Bad flags or values; maps to kConfigError.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string basis_dir = std::string(INFOATOM_DEFAULT_DATA_DIR) + "/basis";
  std::string range;
  double tol = 1e-10;
  std::string format = "csv";
  std::string out;
  bool serial = false;

  int z_min = 1;
  int z_max = kMaxSupportedZ;
};

void parse_range(RunConfig& cfg) {
  const std::string_view text = cfg.range;
  const auto colon = text.find(':');
  const std::string_view a = text.substr(0, colon);
  const std::string_view b = colon == std::string_view::npos ? a : text.substr(colon + 1);
  auto to_int = [&](std::string_view s) {
    int v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
      throw ConfigError("--range: expected A:B with integers, got '" + cfg.range + "'");
    }
    return v;
  };
  cfg.z_min = to_int(a);
  cfg.z_max = to_int(b);
  for (int z : {cfg.z_min, cfg.z_max}) {
    if (z < 1 || z > kMaxSupportedZ) {
      throw ConfigError("Z out of supported range: " + std::to_string(z) + " (supported 1.." +
                        std::to_string(kMaxSupportedZ) + ")");
    }
  }
  if (cfg.z_min > cfg.z_max) throw ConfigError("--range: empty range '" + cfg.range + "'");
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// Runs f(i) for i in [0, n), concurrently unless serial. Results keep index
// order, so output never depends on scheduling.
template <class T>
std::vector<T> parallel_map(std::size_t n, bool serial, const std::function<T(std::size_t)>& f) {
  std::vector<T> results(n);
  unsigned workers = serial ? 1u : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) results[i] = f(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) results[i] = f(i);
    });
  }
  return results;
}

// Per-run log. Failures (atoms that could not be processed) make the run
// partial; notes are informational.
struct Problems {
  std::vector<std::string> messages;
  std::size_t failures = 0;
  void add(std::string m) {
    messages.push_back(std::move(m));
    ++failures;
  }
  void note(std::string m) { messages.push_back(std::move(m)); }
  bool empty() const { return failures == 0; }
};

void require_basis_dir(const RunConfig& cfg) {
  if (!fs::is_directory(cfg.basis_dir)) {
    throw DomainError("basis directory not found: " + cfg.basis_dir);
  }
}

std::vector<AtomBasis> load_range(const RunConfig& cfg, const ParseOptions& opts, Problems& problems) {
  require_basis_dir(cfg);
  std::vector<AtomBasis> atoms;
  for (int z = cfg.z_min; z <= cfg.z_max; ++z) {
    const fs::path path = basis_file_path(cfg.basis_dir, z);
    if (!fs::exists(path)) {
      problems.add("missing basis file for Z=" + std::to_string(z) + ": " + path.string());
      continue;
    }
    try {
      atoms.push_back(load_basis_file(path, opts));
    } catch (const Error& e) {
      problems.add("invalid basis for Z=" + std::to_string(z) + " (" + path.string() + "): " + e.what());
    }
  }
  return atoms;
}

struct Document {
  std::string text;
  int code = kSuccess;
  std::vector<std::string> diagnostics;
};

Json diagnostics_json(const Problems& p) {
  Json arr = Json::array();
  for (const std::string& m : p.messages) arr.push_back(m);
  return arr;
}

Json number_json(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round_to_output(v);
}

std::vector<MeasureRow> compute_rows(const RunConfig& cfg, Problems& problems) {
  const std::vector<AtomBasis> atoms = load_range(cfg, {}, problems);
  struct Outcome {
    std::optional<MeasureRow> row;
    std::string error;
  };
  const auto outcomes = parallel_map<Outcome>(atoms.size(), cfg.serial, [&](std::size_t i) {
    const AtomBasis& b = atoms[i];
    Outcome o;
    try {
      o.row = MeasureRow{b.atomic_number(), b.symbol(), measure_set(b, cfg.tol)};
    } catch (const Error& e) {
      o.error = "Z=" + std::to_string(b.atomic_number()) + " " + b.symbol() + ": " + e.what();
    }
    return o;
  });
  std::vector<MeasureRow> rows;
  for (const Outcome& o : outcomes) {
    if (o.row) rows.push_back(*o.row);
    else problems.add(o.error);
  }
  return rows;
}

Document cmd_compute(const RunConfig& cfg) {
  Problems problems;
  const std::vector<MeasureRow> rows = compute_rows(cfg, problems);
  Document doc;
  if (cfg.format == "json") {
    Json j;
    j["columns"] = Json::array();
    for (std::string_view m : kMeasureNames) j["columns"].push_back(m);
    j["rows"] = Json::array();
    for (const MeasureRow& r : rows) {
      Json row;
      row["Z"] = r.atomic_number;
      row["symbol"] = r.symbol;
      for (std::string_view m : kMeasureNames) row[std::string(m)] = number_json(r.measures.get(m));
      j["rows"].push_back(std::move(row));
    }
    j["diagnostics"] = diagnostics_json(problems);
    doc.text = j.dump(2) + "\n";
  } else {
    doc.text = measures_csv(rows);
  }
  doc.code = problems.empty() ? kSuccess : kPartial;
  doc.diagnostics = problems.messages;
  return doc;
}

struct CorrelateOptions {
  std::string table;
  std::string properties = std::string(INFOATOM_DEFAULT_DATA_DIR) + "/properties.csv";
  std::string measures = "I_k,D_k,S_k,C_k,P_k";
  std::string targets = "radius,polarizability,ionization_energy";
  std::vector<std::string> transforms;
  bool self = false;
};

std::map<std::string, PropertyTransform, std::less<>> parse_transforms(
    const std::vector<std::string>& specs, const std::vector<std::string>& targets) {
  std::map<std::string, PropertyTransform, std::less<>> out;
  for (const std::string& raw : specs) {
    for (const std::string& spec : split_list(raw)) {
      const auto eq = spec.find('=');
      const std::string value = eq == std::string::npos ? spec : spec.substr(eq + 1);
      const auto tf = parse_transform(value);
      if (!tf) throw ConfigError("--transform: expected direct or inverse, got '" + value + "'");
      if (eq == std::string::npos) {
        // Bare direct/inverse applies to every property target.
        for (const std::string& t : targets) {
          if (parse_property(t)) out[t] = *tf;
        }
      } else {
        const std::string name = spec.substr(0, eq);
        if (!parse_property(name) && !is_measure_name(name)) {
          throw ConfigError("--transform: unknown target '" + name + "'");
        }
        out[name] = *tf;
      }
    }
  }
  return out;
}

std::string read_file(const fs::path& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError(std::string("cannot open ") + what + " " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Document cmd_correlate(const RunConfig& cfg, const CorrelateOptions& opts) {
  std::vector<std::string> measures = split_list(opts.measures);
  std::vector<std::string> targets = split_list(opts.targets);
  if (measures.empty()) throw ConfigError("--measures: empty list");
  for (const std::string& m : measures) {
    if (!is_measure_name(m)) throw ConfigError("--measures: unknown measure '" + m + "'");
  }
  if (opts.self) {
    for (const std::string& m : measures) {
      if (std::find(targets.begin(), targets.end(), m) == targets.end()) targets.push_back(m);
    }
  }
  if (targets.empty()) throw ConfigError("--targets: empty list");
  for (const std::string& t : targets) {
    if (!parse_property(t) && !is_measure_name(t)) {
      throw ConfigError("--targets: unknown property or measure '" + t + "'");
    }
  }
  const auto transforms = parse_transforms(opts.transforms, targets);

  const std::vector<PropertyRecord> properties = load_properties_file(opts.properties);
  Problems problems;
  std::vector<MeasureRow> table;
  if (!opts.table.empty()) {
    table = parse_measures_csv(read_file(opts.table, "measures table"));
    std::erase_if(table, [&](const MeasureRow& r) {
      return r.atomic_number < cfg.z_min || r.atomic_number > cfg.z_max;
    });
  } else {
    table = compute_rows(cfg, problems);
  }

  const CorrelationReport report = correlation_matrix(table, properties, measures, targets, transforms);
  for (const std::string& d : report.diagnostics) problems.note(d);

  Document doc;
  if (cfg.format == "json") {
    Json j;
    j["entries"] = Json::array();
    for (const CorrelationEntry& e : report.entries) {
      j["entries"].push_back({{"measure", e.measure},
                              {"target", e.target},
                              {"transform", to_string(e.transform)},
                              {"r", number_json(e.r)},
                              {"abs_r", number_json(std::abs(e.r))},
                              {"samples", e.samples}});
    }
    j["diagnostics"] = diagnostics_json(problems);
    doc.text = j.dump(2) + "\n";
  } else {
    doc.text = csv_line({"measure", "target", "transform", "r", "abs_r", "samples"});
    for (const CorrelationEntry& e : report.entries) {
      doc.text += csv_line({e.measure, e.target, std::string(to_string(e.transform)),
                            format_number(e.r), format_number(std::abs(e.r)),
                            std::to_string(e.samples)});
    }
  }
  doc.code = problems.empty() ? kSuccess : kPartial;
  doc.diagnostics = problems.messages;
  return doc;
}

Document cmd_orbital_study(const RunConfig& cfg) {
  Problems problems;
  const std::vector<AtomBasis> atoms = load_range(cfg, {}, problems);
  const OrbitalStudy study = orbital_moment_study(atoms, cfg.tol);
  for (const std::string& d : study.diagnostics) problems.note(d);

  auto threshold = [](const ShellFit& f) -> std::string {
    if (!f.core_shell) return "";
    return f.fit.r_squared >= kCoreShellMinRSquared ? "pass" : "fail";
  };
  Document doc;
  if (cfg.format == "json") {
    Json j;
    j["records"] = Json::array();
    for (const OrbitalMomentRecord& r : study.records) {
      j["records"].push_back({{"Z", r.atomic_number},
                              {"symbol", r.symbol},
                              {"shell", shell_label(r.n, r.l)},
                              {"I_k", number_json(r.fisher_momentum)},
                              {"mu2", number_json(r.mu2)},
                              {"ln_I_k", number_json(std::log(r.fisher_momentum))},
                              {"ln_mu2", number_json(std::log(r.mu2))},
                              {"closed_shell", r.closed_shell}});
    }
    j["fits"] = Json::array();
    for (const ShellFit& f : study.fits) {
      j["fits"].push_back({{"shell", f.label},
                           {"points", f.points},
                           {"slope", number_json(f.fit.slope)},
                           {"intercept", number_json(f.fit.intercept)},
                           {"r_squared", number_json(f.fit.r_squared)},
                           {"closed_shell", f.closed_shell},
                           {"core_shell", f.core_shell},
                           {"threshold", threshold(f)}});
    }
    j["diagnostics"] = diagnostics_json(problems);
    doc.text = j.dump(2) + "\n";
  } else {
    doc.text = csv_line({"Z", "symbol", "shell", "I_k", "mu2", "ln_I_k", "ln_mu2", "closed_shell"});
    for (const OrbitalMomentRecord& r : study.records) {
      doc.text += csv_line({std::to_string(r.atomic_number), r.symbol, shell_label(r.n, r.l),
                            format_number(r.fisher_momentum), format_number(r.mu2),
                            format_number(std::log(r.fisher_momentum)), format_number(std::log(r.mu2)),
                            r.closed_shell ? "1" : "0"});
    }
    // Fit summary follows after one blank line.
    doc.text += "\n";
    doc.text += csv_line({"shell", "points", "slope", "intercept", "r_squared", "closed_shell",
                          "core_shell", "threshold"});
    for (const ShellFit& f : study.fits) {
      doc.text += csv_line({f.label, std::to_string(f.points), format_number(f.fit.slope),
                            format_number(f.fit.intercept), format_number(f.fit.r_squared),
                            f.closed_shell ? "1" : "0", f.core_shell ? "1" : "0", threshold(f)});
    }
  }
  doc.code = problems.empty() ? kSuccess : kPartial;
  doc.diagnostics = problems.messages;
  return doc;
}

struct ValidationRow {
  int z;
  std::string symbol;
  std::string check;
  std::string shell;
  double deviation;
};

std::vector<ValidationRow> validate_atom(const AtomBasis& b, double tol) {
  std::vector<ValidationRow> rows;
  const BasisDiagnostics diag = validate(b, std::min(tol, 1e-12));
  for (const ShellDeviation& s : diag.shells) {
    rows.push_back({b.atomic_number(), b.symbol(), "shell_norm", shell_label(s.n, s.l), s.deviation});
  }
  for (const OrbitalShell& s : b.shells()) {
    const double analytic = s.analytic_norm();
    const double momentum = momentum_orbital_norm(s, std::min(tol, 1e-12));
    rows.push_back({b.atomic_number(), b.symbol(), "parseval", s.label(),
                    std::abs(momentum - analytic) / analytic});
  }
  rows.push_back({b.atomic_number(), b.symbol(), "electron_count", "", diag.electron_count_deviation});
  rows.push_back({b.atomic_number(), b.symbol(), "density_norm_position", "",
                  std::abs(normalization(position_density(b), tol) - 1.0)});
  rows.push_back({b.atomic_number(), b.symbol(), "density_norm_momentum", "",
                  std::abs(normalization(momentum_density(b), tol) - 1.0)});
  return rows;
}

Document cmd_validate(const RunConfig& cfg, std::ostream& err) {
  Problems problems;
  ParseOptions popts;
  popts.enforce_normalization = false;
  const std::vector<AtomBasis> atoms = load_range(cfg, popts, problems);
  struct Outcome {
    std::vector<ValidationRow> rows;
    std::string error;
  };
  const auto outcomes = parallel_map<Outcome>(atoms.size(), cfg.serial, [&](std::size_t i) {
    Outcome o;
    try {
      o.rows = validate_atom(atoms[i], cfg.tol);
    } catch (const Error& e) {
      o.error = "Z=" + std::to_string(atoms[i].atomic_number()) + ": " + e.what();
    }
    return o;
  });
  std::vector<ValidationRow> rows;
  for (const Outcome& o : outcomes) {
    if (!o.error.empty()) problems.add(o.error);
    rows.insert(rows.end(), o.rows.begin(), o.rows.end());
  }
  double worst = 0.0;
  std::size_t flagged = 0;
  for (const ValidationRow& r : rows) {
    worst = std::max(worst, r.deviation);
    if (r.deviation > kNormWarnTolerance) ++flagged;
  }

  Document doc;
  if (cfg.format == "json") {
    Json j;
    j["rows"] = Json::array();
    for (const ValidationRow& r : rows) {
      j["rows"].push_back({{"Z", r.z},
                           {"symbol", r.symbol},
                           {"check", r.check},
                           {"shell", r.shell},
                           {"deviation", number_json(r.deviation)},
                           {"flagged", r.deviation > kNormWarnTolerance}});
    }
    j["max_deviation"] = number_json(worst);
    j["flagged"] = flagged;
    j["diagnostics"] = diagnostics_json(problems);
    doc.text = j.dump(2) + "\n";
  } else {
    doc.text = csv_line({"Z", "symbol", "check", "shell", "deviation", "flagged"});
    for (const ValidationRow& r : rows) {
      doc.text += csv_line({std::to_string(r.z), r.symbol, r.check, r.shell, format_number(r.deviation),
                            r.deviation > kNormWarnTolerance ? "1" : "0"});
    }
  }
  err << "validated " << atoms.size() << " atom(s): max deviation " << format_number(worst) << ", "
      << flagged << " check(s) above " << format_number(kNormWarnTolerance) << "\n";
  doc.code = problems.empty() ? kSuccess : kPartial;
  doc.diagnostics = problems.messages;
  return doc;
}

Document cmd_de_bruijn(const RunConfig& cfg, const std::vector<double>& sigmas, double t_step) {
  Document doc;
  Json j = Json::array();
  doc.text = csv_line({"sigma", "t_step", "finite_difference", "half_fisher", "abs_difference"});
  for (double sigma : sigmas) {
    const DeBruijnCheck c = de_bruijn_check(sigma, t_step);
    const double diff = std::abs(c.finite_difference - c.half_fisher);
    doc.text += csv_line({format_number(sigma), format_number(t_step), format_number(c.finite_difference),
                          format_number(c.half_fisher), format_number(diff)});
    j.push_back({{"sigma", number_json(sigma)},
                 {"t_step", number_json(t_step)},
                 {"finite_difference", number_json(c.finite_difference)},
                 {"half_fisher", number_json(c.half_fisher)},
                 {"abs_difference", number_json(diff)}});
  }
  if (cfg.format == "json") doc.text = j.dump(2) + "\n";
  return doc;
}

void add_common(CLI::App* sub, RunConfig& cfg, const std::string& default_range) {
  cfg.range = default_range;
  sub->add_option("--basis-dir", cfg.basis_dir, "Directory of <ZZ>_<Symbol>.json basis files")
      ->envname(kBasisDirEnv)
      ->capture_default_str();
  sub->add_option("--range", cfg.range, "Inclusive atomic-number range A:B")->capture_default_str();
  sub->add_option("--tol", cfg.tol, "Relative quadrature tolerance")
      ->check(CLI::Range(1e-14, 1e-4))
      ->capture_default_str();
  sub->add_flag("--serial", cfg.serial, "Disable per-atom parallelism");
}

void add_output(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--out", cfg.out, "Write the document here instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Information-theoretic measures of atomic densities in position and momentum space",
               "infoatom"};
  app.require_subcommand(1);

  // One config per subcommand so each keeps its own defaults.
  RunConfig compute_cfg;
  RunConfig correlate_cfg;
  RunConfig orbital_cfg;
  RunConfig validate_cfg;
  RunConfig bruijn_cfg;
  CorrelateOptions corr;
  std::vector<double> sigmas = {1.0, 2.0};
  double t_step = 1e-5;

  CLI::App* compute = app.add_subcommand("compute", "Measures table, one row per atom");
  add_common(compute, compute_cfg, "1:54");
  add_output(compute, compute_cfg);

  CLI::App* correlate = app.add_subcommand("correlate", "Pearson coefficients of measures against properties");
  add_common(correlate, correlate_cfg, "1:54");
  add_output(correlate, correlate_cfg);
  correlate->add_option("--table", corr.table, "Measures CSV from `compute` (otherwise computed)");
  correlate->add_option("--properties", corr.properties, "Atomic properties CSV")->capture_default_str();
  correlate->add_option("--measures", corr.measures, "Comma-separated measure columns")->capture_default_str();
  correlate->add_option("--targets", corr.targets, "Comma-separated properties or measures")
      ->capture_default_str();
  correlate->add_option("--transform", corr.transforms,
                        "direct|inverse for every property, or NAME=direct|inverse");
  correlate->add_flag("--self", corr.self, "Also correlate every measure with itself");

  CLI::App* orbital = app.add_subcommand("orbital-study", "Per-orbital mu2 against I_k with log-log fits");
  add_common(orbital, orbital_cfg, "33:39");
  add_output(orbital, orbital_cfg);

  CLI::App* validate_cmd = app.add_subcommand("validate", "Normalization and Parseval diagnostics");
  add_common(validate_cmd, validate_cfg, "1:54");
  add_output(validate_cmd, validate_cfg);

  CLI::App* bruijn = app.add_subcommand("de-bruijn-check", "Entropy growth under Gaussian smoothing vs I/2");
  add_output(bruijn, bruijn_cfg);
  bruijn->add_option("--sigma", sigmas, "Gaussian widths")->delimiter(',')->capture_default_str();
  bruijn->add_option("--t-step", t_step, "Smoothing variance step")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (app.get_subcommands().empty()) err << app.help();
    return kConfigError;
  }

  RunConfig& cfg = compute->parsed()     ? compute_cfg
                   : correlate->parsed()   ? correlate_cfg
                   : orbital->parsed()     ? orbital_cfg
                   : validate_cmd->parsed() ? validate_cfg
                                            : bruijn_cfg;
  Document doc;
  try {
    if (!bruijn->parsed()) parse_range(cfg);
    if (compute->parsed()) doc = cmd_compute(cfg);
    else if (correlate->parsed()) doc = cmd_correlate(cfg, corr);
    else if (orbital->parsed()) doc = cmd_orbital_study(cfg);
    else if (validate_cmd->parsed()) doc = cmd_validate(cfg, err);
    else doc = cmd_de_bruijn(cfg, sigmas, t_step);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  }

  for (const std::string& d : doc.diagnostics) err << "warning: " << d << "\n";
  if (cfg.out.empty()) {
    out << doc.text;
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    file << doc.text;
    if (!file) {
      err << "error: cannot write " << cfg.out << "\n";
      return kConfigError;
    }
  }
  return doc.code;
}

}  // namespace infoatom::cli
