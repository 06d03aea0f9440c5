#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "infoatom/basis.hpp"
#include "infoatom/error.hpp"

namespace infoatom {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw BasisError(where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where + "." + key, "missing field");
  return *it;
}

int integer_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_number_integer()) fail(where + "." + key, "expected an integer");
  return v.get<int>();
}

double real_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_number()) fail(where + "." + key, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail(where + "." + key, "expected a finite number");
  return d;
}

OrbitalShell parse_shell(const json& node, const std::string& where, const ParseOptions& opts) {
  const int n = integer_field(node, "n", where);
  const int l = integer_field(node, "l", where);
  const double occupation = real_field(node, "occupation", where);
  const json& terms_node = field(node, "terms", where);
  if (!terms_node.is_array()) fail(where + ".terms", "expected an array");

  std::vector<ExpansionTerm> terms;
  for (std::size_t j = 0; j < terms_node.size(); ++j) {
    const std::string at = where + ".terms[" + std::to_string(j) + "]";
    const int n_jl = integer_field(terms_node[j], "n_jl", at);
    const double zeta = real_field(terms_node[j], "zeta", at);
    const double c = real_field(terms_node[j], "c", at);
    try {
      terms.push_back({c, SlaterPrimitive(n_jl, zeta)});
    } catch (const BasisError& e) {
      fail(at, e.what());
    }
  }

  try {
    OrbitalShell shell(n, l, occupation, std::move(terms));
    if (opts.enforce_normalization) {
      const double dev = std::abs(shell.analytic_norm() - 1.0);
      if (dev > kNormRejectTolerance) {
        std::ostringstream msg;
        msg << "shell " << shell.label() << " norm deviates from 1 by " << dev;
        fail(where, msg.str());
      }
    }
    return shell;
  } catch (const BasisError& e) {
    if (std::string(e.what()).rfind(where, 0) == 0) throw;
    fail(where, e.what());
  }
}

}  // namespace

AtomBasis parse_basis(std::string_view document, const ParseOptions& opts) {
  json root;
  try {
    root = json::parse(document);
  } catch (const json::parse_error& e) {
    throw BasisError(std::string("basis document is not valid JSON: ") + e.what());
  }
  const std::string where = "basis";
  const int z = integer_field(root, "atomic_number", where);
  if (z < 1 || z > kMaxSupportedZ) {
    fail(where + ".atomic_number", "Z out of supported range 1.." + std::to_string(kMaxSupportedZ));
  }
  const json& sym = field(root, "symbol", where);
  if (!sym.is_string()) fail(where + ".symbol", "expected a string");
  const std::string symbol = sym.get<std::string>();
  if (symbol != element_symbol(z)) {
    fail(where + ".symbol", "'" + symbol + "' does not match Z = " + std::to_string(z));
  }

  const json& shells_node = field(root, "shells", where);
  if (!shells_node.is_array()) fail(where + ".shells", "expected an array");
  if (shells_node.empty()) fail(where + ".shells", "must be non-empty");
  std::vector<OrbitalShell> shells;
  for (std::size_t i = 0; i < shells_node.size(); ++i) {
    shells.push_back(parse_shell(shells_node[i], where + ".shells[" + std::to_string(i) + "]", opts));
  }
  try {
    return AtomBasis(z, symbol, std::move(shells));
  } catch (const BasisError& e) {
    fail(where, e.what());
  }
}

AtomBasis load_basis_file(const std::filesystem::path& path, const ParseOptions& opts) {
  std::ifstream in(path);
  if (!in) throw BasisError("cannot open basis file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_basis(buf.str(), opts);
  } catch (const BasisError& e) {
    throw BasisError(path.filename().string() + ": " + e.what());
  }
}

}  // namespace infoatom
