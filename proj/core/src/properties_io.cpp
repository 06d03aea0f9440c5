#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "infoatom/analysis.hpp"
#include "infoatom/error.hpp"

namespace infoatom {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

[[noreturn]] void row_error(std::size_t row, const std::string& what) {
  throw AnalysisError("properties row " + std::to_string(row) + ": " + what);
}

std::optional<double> optional_positive(std::string_view cell, std::size_t row,
                                        const char* column) {
  if (cell.empty()) return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc() || ptr != cell.data() + cell.size()) {
    row_error(row, std::string(column) + " is not a number: '" + std::string(cell) + "'");
  }
  if (!(v > 0.0)) row_error(row, std::string(column) + " must be > 0");
  return v;
}

}  // namespace

std::vector<PropertyRecord> parse_properties(std::string_view text) {
  std::vector<PropertyRecord> out;
  std::size_t row = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++row;
    if (trim(line).empty()) continue;

    const auto cells = split(line);
    if (row == 1 && !cells.empty() && cells[0] == "Z") continue;
    if (cells.size() != 6) {
      row_error(row, "expected 6 columns, found " + std::to_string(cells.size()));
    }
    PropertyRecord rec;
    const auto [ptr, ec] =
        std::from_chars(cells[0].data(), cells[0].data() + cells[0].size(), rec.atomic_number);
    if (ec != std::errc() || ptr != cells[0].data() + cells[0].size() || rec.atomic_number < 1) {
      row_error(row, "Z is not a positive integer: '" + std::string(cells[0]) + "'");
    }
    rec.symbol = std::string(cells[1]);
    rec.radius_pm = optional_positive(cells[2], row, "radius_pm");
    rec.ionization_energy = optional_positive(cells[3], row, "ionization_energy_au");
    rec.electronegativity = optional_positive(cells[4], row, "electronegativity_pauling");
    rec.polarizability = optional_positive(cells[5], row, "polarizability_au");
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<PropertyRecord> load_properties_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw AnalysisError("cannot open properties file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_properties(buf.str());
}

}  // namespace infoatom
