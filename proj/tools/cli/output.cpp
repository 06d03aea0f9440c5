#include "output.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

#include "infoatom/error.hpp"

namespace infoatom::cli {

std::string format_number(double v) {
  if (!std::isfinite(v)) return {};
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

double round_to_output(double v) {
  if (!std::isfinite(v)) return v;
  return *parse_number(format_number(v));
}

std::optional<double> parse_number(std::string_view text) {
  if (text.empty()) return std::nullopt;
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) return std::nullopt;
  return v;
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\n") == std::string::npos) {
      out += f;
      continue;
    }
    out += '"';
    for (char c : f) {
      if (c == '"') out += '"';
      out += c;
    }
    out += '"';
  }
  out += '\n';
  return out;
}

std::string measures_csv(const std::vector<MeasureRow>& rows) {
  std::vector<std::string> header = {"Z", "symbol"};
  for (std::string_view m : kMeasureNames) header.emplace_back(m);
  std::string out = csv_line(header);
  for (const MeasureRow& row : rows) {
    std::vector<std::string> fields = {std::to_string(row.atomic_number), row.symbol};
    for (std::string_view m : kMeasureNames) fields.push_back(format_number(row.measures.get(m)));
    out += csv_line(fields);
  }
  return out;
}

std::vector<MeasureRow> parse_measures_csv(std::string_view text) {
  std::vector<MeasureRow> rows;
  std::vector<std::string> columns;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      cells.emplace_back(line.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    const std::string where = "measures table row " + std::to_string(line_no) + ": ";
    if (columns.empty()) {
      if (cells.size() < 2 || cells[0] != "Z" || cells[1] != "symbol") {
        throw AnalysisError(where + "expected a header starting with Z,symbol");
      }
      for (std::size_t i = 2; i < cells.size(); ++i) {
        if (!is_measure_name(cells[i])) throw AnalysisError(where + "unknown column '" + cells[i] + "'");
      }
      columns = cells;
      continue;
    }
    if (cells.size() != columns.size()) {
      throw AnalysisError(where + "expected " + std::to_string(columns.size()) + " columns, found " +
                          std::to_string(cells.size()));
    }
    MeasureRow row;
    const auto z = std::from_chars(cells[0].data(), cells[0].data() + cells[0].size(), row.atomic_number);
    if (z.ec != std::errc() || z.ptr != cells[0].data() + cells[0].size()) {
      throw AnalysisError(where + "Z is not an integer");
    }
    row.symbol = cells[1];
    for (std::size_t i = 2; i < cells.size(); ++i) {
      const auto v = parse_number(cells[i]);
      if (!v) throw AnalysisError(where + columns[i] + " is not a number");
      row.measures.set(columns[i], *v);
    }
    rows.push_back(std::move(row));
  }
  if (columns.empty()) throw AnalysisError("measures table is empty");
  return rows;
}

}  // namespace infoatom::cli
