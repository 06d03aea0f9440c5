#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "infoatom/analysis.hpp"

namespace infoatom::cli {

/// Decimal text with 12 significant digits, independent of the C locale.
/// Non-finite values become the empty string.
std::string format_number(double v);

/// The double that format_number(v) denotes.
double round_to_output(double v);

std::optional<double> parse_number(std::string_view text);

/// One CSV record with fields joined by commas. Fields containing a comma,
/// quote or newline are quoted.
std::string csv_line(const std::vector<std::string>& fields);

/// `Z,symbol,S_r,...,mu2` with one row per atom.
std::string measures_csv(const std::vector<MeasureRow>& rows);

/// Inverse of measures_csv. Throws AnalysisError naming the 1-based row.
std::vector<MeasureRow> parse_measures_csv(std::string_view text);

}  // namespace infoatom::cli
