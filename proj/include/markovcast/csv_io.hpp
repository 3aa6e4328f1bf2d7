#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "markovcast/eval.hpp"
#include "markovcast/multiscale.hpp"
#include "markovcast/series.hpp"

namespace markovcast {

/// Reads one value column of a delimited file as a dense price series.
///
/// `column` is a header name, a 0-based column number, or empty for the
/// last column. A header row is detected when the selected field of the
/// first row is not numeric. Errors name the 1-based line number.
PriceSeries ingest_csv(const std::filesystem::path& path, std::string_view column = {},
                       char delimiter = ',');

/// label,weight rows; header optional.
WeightSet read_weights_csv(const std::filesystem::path& path, char delimiter = ',');

/// 12 significant digits, locale independent.
std::string format_number(double value);

/// index,lower,upper,trend (only the computed scenarios appear).
void write_forecast_csv(std::ostream& out, const ForecastResult& result);

/// index,<one column per learning length>,mean,std. Index 0 is the anchor.
void write_ensemble_csv(std::ostream& out, const EnsembleResult& ensemble);

/// Generic column writer: first column is the row number.
void write_columns_csv(std::ostream& out, const std::vector<std::string>& headers,
                       const std::vector<std::vector<double>>& columns);

} // namespace markovcast
