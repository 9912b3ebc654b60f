#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "alphc/corpus.hpp"
#include "alphc/metrics.hpp"

namespace alphc {

/// Quote a CSV field when it contains a comma, quote or newline.
std::string csv_field(std::string_view value);
/// Fixed-point with six decimals, the ratio format of every CSV here.
std::string csv_ratio(double value);

// Every writer emits a schema comment line first ("# alphc-<name> v1"),
// then a header row. Bit quantities are exact integers; ratios print with
// six decimals.
void write_analyze_csv(std::ostream& out, std::span<const AnalysisRow> rows);
void write_books_csv(std::ostream& out, const CorpusResult& result);
void write_win_fractions_csv(std::ostream& out, const CorpusResult& result);
void write_rank_curves_csv(std::ostream& out, const CorpusResult& result);

} // namespace alphc
