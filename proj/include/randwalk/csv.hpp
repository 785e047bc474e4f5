#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "randwalk/series.hpp"

namespace randwalk {

/// Parse "YYYY-MM" or "YYYY-MM-DD" (day ignored). Throws FormatError.
[[nodiscard]] YearMonth parse_month(std::string_view text);

/// "YYYY-MM"
[[nodiscard]] std::string format_month(YearMonth ym);

/**
 * Read the wide CSV schema: a header "date,<index>,<index>,..." followed by
 * rows with strictly increasing dates. Blank cells are gaps (recorded, not
 * imputed). Produces one PriceSeries per index column.
 *
 * Format violations (bad date, non-monotone dates, non-positive price,
 * duplicate column) raise FormatError with row/column coordinates; a column
 * with fewer than three usable values raises InvalidInputError.
 */
[[nodiscard]] std::vector<PriceSeries> ingest_csv(std::istream& in);

/// Write the same schema over the union of all months. Prices use shortest
/// round-trip formatting, so ingest_csv(write_csv(s)) recovers s exactly.
void write_csv(std::ostream& out, std::span<const PriceSeries> series);

}  // namespace randwalk
