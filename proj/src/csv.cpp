#include "randwalk/csv.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>

#include "randwalk/errors.hpp"

namespace randwalk {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_csv_line(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            cells.push_back(trim(line.substr(start)));
            break;
        }
        cells.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return cells;
}

bool iequals(std::string_view a, std::string_view b) {
    return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](char x, char y) {
        return std::tolower(static_cast<unsigned char>(x)) ==
               std::tolower(static_cast<unsigned char>(y));
    });
}

double parse_price(std::string_view cell, std::size_t row, const std::string& column) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
        throw FormatError("row " + std::to_string(row) + ", column '" + column +
                          "': unparsable price '" + std::string(cell) + "'");
    }
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw FormatError("row " + std::to_string(row) + ", column '" + column +
                          "': non-positive price " + std::string(cell));
    }
    return value;
}

}  // namespace

YearMonth parse_month(std::string_view text) {
    const std::string s{trim(text)};
    int year = 0;
    unsigned month = 0;
    unsigned day = 0;
    const int fields = std::sscanf(s.c_str(), "%d-%u-%u", &year, &month, &day);
    if (fields < 2 || month < 1 || month > 12) {
        throw FormatError("expected YYYY-MM or YYYY-MM-DD date, got '" + s + "'");
    }
    return YearMonth{std::chrono::year(year), std::chrono::month(month)};
}

std::string format_month(YearMonth ym) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u", static_cast<int>(ym.year()),
                  static_cast<unsigned>(ym.month()));
    return buf;
}

std::vector<PriceSeries> ingest_csv(std::istream& in) {
    std::string line;
    std::size_t row = 0;

    if (!std::getline(in, line)) {
        throw FormatError("empty input: expected a header row");
    }
    ++row;
    if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) {
        line.erase(0, 3);  // UTF-8 BOM
    }
    const auto header = split_csv_line(line);
    if (header.size() < 2 || !iequals(header[0], "date")) {
        throw FormatError("header must be 'date,<index>[,<index>...]'");
    }
    std::vector<std::string> labels;
    for (std::size_t c = 1; c < header.size(); ++c) {
        if (header[c].empty()) {
            throw FormatError("header column " + std::to_string(c + 1) + " has no name");
        }
        std::string label{header[c]};
        if (std::find(labels.begin(), labels.end(), label) != labels.end()) {
            throw FormatError("duplicate index column '" + label + "'");
        }
        labels.push_back(std::move(label));
    }

    std::vector<std::vector<PricePoint>> columns(labels.size());
    bool have_prev = false;
    int prev_index = 0;
    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty()) {
            continue;
        }
        const auto cells = split_csv_line(line);
        if (cells.size() != labels.size() + 1) {
            throw FormatError("row " + std::to_string(row) + ": expected " +
                              std::to_string(labels.size() + 1) + " cells, got " +
                              std::to_string(cells.size()));
        }
        YearMonth ym;
        try {
            ym = parse_month(cells[0]);
        } catch (const FormatError& e) {
            throw FormatError("row " + std::to_string(row) + ": " + e.what());
        }
        const int idx = month_index(ym);
        if (have_prev && idx <= prev_index) {
            throw FormatError("row " + std::to_string(row) + ": date " + format_month(ym) +
                              " does not increase over the previous row");
        }
        prev_index = idx;
        have_prev = true;
        for (std::size_t c = 0; c < labels.size(); ++c) {
            const std::string_view cell = cells[c + 1];
            if (cell.empty()) {
                continue;  // gap: recorded by PriceSeries, never imputed
            }
            columns[c].push_back({ym, parse_price(cell, row, labels[c])});
        }
    }

    std::vector<PriceSeries> out;
    out.reserve(labels.size());
    for (std::size_t c = 0; c < labels.size(); ++c) {
        if (columns[c].size() < 3) {
            throw InvalidInputError("column '" + labels[c] + "' has " +
                                    std::to_string(columns[c].size()) +
                                    " usable rows; need at least 3");
        }
        out.emplace_back(labels[c], std::move(columns[c]));
    }
    return out;
}

void write_csv(std::ostream& out, std::span<const PriceSeries> series) {
    std::vector<int> months;  // sorted union over all series
    for (const auto& s : series) {
        for (const auto& pt : s.points()) months.push_back(month_index(pt.month));
    }
    std::sort(months.begin(), months.end());
    months.erase(std::unique(months.begin(), months.end()), months.end());

    std::vector<std::map<int, double>> by_month(series.size());
    for (std::size_t c = 0; c < series.size(); ++c) {
        for (const auto& pt : series[c].points()) {
            by_month[c][month_index(pt.month)] = pt.close;
        }
    }

    out << "date";
    for (const auto& s : series) out << ',' << s.label();
    out << '\n';
    char buf[32];
    for (int m : months) {
        const YearMonth ym{std::chrono::year(m / 12), std::chrono::month(m % 12 + 1)};
        out << format_month(ym);
        for (std::size_t c = 0; c < series.size(); ++c) {
            out << ',';
            const auto it = by_month[c].find(m);
            if (it != by_month[c].end()) {
                const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), it->second);
                out.write(buf, ptr - buf);
            }
        }
        out << '\n';
    }
}

}  // namespace randwalk
