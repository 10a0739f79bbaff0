#pragma once

#include <string>
#include <vector>

namespace bvlift {

/// Formats with 17 significant digits, locale-independent.
std::string format_double(double v);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Deterministic CSV: header row then one comma-separated line per row.
void write_csv(const std::string& path, const CsvTable& table);

struct SvgSeries {
  std::string label;
  std::vector<double> y;
};

/// Minimal hand-emitted line chart, log-scaled x axis.
void write_svg_logx(const std::string& path, const std::string& title,
                    const std::vector<double>& x,
                    const std::vector<SvgSeries>& series);

}  // namespace bvlift
