#include "bvlift/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace bvlift {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(const std::string& path, const CsvTable& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_csv: cannot open " + path);
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) out << ',';
    out << table.header[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << format_double(row[i]);
    }
    out << '\n';
  }
}

namespace {

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                         "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

}  // namespace

void write_svg_logx(const std::string& path, const std::string& title,
                    const std::vector<double>& x,
                    const std::vector<SvgSeries>& series) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_svg_logx: cannot open " + path);
  const double W = 640, H = 420, ml = 60, mr = 160, mt = 40, mb = 40;
  double xlo = 1e300, xhi = -1e300, ylo = 1e300, yhi = -1e300;
  for (double v : x) {
    if (!(v > 0.0)) continue;
    xlo = std::min(xlo, std::log10(v));
    xhi = std::max(xhi, std::log10(v));
  }
  for (const auto& s : series)
    for (double v : s.y) {
      if (!std::isfinite(v)) continue;
      ylo = std::min(ylo, v);
      yhi = std::max(yhi, v);
    }
  if (xhi <= xlo) xhi = xlo + 1.0;
  if (yhi <= ylo) yhi = ylo + 1.0;
  const double pad = 0.05 * (yhi - ylo);
  ylo -= pad;
  yhi += pad;
  auto px = [&](double v) {
    return ml + (std::log10(v) - xlo) / (xhi - xlo) * (W - ml - mr);
  };
  auto py = [&](double v) { return H - mb - (v - ylo) / (yhi - ylo) * (H - mt - mb); };
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
      << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  out << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"15\">" << title << "</text>\n";
  out << "<line x1=\"" << ml << "\" y1=\"" << H - mb << "\" x2=\"" << W - mr
      << "\" y2=\"" << H - mb << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml
      << "\" y2=\"" << H - mb << "\" stroke=\"black\"/>\n";
  // axis labels: x ticks at the data points, y ticks at 5 levels
  for (double v : x) {
    if (!(v > 0.0)) continue;
    out << "<text x=\"" << px(v) << "\" y=\"" << H - mb + 16
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"10\">"
        << v << "</text>\n";
  }
  for (int i = 0; i <= 4; ++i) {
    const double v = ylo + (yhi - ylo) * i / 4;
    out << "<text x=\"" << ml - 6 << "\" y=\"" << py(v) + 4
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">"
        << format_double(v).substr(0, 9) << "</text>\n";
  }
  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kColors[s % 8];
    out << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < x.size() && i < series[s].y.size(); ++i) {
      if (!(x[i] > 0.0) || !std::isfinite(series[s].y[i])) continue;
      out << px(x[i]) << ',' << py(series[s].y[i]) << ' ';
    }
    out << "\"/>\n";
    out << "<text x=\"" << W - mr + 10 << "\" y=\"" << mt + 16 + 16 * s
        << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" << color
        << "\">" << series[s].label << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace bvlift
