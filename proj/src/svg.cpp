#include "reflow_lens/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <map>
#include <ostream>
#include <string>

namespace reflow::svg {

namespace {

constexpr double kWidth = 640.0;
constexpr double kPanelHeight = 260.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 110.0;
constexpr double kMarginTop = 30.0;
constexpr double kMarginBottom = 50.0;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string num(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", v);
  return buffer;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  // Degenerate ranges get a unit of padding so the mapping stays finite.
  double span() const { return hi > lo ? hi - lo : 1.0; }
};

using Curves = std::map<double, std::vector<std::pair<double, double>>>;

void panel(std::ostream& out, const Curves& curves, double top, const char* y_label,
           const Range& xr) {
  Range yr;
  for (const auto& [d, pts] : curves) {
    for (const auto& p : pts) yr.add(p.second);
  }
  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kPanelHeight - kMarginTop - kMarginBottom;
  const double x0 = kMarginLeft;
  const double y0 = top + kMarginTop + plot_h;
  auto px = [&](double x) { return x0 + (x - xr.lo) / xr.span() * plot_w; };
  auto py = [&](double y) { return y0 - (y - yr.lo) / yr.span() * plot_h; };

  out << "<rect x=\"" << num(x0) << "\" y=\"" << num(top + kMarginTop) << "\" width=\""
      << num(plot_w) << "\" height=\"" << num(plot_h)
      << "\" fill=\"none\" stroke=\"#444\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = xr.lo + xr.span() * i / 4.0;
    const double yv = yr.lo + yr.span() * i / 4.0;
    out << "<text x=\"" << num(px(xv)) << "\" y=\"" << num(y0 + 16)
        << "\" text-anchor=\"middle\" font-size=\"11\">" << num(xv) << "</text>\n";
    out << "<text x=\"" << num(x0 - 6) << "\" y=\"" << num(py(yv) + 4)
        << "\" text-anchor=\"end\" font-size=\"11\">" << num(yv) << "</text>\n";
  }
  out << "<text x=\"" << num(x0 + plot_w / 2) << "\" y=\"" << num(y0 + 36)
      << "\" text-anchor=\"middle\" font-size=\"12\">spin speed (rpm)</text>\n";
  out << "<text x=\"16\" y=\"" << num(top + kMarginTop + plot_h / 2)
      << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 16 "
      << num(top + kMarginTop + plot_h / 2) << ")\">" << y_label << "</text>\n";

  std::size_t colour = 0;
  for (const auto& [d, pts] : curves) {
    const char* stroke = kPalette[colour++ % std::size(kPalette)];
    out << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      out << (i ? " " : "") << num(px(pts[i].first)) << ',' << num(py(pts[i].second));
    }
    out << "\"/>\n";
    const auto& last = pts.back();
    out << "<text x=\"" << num(px(last.first) + 6) << "\" y=\"" << num(py(last.second) + 4)
        << "\" font-size=\"11\" fill=\"" << stroke << "\">d = " << num(d) << " um</text>\n";
  }
}

}  // namespace

void write_sweep_chart(std::ostream& out, const std::vector<SweepRow>& rows) {
  Curves diameter;
  Curves height;
  Range xr;
  for (const auto& r : rows) {
    diameter[r.pattern_diameter].emplace_back(r.spin_rpm, r.lens_diameter);
    height[r.pattern_diameter].emplace_back(r.spin_rpm, r.sag_height);
    xr.add(r.spin_rpm);
  }
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth) << "\" height=\""
      << num(2 * kPanelHeight) << "\" font-family=\"sans-serif\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!rows.empty()) {
    panel(out, diameter, 0.0, "lens diameter (um)", xr);
    panel(out, height, kPanelHeight, "sag height (um)", xr);
  }
  out << "</svg>\n";
}

}  // namespace reflow::svg
