#include "reflow_lens/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

#include "reflow_lens/errors.hpp"

namespace reflow::csv {

namespace {

void strip_line_end(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

double parse_field(std::string_view field, std::size_t line_no) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (field.empty() || ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw FormatError("line " + std::to_string(line_no) + ": '" + std::string(field) +
                      "' is not a number");
  }
  return value;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return in;
}

}  // namespace

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.4f", value);
  std::string text(buffer);
  if (text == "-0.0000") text = "0.0000";
  return text;
}

std::vector<std::vector<double>> read_table(std::istream& in, const std::string& header) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("empty file; expected header '" + header + "'");
  strip_line_end(line);
  if (line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
  if (line != header) {
    throw FormatError("unexpected header '" + line + "'; expected '" + header + "'");
  }
  const std::size_t columns =
      static_cast<std::size_t>(std::count(header.begin(), header.end(), ',')) + 1;

  std::vector<std::vector<double>> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    strip_line_end(line);
    if (line.empty()) continue;
    std::vector<double> row;
    std::string_view rest(line);
    while (true) {
      const auto comma = rest.find(',');
      row.push_back(parse_field(rest.substr(0, comma), line_no));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (row.size() != columns) {
      throw FormatError("line " + std::to_string(line_no) + ": expected " +
                        std::to_string(columns) + " fields, got " + std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<CalibrationPoint> read_calibration(std::istream& in) {
  std::vector<CalibrationPoint> points;
  for (const auto& r : read_table(in, kCalibrationHeader)) points.push_back({r[0], r[1]});
  return points;
}

std::vector<ProfileSample> read_profile(std::istream& in) {
  std::vector<ProfileSample> samples;
  for (const auto& r : read_table(in, kProfileHeader)) samples.push_back({r[0], r[1]});
  return samples;
}

std::vector<SweepRow> read_sweep(std::istream& in) {
  std::vector<SweepRow> rows;
  for (const auto& r : read_table(in, kSweepHeader)) rows.push_back({r[0], r[1], r[2], r[3], r[4]});
  return rows;
}

void write_calibration(std::ostream& out, const std::vector<CalibrationPoint>& points) {
  out << kCalibrationHeader << '\n';
  for (const auto& p : points) {
    out << format_number(p.spin_rpm) << ',' << format_number(p.thickness_um) << '\n';
  }
}

void write_profile(std::ostream& out, const std::vector<ProfileSample>& samples) {
  out << kProfileHeader << '\n';
  for (const auto& s : samples) {
    out << format_number(s.x_um) << ',' << format_number(s.z_um) << '\n';
  }
}

void write_sweep(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepHeader << '\n';
  for (const auto& r : rows) {
    out << format_number(r.spin_rpm) << ',' << format_number(r.pattern_diameter) << ','
        << format_number(r.thickness) << ',' << format_number(r.lens_diameter) << ','
        << format_number(r.sag_height) << '\n';
  }
}

std::vector<CalibrationPoint> load_calibration(const std::string& path) {
  auto in = open(path);
  return read_calibration(in);
}

std::vector<ProfileSample> load_profile(const std::string& path) {
  auto in = open(path);
  return read_profile(in);
}

}  // namespace reflow::csv
