#pragma once

// Plain comma-separated files: header row, one record per line, LF line
// endings on output, LF or CRLF accepted on input. Numbers are written with
// four fixed decimals.

#include <iosfwd>
#include <string>
#include <vector>

#include "reflow_lens/metrology.hpp"
#include "reflow_lens/spincoat.hpp"

namespace reflow::csv {

inline constexpr const char* kCalibrationHeader = "spin_rpm,thickness_um";
inline constexpr const char* kProfileHeader = "x_um,z_um";
inline constexpr const char* kSweepHeader =
    "spin_rpm,pattern_um,thickness_um,lens_diameter_um,sag_height_um";

/// Reads a table of numbers whose header must equal `header` exactly.
/// Throws FormatError naming the line on any malformed record.
std::vector<std::vector<double>> read_table(std::istream& in, const std::string& header);

std::vector<CalibrationPoint> read_calibration(std::istream& in);
std::vector<ProfileSample> read_profile(std::istream& in);
std::vector<SweepRow> read_sweep(std::istream& in);

void write_calibration(std::ostream& out, const std::vector<CalibrationPoint>& points);
void write_profile(std::ostream& out, const std::vector<ProfileSample>& samples);
void write_sweep(std::ostream& out, const std::vector<SweepRow>& rows);

/// Fixed four-decimal formatting shared by the writers.
std::string format_number(double value);

/// Opens and reads a file with one of the readers above; FormatError on IO failure.
std::vector<CalibrationPoint> load_calibration(const std::string& path);
std::vector<ProfileSample> load_profile(const std::string& path);

}  // namespace reflow::csv
