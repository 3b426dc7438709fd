#include "reflow_lens/cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>

#include "reflow_lens/conservation.hpp"
#include "reflow_lens/csv.hpp"
#include "reflow_lens/errors.hpp"
#include "reflow_lens/metrology.hpp"
#include "reflow_lens/recipe.hpp"
#include "reflow_lens/recipe_json.hpp"
#include "reflow_lens/spincoat.hpp"
#include "reflow_lens/svg.hpp"
#include "reflow_lens/table3.hpp"
#include "reflow_lens/wetting.hpp"

namespace reflow::cli {

namespace {

using nlohmann::json;

/// Bad flag value that CLI11 itself cannot detect.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  double angle_deg = kDefaultAngleDeg;
  std::string convention = std::string(to_string(kDefaultConvention));

  std::optional<double> pattern_um;
  std::optional<double> thickness_um;
  double target_d_um = 0.0;

  std::string calib_path;
  std::vector<double> patterns;
  std::string omega_spec;
  std::string svg_path;

  std::string points_path;

  double ssa = 0.0;
  double sls = 0.0;
  double sal = 0.0;

  std::string csv_path;
  double base_z_um = 0.0;

  std::string recipe_path;
};

bool colour_enabled(const std::ostream& err) {
  if (std::getenv("REFLOW_LENS_NO_COLOR") != nullptr) return false;
  return &err == &std::cerr && ::isatty(STDERR_FILENO) != 0;
}

void report_error(std::ostream& err, const std::string& message) {
  if (colour_enabled(err)) {
    err << "\033[31merror:\033[0m " << message << '\n';
  } else {
    err << "error: " << message << '\n';
  }
}

json lens_json(const LensGeometry& lens) {
  return {{"sphere_diameter_um", lens.sphere_diameter},
          {"sag_height_um", lens.sag_height},
          {"contact_angle_deg", lens.contact_angle.degrees()},
          {"contact_radius_um", lens.contact_radius},
          {"volume_um3", lens.volume},
          {"volume_convention", std::string(to_string(lens.convention))}};
}

void add_angle_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--angle-deg", cfg.angle_deg, "Contact angle in degrees")
      ->capture_default_str();
  cmd->add_option("--convention", cfg.convention, "Lens volume convention")
      ->check(CLI::IsMember({"paper-eq2", "sessile-drop"}))
      ->capture_default_str();
}

SpeedRange parse_omega(const std::string& spec) {
  SpeedRange range{};
  const auto first = spec.find(':');
  const auto second = first == std::string::npos ? first : spec.find(':', first + 1);
  if (second == std::string::npos || spec.find(':', second + 1) != std::string::npos) {
    throw UsageError("--omega expects MIN:MAX:STEPS, got '" + spec + "'");
  }
  auto parse = [&](std::string_view text, auto& value) {
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
      throw UsageError("--omega expects MIN:MAX:STEPS, got '" + spec + "'");
    }
  };
  const std::string_view view(spec);
  parse(view.substr(0, first), range.min_rpm);
  parse(view.substr(first + 1, second - first - 1), range.max_rpm);
  parse(view.substr(second + 1), range.steps);
  return range;
}

void write_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

int cmd_forward(const RunConfig& cfg, std::ostream& out) {
  const auto theta = ContactAngle::from_degrees(cfg.angle_deg);
  const auto convention = parse_convention(cfg.convention);
  const ResistPattern pattern{*cfg.pattern_um, *cfg.thickness_um};
  const double diameter = forward_lens_diameter(pattern, theta, convention);
  json doc = {{"pattern_um", pattern.pattern_diameter},
              {"thickness_um", pattern.thickness},
              {"column_volume_um3", column_volume(pattern.pattern_diameter, pattern.thickness)}};
  doc.update(lens_json(make_lens(diameter, theta, convention)));
  write_json(out, doc);
  return kOk;
}

int cmd_inverse(const RunConfig& cfg, std::ostream& out) {
  const auto theta = ContactAngle::from_degrees(cfg.angle_deg);
  const auto convention = parse_convention(cfg.convention);
  json doc = {{"target_d_um", cfg.target_d_um},
              {"contact_angle_deg", theta.degrees()},
              {"volume_convention", std::string(to_string(convention))}};
  if (cfg.pattern_um) {
    doc["pattern_um"] = *cfg.pattern_um;
    doc["thickness_um"] = required_thickness(cfg.target_d_um, *cfg.pattern_um, theta, convention);
  } else {
    doc["thickness_um"] = *cfg.thickness_um;
    doc["pattern_um"] =
        required_pattern_diameter(cfg.target_d_um, *cfg.thickness_um, theta, convention);
  }
  write_json(out, doc);
  return kOk;
}

int cmd_table3(const RunConfig& cfg, std::ostream& out) {
  const auto theta = ContactAngle::from_degrees(cfg.angle_deg);
  const auto convention = parse_convention(cfg.convention);
  json rows = json::array();
  for (const auto& row : reproduce_table3(theta, convention)) {
    const auto& pub = row.published;
    const auto& cmp = row.published_comparison;
    rows.push_back({
        {"pattern_um", pub.pattern_um},
        {"thickness_um", row.thickness_um},
        {"predicted", lens_json(row.predicted)},
        {"published",
         {{"experimental_diameter_um", pub.experimental_diameter_um},
          {"theoretical_diameter_um", pub.theoretical_diameter_um},
          {"experimental_height_um", pub.experimental_height_um},
          {"theoretical_height_um", pub.theoretical_height_um}}},
        {"diameter_error_pct", round_pct(cmp.diameter_error_pct)},
        {"height_error_pct", round_pct(cmp.height_error_pct)},
        {"diameter_error_pct_exact", cmp.diameter_error_pct},
        {"height_error_pct_exact", cmp.height_error_pct},
    });
  }
  write_json(out, {{"contact_angle_deg", theta.degrees()},
                   {"volume_convention", std::string(to_string(convention))},
                   {"rows", std::move(rows)}});
  return kOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const auto theta = ContactAngle::from_degrees(cfg.angle_deg);
  const auto convention = parse_convention(cfg.convention);
  const SpeedRange range = parse_omega(cfg.omega_spec);
  const auto points = csv::load_calibration(cfg.calib_path);
  const SpinModel model = fit_spin_model(points);
  const auto rows = sweep_lens_vs_speed(model, cfg.patterns, theta, convention, range);
  if (!cfg.svg_path.empty()) {
    std::ofstream svg_out(cfg.svg_path, std::ios::binary);
    if (!svg_out) throw FormatError("cannot write '" + cfg.svg_path + "'");
    svg::write_sweep_chart(svg_out, rows);
  }
  csv::write_sweep(out, rows);
  return kOk;
}

int cmd_calibrate(const RunConfig& cfg, std::ostream& out) {
  const auto points = csv::load_calibration(cfg.points_path);
  const SpinModel model = fit_spin_model(points);
  write_json(out, {{"coefficient", model.coefficient},
                   {"exponent", model.exponent},
                   {"rms_log_residual", model.rms_log_residual},
                   {"points", points.size()}});
  return kOk;
}

int cmd_wetting(const RunConfig& cfg, std::ostream& out) {
  const SurfaceEnergies energies{cfg.ssa, cfg.sls, cfg.sal};
  const WettingRegime regime = classify_wetting(energies);
  json doc = {{"regime", std::string(to_string(regime))},
              {"angle_deg", nullptr},
              {"angle_class", nullptr}};
  try {
    const ContactAngle theta = young_contact_angle(energies);
    doc["angle_deg"] = theta.degrees();
    doc["angle_class"] = std::string(to_string(classify_angle(theta)));
  } catch (const NoEquilibriumAngle&) {
    // Spreading, beading, or the exact boundary: no angle to report.
  }
  write_json(out, doc);
  return kOk;
}

int cmd_profile_ra(const RunConfig& cfg, std::ostream& out) {
  const SurfaceProfile profile(csv::load_profile(cfg.csv_path));
  write_json(out, {{"ra_nm", roughness_ra(profile)}, {"samples", profile.size()}});
  return kOk;
}

int cmd_profile_fit(const RunConfig& cfg, std::ostream& out) {
  const SurfaceProfile profile(csv::load_profile(cfg.csv_path));
  json doc = lens_json(fit_sphere_profile(profile, cfg.base_z_um));
  doc["base_plane_z_um"] = cfg.base_z_um;
  doc["samples"] = profile.size();
  write_json(out, doc);
  return kOk;
}

int cmd_recipe_check(const RunConfig& cfg, std::ostream& out) {
  const ValidationReport report = validate_recipe(load_recipe(cfg.recipe_path));
  write_json(out, report_to_json(report));
  return report.error_count() > 0 ? kValidationErrors : kOk;
}

int cmd_recipe_reference(std::ostream& out) {
  write_json(out, recipe_to_json(reference_recipe()));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Design and analysis of thermal-reflow micro-ball lenses", "reflow-lens"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::function<int()> action;

  auto* forward = app.add_subcommand("forward", "Predict the lens from a resist pattern");
  forward->add_option("--pattern-um", cfg.pattern_um, "Resist pattern diameter")->required();
  forward->add_option("--thickness-um", cfg.thickness_um, "Resist thickness")->required();
  add_angle_options(forward, cfg);
  forward->callback([&] { action = [&] { return cmd_forward(cfg, out); }; });

  auto* inverse = app.add_subcommand("inverse", "Solve for the missing design variable");
  inverse->add_option("--target-d-um", cfg.target_d_um, "Target lens diameter")->required();
  auto* inv_pattern = inverse->add_option("--pattern-um", cfg.pattern_um, "Known pattern diameter");
  auto* inv_thick = inverse->add_option("--thickness-um", cfg.thickness_um, "Known thickness");
  inv_pattern->excludes(inv_thick);
  add_angle_options(inverse, cfg);
  inverse->callback([&] {
    if (!cfg.pattern_um && !cfg.thickness_um) {
      throw CLI::ValidationError("inverse needs --pattern-um or --thickness-um");
    }
    action = [&] { return cmd_inverse(cfg, out); };
  });

  auto* table3 = app.add_subcommand("table3", "Reproduce the published lens comparison table");
  add_angle_options(table3, cfg);
  table3->callback([&] { action = [&] { return cmd_table3(cfg, out); }; });

  auto* sweep = app.add_subcommand("sweep", "Lens diameter and sag against spin speed (CSV)");
  sweep->add_option("--calib", cfg.calib_path, "Calibration CSV (spin_rpm,thickness_um)")
      ->required();
  sweep->add_option("--patterns", cfg.patterns, "Comma-separated pattern diameters")
      ->required()
      ->delimiter(',');
  sweep->add_option("--omega", cfg.omega_spec, "Speed grid MIN:MAX:STEPS")->required();
  sweep->add_option("--svg", cfg.svg_path, "Also write an SVG chart here");
  add_angle_options(sweep, cfg);
  sweep->callback([&] { action = [&] { return cmd_sweep(cfg, out); }; });

  auto* calibrate = app.add_subcommand("calibrate", "Fit t = a * omega^b to calibration points");
  calibrate->add_option("--points", cfg.points_path, "Calibration CSV")->required();
  calibrate->callback([&] { action = [&] { return cmd_calibrate(cfg, out); }; });

  auto* wetting = app.add_subcommand("wetting", "Young angle and wetting regime");
  wetting->add_option("--ssa", cfg.ssa, "Solid-air energy (mJ/m^2)")->required();
  wetting->add_option("--sls", cfg.sls, "Liquid-solid energy (mJ/m^2)")->required();
  wetting->add_option("--sal", cfg.sal, "Air-liquid energy (mJ/m^2)")->required();
  wetting->callback([&] { action = [&] { return cmd_wetting(cfg, out); }; });

  auto* profile = app.add_subcommand("profile", "Stylus profile analysis");
  profile->require_subcommand(1);
  auto* ra = profile->add_subcommand("ra", "Arithmetic-average roughness (nm)");
  ra->add_option("--csv", cfg.csv_path, "Profile CSV (x_um,z_um)")->required();
  ra->callback([&] { action = [&] { return cmd_profile_ra(cfg, out); }; });
  auto* fit = profile->add_subcommand("fit", "Fit a sphere to the lens top");
  fit->add_option("--csv", cfg.csv_path, "Profile CSV (x_um,z_um)")->required();
  fit->add_option("--base-z-um", cfg.base_z_um, "Substrate plane height")->capture_default_str();
  fit->callback([&] { action = [&] { return cmd_profile_fit(cfg, out); }; });

  auto* recipe = app.add_subcommand("recipe", "Process recipe tools");
  recipe->require_subcommand(1);
  auto* check = recipe->add_subcommand("check", "Validate a recipe file");
  check->add_option("file", cfg.recipe_path, "Recipe JSON")->required();
  check->callback([&] { action = [&] { return cmd_recipe_check(cfg, out); }; });
  auto* reference = recipe->add_subcommand("reference", "Print the reference recipe as JSON");
  reference->callback([&] { action = [&] { return cmd_recipe_reference(out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, e.what());
    err << app.help();
    return kUsageOrIo;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    report_error(err, e.what());
    err << app.help();
    return kUsageOrIo;
  } catch (const FormatError& e) {
    report_error(err, e.what());
    return kUsageOrIo;
  } catch (const DomainError& e) {
    report_error(err, e.what());
    return kDomain;
  }
}

}  // namespace reflow::cli
