#include "reflow_lens/recipe_json.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "reflow_lens/errors.hpp"

namespace reflow {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) throw FormatError(where + ": unknown key '" + key + "'");
  }
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) throw FormatError(where + " must be a number");
  return v.get<double>();
}

std::optional<double> optional_number(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
  return number(obj.at(key), where + "." + key);
}

ProcessStep step_from_json(const json& obj, std::size_t index) {
  const std::string where = "steps[" + std::to_string(index) + "]";
  if (!obj.is_object()) throw FormatError(where + " must be an object");
  reject_unknown_keys(obj,
                      {"kind", "temperature_c", "duration_min", "ramp_from_c", "spin_segments"},
                      where);
  if (!obj.contains("kind") || !obj.at("kind").is_string()) {
    throw FormatError(where + ".kind must be a string");
  }
  ProcessStep step{parse_step_kind(obj.at("kind").get<std::string>()),
                   optional_number(obj, "temperature_c", where),
                   optional_number(obj, "duration_min", where),
                   {},
                   optional_number(obj, "ramp_from_c", where)};
  if (obj.contains("spin_segments")) {
    const json& segs = obj.at("spin_segments");
    if (!segs.is_array()) throw FormatError(where + ".spin_segments must be an array");
    for (std::size_t j = 0; j < segs.size(); ++j) {
      const json& seg = segs[j];
      const std::string seg_where = where + ".spin_segments[" + std::to_string(j) + "]";
      if (!seg.is_array() || seg.size() != 2) {
        throw FormatError(seg_where + " must be [rpm, seconds]");
      }
      step.spin_segments.push_back({number(seg[0], seg_where), number(seg[1], seg_where)});
    }
  }
  return step;
}

}  // namespace

json recipe_to_json(const ProcessRecipe& recipe) {
  json steps = json::array();
  for (const auto& s : recipe.steps) {
    json obj = {{"kind", std::string(to_string(s.kind))}};
    if (s.temperature_c) obj["temperature_c"] = *s.temperature_c;
    if (s.duration_min) obj["duration_min"] = *s.duration_min;
    if (s.ramp_from_c) obj["ramp_from_c"] = *s.ramp_from_c;
    if (!s.spin_segments.empty()) {
      json segs = json::array();
      for (const auto& seg : s.spin_segments) segs.push_back({seg.rpm, seg.seconds});
      obj["spin_segments"] = std::move(segs);
    }
    steps.push_back(std::move(obj));
  }
  json doc = {{"name", recipe.name}, {"steps", std::move(steps)}};
  if (recipe.max_ramp_c_per_min) doc["max_ramp_c_per_min"] = *recipe.max_ramp_c_per_min;
  return doc;
}

ProcessRecipe recipe_from_json(const json& doc) {
  if (!doc.is_object()) throw FormatError("recipe must be a JSON object");
  reject_unknown_keys(doc, {"name", "max_ramp_c_per_min", "steps"}, "recipe");
  if (!doc.contains("name") || !doc.at("name").is_string()) {
    throw FormatError("recipe.name must be a string");
  }
  if (!doc.contains("steps") || !doc.at("steps").is_array()) {
    throw FormatError("recipe.steps must be an array");
  }
  ProcessRecipe recipe;
  recipe.name = doc.at("name").get<std::string>();
  recipe.max_ramp_c_per_min = optional_number(doc, "max_ramp_c_per_min", "recipe");
  const json& steps = doc.at("steps");
  for (std::size_t i = 0; i < steps.size(); ++i) recipe.steps.push_back(step_from_json(steps[i], i));
  check_structure(recipe);
  return recipe;
}

ProcessRecipe parse_recipe(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("recipe is not valid JSON: ") + e.what());
  }
  return recipe_from_json(doc);
}

ProcessRecipe load_recipe(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_recipe(buffer.str());
}

json report_to_json(const ValidationReport& report) {
  json findings = json::array();
  for (const auto& f : report.findings) {
    findings.push_back({{"severity", std::string(to_string(f.severity))},
                        {"rule_id", f.rule_id},
                        {"step_index", f.step_index},
                        {"message", f.message}});
  }
  return {{"passed", report.passed()},
          {"errors", report.error_count()},
          {"warnings", report.warning_count()},
          {"findings", std::move(findings)}};
}

}  // namespace reflow
