#include "config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <string>

#include "cli_error.hpp"

namespace qpswf::cli {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& check, const std::string& detail) {
  throw CliError(kConfigError, check, detail);
}

double get_number(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_number()) bad("config_type", std::string(key) + " must be a number");
  return v.get<double>();
}

std::uint64_t get_unsigned(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_number_unsigned()) {
    bad("config_type", std::string(key) + " must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

}  // namespace

RunConfig config_from_json(const json& j) {
  if (!j.is_object()) bad("config_type", "configuration must be a JSON object");
  static const std::set<std::string> known = {"T",      "W",           "grid_halfwidth", "grid_n",
                                              "quad_n", "basis_count", "tol",            "seed",
                                              "output_dir"};
  for (const auto& item : j.items()) {
    if (!known.count(item.key())) bad("config_unknown_key", "unknown key '" + item.key() + "'");
  }
  RunConfig c;
  if (j.contains("T")) c.T = get_number(j, "T");
  if (j.contains("W")) c.W = get_number(j, "W");
  if (j.contains("grid_halfwidth")) c.grid_halfwidth = get_number(j, "grid_halfwidth");
  if (j.contains("grid_n")) c.grid_n = get_unsigned(j, "grid_n");
  if (j.contains("quad_n")) c.quad_n = get_unsigned(j, "quad_n");
  if (j.contains("basis_count")) c.basis_count = get_unsigned(j, "basis_count");
  if (j.contains("tol")) c.tol = get_number(j, "tol");
  if (j.contains("seed")) c.seed = get_unsigned(j, "seed");
  if (j.contains("output_dir")) {
    if (!j["output_dir"].is_string()) bad("config_type", "output_dir must be a string");
    c.output_dir = j["output_dir"].get<std::string>();
  }
  return c;
}

json read_json_file(const std::filesystem::path& path, const char* what) {
  std::ifstream in(path);
  if (!in) bad("missing_file", std::string("cannot open ") + what + " " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    bad("malformed_json", path.string() + ": " + e.what());
  }
}

RunConfig load_config(const std::filesystem::path& path) {
  return config_from_json(read_json_file(path, "config"));
}

json config_to_json(const RunConfig& c) {
  return {{"T", c.T},
          {"W", c.W},
          {"grid_halfwidth", c.halfwidth()},
          {"grid_n", c.grid_n},
          {"quad_n", c.quad_n},
          {"basis_count", c.basis_count},
          {"tol", c.tol},
          {"seed", c.seed}};
}

void validate(const RunConfig& c) {
  if (!(c.T > 0.0) || !std::isfinite(c.T)) bad("T_positive", "T must be positive and finite");
  if (!(c.W > 0.0) || !std::isfinite(c.W)) bad("W_positive", "W must be positive and finite");
  if (c.grid_halfwidth != 0.0 && !(c.grid_halfwidth >= 3.0 * c.T)) {
    bad("grid_halfwidth_min", "grid_halfwidth must be at least 3T");
  }
  if (c.grid_n < 3 || c.grid_n % 2 == 0) bad("grid_n_odd", "grid_n must be odd and at least 3");
  if (c.basis_count < 1) bad("basis_count_min", "basis_count must be at least 1");
  if (c.quad_n < 2 * c.basis_count) bad("quad_n_min", "quad_n must be at least 2 * basis_count");
  if (!(c.tol > 0.0)) bad("tol_positive", "tol must be positive");
}

}  // namespace qpswf::cli
