#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>

#include <nlohmann/json.hpp>

namespace qpswf::cli {

struct RunConfig {
  double T = 2.0;
  double W = 2.0;
  double grid_halfwidth = 0.0;  // 0 means 3T
  std::size_t grid_n = 257;
  std::size_t quad_n = 256;
  std::size_t basis_count = 36;
  double tol = 1e-6;
  std::uint64_t seed = 0;
  std::filesystem::path output_dir = ".";

  double halfwidth() const { return grid_halfwidth > 0.0 ? grid_halfwidth : 3.0 * T; }
};

// Reads a JSON object; unknown keys and wrongly typed values are rejected.
RunConfig config_from_json(const nlohmann::json& j);
RunConfig load_config(const std::filesystem::path& path);
nlohmann::json config_to_json(const RunConfig& c);

// Throws CliError (exit 2) naming the violated invariant.
void validate(const RunConfig& c);

nlohmann::json read_json_file(const std::filesystem::path& path, const char* what);

}  // namespace qpswf::cli
