#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>

#include "config.hpp"

namespace qpswf::cli {

// Each command returns its exit code and throws CliError / qpswf::Error on failure.
int cmd_basis(const RunConfig& cfg, std::ostream& log);
int cmd_verify(const RunConfig& cfg, const std::filesystem::path& manifest, std::ostream& log);
int cmd_concentration(const RunConfig& cfg, const std::optional<std::filesystem::path>& input,
                      bool table, std::ostream& log);
int cmd_extrapolate(const RunConfig& cfg, const std::filesystem::path& observation,
                    const std::filesystem::path& problem, std::ostream& log);

struct QftOptions {
  bool inverse = false;
  std::optional<double> halfwidth;  // of the output axes
  std::optional<std::size_t> count;
};
int cmd_qft(const RunConfig& cfg, const std::filesystem::path& input, const QftOptions& opts,
            std::ostream& log);

// Gauss nodes per axis of the nodal model behind the concentration sweep.
std::size_t concentration_nodes(const RunConfig& cfg);

// Full command line: parses, dispatches and maps errors to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qpswf::cli
