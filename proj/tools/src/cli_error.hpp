#pragma once

#include <stdexcept>
#include <string>

namespace qpswf::cli {

enum ExitCode : int {
  kOk = 0,
  kConfigError = 2,
  kEigensolverError = 3,
  kResidualViolation = 4,
  kNotConverged = 5,
};

// Carries the exit code and the check name printed as `ERROR <code> <check>: <detail>`.
class CliError : public std::runtime_error {
 public:
  CliError(int code, std::string check, const std::string& detail)
      : std::runtime_error(detail), code_(code), check_(std::move(check)) {}

  int code() const { return code_; }
  const std::string& check() const { return check_; }

 private:
  int code_;
  std::string check_;
};

}  // namespace qpswf::cli
