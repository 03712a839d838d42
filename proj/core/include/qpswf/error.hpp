#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qpswf {

enum class ErrorKind {
  GridMismatch,
  RegionOutOfGrid,
  ZeroSignal,
  NonUniformGrid,
  BadParameters,
  ConvergenceFailure,
  EigenvalueTooSmall,
  NonUnitCoefficient,
  WindowTooSmall,
  XiOutOfRange,
  BadIndex,
  NoAdmissibleIndex,
  LengthMismatch,
  MalformedInput,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qpswf
