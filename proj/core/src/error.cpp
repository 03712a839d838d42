#include "qpswf/error.hpp"

namespace qpswf {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::GridMismatch: return "GridMismatch";
    case ErrorKind::RegionOutOfGrid: return "RegionOutOfGrid";
    case ErrorKind::ZeroSignal: return "ZeroSignal";
    case ErrorKind::NonUniformGrid: return "NonUniformGrid";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::EigenvalueTooSmall: return "EigenvalueTooSmall";
    case ErrorKind::NonUnitCoefficient: return "NonUnitCoefficient";
    case ErrorKind::WindowTooSmall: return "WindowTooSmall";
    case ErrorKind::XiOutOfRange: return "XiOutOfRange";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::NoAdmissibleIndex: return "NoAdmissibleIndex";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

}  // namespace qpswf
