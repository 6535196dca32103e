#include "duffing/errors.hpp"

namespace duffing {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidParameter:   return "InvalidParameter";
    case ErrorKind::DegenerateScaling:  return "DegenerateScaling";
    case ErrorKind::WrongSignRegime:    return "WrongSignRegime";
    case ErrorKind::NonHermitianInput:  return "NonHermitianInput";
    case ErrorKind::RecurrenceOverflow: return "RecurrenceOverflow";
    case ErrorKind::DimensionMismatch:  return "DimensionMismatch";
    case ErrorKind::TrajectoryEscaped:  return "TrajectoryEscaped";
    case ErrorKind::StepUnderflow:      return "StepUnderflow";
    case ErrorKind::NoDissipation:      return "NoDissipation";
    case ErrorKind::SolverStagnation:   return "SolverStagnation";
    case ErrorKind::NoMetastableStates: return "NoMetastableStates";
    case ErrorKind::BranchVanishes:     return "BranchVanishes";
    case ErrorKind::ConfigError:        return "ConfigError";
    }
    return "Unknown";
}

} // namespace duffing
