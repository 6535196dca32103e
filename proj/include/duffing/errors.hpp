// Exception type shared by every duffing module

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace duffing {

enum class ErrorKind {
    InvalidParameter,
    DegenerateScaling,
    WrongSignRegime,
    NonHermitianInput,
    RecurrenceOverflow,
    DimensionMismatch,
    TrajectoryEscaped,
    StepUnderflow,
    NoDissipation,
    SolverStagnation,
    NoMetastableStates,
    BranchVanishes,
    ConfigError,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace duffing
