#pragma once

#include <stdexcept>
#include <string>

namespace diracbox {

enum class ErrorKind {
    NoSignChange,
    MaxIterationsExceeded,
    ConvergenceFailure,
    InvalidBracket,
    NotConverged,
    InsufficientSpectrum,
    InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Numerical failure raised by the solvers. The message carries the
/// diagnostics (last iterate, residuals, offending quantum numbers).
class SolverError : public std::runtime_error {
public:
    SolverError(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace diracbox
