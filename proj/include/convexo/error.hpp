#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace convexo {

enum class ErrorKind {
    TupleLengthMismatch,
    NotSquare,
    NotHermitian,
    NotUnitary,
    ShapeMismatch,
    SingularPencil,
    ZeroDirection,
    DependentInput,
    SpanViolation,
    NotConvexotonic,
    DomainBreach,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Exception raised by every numerical entry point. `value()` carries the
/// offending residual or condition estimate when one is available, NaN otherwise.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message,
          double value = std::numeric_limits<double>::quiet_NaN())
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind),
          value_(value) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }
    [[nodiscard]] double value() const noexcept { return value_; }
    [[nodiscard]] bool has_value() const noexcept { return !std::isnan(value_); }

private:
    ErrorKind kind_;
    double value_;
};

} // namespace convexo
