#pragma once

#include <stdexcept>
#include <string>

namespace wlme {

// Every domain failure carries one of these kinds so that callers (and the
// CLI's structured error reports) can dispatch without string matching.
enum class ErrorKind {
    DimensionMismatch,
    ZeroVector,
    NotNormalized,
    NonFinite,
    NonUnitaryWithoutRenormalize,
    ZeroResult,
    EmptyKeepSet,
    IndexOutOfRange,
    NotHermitian,
    OutOfRange,
    InvalidParams,
    NonzeroX,
    SingularOperator,
    NonUnitaryCertificate,
    InvalidWeights,
    AngleConstraintViolated,
    TooLarge,
    Internal,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

inline void require(bool condition, ErrorKind kind, const std::string& message) {
    if (!condition) fail(kind, message);
}

}  // namespace wlme
