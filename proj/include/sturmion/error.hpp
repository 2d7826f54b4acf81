#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sturmion {

enum class ErrorKind {
    DivisionByZero,
    NonMonic,
    DegreeGap,
    ZeroRemainder,
    NonPositiveU,
    EndpointIsRoot,
    InvalidArgument,
    NodeMismatch,
    NonPositiveWeight,
    InsufficientMoments,
    PoleHit,
    DegenerateGrid,
    NotAClassicalGrid,
    Unsupported,
    DenominatorZero,
    PivotZero,
    ZeroPhi,
    ZeroF,
    Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// True for the failures a Euclidean chain can raise.
    bool is_chain_failure() const noexcept {
        return kind_ == ErrorKind::DegreeGap || kind_ == ErrorKind::ZeroRemainder ||
               kind_ == ErrorKind::NonPositiveU;
    }

private:
    ErrorKind kind_;
};

}  // namespace sturmion
