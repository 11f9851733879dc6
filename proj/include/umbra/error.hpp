#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace umbra {

enum class Errc {
    NotInvertible,
    CompositionOrder,
    NotDelta,
    ExpConstantTerm,
    TruncationTooShort,
    SingularBasis,
    LambdaIsOne,
    RegimeViolation,
    InvalidArgument,
};

std::string_view to_string(Errc code) noexcept;

/// The single exception type thrown by the library; `code()` tells callers
/// which precondition failed.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace umbra
