#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skelcollar {

/// Failure categories raised by the library. Each one names a specific
/// contract violation; callers switch on `Error::code()`.
enum class Errc {
    ZeroIntoNegativePower,
    NotInvertible,
    InconsistentSystem,
    InvalidInput,
    Unsupported,
    NonIsolatedFixedPoint,
    UnrecognizedForm,
    NotHamiltonian,
    DegenerateSampler,
    IndexOutOfRange,
    BoundTooSmall,
    WindowUnstable,
    ClassNotGeneric,
    NotAPair,
    ParseError,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace skelcollar
