#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bipramsey {

enum class ErrorCode {
    InvalidSize,
    SizeLimit,
    InvalidColour,
    Structural,
    DegeneratePair,
    Precondition,
    SliceFailure,
    Partition,
    NoShape,
    Divisibility,
    Parameter,
    Parse,
    Io,
};

/// Machine-readable name used in CLI "error: <code>" lines.
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

inline void require(bool condition, ErrorCode code, const std::string& what) {
    if (!condition)
        throw Error(code, what);
}

}  // namespace bipramsey
