#pragma once

#include <stdexcept>
#include <string>

namespace pcbdec {

// Stable error categories; mirrored by the C API status codes and the
// CLI exit codes.
enum class ErrorCode : int {
    internal = 1,
    parse = 2,
    validation = 3,
    structure = 4,
    conflict = 5,
    numeric = 6,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error(ErrorCode::parse, w) {}
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& w) : Error(ErrorCode::validation, w) {}
};

// Structural failures: not-pcb input, unmeasurable events, invalid capacity.
struct StructureError : Error {
    explicit StructureError(const std::string& w) : Error(ErrorCode::structure, w) {}
};

struct ConflictError : Error {
    explicit ConflictError(const std::string& w) : Error(ErrorCode::conflict, w) {}
};

// Size limits, degenerate vectors, out-of-range parameters.
struct NumericError : Error {
    explicit NumericError(const std::string& w) : Error(ErrorCode::numeric, w) {}
};

} // namespace pcbdec
