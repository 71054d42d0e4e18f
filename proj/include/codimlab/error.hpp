#pragma once

#include <stdexcept>
#include <string>

namespace codimlab {

enum class ErrorCode {
    InvalidSpec,
    InvalidParams,
    DirectiveExhausted,
    FlavorMismatch,
    AlreadyUnital,
    CapExceeded,
    DegreeMismatch,
    ModeUnsound,
    InvalidMove,
    NotRepresentable,
    Internal,
};

const char* error_code_name(ErrorCode code);

// Process exit status associated with an error class (used by the CLI).
// 2 = invalid input, 3 = cap/horizon exceeded, 4 = internal invariant failure.
int error_exit_status(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
    throw Error(code, msg);
}

inline void require(bool cond, ErrorCode code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

} // namespace codimlab
