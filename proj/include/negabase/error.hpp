#pragma once

#include <stdexcept>
#include <string>

namespace negabase {

// Machine-readable failure categories. Every throwing operation in the
// library uses Error with one of these codes; the CLI maps them to exit
// code 1 and prints the code name alongside the message.
enum class ErrorCode {
    InvalidPolynomial,
    NoRootAboveOne,
    MultipleRootsAboveOne,
    NotSquarefree,
    ReducibleDetected,
    DivisionByZero,
    NotInvertible,
    OutOfInterval,
    CapExceeded,
    EmptyPeriod,
    LengthMismatch,
    NotAsmin,
    NotAsmax,
    EmptyAutomaton,
    NoConvergence,
    StateCapExceeded,
    InvalidBlock,
    OutOfDomain,
    ValueOutOfInterval,
    ParseError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace negabase
