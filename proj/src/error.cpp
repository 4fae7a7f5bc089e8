#include "negabase/error.hpp"

namespace negabase {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidPolynomial: return "InvalidPolynomial";
        case ErrorCode::NoRootAboveOne: return "NoRootAboveOne";
        case ErrorCode::MultipleRootsAboveOne: return "MultipleRootsAboveOne";
        case ErrorCode::NotSquarefree: return "NotSquarefree";
        case ErrorCode::ReducibleDetected: return "ReducibleDetected";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::NotInvertible: return "NotInvertible";
        case ErrorCode::OutOfInterval: return "OutOfInterval";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::EmptyPeriod: return "EmptyPeriod";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::NotAsmin: return "NotAsmin";
        case ErrorCode::NotAsmax: return "NotAsmax";
        case ErrorCode::EmptyAutomaton: return "EmptyAutomaton";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::StateCapExceeded: return "StateCapExceeded";
        case ErrorCode::InvalidBlock: return "InvalidBlock";
        case ErrorCode::OutOfDomain: return "OutOfDomain";
        case ErrorCode::ValueOutOfInterval: return "ValueOutOfInterval";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace negabase
