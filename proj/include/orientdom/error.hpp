#pragma once

#include <stdexcept>
#include <string>

namespace orientdom {

enum class ErrorCode {
    InvalidEdge,
    DuplicateEdge,
    OutOfRange,
    ParseError,
    InvalidFamilyParams,
    TooLarge,
    DirLengthMismatch,
    NotValidOrientation,
    NotInSet,
    EmptyByTreeComponent,
    NoValidOrientation,
    TooManyOrientations,
    BudgetExceeded,
    NoCycle,
    NoTheoremApplies,
    UnknownCheck,
    IoError,
    UsageError,
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidEdge: return "InvalidEdge";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidFamilyParams: return "InvalidFamilyParams";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::DirLengthMismatch: return "DirLengthMismatch";
        case ErrorCode::NotValidOrientation: return "NotValidOrientation";
        case ErrorCode::NotInSet: return "NotInSet";
        case ErrorCode::EmptyByTreeComponent: return "EmptyByTreeComponent";
        case ErrorCode::NoValidOrientation: return "NoValidOrientation";
        case ErrorCode::TooManyOrientations: return "TooManyOrientations";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::NoCycle: return "NoCycle";
        case ErrorCode::NoTheoremApplies: return "NoTheoremApplies";
        case ErrorCode::UnknownCheck: return "UnknownCheck";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::UsageError: return "UsageError";
    }
    return "Error";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace orientdom
