#pragma once

#include <stdexcept>
#include <string>

namespace ietforge {

// Stable diagnostic codes; the CLI maps them to exit codes and the JSON
// "diagnostics" block.
enum class ErrorCode {
    NonPositiveLength,
    MixedIrrationals,
    PrecisionExhausted,
    IrrationalityUnknown,
    OutOfDomain,
    LengthMismatch,
    ParameterOutOfRange,
    VerificationFailed,
    NoReturnWithinBudget,
    BudgetExhausted,
    SyntaxError,
    SemanticError,
    Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// Affine eigen re-check failed on one interval.
class VerificationError : public Error {
public:
    VerificationError(int interval_index, const std::string& what)
        : Error(ErrorCode::VerificationFailed, what), index_(interval_index) {}

    int interval_index() const { return index_; }

private:
    int index_;
};

class ParseError : public Error {
public:
    ParseError(int line, int col, const std::string& expected)
        : Error(ErrorCode::SyntaxError,
                "line " + std::to_string(line) + ", col " + std::to_string(col) +
                    ": expected " + expected),
          line_(line), col_(col), expected_(expected) {}

    int line() const { return line_; }
    int col() const { return col_; }
    const std::string& expected() const { return expected_; }

private:
    int line_, col_;
    std::string expected_;
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonPositiveLength: return "NonPositiveLength";
        case ErrorCode::MixedIrrationals: return "MixedIrrationals";
        case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
        case ErrorCode::IrrationalityUnknown: return "IrrationalityUnknown";
        case ErrorCode::OutOfDomain: return "OutOfDomain";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
        case ErrorCode::VerificationFailed: return "VerificationFailed";
        case ErrorCode::NoReturnWithinBudget: return "NoReturnWithinBudget";
        case ErrorCode::BudgetExhausted: return "BudgetExhausted";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::SemanticError: return "SemanticError";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace ietforge
