#ifndef DECLOCUS_ERRORS_HPP
#define DECLOCUS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace declocus {

enum class ErrorCode {
    ParseError,
    IndexOutOfRange,
    DuplicateEntry,
    DivisionByZero,
    DegreeTooLarge,
    DegreeTooSmall,
    NotInvertible,
    ZeroDivisor,
    AxisOutOfRange,
    ShapeMismatch,
    SingularMatrix,
    ZeroTensor,
    WrongShape,
    AllZero,
    UnsupportedShape,
    UnsupportedOrbit,
    NotTangential,
    TangencyPointRequested,
    OutsideConciseSpace,
    IllegalMove,
    NoRationalWitnessFound,
    NotNormalForm,
};

inline const char* code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::DuplicateEntry: return "DuplicateEntry";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
        case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
        case ErrorCode::NotInvertible: return "NotInvertible";
        case ErrorCode::ZeroDivisor: return "ZeroDivisor";
        case ErrorCode::AxisOutOfRange: return "AxisOutOfRange";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::SingularMatrix: return "SingularMatrix";
        case ErrorCode::ZeroTensor: return "ZeroTensor";
        case ErrorCode::WrongShape: return "WrongShape";
        case ErrorCode::AllZero: return "AllZero";
        case ErrorCode::UnsupportedShape: return "UnsupportedShape";
        case ErrorCode::UnsupportedOrbit: return "UnsupportedOrbit";
        case ErrorCode::NotTangential: return "NotTangential";
        case ErrorCode::TangencyPointRequested: return "TangencyPointRequested";
        case ErrorCode::OutsideConciseSpace: return "OutsideConciseSpace";
        case ErrorCode::IllegalMove: return "IllegalMove";
        case ErrorCode::NoRationalWitnessFound: return "NoRationalWitnessFound";
        case ErrorCode::NotNormalForm: return "NotNormalForm";
    }
    return "Unknown";
}

// Input-format failures; the CLI maps these to exit status 1.
inline bool is_input_error(ErrorCode c) {
    return c == ErrorCode::ParseError || c == ErrorCode::IndexOutOfRange ||
           c == ErrorCode::DuplicateEntry;
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(std::string(code_name(code)) + ": " + msg), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace declocus

#endif
