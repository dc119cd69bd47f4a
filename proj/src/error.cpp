#include "xjac/error.hpp"

namespace xjac {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
        case ErrorCode::NotIrreducible: return "NotIrreducible";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::BothZero: return "BothZero";
        case ErrorCode::WrongDegree: return "WrongDegree";
        case ErrorCode::NotMonic: return "NotMonic";
        case ErrorCode::NotSquarefree: return "NotSquarefree";
        case ErrorCode::PointNotOnCurve: return "PointNotOnCurve";
        case ErrorCode::InvalidDivisor: return "InvalidDivisor";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::KOutOfRange: return "KOutOfRange";
        case ErrorCode::RequiresPrimeField: return "RequiresPrimeField";
        case ErrorCode::TrivialCharacter: return "TrivialCharacter";
        case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
        case ErrorCode::LOutOfRange: return "LOutOfRange";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ConfigError: return "ConfigError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace xjac
