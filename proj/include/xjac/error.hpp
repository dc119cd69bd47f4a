#ifndef XJAC_ERROR_HPP
#define XJAC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace xjac {

enum class ErrorCode {
    DivisionByZero,
    FieldMismatch,
    NotPrime,
    EvenCharacteristic,
    NotIrreducible,
    OutOfRange,
    BothZero,
    WrongDegree,
    NotMonic,
    NotSquarefree,
    PointNotOnCurve,
    InvalidDivisor,
    BudgetExceeded,
    KOutOfRange,
    RequiresPrimeField,
    TrivialCharacter,
    DegreeTooHigh,
    LOutOfRange,
    ParseError,
    ConfigError,
};

const char* to_string(ErrorCode code) noexcept;

/// All library failures are reported through this one exception type; the
/// code identifies which contract was violated.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

}  // namespace xjac

#endif  // XJAC_ERROR_HPP
