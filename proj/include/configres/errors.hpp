#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace configres {

enum class ErrorCode {
    NonSquare,
    ZeroPolynomial,
    DivisionByZero,
    FieldMismatch,
    NotInvertibleModP,
    RankDeficient,
    Degenerate,
    DisconnectedGraph,
    InvalidBases,
    HasLoops,
    LoopOrColoop,
    NotConnected,
    NonDivisible,
    EmptyResult,
    TooLarge,
    Mismatch,
    ZeroVector,
    ZeroCoordinate,
    NotOnLambda,
    NotAFlat,
    NotPure,
    NotSimplicial,
    NotRound,
    DivisionFailure,
    OrderViolation,
    LeadTermFailure,
    InvalidArgument,
    ParseError,
};

std::string_view to_string(ErrorCode code);

/// Typed failure raised by every module; `code()` identifies the contract that was violated.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace configres
