#include "configres/errors.hpp"

namespace configres {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonSquare: return "NonSquare";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::NotInvertibleModP: return "NotInvertibleModP";
        case ErrorCode::RankDeficient: return "RankDeficient";
        case ErrorCode::Degenerate: return "Degenerate";
        case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
        case ErrorCode::InvalidBases: return "InvalidBases";
        case ErrorCode::HasLoops: return "HasLoops";
        case ErrorCode::LoopOrColoop: return "LoopOrColoop";
        case ErrorCode::NotConnected: return "NotConnected";
        case ErrorCode::NonDivisible: return "NonDivisible";
        case ErrorCode::EmptyResult: return "EmptyResult";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::Mismatch: return "Mismatch";
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::ZeroCoordinate: return "ZeroCoordinate";
        case ErrorCode::NotOnLambda: return "NotOnLambda";
        case ErrorCode::NotAFlat: return "NotAFlat";
        case ErrorCode::NotPure: return "NotPure";
        case ErrorCode::NotSimplicial: return "NotSimplicial";
        case ErrorCode::NotRound: return "NotRound";
        case ErrorCode::DivisionFailure: return "DivisionFailure";
        case ErrorCode::OrderViolation: return "OrderViolation";
        case ErrorCode::LeadTermFailure: return "LeadTermFailure";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace configres
