#pragma once

#include <stdexcept>
#include <string>

namespace tiltfan {

enum class ErrorKind {
    InvalidInput,
    DetNotUnit,
    ZeroVector,
    DependentGenerators,
    NonSaturated,
    NonUnimodularChamber,
    SignCoherenceViolation,
    DanglingWall,
    IncompleteFan,
    OrderViolation,
    NotAFace,
    NotPalindromic,
    NotSkewSymmetric,
    IndexOutOfRange,
    SignIncoherence,
    Disconnected,
    UnsupportedGraph,
    BudgetExhausted,
    NotFiniteType,
    NotConvex,
    OriginNotInterior,
    NotRank2,
    DimensionTooLarge,
    ParseError,
    SchemaMismatch,
};

const char* error_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind k, const std::string& detail)
        : std::runtime_error(std::string(error_name(k)) + ": " + detail), kind_(k) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace tiltfan
