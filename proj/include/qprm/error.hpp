#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qprm {

enum class ErrorKind {
    NonPrime,
    DegreeOutOfRange,
    FieldTooLarge,
    OutOfRange,
    Overflow,
    EqualPoints,
    DimensionMismatch,
    ZeroForm,
    InconsistentClassRank,
    InternalInconsistency,
    ZeroLinearForm,
    PointNotOnQuadric,
    AmbientTooLarge,
    CodeTooLarge,
    ZeroCodeword,
    ParityMismatch,
    BudgetExceeded,
    SyntaxError,
    UnknownVariable,
    NonHomogeneous,
    FieldLiteralInvalid,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every library failure is reported as an Error carrying a machine-checkable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Parser failures additionally carry the byte offset of the offending token.
class ParseError : public Error {
public:
    ParseError(ErrorKind kind, std::size_t position, const std::string& what)
        : Error(kind, what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace qprm
