#include "qprm/error.hpp"

namespace qprm {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NonPrime: return "NonPrime";
        case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
        case ErrorKind::FieldTooLarge: return "FieldTooLarge";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::EqualPoints: return "EqualPoints";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::ZeroForm: return "ZeroForm";
        case ErrorKind::InconsistentClassRank: return "InconsistentClassRank";
        case ErrorKind::InternalInconsistency: return "InternalInconsistency";
        case ErrorKind::ZeroLinearForm: return "ZeroLinearForm";
        case ErrorKind::PointNotOnQuadric: return "PointNotOnQuadric";
        case ErrorKind::AmbientTooLarge: return "AmbientTooLarge";
        case ErrorKind::CodeTooLarge: return "CodeTooLarge";
        case ErrorKind::ZeroCodeword: return "ZeroCodeword";
        case ErrorKind::ParityMismatch: return "ParityMismatch";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::UnknownVariable: return "UnknownVariable";
        case ErrorKind::NonHomogeneous: return "NonHomogeneous";
        case ErrorKind::FieldLiteralInvalid: return "FieldLiteralInvalid";
    }
    return "Unknown";
}

}  // namespace qprm
