#include "intdiff/error.hpp"

namespace intdiff {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SlotOutOfRange: return "SlotOutOfRange";
    case ErrorCode::NotFiniteUnitShape: return "NotFiniteUnitShape";
    case ErrorCode::SingularBlock: return "SingularBlock";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::NotFredholm: return "NotFredholm";
    case ErrorCode::NotSupported: return "NotSupported";
    case ErrorCode::ZeroAlpha: return "ZeroAlpha";
    case ErrorCode::InvalidAutomorphism: return "InvalidAutomorphism";
    case ErrorCode::NotInKernelXi: return "NotInKernelXi";
    case ErrorCode::RelationViolation: return "RelationViolation";
    case ErrorCode::BadResidue: return "BadResidue";
    case ErrorCode::ConjugatorMismatch: return "ConjugatorMismatch";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::NotProper: return "NotProper";
    case ErrorCode::NotAntichain: return "NotAntichain";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::BadDocument: return "BadDocument";
    }
    return "UnknownError";
}

}  // namespace intdiff
