#ifndef INTDIFF_ERROR_HPP
#define INTDIFF_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace intdiff {

enum class ErrorCode {
    DimensionMismatch,
    SlotOutOfRange,
    NotFiniteUnitShape,
    SingularBlock,
    ZeroElement,
    NotFredholm,
    NotSupported,
    ZeroAlpha,
    InvalidAutomorphism,
    NotInKernelXi,
    RelationViolation,
    BadResidue,
    ConjugatorMismatch,
    BadParameter,
    EmptySet,
    NotProper,
    NotAntichain,
    TooLarge,
    SyntaxError,
    IndexOutOfRange,
    BadDocument,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every domain failure in the library is reported through this type.
class AlgebraError : public std::runtime_error {
public:
    AlgebraError(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class SyntaxError : public AlgebraError {
public:
    SyntaxError(std::size_t offset, const std::string& what)
        : AlgebraError(ErrorCode::SyntaxError, "at byte " + std::to_string(offset) + ": " + what),
          offset_(offset)
    {
    }

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace intdiff

#endif
