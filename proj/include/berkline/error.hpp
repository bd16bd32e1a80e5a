#pragma once

#include <stdexcept>
#include <string>

namespace berkline {

enum class Errc {
    InvalidArgument,
    Parse,
    MixedFields,
    DivisionByZero,
    OutOfDomain,
    NotInImage,
    NotInvertible,
    SkeletonMissesPath,
    TimeOutOfRange,
    NonSplitFunction,
    DenominatorVanishes,
    IncompleteRoots,
    NonSplitDerivative,
    DivisorTooSmall,
    CriterionFails,
    PrecisionLoss,
};

const char* errc_name(Errc code) noexcept;

// All failures in the library are reported through this type; the C API
// maps `code()` onto its status enumeration.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
    throw Error(code, what);
}

} // namespace berkline
