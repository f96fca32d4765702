#pragma once

#include <stdexcept>
#include <string>

namespace poshom {

enum class Errc {
    InputError,
    GradingViolation,
    HasMinimum,
    CycleDetected,
    NotAtomModular,
    NotDownClosed,
    NotAPermutation,
    GroupTooLarge,
    NotPrime,
    SuspensionOutOfRange,
    NotACycle,
    SupportOutsideSubposet,
    NotAComplex,
    NotLocallyPQuillen,
    InvalidFamily,
};

// Single exception type; the code tells callers (and the CLI exit-code
// mapping) which contract was broken.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

const char* errc_name(Errc code);

}  // namespace poshom
