#include "poshom/ring.hpp"

#include "poshom/errors.hpp"

namespace poshom {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::InputError: return "InputError";
        case Errc::GradingViolation: return "GradingViolation";
        case Errc::HasMinimum: return "HasMinimum";
        case Errc::CycleDetected: return "CycleDetected";
        case Errc::NotAtomModular: return "NotAtomModular";
        case Errc::NotDownClosed: return "NotDownClosed";
        case Errc::NotAPermutation: return "NotAPermutation";
        case Errc::GroupTooLarge: return "GroupTooLarge";
        case Errc::NotPrime: return "NotPrime";
        case Errc::SuspensionOutOfRange: return "SuspensionOutOfRange";
        case Errc::NotACycle: return "NotACycle";
        case Errc::SupportOutsideSubposet: return "SupportOutsideSubposet";
        case Errc::NotAComplex: return "NotAComplex";
        case Errc::NotLocallyPQuillen: return "NotLocallyPQuillen";
        case Errc::InvalidFamily: return "InvalidFamily";
    }
    return "Unknown";
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

CoefficientRing CoefficientRing::prime_field(long p) {
    if (!is_prime(p)) fail(Errc::NotPrime, "prime field characteristic must be prime: " + std::to_string(p));
    return {Kind::PrimeField, p};
}

CoefficientRing CoefficientRing::integers_mod(long m) {
    if (m < 2) fail(Errc::InputError, "modulus must be >= 2: " + std::to_string(m));
    return {Kind::IntegersMod, m};
}

CoefficientRing CoefficientRing::parse(const std::string& text) {
    if (text == "z" || text == "Z") return integers();
    if (text == "q" || text == "Q") return rationals();
    auto tail_number = [&](const std::string& prefix) -> long {
        const std::string digits = text.substr(prefix.size());
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            fail(Errc::InputError, "bad ring selector: " + text);
        return std::stol(digits);
    };
    if (text.rfind("fp:", 0) == 0) return prime_field(tail_number("fp:"));
    if (text.rfind("zmod:", 0) == 0) return integers_mod(tail_number("zmod:"));
    fail(Errc::InputError, "unknown ring selector: " + text + " (expected z | q | fp:<p> | zmod:<m>)");
}

std::string CoefficientRing::name() const {
    switch (kind) {
        case Kind::Integers: return "Z";
        case Kind::Rationals: return "Q";
        case Kind::PrimeField: return "F" + std::to_string(modulus);
        case Kind::IntegersMod: return "Z/" + std::to_string(modulus);
    }
    return "?";
}

}  // namespace poshom
