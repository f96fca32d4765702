#pragma once

#include <string>

namespace poshom {

// Coefficient ring selector: exact integers, rationals, a prime field F_p,
// or Z/m for an arbitrary modulus m >= 2.  All arithmetic downstream is
// exact; the selector only decides how homology is read off.
struct CoefficientRing {
    enum class Kind { Integers, Rationals, PrimeField, IntegersMod };

    Kind kind = Kind::Integers;
    long modulus = 0;  // p for PrimeField, m for IntegersMod, otherwise unused

    static CoefficientRing integers() { return {Kind::Integers, 0}; }
    static CoefficientRing rationals() { return {Kind::Rationals, 0}; }
    static CoefficientRing prime_field(long p);
    static CoefficientRing integers_mod(long m);

    // Accepts "z" | "q" | "fp:<p>" | "zmod:<m>".
    static CoefficientRing parse(const std::string& text);

    std::string name() const;
    bool is_field() const { return kind == Kind::Rationals || kind == Kind::PrimeField; }

    bool operator==(const CoefficientRing&) const = default;
};

bool is_prime(long n);

}  // namespace poshom
