#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "poshom/poset.hpp"

namespace poshom {

// Formal integer combination of strictly increasing element tuples (chains
// of the ambient poset).  Degree -1 chains are multiples of the empty
// tuple; that convention carries the augmentation, so boundary() of a
// 0-chain is its total coefficient times the empty tuple.
class Chain {
public:
    Chain() = default;
    explicit Chain(int degree) : degree_(degree) {}

    static Chain empty_tuple(const mpz_class& coeff = 1);           // degree -1
    static Chain single(std::vector<ElementId> tuple, const mpz_class& coeff = 1);

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    long term_count() const { return static_cast<long>(terms_.size()); }

    const std::map<std::vector<ElementId>, mpz_class>& terms() const { return terms_; }
    mpz_class coefficient(const std::vector<ElementId>& tuple) const;

    void add_term(const std::vector<ElementId>& tuple, const mpz_class& coeff);

    Chain& operator+=(const Chain& rhs);
    Chain& operator-=(const Chain& rhs);
    Chain operator+(const Chain& rhs) const;
    Chain operator-(const Chain& rhs) const;
    Chain operator-() const;
    Chain scaled(const mpz_class& c) const;

    bool operator==(const Chain&) const = default;

    std::string to_string(const GradedPoset& poset) const;

private:
    int degree_ = -1;
    std::map<std::vector<ElementId>, mpz_class> terms_;
};

// d_i: drop the i-th entry of each tuple; i must be < degree+1.  For
// degree 0 and i = 0 this is the augmentation into degree -1.
Chain face(const Chain& z, int i);

// Alternating sum of faces, augmented convention in degree 0.
Chain boundary(const Chain& z);
bool is_cycle(const Chain& z);

// Suspension s_p: append p to every tuple; every tuple must lie strictly
// below p (SuspensionOutOfRange otherwise).  Degree -1 goes to the vertex p.
Chain suspension(const GradedPoset& poset, const Chain& z, ElementId p);

// Truncation t_p: keep tuples whose last entry is p, strip it; kill the
// rest.  A 0-chain truncates to a degree -1 chain.
Chain truncation(const Chain& z, ElementId p);

// True if every tuple of z is a chain of the poset (entries strictly
// increasing in the order) and, when below is given, lies strictly below it.
bool supported_below(const GradedPoset& poset, const Chain& z, ElementId below);

}  // namespace poshom
