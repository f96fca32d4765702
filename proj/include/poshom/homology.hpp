#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "poshom/matrix.hpp"
#include "poshom/poset.hpp"
#include "poshom/ring.hpp"
#include "poshom/simplicial.hpp"

namespace poshom {

// Free chain complex with integer differential matrices.  Degrees run
// lowest()..top(); lowest is -1 for augmented complexes (rank-1 degree -1
// with the augmentation row) and 0 otherwise.  The matrices are integral
// lifts; the coefficient ring is applied when homology is read off.
class FreeChainComplex {
public:
    FreeChainComplex() = default;
    FreeChainComplex(int lowest, std::vector<long> ranks, std::vector<IntMat> diffs,
                     std::vector<std::vector<std::string>> labels, CoefficientRing ring);

    int lowest() const { return lowest_; }
    int top() const { return lowest_ + static_cast<int>(ranks_.size()) - 1; }
    long rank(int degree) const;
    long total_rank() const;
    const IntMat& differential(int degree) const;  // d_degree, degree in (lowest, top]
    bool has_differential(int degree) const;
    IntMat& mutable_differential(int degree);      // test hook
    const std::vector<std::string>& labels(int degree) const;
    const CoefficientRing& ring() const { return ring_; }

    bool is_complex() const;  // d(n) * d(n+1) == 0 for all n

private:
    int lowest_ = 0;
    std::vector<long> ranks_;
    std::vector<IntMat> diffs_;  // diffs_[i] maps degree lowest_+i+1 -> lowest_+i
    std::vector<std::vector<std::string>> labels_;
    CoefficientRing ring_ = CoefficientRing::integers();
};

// Simplicial chain complex with basis the lex-sorted simplices per degree
// and the alternating face-sum differential; augmented adds the degree -1
// augmentation row.
FreeChainComplex simplicial_chain_complex(const SimplicialComplex& complex,
                                          const CoefficientRing& ring, bool augmented);

// The brute-force oracle: the simplicial chain complex of the order complex.
FreeChainComplex order_complex_chain(const GradedPoset& poset, const CoefficientRing& ring,
                                     bool augmented);

struct HomologyGroup {
    long rank = 0;
    std::vector<mpz_class> torsion;  // invariant factors > 1 (or proper divisors of m
                                     // over Z/m), ascending divisibility chain
    bool is_zero() const { return rank == 0 && torsion.empty(); }
    bool operator==(const HomologyGroup&) const = default;
};

struct HomologyResult {
    int lowest = 0;
    std::vector<HomologyGroup> groups;  // per degree from lowest

    const HomologyGroup& at(int degree) const;
    bool has(int degree) const;
    int top() const { return lowest + static_cast<int>(groups.size()) - 1; }
    std::string to_string() const;
};

// Homology of the complex over the given ring: SNF over Z, exact Gaussian
// elimination over fields, and the invariant-factor reduction of the
// integer SNF data over Z/m.  Throws NotAComplex when d.d != 0.
HomologyResult homology(const FreeChainComplex& complex, const CoefficientRing& ring);

// Degree-by-degree equality of ranks and invariant factors, over the full
// union of degree ranges (missing degrees count as zero groups).
bool homology_equal(const HomologyResult& a, const HomologyResult& b);

// Unreduced Euler characteristic from ranks (alternating sum over degrees
// >= 0).
long long euler_characteristic(const FreeChainComplex& complex);

}  // namespace poshom
