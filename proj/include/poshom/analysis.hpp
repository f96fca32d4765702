#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "poshom/covering.hpp"
#include "poshom/poset.hpp"
#include "poshom/ring.hpp"

namespace poshom {

// Free objects and the lower bound on their proportion in degree N-1 of a
// locally p-Quillen poset with vanishing top homology.
struct FreeObjectReport {
    int top_dim = -1;  // N
    std::vector<ElementId> free_elements;  // non-maximal, below a unique maximal element

    // Counting over P'' = non-maximal elements of P_{N-1}, n_p = number of
    // dim-N elements above p.
    long p_double_prime = 0;
    std::map<long, long> n_counts;  // k -> |N_k|
    long n1 = 0;
    bool ratio_defined = false;
    mpq_class ratio;  // |N_1| / |P''|
    // Whether {p in P'' : n_p = 1} coincides with the free elements in P'';
    // the two readings can diverge when a maximal element of dim < N sits
    // above P_{N-1}.
    bool definitions_agree = true;

    // Bound part, meaningful when applicable.
    bool applicable = false;
    std::string not_applicable_reason;
    long prime = 0;
    mpq_class bound;
    bool top_homology_zero = false;
    bool bound_holds = false;
};

FreeObjectReport free_objects(const GradedPoset& poset);

// Requires the poset to be locally p-Quillen at the given prime; computes
// the top homology over R via the covering-family complex and checks
// ratio >= (p^{N+1} - 2 p^N + 1) / (p^{N+1} - p^N) when it vanishes.
// A 0-dimensional poset yields applicable = false (nothing in degree N-1).
FreeObjectReport free_bound_check(const GradedPoset& poset, const LocalCoveringFamily& family,
                                  long p, const CoefficientRing& ring);

// For each element: oracle homology of the open down-set must be free,
// concentrated in degree dim p - 1, of rank K^p_{dim p}.
struct SphericityReport {
    struct Failure {
        ElementId element;
        std::string note;
    };
    std::vector<Failure> failures;
    long checked = 0;
    bool ok() const { return failures.empty(); }
};

SphericityReport verify_local_sphericity(const GradedPoset& poset,
                                         const LocalCoveringFamily& family,
                                         const CoefficientRing& ring);

// Per-degree size of the covering-family complex against the order-complex
// chain counts.
struct SizeReport {
    std::vector<long> reduced_ranks;  // degree 0..dim P
    std::vector<long> oracle_counts;
    long reduced_total = 0;
    long oracle_total = 0;
};

SizeReport size_report(const GradedPoset& poset, const LocalCoveringFamily& family);

// Euler characteristic of |A_p(G)| by the closed formula
// sum (-1)^n p^{n(n+1)/2} |A_p(G)_n| next to the alternating chain count of
// the order complex.
struct EulerReport {
    long long formula = 0;
    long long oracle = 0;
    bool agree = false;
};

EulerReport quillen_euler(const GradedPoset& quillen, long p);

}  // namespace poshom
