#pragma once

#include <gmpxx.h>

#include <vector>

#include "poshom/chain.hpp"
#include "poshom/covering.hpp"
#include "poshom/homology.hpp"
#include "poshom/poset.hpp"
#include "poshom/ring.hpp"

namespace poshom {

// Fills a cycle z supported on I = P_{<q} \ (K_q)_{dim q - 1}: returns Z2
// with boundary(Z2) == z.  I is conically contractible via f (identity off
// K_q, eta_q on it) with apex eta_q(0hat); the fill is the explicit prism
// chain homotopy for id <= f minus the one for const_apex <= f, negated.
// A degree -1 input (the dim q = 1 case) fills to coeff * apex vertex.
Chain cone_fill(const GradedPoset& poset, const LocalCoveringFamily& family, ElementId q,
                const Chain& z);

// Explicit cycles realizing the homology bases of the local spheres: at a
// dim-0 element the generator is the empty tuple; at dim n the cycle for
// (r, j) is (-1)^n s_r(z) + cone_fill(q, z) where z is the j-th cycle at
// r in (K_q)_{n-1}.  Entry order: r ascending by id, then sub-index.
// Integer coefficients; the same cycles are a basis over every ring.
class BasisCycleRegistry {
public:
    struct Entry {
        Chain cycle;
        ElementId from = kBottom;  // the r the cycle was suspended from
        int sub_index = 0;
    };

    const std::vector<Entry>& at(ElementId p) const { return cycles_[p]; }
    long count(ElementId p) const { return static_cast<long>(cycles_[p].size()); }

    friend BasisCycleRegistry basis_cycles(const GradedPoset&, const LocalCoveringFamily&);

private:
    std::vector<std::vector<Entry>> cycles_;
};

BasisCycleRegistry basis_cycles(const GradedPoset& poset, const LocalCoveringFamily& family);

// Coordinates of a cycle w supported on the open down-set of p in the
// registered basis at p: a dim-0 element reads off the degree -1
// coefficient, otherwise concatenate coords((-1)^n t_r(w), r) over
// r in (K_p)_{n-1} in registry order.
std::vector<mpz_class> coords(const GradedPoset& poset, const LocalCoveringFamily& family,
                              const BasisCycleRegistry& registry, const Chain& w, ElementId p);

// The small chain complex induced by the covering family ("reduced"
// relative to the order complex): degree-n rank is the sum of K^p_n over
// dim-n elements, and the column of a basis cycle Z at q stacks
// coords((-1)^n t_p(Z), p) over p in (P_{<q})_{n-1}.
FreeChainComplex reduced_complex(const GradedPoset& poset, const LocalCoveringFamily& family,
                                 const CoefficientRing& ring, bool augmented = false);
FreeChainComplex reduced_complex(const GradedPoset& poset, const LocalCoveringFamily& family,
                                 const BasisCycleRegistry& registry, const KNumbers& knumbers,
                                 const CoefficientRing& ring, bool augmented = false);

}  // namespace poshom
