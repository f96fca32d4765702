#pragma once

#include <map>
#include <string>
#include <vector>

#include "poshom/covering.hpp"
#include "poshom/poset.hpp"

namespace poshom {

using Perm = std::vector<int>;  // image list on 0..degree-1

// Finite permutation group given by generators, with every element
// enumerated (BFS from the identity, generators applied in input order, so
// ids are deterministic).
class PermutationGroup {
public:
    static PermutationGroup from_generators(int degree, const std::vector<Perm>& generators,
                                            long element_cap = 10000);

    int degree() const { return degree_; }
    long order() const { return static_cast<long>(elements_.size()); }
    const std::vector<Perm>& elements() const { return elements_; }
    const Perm& element(int i) const { return elements_[i]; }

    int mul(int a, int b) const;  // index of a*b (apply a first, then b)
    int inverse(int a) const;
    int element_order(int a) const;
    bool commute(int a, int b) const;
    int index_of(const Perm& p) const;  // -1 when absent

private:
    int degree_ = 0;
    std::vector<Perm> elements_;
    std::vector<Perm> generators_;
    std::map<Perm, int> index_;
    // flattened lookup for small groups; larger ones compose on the fly
    std::vector<int> mul_table_;
    static constexpr long kTableLimit = 2048;
};

// Subgroup as a sorted set of element indices in the parent's enumeration.
struct Subgroup {
    std::vector<int> members;
    int rank = 0;  // elementary abelian rank, so dim = rank - 1 in the poset

    bool operator==(const Subgroup&) const = default;
    bool contains_all(const Subgroup& other) const;
};

bool is_elementary_abelian(const PermutationGroup& group, const Subgroup& subgroup, long p);

// Non-trivial elementary abelian p-subgroups grouped by rank (index 0 holds
// rank-1 subgroups).  Exhaustive and duplicate-free.
std::vector<std::vector<Subgroup>> elementary_abelian_subgroups(const PermutationGroup& group,
                                                                long p);

// The Quillen poset A_p(G) with its canonical covering family
// K_H = {I <= H | H* not<= I}, eta_H(I) = <I, H*>.
struct QuillenPosetResult {
    GradedPoset poset;
    LocalCoveringFamily family;
    AtomOrder atom_order;
    std::vector<Subgroup> subgroup_of;  // element id -> subgroup
    long prime = 0;
};

QuillenPosetResult quillen_poset(const PermutationGroup& group, long p);
QuillenPosetResult quillen_poset(const PermutationGroup& group, long p,
                                 const std::vector<ElementId>& atom_sequence);

}  // namespace poshom
