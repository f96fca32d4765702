#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "poshom/poset.hpp"

namespace poshom {

// Total order on the dim-0 elements; p* below is the order-minimal atom
// under an element.
struct AtomOrder {
    std::vector<int> pos;  // pos[id] = position in the order, -1 for non-atoms

    static AtomOrder default_order(const GradedPoset& poset);
    static AtomOrder from_sequence(const GradedPoset& poset, const std::vector<ElementId>& atoms);
    static AtomOrder shuffled(const GradedPoset& poset, std::uint64_t seed);

    ElementId min_atom_below(const GradedPoset& poset, ElementId p) const;
};

// Local covering family {K_p, eta_p}: K_p is a subset of the augmented
// down-set of p containing kBottom, eta_p maps members one dimension up
// into the complement.  Stored as parallel sorted member/eta lists.
class LocalCoveringFamily {
public:
    LocalCoveringFamily() = default;
    explicit LocalCoveringFamily(int n) : members_(n), eta_(n) {}

    int size() const { return static_cast<int>(members_.size()); }

    void set(ElementId p, std::vector<ElementId> members, std::vector<ElementId> eta);

    const std::vector<ElementId>& members(ElementId p) const { return members_[p]; }
    bool contains(ElementId p, ElementId q) const;
    ElementId eta(ElementId p, ElementId q) const;
    // Members of K_p of a given dim, ascending by id (kBottom has dim -1).
    std::vector<ElementId> members_of_dim(const GradedPoset& poset, ElementId p, int d) const;

    bool operator==(const LocalCoveringFamily&) const = default;

    // Test hooks: families are immutable in normal use, tampering is for
    // validator exercises.
    std::vector<ElementId>& mutable_members(ElementId p) { return members_[p]; }
    std::vector<ElementId>& mutable_eta(ElementId p) { return eta_[p]; }

private:
    std::vector<std::vector<ElementId>> members_;  // sorted, kBottom (-1) first
    std::vector<std::vector<ElementId>> eta_;      // parallel to members_
};

// The generic construction on a locally atom-modular poset:
// K_p = {r in augmented down-set | p* not<= r}, eta_p(r) = p* v r.
LocalCoveringFamily build_atom_modular_lcf(const GradedPoset& poset, const AtomOrder& order);

// Exhaustive check of the five defining conditions plus membership/codomain
// structure (reported as condition 0).
struct LcfReport {
    struct Violation {
        int condition;  // 0 = structural, 1..5 per the definition
        ElementId p;
        ElementId q;
        ElementId r;  // kBottom when unused
        std::string note;
    };
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    bool has_condition(int c) const;
    std::string describe(const GradedPoset& poset) const;
};

LcfReport validate_lcf(const GradedPoset& poset, const LocalCoveringFamily& family);

// K^p_n table: K^p_0 = 1, K^p_{n+1} = sum over q in (K_p)_n of K^q_n.
// K^p_{dim p} predicts the rank of the local homology below p.
class KNumbers {
public:
    KNumbers() = default;
    KNumbers(const GradedPoset& poset, const LocalCoveringFamily& family);

    long long at(ElementId p, int n) const;  // 0 for n > dim p
    long long top(ElementId p) const { return at(p, dim_[p]); }
    long long degree_rank(const GradedPoset& poset, int n) const;  // sum over P_n of K^p_n

private:
    std::vector<int> dim_;
    std::vector<std::vector<long long>> table_;  // table_[p][n], n = 0..dim p
};

// Independent count of the chains p_0 < ... < p_n = p with dim p_i = i and
// p_i in K_{p_{i+1}}; enumerated by DFS, no memoization, so it can serve as
// an oracle against KNumbers.
long long sphere_chain_count(const GradedPoset& poset, const LocalCoveringFamily& family,
                             ElementId p);

}  // namespace poshom
