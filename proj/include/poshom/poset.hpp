#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poshom/errors.hpp"

namespace poshom {

// Elements are dense indices 0..n-1.  The virtual minimum 0hat of the
// augmented poset is never stored; it is the sentinel id -1 with dim -1.
using ElementId = int;
inline constexpr ElementId kBottom = -1;

// Finite graded poset: dim raises by exactly 1 along covers, minimal
// elements have dim 0, and no stored element is a minimum (a one-element
// poset is the allowed exception).  Immutable after build().
class GradedPoset {
public:
    GradedPoset() = default;

    static GradedPoset build(std::vector<int> dims,
                             const std::vector<std::pair<int, int>>& covers,
                             std::vector<std::string> labels = {});

    int size() const { return n_; }
    bool empty() const { return n_ == 0; }

    // dim of an element; dim(kBottom) == -1.
    int dim(ElementId p) const { return p == kBottom ? -1 : dims_[p]; }
    // dim of the poset: max element dim, -1 when empty.
    int dim() const { return top_dim_; }

    // Order relation on the augmented poset: kBottom is below everything.
    bool leq(ElementId a, ElementId b) const;
    bool lt(ElementId a, ElementId b) const { return a != b && leq(a, b); }

    const std::vector<ElementId>& rank(int d) const;
    const std::vector<ElementId>& covers_above(ElementId q) const { return up_[q]; }
    const std::vector<ElementId>& covers_below(ElementId p) const { return down_[p]; }
    std::vector<std::pair<int, int>> cover_pairs() const;  // (child, parent), sorted

    std::vector<ElementId> below(ElementId p, bool strict) const;  // ascending ids
    std::vector<ElementId> atoms_below(ElementId p) const;         // dim-0 elements <= p
    std::vector<ElementId> maximal_elements() const;

    const std::string& label(ElementId p) const { return labels_[p]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<ElementId> element_by_label(const std::string& label) const;

private:
    int n_ = 0;
    int top_dim_ = -1;
    std::vector<int> dims_;
    std::vector<std::string> labels_;
    std::vector<std::vector<ElementId>> up_, down_;
    std::vector<std::vector<ElementId>> by_dim_;
    std::vector<char> leq_;  // n*n reachability, row-major

    void check_element(ElementId p) const;
};

// Induced subposet on a down-closed member set, re-indexed 0..k-1 with the
// original dims.  to_parent maps new ids back; from_parent is -1 off-view.
struct InducedPoset {
    GradedPoset poset;
    std::vector<ElementId> to_parent;
    std::vector<int> from_parent;
};

InducedPoset down_set(const GradedPoset& poset, ElementId p, bool strict);
InducedPoset induced_subposet(const GradedPoset& poset, std::vector<ElementId> members);

// Least upper bound if it exists (unique minimal common upper bound),
// restricted to elements x with restrict_to(x) when given.
std::optional<ElementId> join(const GradedPoset& poset, ElementId a, ElementId b);
std::optional<ElementId> join_below(const GradedPoset& poset, ElementId a, ElementId b,
                                    ElementId top);

// Local atom-modularity: in every down-set P_{<=p}, every atom a and every
// q below p satisfy a <= q, or a v q exists in P_{<=p} with dim(a v q) =
// dim q + 1.  Violations are data, not errors.
struct AtomModularReport {
    struct Violation {
        ElementId scope;  // the p whose down-set fails
        ElementId atom;
        ElementId other;
        std::string note;
    };
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

AtomModularReport is_atom_modular(const GradedPoset& poset);

// Local-structure classification against generated reference models.
enum class LocalType { LocallySimplicial, LocallyPQuillen, LocallyAtomModularOnly, Other };

struct LocalTypeReport {
    LocalType label = LocalType::Other;
    std::optional<long> quillen_prime;  // set when label == LocallyPQuillen
    bool locally_simplicial = false;    // every augmented down-set Boolean
    bool zero_dimensional = false;      // trivially both readings
    bool atom_modular = false;
    std::string describe() const;
};

LocalTypeReport classify_local_type(const GradedPoset& poset,
                                    std::optional<long> p_hint = std::nullopt);

// True when every augmented down-set is isomorphic to the subgroup lattice
// of C_p^{dim+1}; vacuous (true) on 0-dimensional posets.
bool is_locally_p_quillen(const GradedPoset& poset, long p);

}  // namespace poshom
