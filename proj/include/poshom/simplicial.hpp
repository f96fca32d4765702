#pragma once

#include <string>
#include <vector>

#include "poshom/covering.hpp"
#include "poshom/poset.hpp"

namespace poshom {

// Abstract simplicial complex over an ordered vertex set.  Simplices are
// stored explicitly as sorted vertex-index tuples, grouped by dimension and
// lex-sorted inside each group.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // Closure of the given facets; every listed vertex is a 0-simplex even
    // when isolated.
    static SimplicialComplex from_facets(std::vector<std::string> vertices,
                                         const std::vector<std::vector<int>>& facets);

    // Explicit simplex family; throws NotDownClosed when a face is missing.
    static SimplicialComplex from_simplices(std::vector<std::string> vertices,
                                            const std::vector<std::vector<int>>& simplices);

    int vertex_count() const { return static_cast<int>(vertex_labels_.size()); }
    const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }

    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
    const std::vector<std::vector<int>>& simplices_of_dim(int d) const;
    long simplex_count(int d) const;
    long total_simplices() const;
    bool contains(const std::vector<int>& simplex) const;

private:
    std::vector<std::string> vertex_labels_;
    std::vector<std::vector<std::vector<int>>> by_dim_;

    void insert_closure(const std::vector<int>& simplex);
    void normalize();
};

// Face poset of a complex together with its canonical covering family
// K_sigma = {tau subset sigma | min(sigma) not in tau}, eta = add min(sigma).
// The atom order is the vertex order (optionally permuted).
struct FacePosetResult {
    GradedPoset poset;
    LocalCoveringFamily family;
    AtomOrder atom_order;
    std::vector<std::vector<int>> simplex_of;  // element id -> vertex tuple
};

FacePosetResult face_poset(const SimplicialComplex& complex);
FacePosetResult face_poset(const SimplicialComplex& complex,
                           const std::vector<int>& vertex_order);

// Order complex: vertices are the poset elements, simplices its chains.
SimplicialComplex order_complex(const GradedPoset& poset);

// Chain counts of the order complex per degree, by direct DFS enumeration.
std::vector<long> chain_counts(const GradedPoset& poset);

}  // namespace poshom
