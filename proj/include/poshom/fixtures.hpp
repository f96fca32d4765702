#pragma once

#include <optional>
#include <string>
#include <vector>

#include "poshom/covering.hpp"
#include "poshom/group.hpp"
#include "poshom/poset.hpp"
#include "poshom/simplicial.hpp"

namespace poshom::fixtures {

// Simplicial fixtures.
SimplicialComplex full_triangle();          // the 2-simplex with all faces
SimplicialComplex hollow_triangle();        // its boundary
SimplicialComplex boundary_tetrahedron();   // S^2
SimplicialComplex rp2_six_vertices();       // minimal triangulation of RP^2
SimplicialComplex dunce_hat();              // 8 vertices, 17 triangles, no free edge

// Group fixtures.
PermutationGroup sym3();
PermutationGroup dih8();   // dihedral of order 8 on 4 points
PermutationGroup alt4();
PermutationGroup sym4();
PermutationGroup elem_abelian_2_cubed();   // C2 x C2 x C2 on 6 points
PermutationGroup elem_abelian_3_squared(); // C3 x C3 on 6 points
PermutationGroup cyclic(int n);

// A poset, its covering family, and how it was made.
struct Fixture {
    std::string name;
    GradedPoset poset;
    LocalCoveringFamily family;
    AtomOrder atom_order;
    std::optional<long> quillen_prime;  // set for group-derived fixtures
    bool simplicial = false;
};

// The eleven standard fixtures: five simplicial, six Quillen posets.
std::vector<Fixture> standard_fixtures();

// Handy single fixtures for focused tests.
Fixture fixture_full_triangle();
Fixture fixture_quillen_d8();

}  // namespace poshom::fixtures
