#include "poshom/fixtures.hpp"

namespace poshom::fixtures {

namespace {
std::vector<std::string> numbered(int n) {
    std::vector<std::string> out(n);
    for (int i = 0; i < n; ++i) out[i] = std::to_string(i);
    return out;
}
}  // namespace

SimplicialComplex full_triangle() {
    return SimplicialComplex::from_facets(numbered(3), {{0, 1, 2}});
}

SimplicialComplex hollow_triangle() {
    return SimplicialComplex::from_facets(numbered(3), {{0, 1}, {0, 2}, {1, 2}});
}

SimplicialComplex boundary_tetrahedron() {
    return SimplicialComplex::from_facets(numbered(4),
                                          {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

SimplicialComplex rp2_six_vertices() {
    // antipodal quotient of the icosahedron
    return SimplicialComplex::from_facets(
        numbered(6), {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                      {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

SimplicialComplex dunce_hat() {
    // disk with boundary glued a a a^-1; vertex 0 is the cone point, the
    // boundary loop runs 0-1-2-0.  Contractible, every edge in >= 2
    // triangles, so no free face.
    return SimplicialComplex::from_facets(
        numbered(8), {{0, 1, 3}, {1, 2, 3}, {2, 3, 4}, {0, 2, 4}, {0, 1, 4}, {1, 4, 5},
                      {1, 2, 5}, {0, 2, 5}, {0, 5, 6}, {0, 2, 6}, {1, 2, 6}, {1, 6, 7},
                      {0, 1, 7}, {0, 3, 7}, {3, 4, 5}, {3, 5, 6}, {3, 6, 7}});
}

PermutationGroup sym3() {
    return PermutationGroup::from_generators(3, {{1, 0, 2}, {1, 2, 0}});
}

PermutationGroup dih8() {
    // r = 4-cycle, s = reflection
    return PermutationGroup::from_generators(4, {{1, 2, 3, 0}, {0, 3, 2, 1}});
}

PermutationGroup alt4() {
    return PermutationGroup::from_generators(4, {{1, 2, 0, 3}, {1, 0, 3, 2}});
}

PermutationGroup sym4() {
    return PermutationGroup::from_generators(4, {{1, 2, 3, 0}, {1, 0, 2, 3}});
}

PermutationGroup elem_abelian_2_cubed() {
    return PermutationGroup::from_generators(
        6, {{1, 0, 2, 3, 4, 5}, {0, 1, 3, 2, 4, 5}, {0, 1, 2, 3, 5, 4}});
}

PermutationGroup elem_abelian_3_squared() {
    return PermutationGroup::from_generators(6, {{1, 2, 0, 3, 4, 5}, {0, 1, 2, 4, 5, 3}});
}

PermutationGroup cyclic(int n) {
    Perm gen(n);
    for (int i = 0; i < n; ++i) gen[i] = (i + 1) % n;
    return PermutationGroup::from_generators(n, {gen});
}

namespace {

Fixture make_simplicial(std::string name, const SimplicialComplex& complex) {
    auto built = face_poset(complex);
    Fixture f;
    f.name = std::move(name);
    f.poset = std::move(built.poset);
    f.family = std::move(built.family);
    f.atom_order = std::move(built.atom_order);
    f.simplicial = true;
    return f;
}

Fixture make_quillen(std::string name, const PermutationGroup& group, long p) {
    auto built = quillen_poset(group, p);
    Fixture f;
    f.name = std::move(name);
    f.poset = std::move(built.poset);
    f.family = std::move(built.family);
    f.atom_order = std::move(built.atom_order);
    f.quillen_prime = p;
    return f;
}

}  // namespace

std::vector<Fixture> standard_fixtures() {
    std::vector<Fixture> out;
    out.push_back(make_simplicial("boundary-tetrahedron", boundary_tetrahedron()));
    out.push_back(make_simplicial("rp2-six-vertices", rp2_six_vertices()));
    out.push_back(make_simplicial("dunce-hat", dunce_hat()));
    out.push_back(make_simplicial("hollow-triangle", hollow_triangle()));
    out.push_back(make_simplicial("full-triangle", full_triangle()));
    out.push_back(make_quillen("A_2(S3)", sym3(), 2));
    out.push_back(make_quillen("A_2(D8)", dih8(), 2));
    out.push_back(make_quillen("A_2(A4)", alt4(), 2));
    out.push_back(make_quillen("A_2(S4)", sym4(), 2));
    out.push_back(make_quillen("A_2(C2^3)", elem_abelian_2_cubed(), 2));
    out.push_back(make_quillen("A_3(C3^2)", elem_abelian_3_squared(), 3));
    return out;
}

Fixture fixture_full_triangle() { return make_simplicial("full-triangle", full_triangle()); }

Fixture fixture_quillen_d8() { return make_quillen("A_2(D8)", dih8(), 2); }

}  // namespace poshom::fixtures
