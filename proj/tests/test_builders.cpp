#include <doctest.h>

#include <algorithm>
#include <set>

#include "poshom/fixtures.hpp"
#include "poshom/group.hpp"
#include "poshom/simplicial.hpp"
#include "test_helpers.hpp"

using namespace poshom;
using namespace poshom::testing;

TEST_CASE("simplicial complexes close under faces and validate") {
    auto full = fixtures::full_triangle();
    CHECK(full.dim() == 2);
    CHECK(full.simplex_count(0) == 3);
    CHECK(full.simplex_count(1) == 3);
    CHECK(full.simplex_count(2) == 1);

    auto rp2 = fixtures::rp2_six_vertices();
    CHECK(rp2.simplex_count(0) == 6);
    CHECK(rp2.simplex_count(1) == 15);
    CHECK(rp2.simplex_count(2) == 10);

    auto dunce = fixtures::dunce_hat();
    CHECK(dunce.simplex_count(0) == 8);
    CHECK(dunce.simplex_count(1) == 24);
    CHECK(dunce.simplex_count(2) == 17);

    CHECK_THROWS_AS(
        SimplicialComplex::from_simplices({"a", "b", "c"}, {{0}, {1}, {2}, {0, 1, 2}}),
        Error);  // faces of the triangle missing
}

TEST_CASE("face poset shapes and families") {
    auto full = face_poset(fixtures::full_triangle());
    CHECK(full.poset.size() == 7);
    CHECK(full.poset.rank(0).size() == 3);
    CHECK(full.poset.rank(1).size() == 3);
    CHECK(full.poset.rank(2).size() == 1);

    auto hollow = face_poset(fixtures::hollow_triangle());
    CHECK(hollow.poset.size() == 6);
    CHECK(hollow.poset.dim() == 1);

    auto rp2 = face_poset(fixtures::rp2_six_vertices());
    CHECK(rp2.poset.size() == 31);

    CHECK(validate_lcf(full.poset, full.family).ok());
    CHECK(validate_lcf(rp2.poset, rp2.family).ok());

    // explicit covering data on the triangle: K_012 avoids vertex 0
    CHECK(full.family.members(6) == std::vector<ElementId>{kBottom, 1, 2, 5});
    CHECK(full.family.eta(6, kBottom) == 0);
    CHECK(full.family.eta(6, 1) == 3);   // 1 -> 01
    CHECK(full.family.eta(6, 2) == 4);   // 2 -> 02
    CHECK(full.family.eta(6, 5) == 6);   // 12 -> 012
}

TEST_CASE("order complex: chains become simplices") {
    auto two_points = GradedPoset::build({0, 0}, {});
    auto oc = order_complex(two_points);
    CHECK(oc.dim() == 0);
    CHECK(oc.simplex_count(0) == 2);

    auto hollow = hollow_triangle_poset();
    auto sub = order_complex(hollow);  // barycentric subdivision of the circle
    CHECK(sub.simplex_count(0) == 6);
    CHECK(sub.simplex_count(1) == 6);
    CHECK(sub.dim() == 1);

    auto d8 = fixtures::fixture_quillen_d8();
    auto quillen_oc = order_complex(d8.poset);
    CHECK(quillen_oc.simplex_count(0) == 7);
    CHECK(quillen_oc.simplex_count(1) == 6);
    CHECK(quillen_oc.dim() == 1);

    // simplex counts equal independent chain counts, degree by degree
    for (const auto& f : fixtures::standard_fixtures()) {
        auto complex = order_complex(f.poset);
        auto counts = chain_counts(f.poset);
        for (int d = 0; d <= complex.dim(); ++d)
            CHECK(complex.simplex_count(d) == counts[d]);
        CHECK(static_cast<int>(counts.size()) == complex.dim() + 1);
    }
}

TEST_CASE("group enumeration is deterministic and validated") {
    CHECK(fixtures::sym3().order() == 6);
    CHECK(fixtures::dih8().order() == 8);
    CHECK(fixtures::alt4().order() == 12);
    CHECK(fixtures::sym4().order() == 24);
    CHECK(fixtures::elem_abelian_2_cubed().order() == 8);
    CHECK(fixtures::elem_abelian_3_squared().order() == 9);
    CHECK(fixtures::cyclic(5).order() == 5);

    CHECK_THROWS_AS(PermutationGroup::from_generators(3, {{0, 0, 1}}), Error);
    CHECK_THROWS_AS(PermutationGroup::from_generators(4, {{1, 2, 3, 0}}, 3), Error);

    // identity is element 0 and multiplication works through the table
    auto s3 = fixtures::sym3();
    for (int a = 0; a < s3.order(); ++a) {
        CHECK(s3.mul(a, 0) == a);
        CHECK(s3.mul(0, a) == a);
        CHECK(s3.mul(a, s3.inverse(a)) == 0);
    }
}

TEST_CASE("elementary abelian subgroup enumeration") {
    auto s3 = elementary_abelian_subgroups(fixtures::sym3(), 2);
    REQUIRE(s3.size() == 1);  // no Klein subgroups in S3
    CHECK(s3[0].size() == 3);

    auto d8 = elementary_abelian_subgroups(fixtures::dih8(), 2);
    REQUIRE(d8.size() == 2);
    CHECK(d8[0].size() == 5);
    CHECK(d8[1].size() == 2);

    auto c5 = elementary_abelian_subgroups(fixtures::cyclic(5), 5);
    REQUIRE(c5.size() == 1);
    CHECK(c5[0].size() == 1);

    auto c23 = elementary_abelian_subgroups(fixtures::elem_abelian_2_cubed(), 2);
    REQUIRE(c23.size() == 3);
    CHECK(c23[0].size() == 7);
    CHECK(c23[1].size() == 7);
    CHECK(c23[2].size() == 1);

    CHECK_THROWS_AS(elementary_abelian_subgroups(fixtures::sym3(), 4), Error);

    // every returned subgroup passes the predicate; all distinct
    for (long p : {2L, 3L}) {
        auto groups = elementary_abelian_subgroups(fixtures::sym4(), p);
        std::set<std::vector<int>> seen;
        for (size_t r = 0; r < groups.size(); ++r)
            for (const auto& sub : groups[r]) {
                CHECK(is_elementary_abelian(fixtures::sym4(), sub, p));
                CHECK(sub.rank == static_cast<int>(r) + 1);
                long long expect = 1;
                for (int i = 0; i < sub.rank; ++i) expect *= p;
                CHECK(static_cast<long long>(sub.members.size()) == expect);
                CHECK(seen.insert(sub.members).second);
            }
    }
}

TEST_CASE("Quillen poset shapes") {
    auto c3sq = quillen_poset(fixtures::elem_abelian_3_squared(), 3);
    CHECK(c3sq.poset.size() == 5);  // 4 atoms and the whole group
    CHECK(c3sq.poset.dim() == 1);

    auto d8 = quillen_poset(fixtures::dih8(), 2);
    CHECK(d8.poset.size() == 7);
    CHECK(d8.poset.dim() == 1);

    auto s3_at_3 = quillen_poset(fixtures::sym3(), 3);
    CHECK(s3_at_3.poset.size() == 1);
    CHECK(s3_at_3.poset.dim() == 0);

    auto s4 = quillen_poset(fixtures::sym4(), 2);
    CHECK(s4.poset.rank(0).size() == 9);
    CHECK(s4.poset.rank(1).size() == 4);

    auto a4 = quillen_poset(fixtures::alt4(), 2);
    CHECK(a4.poset.size() == 4);

    // no p-elements at all: the empty poset
    CHECK(quillen_poset(fixtures::cyclic(3), 2).poset.size() == 0);

    // covers are exactly the index-p inclusions
    for (const auto& built : {d8, s4}) {
        for (auto [child, parent] : built.poset.cover_pairs()) {
            CHECK(built.subgroup_of[parent].contains_all(built.subgroup_of[child]));
            CHECK(built.subgroup_of[parent].members.size() ==
                  2 * built.subgroup_of[child].members.size());
        }
        CHECK(validate_lcf(built.poset, built.family).ok());
    }
}
