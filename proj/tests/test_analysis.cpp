#include <doctest.h>

#include <algorithm>
#include <set>

#include "poshom/analysis.hpp"
#include "poshom/fixtures.hpp"
#include "test_helpers.hpp"

using namespace poshom;
using namespace poshom::testing;

namespace {
const CoefficientRing kZ = CoefficientRing::integers();
}

TEST_CASE("free objects: D8 keeps the center busy") {
    auto d8 = fixtures::fixture_quillen_d8();
    auto report = free_objects(d8.poset);

    CHECK(report.top_dim == 1);
    CHECK(report.free_elements.size() == 4);
    CHECK(report.p_double_prime == 5);
    CHECK(report.n1 == 4);
    CHECK(report.n_counts.at(1) == 4);
    CHECK(report.n_counts.at(2) == 1);
    CHECK(report.ratio == mpq_class(4, 5));
    CHECK(report.definitions_agree);

    // the non-free atom is the one below both maximal elements
    std::set<ElementId> free_set(report.free_elements.begin(), report.free_elements.end());
    for (ElementId a : d8.poset.rank(0)) {
        long above = 0;
        for (ElementId h : d8.poset.rank(1))
            if (d8.poset.lt(a, h)) ++above;
        CHECK((above == 1) == (free_set.count(a) != 0));
    }
}

TEST_CASE("free objects: every proper face of the triangle, none on the dunce hat") {
    auto full = fixtures::fixture_full_triangle();
    auto report = free_objects(full.poset);
    CHECK(report.free_elements.size() == 6);

    auto dunce = face_poset(fixtures::dunce_hat());
    auto dunce_report = free_objects(dunce.poset);
    CHECK(dunce_report.free_elements.empty());
    CHECK(dunce_report.n1 == 0);
}

TEST_CASE("free bound: A_2(D8) and A_3(C3^2) meet the bound") {
    auto d8 = fixtures::fixture_quillen_d8();
    auto report = free_bound_check(d8.poset, d8.family, 2, kZ);
    CHECK(report.applicable);
    CHECK(report.top_homology_zero);
    CHECK(report.ratio == mpq_class(4, 5));
    CHECK(report.bound == mpq_class(1, 2));
    CHECK(report.bound_holds);

    auto c3 = quillen_poset(fixtures::elem_abelian_3_squared(), 3);
    auto c3_report = free_bound_check(c3.poset, c3.family, 3, kZ);
    CHECK(c3_report.applicable);
    CHECK(c3_report.top_homology_zero);
    CHECK(c3_report.ratio == mpq_class(1, 1));
    CHECK(c3_report.bound == mpq_class(2, 3));
    CHECK(c3_report.bound_holds);

    // A_2(C2^3): contractible with a maximum, bound (8-8+1)/4
    auto c23 = quillen_poset(fixtures::elem_abelian_2_cubed(), 2);
    auto c23_report = free_bound_check(c23.poset, c23.family, 2, kZ);
    CHECK(c23_report.applicable);
    CHECK(c23_report.top_homology_zero);
    CHECK(c23_report.ratio == mpq_class(1, 1));
    CHECK(c23_report.bound == mpq_class(1, 4));
    CHECK(c23_report.bound_holds);
}

TEST_CASE("free bound: 0-dimensional posets are vacuous, wrong primes rejected") {
    auto s3 = quillen_poset(fixtures::sym3(), 2);
    auto report = free_bound_check(s3.poset, s3.family, 2, kZ);
    CHECK(!report.applicable);
    CHECK(report.not_applicable_reason.find("dim P = 0") != std::string::npos);

    auto hollow = face_poset(fixtures::hollow_triangle());
    CHECK_THROWS_AS(free_bound_check(hollow.poset, hollow.family, 2, kZ), Error);
}

TEST_CASE("edge-count identity on locally p-Quillen fixtures") {
    struct Case {
        QuillenPosetResult built;
        long p;
    };
    std::vector<Case> cases;
    cases.push_back({quillen_poset(fixtures::dih8(), 2), 2});
    cases.push_back({quillen_poset(fixtures::alt4(), 2), 2});
    cases.push_back({quillen_poset(fixtures::sym4(), 2), 2});
    cases.push_back({quillen_poset(fixtures::elem_abelian_2_cubed(), 2), 2});
    cases.push_back({quillen_poset(fixtures::elem_abelian_3_squared(), 3), 3});

    for (const auto& c : cases) {
        const auto& poset = c.built.poset;
        const int big = poset.dim();
        if (big < 1) continue;
        long long lhs = 0;  // |P_N| (p^{N+1}-1)/(p-1)
        long long geom = 0, pk = 1;
        for (int i = 0; i <= big; ++i) {
            geom += pk;
            pk *= c.p;
        }
        lhs = static_cast<long long>(poset.rank(big).size()) * geom;
        long long rhs = 0;  // sum of n_p over P_{N-1}
        for (ElementId p : poset.rank(big - 1))
            for (ElementId q : poset.rank(big))
                if (poset.lt(p, q)) ++rhs;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("local sphericity verified by the oracle on every fixture") {
    for (const auto& f : fixtures::standard_fixtures()) {
        auto report = verify_local_sphericity(f.poset, f.family, kZ);
        CHECK(report.ok());
        CHECK(report.checked == f.poset.size());
    }
}

TEST_CASE("local sphericity refuses a family that fails validation") {
    auto full = fixtures::fixture_full_triangle();
    auto family = full.family;
    auto& members = family.mutable_members(5);
    auto& eta = family.mutable_eta(5);
    auto at = std::find(members.begin(), members.end(), kBottom) - members.begin();
    members.erase(members.begin() + at);
    eta.erase(eta.begin() + at);
    CHECK_THROWS_AS(verify_local_sphericity(full.poset, family, kZ), Error);
}

TEST_CASE("size report: simplicial reduction is the face count") {
    auto rp2 = face_poset(fixtures::rp2_six_vertices());
    auto sizes = size_report(rp2.poset, rp2.family);
    CHECK(sizes.reduced_ranks == std::vector<long>{6, 15, 10});
    CHECK(sizes.reduced_total == 31);
    CHECK(sizes.oracle_total > sizes.reduced_total);

    auto s4 = quillen_poset(fixtures::sym4(), 2);
    auto s4_sizes = size_report(s4.poset, s4.family);
    CHECK(s4_sizes.reduced_total < s4_sizes.oracle_total);
    CHECK(s4_sizes.reduced_ranks == std::vector<long>{9, 8});

    auto point = GradedPoset::build({0}, {});
    auto family = build_atom_modular_lcf(point, AtomOrder::default_order(point));
    auto point_sizes = size_report(point, family);
    CHECK(point_sizes.reduced_total == 1);
    CHECK(point_sizes.oracle_total == 1);

    // size bound per degree on every fixture
    for (const auto& f : fixtures::standard_fixtures()) {
        auto s = size_report(f.poset, f.family);
        for (size_t d = 0; d < s.reduced_ranks.size(); ++d)
            CHECK(s.reduced_ranks[d] <= s.oracle_counts[d]);
    }
}

TEST_CASE("quillen Euler characteristic: formula vs chain count") {
    auto d8 = quillen_poset(fixtures::dih8(), 2);
    auto d8_euler = quillen_euler(d8.poset, 2);
    CHECK(d8_euler.formula == 1);  // 5 - 2*2
    CHECK(d8_euler.oracle == 1);
    CHECK(d8_euler.agree);

    auto s3 = quillen_poset(fixtures::sym3(), 2);
    auto s3_euler = quillen_euler(s3.poset, 2);
    CHECK(s3_euler.formula == 3);
    CHECK(s3_euler.agree);

    auto c5 = quillen_poset(fixtures::cyclic(5), 5);
    auto c5_euler = quillen_euler(c5.poset, 5);
    CHECK(c5_euler.formula == 1);
    CHECK(c5_euler.agree);

    for (const auto& f : fixtures::standard_fixtures()) {
        if (!f.quillen_prime) continue;
        auto e = quillen_euler(f.poset, *f.quillen_prime);
        CHECK(e.agree);
    }
}
