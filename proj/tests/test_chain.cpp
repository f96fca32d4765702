#include <doctest.h>

#include <random>

#include "poshom/chain.hpp"
#include "poshom/fixtures.hpp"
#include "test_helpers.hpp"

using namespace poshom;
using namespace poshom::testing;

TEST_CASE("chain arithmetic and boundary basics") {
    auto full = fixtures::fixture_full_triangle();
    const auto& p = full.poset;

    Chain z = Chain::single({0, 3}) - Chain::single({1, 3});
    CHECK(z.degree() == 1);
    CHECK(z.term_count() == 2);

    Chain b = boundary(z);
    // d(0<01) - d(1<01) = (01 - 0) - (01 - 1) = 1 - 0
    CHECK(b.coefficient({1}) == 1);
    CHECK(b.coefficient({0}) == -1);
    CHECK(b.term_count() == 2);

    // augmentation: boundary of a 0-chain is its total weight on the empty tuple
    Chain v = Chain::single({0}) - Chain::single({1});
    CHECK(boundary(v).is_zero());
    Chain w = Chain::single({0}, 2);
    CHECK(boundary(w).coefficient({}) == 2);

    CHECK(supported_below(p, z, 6));
    CHECK(!supported_below(p, z, 3));
}

TEST_CASE("suspension and truncation definitions") {
    auto full = fixtures::fixture_full_triangle();
    const auto& p = full.poset;
    // ids: 0,1,2 vertices; 3=01, 4=02, 5=12, 6=012

    Chain z = Chain::single({1, 5}) - Chain::single({2, 5});  // 1<12 - 2<12
    Chain s = suspension(p, z, 6);
    CHECK(s.coefficient({1, 5, 6}) == 1);
    CHECK(s.coefficient({2, 5, 6}) == -1);
    CHECK(s.term_count() == 2);

    CHECK(truncation(s, 6) == z);
    CHECK(truncation(s, 5).is_zero());

    // degree -1 suspends to the vertex, truncation undoes it
    Chain e = Chain::empty_tuple(3);
    Chain sv = suspension(p, e, 2);
    CHECK(sv.coefficient({2}) == 3);
    CHECK(truncation(sv, 2).coefficient({}) == 3);

    CHECK_THROWS_AS(suspension(p, Chain::single({0, 3}), 5), Error);  // 0<01 not below 12
}

TEST_CASE("suspension identity d s_p = s_p d + (-1)^n on random chains") {
    std::mt19937 rng(77);
    long cases = 0;
    for (const auto& f : fixtures::standard_fixtures()) {
        for (int trial = 0; trial < 40 && cases < 120 * 11; ++trial) {
            const auto& elems = f.poset.rank(f.poset.dim() == 0 ? 0 : 1 + (trial % f.poset.dim()));
            if (elems.empty()) continue;
            ElementId p = elems[rng() % elems.size()];
            const int n = f.poset.dim(p);
            Chain z = random_chain_below(f.poset, p, rng);
            Chain lhs = boundary(suspension(f.poset, z, p));
            Chain rhs = suspension(f.poset, boundary(z), p);
            if (n % 2 == 0)
                rhs += z;
            else
                rhs -= z;
            CHECK(lhs == rhs);
            ++cases;
        }
    }
    CHECK(cases >= 100);
}

TEST_CASE("truncation commutes with the lower faces") {
    std::mt19937 rng(78);
    long cases = 0;
    for (const auto& f : fixtures::standard_fixtures()) {
        if (f.poset.dim() < 1) continue;
        for (int trial = 0; trial < 40; ++trial) {
            const auto& tops = f.poset.rank(f.poset.dim());
            ElementId p = tops[rng() % tops.size()];
            const int n = f.poset.dim(p);
            // random chain of degree n with arbitrary dim-n tops
            Chain w(n);
            for (ElementId q : f.poset.rank(n))
                for (const auto& tuple : full_chains_below(f.poset, q)) {
                    if (rng() % 3 != 0) continue;
                    auto full_tuple = tuple;
                    full_tuple.push_back(q);
                    w.add_term(full_tuple, static_cast<long>(rng() % 5) - 2);
                }
            for (int i = 0; i < n; ++i) {
                CHECK(face(truncation(w, p), i) == truncation(face(w, i), p));
                ++cases;
            }
        }
    }
    CHECK(cases >= 100);
}

TEST_CASE("truncation inverts suspension exactly at the same element") {
    std::mt19937 rng(79);
    long cases = 0;
    for (const auto& f : fixtures::standard_fixtures()) {
        if (f.poset.dim() < 1) continue;
        for (int trial = 0; trial < 30; ++trial) {
            const int d = 1 + static_cast<int>(rng() % f.poset.dim());
            const auto& elems = f.poset.rank(d);
            ElementId p = elems[rng() % elems.size()];
            Chain z = random_chain_below(f.poset, p, rng);
            Chain s = suspension(f.poset, z, p);
            CHECK(truncation(s, p) == z);
            for (ElementId other : f.poset.rank(d)) {
                if (other == p) continue;
                CHECK(truncation(s, other).is_zero());
            }
            ++cases;
        }
    }
    CHECK(cases >= 100);
}
