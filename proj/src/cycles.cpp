#include "poshom/cycles.hpp"

#include <functional>

namespace poshom {

namespace {

// Prism chain homotopy between the simplicial maps of two poset maps
// g <= h: on a tuple (x_0<...<x_k) it is the alternating sum of
// (g x_0 .. g x_i, h x_i .. h x_k), degenerate tuples dropped.
Chain prism(const Chain& z, const std::function<ElementId(ElementId)>& g,
            const std::function<ElementId(ElementId)>& h) {
    Chain out(z.degree() + 1);
    for (const auto& [tuple, coeff] : z.terms()) {
        const int k = static_cast<int>(tuple.size()) - 1;
        for (int i = 0; i <= k; ++i) {
            std::vector<ElementId> mixed;
            mixed.reserve(tuple.size() + 1);
            for (int a = 0; a <= i; ++a) mixed.push_back(g(tuple[a]));
            for (int a = i; a <= k; ++a) mixed.push_back(h(tuple[a]));
            bool degenerate = false;
            for (size_t a = 0; a + 1 < mixed.size(); ++a)
                if (mixed[a] == mixed[a + 1]) {
                    degenerate = true;
                    break;
                }
            if (degenerate) continue;
            out.add_term(mixed, (i % 2 == 0) ? coeff : -coeff);
        }
    }
    return out;
}

}  // namespace

Chain cone_fill(const GradedPoset& poset, const LocalCoveringFamily& family, ElementId q,
                const Chain& z) {
    const int n = poset.dim(q);
    const ElementId apex = family.eta(q, kBottom);

    if (z.degree() == -1) {
        // the dim q = 1 step: fill c*() with c*(apex)
        return Chain::single({apex}, z.coefficient({}));
    }

    // I = P_{<q} minus the top-dimensional members of K_q
    auto in_view = [&](ElementId x) {
        return poset.lt(x, q) && !(poset.dim(x) == n - 1 && family.contains(q, x));
    };
    for (const auto& [tuple, coeff] : z.terms())
        for (ElementId x : tuple)
            if (!in_view(x))
                fail(Errc::SupportOutsideSubposet,
                     "cycle touches " + poset.label(x) + " outside the contractible part");
    if (!is_cycle(z)) fail(Errc::NotACycle, "cone_fill input is not a cycle");

    auto f = [&](ElementId x) { return family.contains(q, x) ? family.eta(q, x) : x; };
    auto id = [](ElementId x) { return x; };
    auto constant = [&](ElementId) { return apex; };

    Chain filled = prism(z, id, f) - prism(z, constant, f);
    return -filled;
}

BasisCycleRegistry basis_cycles(const GradedPoset& poset, const LocalCoveringFamily& family) {
    BasisCycleRegistry registry;
    registry.cycles_.resize(poset.size());

    for (int d = 0; d <= poset.dim(); ++d)
        for (ElementId q : poset.rank(d)) {
            if (d == 0) {
                registry.cycles_[q].push_back({Chain::empty_tuple(1), kBottom, 0});
                continue;
            }
            const mpz_class sign = (d % 2 == 0) ? 1 : -1;
            for (ElementId r : family.members_of_dim(poset, q, d - 1)) {
                const auto& sub = registry.cycles_[r];
                for (size_t j = 0; j < sub.size(); ++j) {
                    const Chain& z = sub[j].cycle;
                    Chain cycle = suspension(poset, z, r).scaled(sign) + cone_fill(poset, family, q, z);
                    registry.cycles_[q].push_back({std::move(cycle), r, static_cast<int>(j)});
                }
            }
        }
    return registry;
}

std::vector<mpz_class> coords(const GradedPoset& poset, const LocalCoveringFamily& family,
                              const BasisCycleRegistry& registry, const Chain& w, ElementId p) {
    const int n = poset.dim(p);
    if (!w.is_zero()) {
        if (!supported_below(poset, w, p))
            fail(Errc::NotACycle, "coords input not supported below " + poset.label(p));
        if (!is_cycle(w)) fail(Errc::NotACycle, "coords input is not a cycle");
    }
    if (n == 0) return {w.coefficient({})};

    const mpz_class sign = (n % 2 == 0) ? 1 : -1;
    std::vector<mpz_class> out;
    out.reserve(registry.count(p));
    for (ElementId r : family.members_of_dim(poset, p, n - 1)) {
        Chain piece = truncation(w, r).scaled(sign);
        auto sub = coords(poset, family, registry, piece, r);
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

FreeChainComplex reduced_complex(const GradedPoset& poset, const LocalCoveringFamily& family,
                                 const CoefficientRing& ring, bool augmented) {
    KNumbers knumbers(poset, family);
    BasisCycleRegistry registry = basis_cycles(poset, family);
    return reduced_complex(poset, family, registry, knumbers, ring, augmented);
}

FreeChainComplex reduced_complex(const GradedPoset& poset, const LocalCoveringFamily& family,
                                 const BasisCycleRegistry& registry, const KNumbers& knumbers,
                                 const CoefficientRing& ring, bool augmented) {
    const int top = poset.dim();
    const int lowest = augmented ? -1 : 0;
    if (poset.empty()) {
        if (augmented) return FreeChainComplex(-1, {1}, {}, {{"()"}}, ring);
        return FreeChainComplex(0, {}, {}, {}, ring);
    }

    // column layout per degree: elements ascending, K^p_n columns each
    std::vector<std::vector<long>> offset(top + 1);
    std::vector<long> ranks;
    std::vector<std::vector<std::string>> labels;
    if (augmented) {
        ranks.push_back(1);
        labels.push_back({"()"});
    }
    for (int d = 0; d <= top; ++d) {
        long width = 0;
        offset[d].assign(poset.size(), -1);
        std::vector<std::string> level;
        for (ElementId p : poset.rank(d)) {
            offset[d][p] = width;
            const long count = registry.count(p);
            if (count != knumbers.at(p, d))
                fail(Errc::InputError, "registered cycle count disagrees with K numbers at " +
                                           poset.label(p));
            for (long j = 0; j < count; ++j)
                level.push_back(poset.label(p) + "#" + std::to_string(j));
            width += count;
        }
        ranks.push_back(width);
        labels.push_back(std::move(level));
    }

    std::vector<IntMat> diffs;
    if (augmented) {
        IntMat aug(1, ranks[1]);
        for (long c = 0; c < ranks[1]; ++c) aug.at(0, c) = 1;
        diffs.push_back(std::move(aug));
    }
    auto rank_at = [&](int degree) { return ranks[degree - lowest]; };
    for (int d = 1; d <= top; ++d) {
        IntMat m(rank_at(d - 1), rank_at(d));
        const mpz_class sign = (d % 2 == 0) ? 1 : -1;
        for (ElementId q : poset.rank(d)) {
            const auto& entries = registry.at(q);
            for (size_t j = 0; j < entries.size(); ++j) {
                const long col = offset[d][q] + static_cast<long>(j);
                const Chain& cycle = entries[j].cycle;
                for (ElementId p : poset.below(q, true)) {
                    if (poset.dim(p) != d - 1) continue;
                    Chain piece = truncation(cycle, p).scaled(sign);
                    auto v = coords(poset, family, registry, piece, p);
                    for (size_t i = 0; i < v.size(); ++i)
                        if (v[i] != 0) m.at(offset[d - 1][p] + static_cast<long>(i), col) = v[i];
                }
            }
        }
        diffs.push_back(std::move(m));
    }
    return FreeChainComplex(lowest, std::move(ranks), std::move(diffs), std::move(labels), ring);
}

}  // namespace poshom
