#include "poshom/analysis.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "poshom/cycles.hpp"
#include "poshom/homology.hpp"
#include "poshom/simplicial.hpp"

namespace poshom {

FreeObjectReport free_objects(const GradedPoset& poset) {
    FreeObjectReport report;
    report.top_dim = poset.dim();

    const auto maximal = poset.maximal_elements();
    std::set<ElementId> maximal_set(maximal.begin(), maximal.end());

    for (int p = 0; p < poset.size(); ++p) {
        if (maximal_set.count(p)) continue;
        long above = 0;
        for (ElementId m : maximal)
            if (poset.lt(p, m)) ++above;
        if (above == 1) report.free_elements.push_back(p);
    }

    const int big = poset.dim();
    if (big >= 1) {
        std::set<ElementId> free_set(report.free_elements.begin(), report.free_elements.end());
        bool agree = true;
        for (ElementId p : poset.rank(big - 1)) {
            if (maximal_set.count(p)) continue;  // P', not counted
            long np = 0;
            for (ElementId q : poset.rank(big))
                if (poset.lt(p, q)) ++np;
            ++report.p_double_prime;
            ++report.n_counts[np];
            if (np == 1) ++report.n1;
            if ((np == 1) != (free_set.count(p) != 0)) agree = false;
        }
        report.definitions_agree = agree;
        if (report.p_double_prime > 0) {
            report.ratio_defined = true;
            report.ratio = mpq_class(report.n1, report.p_double_prime);
            report.ratio.canonicalize();
        }
    }
    return report;
}

FreeObjectReport free_bound_check(const GradedPoset& poset, const LocalCoveringFamily& family,
                                  long p, const CoefficientRing& ring) {
    if (!is_locally_p_quillen(poset, p))
        fail(Errc::NotLocallyPQuillen,
             "poset is not locally " + std::to_string(p) + "-Quillen");

    FreeObjectReport report = free_objects(poset);
    report.prime = p;

    const int big = poset.dim();
    if (big < 1) {
        report.applicable = false;
        report.not_applicable_reason = "dim P = 0: nothing in degree N-1";
        return report;
    }
    if (!report.ratio_defined) {
        report.applicable = false;
        report.not_applicable_reason = "no non-maximal elements in degree N-1";
        return report;
    }
    report.applicable = true;

    // bound (p^{N+1} - 2 p^N + 1) / (p^{N+1} - p^N)
    mpz_class pn = 1;
    for (int i = 0; i < big; ++i) pn *= p;
    mpz_class pn1 = pn * p;
    report.bound = mpq_class(pn1 - 2 * pn + 1, pn1 - pn);
    report.bound.canonicalize();

    const auto result = homology(reduced_complex(poset, family, ring), ring);
    report.top_homology_zero = result.at(big).is_zero();
    report.bound_holds = report.top_homology_zero && report.ratio >= report.bound;
    return report;
}

SphericityReport verify_local_sphericity(const GradedPoset& poset,
                                         const LocalCoveringFamily& family,
                                         const CoefficientRing& ring) {
    if (!validate_lcf(poset, family).ok())
        fail(Errc::InvalidFamily, "covering family fails validation");
    SphericityReport report;
    KNumbers knumbers(poset, family);

    for (int p = 0; p < poset.size(); ++p) {
        ++report.checked;
        const int d = poset.dim(p);
        auto view = down_set(poset, p, true);
        auto result = homology(order_complex_chain(view.poset, ring, true), ring);

        std::ostringstream note;
        bool bad = false;
        for (int degree = result.lowest; degree <= result.top(); ++degree) {
            const auto& group = result.at(degree);
            if (degree == d - 1) {
                if (group.rank != knumbers.top(p)) {
                    bad = true;
                    note << "rank " << group.rank << " != K = " << knumbers.top(p) << "; ";
                }
                if (!group.torsion.empty()) {
                    bad = true;
                    note << "torsion present in the spherical degree; ";
                }
            } else if (!group.is_zero()) {
                bad = true;
                note << "nonzero homology in degree " << degree << "; ";
            }
        }
        if (bad) report.failures.push_back({p, note.str()});
    }
    return report;
}

SizeReport size_report(const GradedPoset& poset, const LocalCoveringFamily& family) {
    SizeReport report;
    KNumbers knumbers(poset, family);
    auto counts = chain_counts(poset);

    const int top = poset.dim();
    report.reduced_ranks.assign(top + 1, 0);
    report.oracle_counts.assign(top + 1, 0);
    for (int d = 0; d <= top; ++d) {
        report.reduced_ranks[d] = static_cast<long>(knumbers.degree_rank(poset, d));
        report.oracle_counts[d] = d < static_cast<int>(counts.size()) ? counts[d] : 0;
        report.reduced_total += report.reduced_ranks[d];
        report.oracle_total += report.oracle_counts[d];
    }
    return report;
}

EulerReport quillen_euler(const GradedPoset& quillen, long p) {
    EulerReport report;
    for (int n = 0; n <= quillen.dim(); ++n) {
        long long pw = 1;  // p^{n(n+1)/2}
        for (int k = 0; k < n * (n + 1) / 2; ++k) pw *= p;
        const long long count = static_cast<long long>(quillen.rank(n).size());
        report.formula += (n % 2 == 0 ? 1 : -1) * pw * count;
    }

    auto counts = chain_counts(quillen);
    for (size_t k = 0; k < counts.size(); ++k)
        report.oracle += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(counts[k]);
    report.agree = (report.formula == report.oracle);
    return report;
}

}  // namespace poshom
