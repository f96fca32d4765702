#include "poshom/homology.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "poshom/errors.hpp"

namespace poshom {

FreeChainComplex::FreeChainComplex(int lowest, std::vector<long> ranks, std::vector<IntMat> diffs,
                                   std::vector<std::vector<std::string>> labels,
                                   CoefficientRing ring)
    : lowest_(lowest),
      ranks_(std::move(ranks)),
      diffs_(std::move(diffs)),
      labels_(std::move(labels)),
      ring_(ring) {
    if (diffs_.size() + 1 != ranks_.size() && !(ranks_.empty() && diffs_.empty()))
        fail(Errc::InputError, "differential count must be rank count - 1");
    for (size_t i = 0; i < diffs_.size(); ++i)
        if (diffs_[i].rows() != ranks_[i] || diffs_[i].cols() != ranks_[i + 1])
            fail(Errc::InputError, "differential shape mismatch at degree " +
                                       std::to_string(lowest_ + static_cast<int>(i) + 1));
}

long FreeChainComplex::rank(int degree) const {
    int i = degree - lowest_;
    if (i < 0 || i >= static_cast<int>(ranks_.size())) return 0;
    return ranks_[i];
}

long FreeChainComplex::total_rank() const {
    long total = 0;
    for (long r : ranks_) total += r;
    return total;
}

bool FreeChainComplex::has_differential(int degree) const {
    int i = degree - lowest_ - 1;
    return i >= 0 && i < static_cast<int>(diffs_.size());
}

const IntMat& FreeChainComplex::differential(int degree) const {
    if (!has_differential(degree))
        fail(Errc::InputError, "no differential at degree " + std::to_string(degree));
    return diffs_[degree - lowest_ - 1];
}

IntMat& FreeChainComplex::mutable_differential(int degree) {
    if (!has_differential(degree))
        fail(Errc::InputError, "no differential at degree " + std::to_string(degree));
    return diffs_[degree - lowest_ - 1];
}

const std::vector<std::string>& FreeChainComplex::labels(int degree) const {
    static const std::vector<std::string> none;
    int i = degree - lowest_;
    if (i < 0 || i >= static_cast<int>(labels_.size())) return none;
    return labels_[i];
}

bool FreeChainComplex::is_complex() const {
    for (size_t i = 0; i + 1 < diffs_.size(); ++i)
        if (!diffs_[i].mul(diffs_[i + 1]).is_zero()) return false;
    return true;
}

FreeChainComplex simplicial_chain_complex(const SimplicialComplex& complex,
                                          const CoefficientRing& ring, bool augmented) {
    const int top = complex.dim();
    const int lowest = augmented ? -1 : 0;
    if (top < 0) {
        // empty complex: just the empty simplex when augmented
        if (augmented)
            return FreeChainComplex(-1, {1}, {}, {{"()"}}, ring);
        return FreeChainComplex(0, {}, {}, {}, ring);
    }

    std::vector<long> ranks;
    std::vector<std::vector<std::string>> labels;
    if (augmented) {
        ranks.push_back(1);
        labels.push_back({"()"});
    }
    std::vector<std::map<std::vector<int>, long>> row_of(top + 1);
    for (int d = 0; d <= top; ++d) {
        const auto& simplices = complex.simplices_of_dim(d);
        ranks.push_back(static_cast<long>(simplices.size()));
        std::vector<std::string> level;
        for (size_t i = 0; i < simplices.size(); ++i) {
            row_of[d][simplices[i]] = static_cast<long>(i);
            std::string text;
            for (size_t k = 0; k < simplices[i].size(); ++k)
                text += (k ? "." : "") + complex.vertex_labels()[simplices[i][k]];
            level.push_back(text);
        }
        labels.push_back(level);
    }

    std::vector<IntMat> diffs;
    if (augmented) {
        IntMat aug(1, ranks[1]);
        for (long c = 0; c < ranks[1]; ++c) aug.at(0, c) = 1;
        diffs.push_back(std::move(aug));
    }
    for (int d = 1; d <= top; ++d) {
        const auto& simplices = complex.simplices_of_dim(d);
        IntMat m(complex.simplex_count(d - 1), complex.simplex_count(d));
        for (size_t col = 0; col < simplices.size(); ++col) {
            const auto& s = simplices[col];
            for (size_t drop = 0; drop < s.size(); ++drop) {
                std::vector<int> facet;
                for (size_t i = 0; i < s.size(); ++i)
                    if (i != drop) facet.push_back(s[i]);
                long row = row_of[d - 1].at(facet);
                m.at(row, static_cast<long>(col)) += (drop % 2 == 0) ? 1 : -1;
            }
        }
        diffs.push_back(std::move(m));
    }
    return FreeChainComplex(lowest, std::move(ranks), std::move(diffs), std::move(labels), ring);
}

FreeChainComplex order_complex_chain(const GradedPoset& poset, const CoefficientRing& ring,
                                     bool augmented) {
    return simplicial_chain_complex(order_complex(poset), ring, augmented);
}

const HomologyGroup& HomologyResult::at(int degree) const {
    static const HomologyGroup zero;
    int i = degree - lowest;
    if (i < 0 || i >= static_cast<int>(groups.size())) return zero;
    return groups[i];
}

bool HomologyResult::has(int degree) const {
    int i = degree - lowest;
    return i >= 0 && i < static_cast<int>(groups.size());
}

std::string HomologyResult::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < groups.size(); ++i) {
        os << "H_" << (lowest + static_cast<int>(i)) << ": rank " << groups[i].rank;
        if (!groups[i].torsion.empty()) {
            os << ", torsion [";
            for (size_t k = 0; k < groups[i].torsion.size(); ++k)
                os << (k ? "," : "") << groups[i].torsion[k].get_str();
            os << "]";
        }
        os << "\n";
    }
    return os.str();
}

namespace {

// Invariant-factor chain of a finite abelian group given as a multiset of
// cyclic orders (all > 1): combine prime power exponents largest-first.
std::vector<mpz_class> invariant_factor_chain(std::vector<long> orders) {
    std::map<long, std::vector<int>> exps;  // prime -> exponents, one per cyclic part
    for (long c : orders) {
        long rest = c;
        for (long q = 2; q * q <= rest; ++q)
            while (rest % q == 0) {
                int e = 0;
                while (rest % q == 0) {
                    rest /= q;
                    ++e;
                }
                exps[q].push_back(e);
            }
        if (rest > 1) exps[rest].push_back(1);
    }
    size_t parts = 0;
    for (auto& [q, list] : exps) {
        std::sort(list.rbegin(), list.rend());
        parts = std::max(parts, list.size());
    }
    std::vector<mpz_class> factors(parts, 1);
    for (auto& [q, list] : exps)
        for (size_t i = 0; i < list.size(); ++i) {
            mpz_class power;
            mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(q),
                          static_cast<unsigned long>(list[i]));
            factors[i] *= power;  // factors descending in divisibility
        }
    std::sort(factors.begin(), factors.end());
    return factors;
}

}  // namespace

HomologyResult homology(const FreeChainComplex& complex, const CoefficientRing& ring) {
    if (!complex.is_complex()) fail(Errc::NotAComplex, "d o d != 0");

    HomologyResult out;
    out.lowest = complex.lowest();
    const int top = complex.top();
    if (top < out.lowest) return out;

    // per-degree data of the adjacent differentials
    auto rank_of = [&](int degree) -> long {
        if (!complex.has_differential(degree)) return 0;
        const IntMat& m = complex.differential(degree);
        switch (ring.kind) {
            case CoefficientRing::Kind::Rationals:
                return rank_over_rationals(m);
            case CoefficientRing::Kind::PrimeField:
                return rank_mod_p(m, ring.modulus);
            default:
                return smith_normal_form(m).rank();
        }
    };

    for (int degree = out.lowest; degree <= top; ++degree) {
        HomologyGroup group;
        const long chains = complex.rank(degree);

        if (ring.kind == CoefficientRing::Kind::Rationals ||
            ring.kind == CoefficientRing::Kind::PrimeField) {
            group.rank = chains - rank_of(degree) - rank_of(degree + 1);
        } else {
            // integer SNF of both neighbors
            SmithResult below = complex.has_differential(degree)
                                    ? smith_normal_form(complex.differential(degree))
                                    : SmithResult{};
            SmithResult above = complex.has_differential(degree + 1)
                                    ? smith_normal_form(complex.differential(degree + 1))
                                    : SmithResult{};
            const long betti = chains - below.rank() - above.rank();
            std::vector<mpz_class> torsion;
            for (const auto& f : above.factors)
                if (f > 1) torsion.push_back(f);

            if (ring.kind == CoefficientRing::Kind::Integers) {
                group.rank = betti;
                group.torsion = std::move(torsion);
            } else {
                // Z/m: H_n(C (x) Z/m) = (Z/m)^betti (+) tor(H_n) (x) Z/m
                //                        (+) Tor(H_{n-1}, Z/m)
                const long m = ring.modulus;
                std::vector<long> orders(betti, m);
                for (const auto& f : torsion) {
                    mpz_class g = gcd(f, mpz_class(m));
                    if (g > 1) orders.push_back(g.get_si());
                }
                // torsion of the degree below: factors > 1 of its incoming map
                for (const auto& f : below.factors) {
                    if (f <= 1) continue;
                    mpz_class g = gcd(f, mpz_class(m));
                    if (g > 1) orders.push_back(g.get_si());
                }
                auto factors = invariant_factor_chain(orders);
                for (const auto& f : factors) {
                    if (f == m)
                        ++group.rank;
                    else
                        group.torsion.push_back(f);
                }
            }
        }
        out.groups.push_back(std::move(group));
    }
    return out;
}

bool homology_equal(const HomologyResult& a, const HomologyResult& b) {
    const int lo = std::min(a.lowest, b.lowest);
    const int hi = std::max(a.top(), b.top());
    for (int degree = lo; degree <= hi; ++degree)
        if (!(a.at(degree) == b.at(degree))) return false;
    return true;
}

long long euler_characteristic(const FreeChainComplex& complex) {
    long long chi = 0;
    for (int degree = std::max(0, complex.lowest()); degree <= complex.top(); ++degree)
        chi += (degree % 2 == 0 ? 1 : -1) * static_cast<long long>(complex.rank(degree));
    return chi;
}

}  // namespace poshom
