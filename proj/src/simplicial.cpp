#include "poshom/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace poshom {

namespace {
const std::vector<std::vector<int>> kNoSimplices;

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}
}  // namespace

void SimplicialComplex::insert_closure(const std::vector<int>& simplex) {
    // all non-empty subsets
    const int k = static_cast<int>(simplex.size());
    for (int mask = 1; mask < (1 << k); ++mask) {
        std::vector<int> face;
        for (int i = 0; i < k; ++i)
            if (mask & (1 << i)) face.push_back(simplex[i]);
        const int d = static_cast<int>(face.size()) - 1;
        if (d >= static_cast<int>(by_dim_.size())) by_dim_.resize(d + 1);
        by_dim_[d].push_back(std::move(face));
    }
}

void SimplicialComplex::normalize() {
    for (auto& level : by_dim_) {
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
    }
    while (!by_dim_.empty() && by_dim_.back().empty()) by_dim_.pop_back();
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> vertices,
                                                 const std::vector<std::vector<int>>& facets) {
    SimplicialComplex c;
    c.vertex_labels_ = std::move(vertices);
    const int n = c.vertex_count();
    if (n > 0) c.by_dim_.resize(1);
    for (int v = 0; v < n; ++v) c.by_dim_[0].push_back({v});
    for (const auto& raw : facets) {
        auto f = sorted_unique(raw);
        for (int v : f)
            if (v < 0 || v >= n) fail(Errc::InputError, "facet vertex out of range");
        if (f.empty()) continue;
        c.insert_closure(f);
    }
    c.normalize();
    return c;
}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<std::string> vertices,
                                                    const std::vector<std::vector<int>>& simplices) {
    SimplicialComplex c;
    c.vertex_labels_ = std::move(vertices);
    const int n = c.vertex_count();
    for (const auto& raw : simplices) {
        auto s = sorted_unique(raw);
        if (s.size() != raw.size())
            fail(Errc::InputError, "simplex with repeated vertices");
        if (s.empty()) fail(Errc::InputError, "empty simplex");
        for (int v : s)
            if (v < 0 || v >= n) fail(Errc::InputError, "simplex vertex out of range");
        const int d = static_cast<int>(s.size()) - 1;
        if (d >= static_cast<int>(c.by_dim_.size())) c.by_dim_.resize(d + 1);
        c.by_dim_[d].push_back(std::move(s));
    }
    c.normalize();

    for (int v = 0; v < n; ++v)
        if (!c.contains({v}))
            fail(Errc::NotDownClosed, "vertex " + c.vertex_labels_[v] + " is not a 0-simplex");
    for (int d = 1; d <= c.dim(); ++d)
        for (const auto& s : c.by_dim_[d])
            for (size_t drop = 0; drop < s.size(); ++drop) {
                std::vector<int> face;
                for (size_t i = 0; i < s.size(); ++i)
                    if (i != drop) face.push_back(s[i]);
                if (!c.contains(face))
                    fail(Errc::NotDownClosed, "missing face of a listed simplex");
            }
    return c;
}

const std::vector<std::vector<int>>& SimplicialComplex::simplices_of_dim(int d) const {
    if (d < 0 || d > dim()) return kNoSimplices;
    return by_dim_[d];
}

long SimplicialComplex::simplex_count(int d) const {
    return static_cast<long>(simplices_of_dim(d).size());
}

long SimplicialComplex::total_simplices() const {
    long total = 0;
    for (int d = 0; d <= dim(); ++d) total += simplex_count(d);
    return total;
}

bool SimplicialComplex::contains(const std::vector<int>& simplex) const {
    const int d = static_cast<int>(simplex.size()) - 1;
    if (d < 0 || d > dim()) return false;
    const auto& level = by_dim_[d];
    return std::binary_search(level.begin(), level.end(), simplex);
}

FacePosetResult face_poset(const SimplicialComplex& complex) {
    std::vector<int> identity(complex.vertex_count());
    for (int i = 0; i < complex.vertex_count(); ++i) identity[i] = i;
    return face_poset(complex, identity);
}

FacePosetResult face_poset(const SimplicialComplex& complex,
                           const std::vector<int>& vertex_order) {
    if (static_cast<int>(vertex_order.size()) != complex.vertex_count())
        fail(Errc::InputError, "vertex order size mismatch");
    std::vector<int> pos(complex.vertex_count(), -1);
    for (size_t i = 0; i < vertex_order.size(); ++i) {
        int v = vertex_order[i];
        if (v < 0 || v >= complex.vertex_count() || pos[v] != -1)
            fail(Errc::InputError, "vertex order is not a permutation");
        pos[v] = static_cast<int>(i);
    }

    FacePosetResult out;
    // ids sorted by (dim, lex tuple): matches the chain-complex basis order
    std::map<std::vector<int>, int> id_of;
    std::vector<int> dims;
    std::vector<std::string> labels;
    for (int d = 0; d <= complex.dim(); ++d)
        for (const auto& s : complex.simplices_of_dim(d)) {
            id_of[s] = static_cast<int>(out.simplex_of.size());
            out.simplex_of.push_back(s);
            dims.push_back(d);
            std::string label;
            for (size_t i = 0; i < s.size(); ++i)
                label += (i ? "." : "") + complex.vertex_labels()[s[i]];
            labels.push_back(label);
        }

    std::vector<std::pair<int, int>> covers;
    for (int d = 1; d <= complex.dim(); ++d)
        for (const auto& s : complex.simplices_of_dim(d))
            for (size_t drop = 0; drop < s.size(); ++drop) {
                std::vector<int> face;
                for (size_t i = 0; i < s.size(); ++i)
                    if (i != drop) face.push_back(s[i]);
                covers.push_back({id_of.at(face), id_of.at(s)});
            }

    out.poset = GradedPoset::build(std::move(dims), covers, std::move(labels));

    // atom order = vertex order; atom ids are the 0-simplices in lex order,
    // i.e. vertex v has element id equal to its position among vertices
    std::vector<ElementId> atoms_in_order(complex.vertex_count());
    for (int v = 0; v < complex.vertex_count(); ++v)
        atoms_in_order[pos[v]] = id_of.at({v});
    out.atom_order = AtomOrder::from_sequence(out.poset, atoms_in_order);

    // canonical family: K_sigma = faces missing the order-minimal vertex of
    // sigma, eta adds it back
    LocalCoveringFamily family(out.poset.size());
    for (int p = 0; p < out.poset.size(); ++p) {
        const auto& s = out.simplex_of[p];
        int star = s[0];
        for (int v : s)
            if (pos[v] < pos[star]) star = v;
        std::vector<ElementId> members{kBottom};
        std::vector<ElementId> eta{id_of.at({star})};
        const int k = static_cast<int>(s.size());
        for (int mask = 1; mask < (1 << k); ++mask) {
            std::vector<int> tau;
            bool has_star = false;
            for (int i = 0; i < k; ++i)
                if (mask & (1 << i)) {
                    tau.push_back(s[i]);
                    has_star |= (s[i] == star);
                }
            if (has_star) continue;
            std::vector<int> up = tau;
            up.push_back(star);
            std::sort(up.begin(), up.end());
            members.push_back(id_of.at(tau));
            eta.push_back(id_of.at(up));
        }
        family.set(p, std::move(members), std::move(eta));
    }
    out.family = std::move(family);
    return out;
}

SimplicialComplex order_complex(const GradedPoset& poset) {
    // vertices are the poset elements (labels carried over); simplices the
    // non-empty chains, found by extending from each element upward
    std::vector<std::vector<int>> chains;
    std::vector<int> current;
    // elements sorted by (dim, id) so a chain is enumerated exactly once
    std::vector<int> order;
    for (int d = 0; d <= poset.dim(); ++d)
        for (ElementId p : poset.rank(d)) order.push_back(p);
    std::vector<int> rank_in_order(poset.size());
    for (size_t i = 0; i < order.size(); ++i) rank_in_order[order[i]] = static_cast<int>(i);

    std::function<void(int)> extend = [&](int last) {
        chains.push_back(current);
        for (size_t i = rank_in_order[last] + 1; i < order.size(); ++i) {
            int next = order[i];
            if (!poset.lt(last, next)) continue;
            current.push_back(next);
            extend(next);
            current.pop_back();
        }
    };
    for (int start : order) {
        current = {start};
        extend(start);
    }

    SimplicialComplex out = SimplicialComplex::from_simplices(poset.labels(), chains);
    return out;
}

std::vector<long> chain_counts(const GradedPoset& poset) {
    // independent of order_complex: count chains by dynamic programming on
    // "number of chains of length k ending at p"
    const int n = poset.size();
    std::vector<std::vector<long>> ending(n);
    std::vector<int> order;
    for (int d = 0; d <= poset.dim(); ++d)
        for (ElementId p : poset.rank(d)) order.push_back(p);

    long max_len = 0;
    for (int p : order) {
        ending[p] = {1};  // the chain {p}
        for (int q : order) {
            if (q == p || !poset.lt(q, p)) continue;
            for (size_t k = 0; k < ending[q].size(); ++k) {
                if (ending[p].size() <= k + 1) ending[p].resize(k + 2, 0);
                ending[p][k + 1] += ending[q][k];
            }
        }
        max_len = std::max(max_len, static_cast<long>(ending[p].size()));
    }
    std::vector<long> counts(max_len, 0);
    for (int p = 0; p < n; ++p)
        for (size_t k = 0; k < ending[p].size(); ++k) counts[k] += ending[p][k];
    return counts;
}

}  // namespace poshom
