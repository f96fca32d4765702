#include "poshom/poset.hpp"

#include "poshom/ring.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace poshom {

namespace {
const std::vector<ElementId> kEmptyRank;
}

GradedPoset GradedPoset::build(std::vector<int> dims,
                               const std::vector<std::pair<int, int>>& covers,
                               std::vector<std::string> labels) {
    GradedPoset p;
    p.n_ = static_cast<int>(dims.size());
    p.dims_ = std::move(dims);

    for (int i = 0; i < p.n_; ++i)
        if (p.dims_[i] < 0)
            fail(Errc::GradingViolation, "element " + std::to_string(i) + " has negative dim");

    if (labels.empty()) {
        labels.resize(p.n_);
        for (int i = 0; i < p.n_; ++i) labels[i] = std::to_string(i);
    }
    if (static_cast<int>(labels.size()) != p.n_)
        fail(Errc::InputError, "label count does not match element count");
    p.labels_ = std::move(labels);

    p.up_.assign(p.n_, {});
    p.down_.assign(p.n_, {});
    std::set<std::pair<int, int>> seen;
    for (auto [child, parent] : covers) {
        if (child < 0 || child >= p.n_ || parent < 0 || parent >= p.n_)
            fail(Errc::InputError, "cover index out of range");
        if (child == parent)
            fail(Errc::CycleDetected, "self-cover at element " + std::to_string(child));
        if (p.dims_[parent] != p.dims_[child] + 1)
            fail(Errc::GradingViolation,
                 "cover (" + std::to_string(child) + "," + std::to_string(parent) +
                     ") violates dim parent = dim child + 1");
        if (!seen.insert({child, parent}).second) continue;
        p.up_[child].push_back(parent);
        p.down_[parent].push_back(child);
    }
    for (auto& v : p.up_) std::sort(v.begin(), v.end());
    for (auto& v : p.down_) std::sort(v.begin(), v.end());

    // Reachability by BFS upward from each element, in dim order so the
    // closure is a single pass.
    p.leq_.assign(static_cast<size_t>(p.n_) * p.n_, 0);
    std::vector<int> order(p.n_);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return p.dims_[a] > p.dims_[b]; });
    for (int x : order) {
        p.leq_[static_cast<size_t>(x) * p.n_ + x] = 1;
        for (int up : p.up_[x])
            for (int y = 0; y < p.n_; ++y)
                if (p.leq_[static_cast<size_t>(up) * p.n_ + y])
                    p.leq_[static_cast<size_t>(x) * p.n_ + y] = 1;
    }

    p.top_dim_ = -1;
    for (int i = 0; i < p.n_; ++i) p.top_dim_ = std::max(p.top_dim_, p.dims_[i]);
    p.by_dim_.assign(p.top_dim_ + 1, {});
    for (int i = 0; i < p.n_; ++i) p.by_dim_[p.dims_[i]].push_back(i);

    for (int i = 0; i < p.n_; ++i)
        if (p.down_[i].empty() && p.dims_[i] != 0)
            fail(Errc::GradingViolation,
                 "minimal element " + std::to_string(i) + " has dim " + std::to_string(p.dims_[i]));

    if (p.n_ >= 2) {
        for (int m = 0; m < p.n_; ++m) {
            bool minimum = true;
            for (int x = 0; x < p.n_ && minimum; ++x) minimum = p.leq(m, x);
            if (minimum)
                fail(Errc::HasMinimum, "element " + std::to_string(m) + " is a minimum");
        }
    }
    return p;
}

void GradedPoset::check_element(ElementId p) const {
    if (p < 0 || p >= n_) fail(Errc::InputError, "element id out of range: " + std::to_string(p));
}

bool GradedPoset::leq(ElementId a, ElementId b) const {
    if (a == kBottom) return true;
    if (b == kBottom) return false;
    check_element(a);
    check_element(b);
    return leq_[static_cast<size_t>(a) * n_ + b] != 0;
}

const std::vector<ElementId>& GradedPoset::rank(int d) const {
    if (d < 0 || d > top_dim_) return kEmptyRank;
    return by_dim_[d];
}

std::vector<std::pair<int, int>> GradedPoset::cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int q = 0; q < n_; ++q)
        for (int p : up_[q]) out.push_back({q, p});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ElementId> GradedPoset::below(ElementId p, bool strict) const {
    check_element(p);
    std::vector<ElementId> out;
    for (int r = 0; r < n_; ++r)
        if (leq(r, p) && (!strict || r != p)) out.push_back(r);
    return out;
}

std::vector<ElementId> GradedPoset::atoms_below(ElementId p) const {
    check_element(p);
    std::vector<ElementId> out;
    for (int a : rank(0))
        if (leq(a, p)) out.push_back(a);
    return out;
}

std::vector<ElementId> GradedPoset::maximal_elements() const {
    std::vector<ElementId> out;
    for (int x = 0; x < n_; ++x)
        if (up_[x].empty()) out.push_back(x);
    return out;
}

std::optional<ElementId> GradedPoset::element_by_label(const std::string& label) const {
    for (int i = 0; i < n_; ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

InducedPoset induced_subposet(const GradedPoset& poset, std::vector<ElementId> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());

    InducedPoset out;
    out.to_parent = members;
    out.from_parent.assign(poset.size(), -1);
    for (size_t i = 0; i < members.size(); ++i) out.from_parent[members[i]] = static_cast<int>(i);

    std::vector<int> dims(members.size());
    std::vector<std::string> labels(members.size());
    for (size_t i = 0; i < members.size(); ++i) {
        dims[i] = poset.dim(members[i]);
        labels[i] = poset.label(members[i]);
    }

    // Covers of the induced order: y over x when nothing of the view sits
    // strictly between.  build() then rejects views whose covers skip a
    // dimension, i.e. views that are not graded posets in their own right.
    std::vector<std::pair<int, int>> covers;
    for (size_t xi = 0; xi < members.size(); ++xi)
        for (size_t yi = 0; yi < members.size(); ++yi) {
            if (xi == yi) continue;
            ElementId x = members[xi], y = members[yi];
            if (!poset.lt(x, y)) continue;
            bool direct = true;
            for (ElementId z : members)
                if (z != x && z != y && poset.lt(x, z) && poset.lt(z, y)) {
                    direct = false;
                    break;
                }
            if (direct) covers.push_back({static_cast<int>(xi), static_cast<int>(yi)});
        }
    out.poset = GradedPoset::build(std::move(dims), covers, std::move(labels));
    return out;
}

InducedPoset down_set(const GradedPoset& poset, ElementId p, bool strict) {
    return induced_subposet(poset, poset.below(p, strict));
}

std::optional<ElementId> join_below(const GradedPoset& poset, ElementId a, ElementId b,
                                    ElementId top) {
    if (a == kBottom) return b == kBottom ? std::optional<ElementId>(kBottom)
                                          : std::optional<ElementId>(b);
    if (b == kBottom) return a;
    std::vector<ElementId> uppers;
    for (int x = 0; x < poset.size(); ++x) {
        if (top != kBottom && !poset.leq(x, top)) continue;
        if (poset.leq(a, x) && poset.leq(b, x)) uppers.push_back(x);
    }
    std::vector<ElementId> minimal;
    for (ElementId x : uppers) {
        bool is_min = true;
        for (ElementId y : uppers)
            if (y != x && poset.leq(y, x)) {
                is_min = false;
                break;
            }
        if (is_min) minimal.push_back(x);
    }
    if (minimal.size() == 1) return minimal.front();
    return std::nullopt;
}

std::optional<ElementId> join(const GradedPoset& poset, ElementId a, ElementId b) {
    return join_below(poset, a, b, kBottom);
}

AtomModularReport is_atom_modular(const GradedPoset& poset) {
    AtomModularReport report;
    for (int p = 0; p < poset.size(); ++p) {
        const auto atoms = poset.atoms_below(p);
        const auto down = poset.below(p, false);
        for (ElementId a : atoms)
            for (ElementId q : down) {
                if (poset.leq(a, q)) continue;
                auto j = join_below(poset, a, q, p);
                if (!j) {
                    report.violations.push_back(
                        {p, a, q, "join missing or not unique in the down-set"});
                } else if (poset.dim(*j) != poset.dim(q) + 1) {
                    report.violations.push_back(
                        {p, a, q,
                         "join has dim " + std::to_string(poset.dim(*j)) + ", expected " +
                             std::to_string(poset.dim(q) + 1)});
                }
            }
    }
    return report;
}

// ---- local type classification ------------------------------------------

namespace {

// A reference model of an augmented down-set: element 0 is the bottom with
// dim -1; leq as a dense matrix.
struct Model {
    int n = 0;
    std::vector<int> dim;        // dim[0] == -1
    std::vector<char> leq;       // n*n
    std::vector<int> rank_size;  // per dim starting at -1

    bool le(int a, int b) const { return leq[static_cast<size_t>(a) * n + b] != 0; }
};

Model model_from_sets(const std::vector<std::vector<int>>& sets) {
    // sets[i] is the member list of node i; containment defines the order.
    Model m;
    m.n = static_cast<int>(sets.size());
    m.dim.resize(m.n);
    m.leq.assign(static_cast<size_t>(m.n) * m.n, 0);
    int max_dim = -1;
    for (int i = 0; i < m.n; ++i) {
        for (int j = 0; j < m.n; ++j) {
            bool sub = std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(), sets[i].end());
            m.leq[static_cast<size_t>(i) * m.n + j] = sub ? 1 : 0;
        }
    }
    // dim by longest chain below (bottom is the empty set).
    std::vector<int> order(m.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return sets[a].size() < sets[b].size(); });
    for (int i : order) {
        int d = -1;
        for (int j : order) {
            if (j == i || !m.le(j, i)) continue;
            d = std::max(d, m.dim[j]);
        }
        m.dim[i] = sets[i].empty() ? -1 : d + 1;
        max_dim = std::max(max_dim, m.dim[i]);
    }
    m.rank_size.assign(max_dim + 2, 0);
    for (int i = 0; i < m.n; ++i) ++m.rank_size[m.dim[i] + 1];
    return m;
}

// Boolean lattice on d+1 atoms: all subsets of {0..d}.
const Model& boolean_model(int d) {
    static std::map<int, Model> cache;
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<int>> sets;
    for (int mask = 0; mask < (1 << (d + 1)); ++mask) {
        std::vector<int> s;
        for (int v = 0; v <= d; ++v)
            if (mask & (1 << v)) s.push_back(v);
        sets.push_back(std::move(s));
    }
    return cache.emplace(d, model_from_sets(sets)).first->second;
}

// Subgroup lattice of C_p^{d+1}: subspaces of F_p^{d+1} as sorted lists of
// the nonzero vectors they contain.
const Model& subspace_model(long p, int d) {
    static std::map<std::pair<long, int>, Model> cache;
    auto key = std::make_pair(p, d);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const int n = d + 1;
    long total = 1;
    for (int i = 0; i < n; ++i) total *= p;
    // vectors are base-p digit strings; 0 is excluded from member lists
    auto add_vec = [&](long a, long b) {
        long out = 0, mult = 1;
        for (int i = 0; i < n; ++i) {
            long da = (a / mult) % p, db = (b / mult) % p;
            out += ((da + db) % p) * mult;
            mult *= p;
        }
        return out;
    };

    std::set<std::vector<int>> spaces;
    std::vector<std::vector<int>> frontier;
    spaces.insert(std::vector<int>{});  // zero subspace
    frontier.push_back(std::vector<int>{});
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& space : frontier) {
            std::set<long> mem(space.begin(), space.end());
            mem.insert(0);
            for (long v = 1; v < total; ++v) {
                if (mem.count(v)) continue;
                // span(space + v): add all multiples of v to every member
                std::set<long> bigger;
                for (long w : mem) {
                    long acc = w;
                    for (long k = 0; k < p; ++k) {
                        bigger.insert(acc);
                        acc = add_vec(acc, v);
                    }
                }
                std::vector<int> as_list;
                for (long w : bigger)
                    if (w != 0) as_list.push_back(static_cast<int>(w));
                if (spaces.insert(as_list).second) next.push_back(as_list);
            }
        }
        frontier = std::move(next);
    }
    std::vector<std::vector<int>> sets(spaces.begin(), spaces.end());
    return cache.emplace(key, model_from_sets(sets)).first->second;
}

Model model_of_down_set(const GradedPoset& poset, ElementId p) {
    auto members = poset.below(p, false);
    Model m;
    m.n = static_cast<int>(members.size()) + 1;
    m.dim.resize(m.n);
    m.leq.assign(static_cast<size_t>(m.n) * m.n, 0);
    m.dim[0] = -1;
    int max_dim = -1;
    for (size_t i = 0; i < members.size(); ++i) {
        m.dim[i + 1] = poset.dim(members[i]);
        max_dim = std::max(max_dim, m.dim[i + 1]);
    }
    for (int i = 0; i < m.n; ++i) m.leq[static_cast<size_t>(0) * m.n + i] = 1;
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = 0; j < members.size(); ++j)
            m.leq[(i + 1) * m.n + (j + 1)] = poset.leq(members[i], members[j]) ? 1 : 0;
    m.rank_size.assign(max_dim + 2, 0);
    for (int i = 0; i < m.n; ++i) ++m.rank_size[m.dim[i] + 1];
    return m;
}

// Backtracking isomorphism with rank/degree pre-screening.
bool models_isomorphic(const Model& a, const Model& b) {
    if (a.n != b.n || a.rank_size != b.rank_size) return false;

    auto degree_key = [](const Model& m, int x) {
        int below = 0, above = 0;
        for (int y = 0; y < m.n; ++y) {
            if (y == x) continue;
            if (m.le(y, x)) ++below;
            if (m.le(x, y)) ++above;
        }
        return std::make_pair(below, above);
    };
    std::vector<std::pair<int, int>> ka(a.n), kb(b.n);
    for (int x = 0; x < a.n; ++x) ka[x] = degree_key(a, x);
    for (int x = 0; x < b.n; ++x) kb[x] = degree_key(b, x);
    {
        auto sa = ka, sb = kb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }

    std::vector<int> order(a.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return a.dim[x] < a.dim[y]; });

    std::vector<int> map_a(a.n, -1);
    std::vector<char> used(b.n, 0);

    std::function<bool(size_t)> place = [&](size_t idx) {
        if (idx == order.size()) return true;
        int x = order[idx];
        for (int y = 0; y < b.n; ++y) {
            if (used[y] || a.dim[x] != b.dim[y] || ka[x] != kb[y]) continue;
            bool ok = true;
            for (size_t k = 0; k < idx && ok; ++k) {
                int x2 = order[k], y2 = map_a[x2];
                ok = (a.le(x, x2) == b.le(y, y2)) && (a.le(x2, x) == b.le(y2, y));
            }
            if (!ok) continue;
            map_a[x] = y;
            used[y] = 1;
            if (place(idx + 1)) return true;
            map_a[x] = -1;
            used[y] = 0;
        }
        return false;
    };
    return place(0);
}

bool down_set_is_boolean(const GradedPoset& poset, ElementId p) {
    const int d = poset.dim(p);
    Model m = model_of_down_set(poset, p);
    const Model& ref = boolean_model(d);
    return models_isomorphic(m, ref);
}

bool down_set_is_subspace_lattice(const GradedPoset& poset, ElementId p, long prime) {
    const int d = poset.dim(p);
    // pre-screen on atom count before generating the reference
    long expected_atoms = 0, pk = 1;
    for (int i = 0; i <= d; ++i) {
        expected_atoms += pk;
        pk *= prime;
    }
    if (static_cast<long>(poset.atoms_below(p).size()) != expected_atoms) return false;
    Model m = model_of_down_set(poset, p);
    const Model& ref = subspace_model(prime, d);
    return models_isomorphic(m, ref);
}

// Prime p with 1 + p + ... + p^d == atoms, if any.
std::optional<long> infer_prime(long atoms, int d) {
    if (d == 1) {
        long p = atoms - 1;
        return is_prime(p) ? std::optional<long>(p) : std::nullopt;
    }
    for (long p = 2; ; ++p) {
        if (!is_prime(p)) continue;
        long sum = 0, pk = 1;
        for (int i = 0; i <= d; ++i) {
            sum += pk;
            pk *= p;
        }
        if (sum == atoms) return p;
        if (sum > atoms) return std::nullopt;
    }
}

}  // namespace

bool is_locally_p_quillen(const GradedPoset& poset, long p) {
    if (!is_prime(p)) fail(Errc::NotPrime, "not a prime: " + std::to_string(p));
    for (int x = 0; x < poset.size(); ++x) {
        if (poset.dim(x) == 0) continue;  // the 2-chain, always fine
        if (!down_set_is_subspace_lattice(poset, x, p)) return false;
    }
    return true;
}

LocalTypeReport classify_local_type(const GradedPoset& poset, std::optional<long> p_hint) {
    LocalTypeReport report;
    report.zero_dimensional = poset.dim() <= 0;
    report.atom_modular = is_atom_modular(poset).ok();

    report.locally_simplicial = true;
    for (int x = 0; x < poset.size() && report.locally_simplicial; ++x) {
        if (poset.dim(x) == 0) continue;
        report.locally_simplicial = down_set_is_boolean(poset, x);
    }
    if (report.locally_simplicial) {
        report.label = LocalType::LocallySimplicial;
        return report;
    }

    // Find a consistent prime: hint first, else infer from any element of
    // dim >= 1.
    std::optional<long> candidate = p_hint;
    if (!candidate) {
        for (int x = 0; x < poset.size(); ++x) {
            if (poset.dim(x) < 1) continue;
            candidate = infer_prime(static_cast<long>(poset.atoms_below(x).size()), poset.dim(x));
            break;
        }
    }
    if (candidate && is_prime(*candidate) && is_locally_p_quillen(poset, *candidate)) {
        report.label = LocalType::LocallyPQuillen;
        report.quillen_prime = *candidate;
        return report;
    }

    report.label = report.atom_modular ? LocalType::LocallyAtomModularOnly : LocalType::Other;
    return report;
}

std::string LocalTypeReport::describe() const {
    switch (label) {
        case LocalType::LocallySimplicial: return "locally simplicial";
        case LocalType::LocallyPQuillen:
            return "locally " + std::to_string(quillen_prime.value_or(0)) + "-Quillen";
        case LocalType::LocallyAtomModularOnly: return "locally atom-modular only";
        case LocalType::Other: return "other";
    }
    return "?";
}

}  // namespace poshom
