#include "poshom/group.hpp"

#include "poshom/ring.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace poshom {

PermutationGroup PermutationGroup::from_generators(int degree, const std::vector<Perm>& generators,
                                                   long element_cap) {
    if (degree < 0) fail(Errc::InputError, "negative degree");
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != degree)
            fail(Errc::NotAPermutation, "generator has wrong length");
        std::vector<char> seen(degree, 0);
        for (int v : g) {
            if (v < 0 || v >= degree || seen[v])
                fail(Errc::NotAPermutation, "generator image list is not a permutation");
            seen[v] = 1;
        }
    }

    PermutationGroup group;
    group.degree_ = degree;
    group.generators_ = generators;

    Perm identity(degree);
    for (int i = 0; i < degree; ++i) identity[i] = i;

    group.elements_.push_back(identity);
    group.index_[identity] = 0;
    // BFS, generators applied in input order: deterministic element ids
    for (size_t head = 0; head < group.elements_.size(); ++head) {
        Perm current = group.elements_[head];
        for (const auto& g : generators) {
            Perm next(degree);
            for (int i = 0; i < degree; ++i) next[i] = g[current[i]];
            if (group.index_.emplace(next, static_cast<int>(group.elements_.size())).second) {
                group.elements_.push_back(next);
                if (static_cast<long>(group.elements_.size()) > element_cap)
                    fail(Errc::GroupTooLarge,
                         "group exceeds element cap " + std::to_string(element_cap));
            }
        }
    }

    const long n = group.order();
    if (n <= kTableLimit) {
        group.mul_table_.assign(n * n, -1);
        for (long a = 0; a < n; ++a)
            for (long b = 0; b < n; ++b) {
                Perm prod(degree);
                for (int i = 0; i < degree; ++i)
                    prod[i] = group.elements_[b][group.elements_[a][i]];
                group.mul_table_[a * n + b] = group.index_.at(prod);
            }
    }
    return group;
}

int PermutationGroup::mul(int a, int b) const {
    if (!mul_table_.empty()) return mul_table_[static_cast<long>(a) * order() + b];
    Perm prod(degree_);
    for (int i = 0; i < degree_; ++i) prod[i] = elements_[b][elements_[a][i]];
    return index_.at(prod);
}

int PermutationGroup::inverse(int a) const {
    Perm inv(degree_);
    for (int i = 0; i < degree_; ++i) inv[elements_[a][i]] = i;
    return index_.at(inv);
}

int PermutationGroup::element_order(int a) const {
    int k = 1, x = a;
    while (x != 0) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

bool PermutationGroup::commute(int a, int b) const { return mul(a, b) == mul(b, a); }

int PermutationGroup::index_of(const Perm& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
}

bool Subgroup::contains_all(const Subgroup& other) const {
    return std::includes(members.begin(), members.end(), other.members.begin(),
                         other.members.end());
}

bool is_elementary_abelian(const PermutationGroup& group, const Subgroup& subgroup, long p) {
    const auto& m = subgroup.members;
    if (m.empty() || m[0] != 0) return false;  // identity must be present (and first, sorted)
    std::set<int> set(m.begin(), m.end());
    for (int a : m) {
        if (a != 0 && group.element_order(a) != p) return false;
        for (int b : m) {
            if (!set.count(group.mul(a, b))) return false;
            if (group.mul(a, b) != group.mul(b, a)) return false;
        }
        if (!set.count(group.inverse(a))) return false;
    }
    return true;
}

std::vector<std::vector<Subgroup>> elementary_abelian_subgroups(const PermutationGroup& group,
                                                                long p) {
    if (!is_prime(p)) fail(Errc::NotPrime, "not a prime: " + std::to_string(p));

    std::vector<std::vector<Subgroup>> by_rank;

    // rank 1: cyclic groups of the order-p elements, deduplicated
    std::set<std::vector<int>> seen;
    std::vector<Subgroup> rank1;
    std::vector<int> order_p_elements;
    for (int x = 1; x < group.order(); ++x) {
        if (group.element_order(x) != static_cast<int>(p)) continue;
        order_p_elements.push_back(x);
        std::vector<int> members{0};
        int y = x;
        while (y != 0) {
            members.push_back(y);
            y = group.mul(y, x);
        }
        std::sort(members.begin(), members.end());
        if (seen.insert(members).second) rank1.push_back({members, 1});
    }
    if (rank1.empty()) return by_rank;
    by_rank.push_back(std::move(rank1));

    // rank k+1: extend each rank-k subgroup by a commuting order-p element
    // outside it; dedupe by member set
    while (true) {
        const auto& prev = by_rank.back();
        std::set<std::vector<int>> next_seen;
        std::vector<Subgroup> next;
        for (const auto& v : prev) {
            std::set<int> vset(v.members.begin(), v.members.end());
            for (int x : order_p_elements) {
                if (vset.count(x)) continue;
                bool commutes = true;
                for (int m : v.members)
                    if (group.mul(m, x) != group.mul(x, m)) {
                        commutes = false;
                        break;
                    }
                if (!commutes) continue;
                // <V, x> = { v * x^j }
                std::vector<int> members;
                for (int m : v.members) {
                    int y = m;
                    for (long j = 0; j < p; ++j) {
                        members.push_back(y);
                        y = group.mul(y, x);
                    }
                }
                std::sort(members.begin(), members.end());
                members.erase(std::unique(members.begin(), members.end()), members.end());
                if (next_seen.insert(members).second)
                    next.push_back({members, v.rank + 1});
            }
        }
        if (next.empty()) break;
        by_rank.push_back(std::move(next));
    }
    return by_rank;
}

QuillenPosetResult quillen_poset(const PermutationGroup& group, long p) {
    return quillen_poset(group, p, {});
}

QuillenPosetResult quillen_poset(const PermutationGroup& group, long p,
                                 const std::vector<ElementId>& atom_sequence) {
    auto by_rank = elementary_abelian_subgroups(group, p);

    QuillenPosetResult out;
    out.prime = p;

    std::vector<int> dims;
    std::vector<std::string> labels;
    for (size_t r = 0; r < by_rank.size(); ++r) {
        // deterministic ids: rank-major, then lex on member sets
        std::sort(by_rank[r].begin(), by_rank[r].end(),
                  [](const Subgroup& a, const Subgroup& b) { return a.members < b.members; });
        for (const auto& sub : by_rank[r]) {
            out.subgroup_of.push_back(sub);
            dims.push_back(static_cast<int>(r));
            std::string label = "{";
            for (size_t i = 0; i < sub.members.size(); ++i)
                label += (i ? "," : "") + std::to_string(sub.members[i]);
            labels.push_back(label + "}");
        }
    }

    const int n = static_cast<int>(out.subgroup_of.size());
    std::vector<std::pair<int, int>> covers;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (dims[b] != dims[a] + 1) continue;
            if (out.subgroup_of[b].contains_all(out.subgroup_of[a])) covers.push_back({a, b});
        }
    out.poset = GradedPoset::build(std::move(dims), covers, std::move(labels));

    out.atom_order = atom_sequence.empty() ? AtomOrder::default_order(out.poset)
                                           : AtomOrder::from_sequence(out.poset, atom_sequence);

    // K_H = subgroups below H avoiding H*, eta adjoins H*; as member sets
    // <I, H*> is the product set because everything commutes
    LocalCoveringFamily family(out.poset.size());
    std::map<std::vector<int>, int> id_by_members;
    for (int i = 0; i < n; ++i) id_by_members[out.subgroup_of[i].members] = i;

    for (int h = 0; h < n; ++h) {
        ElementId star = out.atom_order.min_atom_below(out.poset, h);
        const auto& star_members = out.subgroup_of[star].members;
        std::vector<ElementId> members{kBottom};
        std::vector<ElementId> eta{star};
        for (ElementId i : out.poset.below(h, false)) {
            if (out.subgroup_of[i].contains_all(out.subgroup_of[star])) continue;
            std::vector<int> prod;
            for (int m : out.subgroup_of[i].members)
                for (int s : star_members) prod.push_back(group.mul(m, s));
            std::sort(prod.begin(), prod.end());
            prod.erase(std::unique(prod.begin(), prod.end()), prod.end());
            auto it = id_by_members.find(prod);
            if (it == id_by_members.end())
                fail(Errc::InputError, "product subgroup missing from enumeration");
            members.push_back(i);
            eta.push_back(it->second);
        }
        family.set(h, std::move(members), std::move(eta));
    }
    out.family = std::move(family);
    return out;
}

}  // namespace poshom
