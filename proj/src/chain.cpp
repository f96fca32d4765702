#include "poshom/chain.hpp"

#include <sstream>

namespace poshom {

Chain Chain::empty_tuple(const mpz_class& coeff) {
    Chain c(-1);
    c.add_term({}, coeff);
    return c;
}

Chain Chain::single(std::vector<ElementId> tuple, const mpz_class& coeff) {
    Chain c(static_cast<int>(tuple.size()) - 1);
    c.add_term(tuple, coeff);
    return c;
}

mpz_class Chain::coefficient(const std::vector<ElementId>& tuple) const {
    auto it = terms_.find(tuple);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void Chain::add_term(const std::vector<ElementId>& tuple, const mpz_class& coeff) {
    if (coeff == 0) return;
    if (static_cast<int>(tuple.size()) != degree_ + 1)
        fail(Errc::InputError, "tuple length does not match chain degree");
    auto [it, inserted] = terms_.emplace(tuple, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Chain& Chain::operator+=(const Chain& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) degree_ = rhs.degree_;
    if (degree_ != rhs.degree_) fail(Errc::InputError, "degree mismatch in chain sum");
    for (const auto& [tuple, coeff] : rhs.terms_) add_term(tuple, coeff);
    return *this;
}

Chain& Chain::operator-=(const Chain& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) degree_ = rhs.degree_;
    if (degree_ != rhs.degree_) fail(Errc::InputError, "degree mismatch in chain sum");
    for (const auto& [tuple, coeff] : rhs.terms_) add_term(tuple, -coeff);
    return *this;
}

Chain Chain::operator+(const Chain& rhs) const {
    Chain out = *this;
    out += rhs;
    return out;
}

Chain Chain::operator-(const Chain& rhs) const {
    Chain out = *this;
    out -= rhs;
    return out;
}

Chain Chain::operator-() const { return scaled(-1); }

Chain Chain::scaled(const mpz_class& c) const {
    Chain out(degree_);
    if (c == 0) return out;
    for (const auto& [tuple, coeff] : terms_) out.terms_[tuple] = coeff * c;
    return out;
}

std::string Chain::to_string(const GradedPoset& poset) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [tuple, coeff] : terms_) {
        mpz_class a = abs(coeff);
        os << (coeff < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (a != 1) os << a.get_str() << "*";
        if (tuple.empty()) {
            os << "()";
        } else {
            for (size_t i = 0; i < tuple.size(); ++i)
                os << (i ? "<" : "") << poset.label(tuple[i]);
        }
        first = false;
    }
    return os.str();
}

Chain face(const Chain& z, int i) {
    if (z.degree() < 0) fail(Errc::InputError, "no faces in degree -1");
    if (i < 0 || i > z.degree()) fail(Errc::InputError, "face index out of range");
    Chain out(z.degree() - 1);
    for (const auto& [tuple, coeff] : z.terms()) {
        std::vector<ElementId> smaller;
        smaller.reserve(tuple.size() - 1);
        for (size_t k = 0; k < tuple.size(); ++k)
            if (static_cast<int>(k) != i) smaller.push_back(tuple[k]);
        out.add_term(smaller, coeff);
    }
    return out;
}

Chain boundary(const Chain& z) {
    if (z.degree() < 0) return Chain(-2);  // zero chain; degree tag unused
    Chain out(z.degree() - 1);
    for (int i = 0; i <= z.degree(); ++i) {
        Chain f = face(z, i);
        if (i % 2 == 0)
            out += f;
        else
            out -= f;
    }
    return out;
}

bool is_cycle(const Chain& z) { return boundary(z).is_zero(); }

Chain suspension(const GradedPoset& poset, const Chain& z, ElementId p) {
    Chain out(z.degree() + 1);
    for (const auto& [tuple, coeff] : z.terms()) {
        for (ElementId x : tuple)
            if (!poset.lt(x, p))
                fail(Errc::SuspensionOutOfRange,
                     "tuple not strictly below " + poset.label(p));
        std::vector<ElementId> bigger = tuple;
        bigger.push_back(p);
        out.add_term(bigger, coeff);
    }
    return out;
}

Chain truncation(const Chain& z, ElementId p) {
    Chain out(z.degree() - 1);
    if (z.degree() < 0) return out;
    for (const auto& [tuple, coeff] : z.terms()) {
        if (tuple.back() != p) continue;
        std::vector<ElementId> smaller(tuple.begin(), tuple.end() - 1);
        out.add_term(smaller, coeff);
    }
    return out;
}

bool supported_below(const GradedPoset& poset, const Chain& z, ElementId below) {
    for (const auto& [tuple, coeff] : z.terms()) {
        for (size_t i = 0; i + 1 < tuple.size(); ++i)
            if (!poset.lt(tuple[i], tuple[i + 1])) return false;
        for (ElementId x : tuple)
            if (below != kBottom && !poset.lt(x, below)) return false;
    }
    return true;
}

}  // namespace poshom
