#include "jord/multipoly.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

namespace jord {

int compare_monomials(const Monomial& a, const Monomial& b, MonomialOrder ord) {
    if (ord == MonomialOrder::Lex) {
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        }
        return 0;
    }
    // graded reverse lexicographic
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db ? 1 : -1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

MultiPoly MultiPoly::constant(size_t nvars, Rational c) {
    MultiPoly p(nvars);
    if (!c.is_zero()) p.terms_[Monomial(nvars, 0)] = std::move(c);
    return p;
}

MultiPoly MultiPoly::var(size_t nvars, size_t index, Rational coeff) {
    MultiPoly p(nvars);
    if (!coeff.is_zero()) {
        Monomial m(nvars, 0);
        m[index] = 1;
        p.terms_[std::move(m)] = std::move(coeff);
    }
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

Rational MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma;
            for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    MultiPoly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
    return r;
}

std::pair<Monomial, Rational> MultiPoly::leading(MonomialOrder ord) const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
        if (compare_monomials(it->first, best->first, ord) > 0) best = it;
    }
    return *best;
}

Rational MultiPoly::eval(const std::vector<Rational>& values) const {
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (size_t i = 0; i < m.size(); ++i)
            for (int k = 0; k < m[i]; ++k) term *= values[i];
        acc += term;
    }
    return acc;
}

MultiPoly MultiPoly::specialize(size_t index, const Rational& value) const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
        Rational f = c;
        for (int k = 0; k < m[index]; ++k) f *= value;
        if (f.is_zero()) continue;
        Monomial m2 = m;
        m2[index] = 0;
        r.add_term(m2, f);
    }
    return r;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print in descending grevlex for readability
    std::vector<const std::pair<const Monomial, Rational>*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
        return compare_monomials(a->first, b->first, MonomialOrder::GrevLex) > 0;
    });
    for (auto* t : ts) {
        const auto& [m, c] = *t;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        Rational a = c.abs();
        std::string mono;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty()) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << mono;
        }
    }
    return os.str();
}

} // namespace jord
