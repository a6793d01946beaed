#include "jord/unipoly.hpp"

namespace jord {

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::operator-() const {
    UniPoly r;
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.coeffs_.size()) c[i] += a.coeffs_[i];
        if (i < b.coeffs_.size()) c[i] += b.coeffs_[i];
    }
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const Rational& c) const {
    if (c.is_zero()) return {};
    UniPoly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    UniPoly r = *this;
    std::vector<Rational> q;
    if (r.degree() >= d.degree()) q.assign(r.degree() - d.degree() + 1, Rational(0));
    Rational lead_inv = d.leading().inverse();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int shift = r.degree() - d.degree();
        Rational f = r.leading() * lead_inv;
        q[shift] = f;
        std::vector<Rational> sub(shift, Rational(0));
        sub.insert(sub.end(), d.coeffs_.begin(), d.coeffs_.end());
        r = r - UniPoly(std::move(sub)) * f;
    }
    return {UniPoly(std::move(q)), r};
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return {};
    return *this * leading().inverse();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x.divmod(y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int d = degree(); d >= 0; --d) {
        const Rational& c = coeffs_[d];
        if (c.is_zero()) continue;
        bool first = s.empty();
        if (first) {
            if (c.sign() < 0) s += "-";
        } else {
            s += c.sign() < 0 ? " - " : " + ";
        }
        Rational a = c.abs();
        if (d == 0) {
            s += a.str();
        } else {
            std::string pw = d == 1 ? var : var + "^" + std::to_string(d);
            s += a.is_one() ? pw : a.str() + "*" + pw;
        }
    }
    return s;
}

} // namespace jord
