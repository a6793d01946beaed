#pragma once

#include "jord/rational.hpp"

#include <map>
#include <vector>

namespace jord {

// Exponent tuple; arity fixed per polynomial ring instance.
using Monomial = std::vector<int>;

enum class MonomialOrder { GrevLex, Lex };

// cmp > 0 when a comes after b (a is larger) in the given order.
int compare_monomials(const Monomial& a, const Monomial& b, MonomialOrder ord);

inline int total_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

// Sparse multivariate polynomial over the rationals with named variables.
// Invariants: no zero coefficients stored; all exponent tuples share the arity.
class MultiPoly {
public:
    MultiPoly() : nvars_(0) {}
    explicit MultiPoly(size_t nvars) : nvars_(nvars) {}
    static MultiPoly constant(size_t nvars, Rational c);
    static MultiPoly var(size_t nvars, size_t index, Rational coeff = Rational(1));

    size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    Rational coeff(const Monomial& m) const;

    void add_term(const Monomial& m, const Rational& c);

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator*(const Rational& c) const;
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    // Leading term with respect to ord.
    std::pair<Monomial, Rational> leading(MonomialOrder ord) const;

    MultiPoly substitute(const std::vector<Rational>& values) const = delete;
    Rational eval(const std::vector<Rational>& values) const;
    // Replaces variable `index` by a constant; arity is preserved.
    MultiPoly specialize(size_t index, const Rational& value) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    size_t nvars_;
    std::map<Monomial, Rational> terms_;
};

} // namespace jord
