#include "doctest.h"

#include "jord/groebner.hpp"
#include "jord/matrix.hpp"

#include <random>

using namespace jord;

namespace {

MultiPoly mp_const(size_t n, long long c) { return MultiPoly::constant(n, Rational(c)); }

} // namespace

TEST_CASE("monomial orders") {
    Monomial a{2, 0}, b{1, 1}, c{0, 2};
    // grevlex with equal degree: compare last exponent reversed
    CHECK(compare_monomials(a, b, MonomialOrder::GrevLex) > 0);
    CHECK(compare_monomials(b, c, MonomialOrder::GrevLex) > 0);
    CHECK(compare_monomials(a, c, MonomialOrder::Lex) > 0);
    Monomial d{0, 3};
    CHECK(compare_monomials(d, a, MonomialOrder::GrevLex) > 0); // higher degree wins
    CHECK(compare_monomials(a, d, MonomialOrder::Lex) > 0);     // lex ignores degree
}

TEST_CASE("emptiness: spec triples") {
    // {x-1, x-2} -> empty over C
    auto x = MultiPoly::var(1, 0);
    CHECK(groebner_emptiness({x - mp_const(1, 1), x - mp_const(1, 2)}) == Emptiness::EmptyOverC);
    // {x^2+1} -> nonempty over C (roots +-i)
    CHECK(groebner_emptiness({x * x + mp_const(1, 1)}) == Emptiness::NonEmptyOverC);
    // {x^2+y^2, x-y} -> nonempty (origin)
    auto x2 = MultiPoly::var(2, 0), y2 = MultiPoly::var(2, 1);
    CHECK(groebner_emptiness({x2 * x2 + y2 * y2, x2 - y2}) == Emptiness::NonEmptyOverC);
}

TEST_CASE("emptiness agrees with gaussian elimination on linear systems") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> val(-3, 3), dim(1, 3), cnt(1, 4);
    for (int iter = 0; iter < 40; ++iter) {
        size_t n = dim(rng), m = cnt(rng);
        // random affine system A x = b
        Matrix<Rational> a(m, n);
        std::vector<Rational> b(m);
        std::vector<MultiPoly> gens;
        for (size_t i = 0; i < m; ++i) {
            MultiPoly p(n);
            for (size_t j = 0; j < n; ++j) {
                int v = val(rng);
                a(i, j) = Rational(v);
                p = p + MultiPoly::var(n, j, Rational(v));
            }
            int rhs = val(rng);
            b[i] = Rational(rhs);
            gens.push_back(p - mp_const(n, rhs));
        }
        // solvable iff rank(A) == rank([A|b])
        Matrix<Rational> aug(m, n + 1);
        for (size_t i = 0; i < m; ++i) {
            for (size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
            aug(i, n) = b[i];
        }
        bool solvable = a.rank() == aug.rank();
        auto verdict = groebner_emptiness(gens);
        CHECK(verdict == (solvable ? Emptiness::NonEmptyOverC : Emptiness::EmptyOverC));
    }
}

TEST_CASE("buchberger: groebner basis property spot checks") {
    // ideal (x^2 - y, y^2 - x): solutions are x = y = roots of x^3 = x... quotient dim 4
    auto x = MultiPoly::var(2, 0), y = MultiPoly::var(2, 1);
    auto gb = groebner_basis({x * x - y, y * y - x});
    // every s-polynomial reduces to zero (defining property)
    for (size_t i = 0; i < gb.size(); ++i)
        for (size_t j = i + 1; j < gb.size(); ++j) {
            auto [mi, ci] = gb[i].leading(MonomialOrder::GrevLex);
            auto [mj, cj] = gb[j].leading(MonomialOrder::GrevLex);
            Monomial l(mi.size());
            for (size_t k = 0; k < l.size(); ++k) l[k] = std::max(mi[k], mj[k]);
            MultiPoly si(2), sj(2);
            Monomial qi = l, qj = l;
            for (size_t k = 0; k < l.size(); ++k) {
                qi[k] -= mi[k];
                qj[k] -= mj[k];
            }
            MultiPoly ti(2);
            ti.add_term(qi, ci.inverse());
            MultiPoly tj(2);
            tj.add_term(qj, cj.inverse());
            MultiPoly s = ti * gb[i] - tj * gb[j];
            CHECK(normal_form(s, gb, MonomialOrder::GrevLex).is_zero());
        }
    auto qd = quotient_dimension(gb, MonomialOrder::GrevLex);
    REQUIRE(qd.has_value());
    CHECK(*qd == 4);
}

TEST_CASE("quotient dimension: positive-dimensional is detected") {
    auto x = MultiPoly::var(2, 0), y = MultiPoly::var(2, 1);
    auto gb = groebner_basis({x * y});
    CHECK_FALSE(quotient_dimension(gb, MonomialOrder::GrevLex).has_value());
    auto gb2 = groebner_basis({x - y});
    CHECK_FALSE(quotient_dimension(gb2, MonomialOrder::GrevLex).has_value());
}

TEST_CASE("budget exhaustion reports undecided, never a wrong answer") {
    auto x = MultiPoly::var(3, 0), y = MultiPoly::var(3, 1), z = MultiPoly::var(3, 2);
    std::vector<MultiPoly> gens = {x * x * y - z * z, y * y * z - x, z * z * x - y * y};
    GroebnerOptions tiny;
    tiny.budget = 3;
    CHECK(groebner_emptiness(gens, tiny) == Emptiness::Undecided);
}

TEST_CASE("lex order elimination") {
    // (x - y, y^2 - 1) in lex x > y eliminates x
    auto x = MultiPoly::var(2, 0), y = MultiPoly::var(2, 1);
    GroebnerOptions lex;
    lex.order = MonomialOrder::Lex;
    auto gb = groebner_basis({x - y, y * y - mp_const(2, 1)}, lex);
    bool has_univariate_in_y = false;
    for (const auto& g : gb) {
        bool only_y = true;
        for (const auto& [m, c] : g.terms())
            if (m[0] > 0) only_y = false;
        if (only_y && !g.is_constant()) has_univariate_in_y = true;
    }
    CHECK(has_univariate_in_y);
}
