#include "doctest.h"

#include "jord/catalog.hpp"
#include "jord/nondegeneration.hpp"
#include "jord/reference_claims.hpp"

#include <random>

using namespace jord;

namespace {

std::mt19937 rng(31415926);

// random triangular map fixing the descending flag <e_i, ..., e_n>
Matrix<Rational> random_descending_triangular(size_t n) {
    std::uniform_int_distribution<int> val(-4, 4), dval(1, 3);
    Matrix<Rational> g(n, n);
    for (size_t j = 0; j < n; ++j) {
        int d = dval(rng);
        g(j, j) = Rational(d);
        for (size_t i = j + 1; i < n; ++i) g(i, j) = Rational(val(rng));
    }
    return g;
}

} // namespace

TEST_CASE("closed-set expansion and membership") {
    auto r1 = published_closed_set_R1();
    // expanded set contains the explicit triple and its flag consequences
    auto exp = r1.spec.expanded();
    CHECK(exp.count({1, 1, 2}));
    CHECK(exp.count({2, 2, 1})); // from S2^2 <= S3
    CHECK(exp.count({2, 2, 2}));
    CHECK(exp.count({2, 3, 3})); // from S2 S3 = 0
    CHECK(exp.count({3, 2, 3}));
    CHECK_FALSE(exp.count({1, 1, 1}));
    CHECK_FALSE(exp.count({1, 2, 2}));

    // membership of T10 and T13 in their printed bases
    for (const auto& [label, basis] : r1.members) {
        Algebra a = constants_in_basis(catalog(label), basis);
        CAPTURE(label);
        CHECK(membership(r1.spec, a));
    }
    // T17 in its printed basis is not a member (its first square is n2)
    CHECK_FALSE(membership(r1.spec, catalog("T17")));
    // the zero algebra satisfies every vanishing constraint
    CHECK(membership(r1.spec, Algebra(3)));

    auto r2 = published_closed_set_R2();
    for (const auto& [label, basis] : r2.members) {
        Algebra a = constants_in_basis(catalog(label), basis);
        CAPTURE(label);
        CHECK(membership(r2.spec, a));
    }
}

TEST_CASE("borel stability: flag conditions pass, low-index coordinates fail") {
    // pure flag conditions are stable
    CHECK(borel_stability(stable_flag_spec_dim3()));

    // the singleton {c_11^1 = 0} in dim 2 is unstable
    ClosedSetSpec s;
    s.dim = 2;
    s.vanishing = {{1, 1, 1}};
    CHECK_FALSE(borel_stability(s));
    // and a triangular map over a member exhibits the escape
    Algebra nu(2);
    nu.at(1, 1, 0) = Rational(1); // e2^2 = e1
    CHECK(membership(s, nu));
    Matrix<Rational> g(2, 2);
    g(0, 0) = Rational(1);
    g(1, 0) = Rational(1);
    g(1, 1) = Rational(1); // e1 -> e1 + e2 fixes the flag <e2>
    Algebra moved = change_basis(nu, BasisChange{g});
    CHECK_FALSE(membership(s, moved));

    // whole-coordinate-space spec: trivially stable
    ClosedSetSpec zero;
    zero.dim = 2;
    zero.flags = {{1, 1, 3}}; // S1 S1 = 0
    CHECK(borel_stability(zero));

    // the printed mixed specs do not pass the mechanical criterion
    CHECK_FALSE(borel_stability(published_closed_set_R1().spec));
    CHECK_FALSE(borel_stability(published_closed_set_R2().spec));
}

TEST_CASE("membership of a stable spec is preserved under triangular maps") {
    auto spec = stable_flag_spec_dim3();
    REQUIRE(borel_stability(spec));
    for (const auto& label : {"T10", "T13", "T17", "T19"}) {
        Algebra a = catalog(label);
        if (!membership(spec, a)) continue;
        for (int it = 0; it < 25; ++it) {
            auto g = random_descending_triangular(3);
            CAPTURE(label);
            CHECK(membership(spec, change_basis(a, BasisChange{g})));
        }
    }
}

TEST_CASE("instability of the printed specs is witnessed inside the variety") {
    // T09 belongs to R1 in its catalog basis, and a triangular map moves its
    // structure out of the set
    auto r1 = published_closed_set_R1();
    Algebra t09 = catalog("T09");
    REQUIRE(membership(r1.spec, t09));
    Matrix<Rational> g = Matrix<Rational>::identity(3);
    g(1, 0) = Rational(1); // e1 -> e1 + e2, descending-triangular
    CHECK_FALSE(membership(r1.spec, change_basis(t09, BasisChange{g})));
}

TEST_CASE("bruhat cells cover the general linear group") {
    // every invertible matrix factors as b * P_w * u with b descending-
    // triangular and u lower-unitriangular supported on the co-inversions of
    // w; membership in the cell of w is the northeast rank profile (invariant
    // under both factors)
    std::uniform_int_distribution<int> val(-5, 5);
    auto cell_fits = [](const Matrix<Rational>& m, const std::vector<int>& w) {
        size_t n = m.rows();
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c) {
                size_t prank = 0;
                for (size_t i = c; i < n; ++i)
                    if (static_cast<size_t>(w[i]) <= r) ++prank;
                Matrix<Rational> sub(r + 1, n - c);
                for (size_t i = 0; i <= r; ++i)
                    for (size_t j = c; j < n; ++j) sub(i, j - c) = m(i, j);
                if (sub.rank() != prank) return false;
            }
        return true;
    };
    std::vector<std::vector<int>> perms;
    {
        std::vector<int> p{0, 1, 2};
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }
    for (int it = 0; it < 40; ++it) {
        Matrix<Rational> m(3, 3);
        do {
            for (size_t i = 0; i < 3; ++i)
                for (size_t j = 0; j < 3; ++j) m(i, j) = Rational(val(rng));
        } while (m.determinant() == Rational(0));
        int hits = 0;
        for (const auto& w : perms)
            if (cell_fits(m, w)) ++hits;
        CHECK(hits == 1); // the cells partition the group
    }
    // an explicit b * P_w * u with the co-inversion support lands in cell w,
    // so dropping b loses nothing beyond triangular reach
    for (const auto& w : perms) {
        Matrix<Rational> b(3, 3);
        for (size_t j = 0; j < 3; ++j) {
            b(j, j) = Rational(1 + static_cast<int>(j));
            for (size_t i = j + 1; i < 3; ++i) b(i, j) = Rational(val(rng));
        }
        Matrix<Rational> u = Matrix<Rational>::identity(3);
        for (size_t j = 0; j < 3; ++j)
            for (size_t i = j + 1; i < 3; ++i)
                if (w[i] < w[j]) u(i, j) = Rational(val(rng));
        Matrix<Rational> pw(3, 3);
        for (size_t i = 0; i < 3; ++i) pw(static_cast<size_t>(w[i]), i) = Rational(1);
        CHECK(cell_fits(b * pw * u, w));
    }
}

TEST_CASE("orbit exclusion decides the printed disjointness claims") {
    GroebnerOptions opts;
    auto r1 = published_closed_set_R1();
    auto rep = orbit_exclusion(r1.spec, catalog("T17"), opts, false);
    CHECK(rep.verdict == Exclusion::Excluded);
    CHECK_FALSE(rep.stability_ok);
    CHECK(rep.cells.size() == 6);
    for (const auto& c : rep.cells) CHECK(c.verdict == Emptiness::EmptyOverC);

    auto r2 = published_closed_set_R2();
    auto rep2 = orbit_exclusion(r2.spec, catalog("T07"), opts, false);
    CHECK(rep2.verdict == Exclusion::Excluded);

    // the zero algebra satisfies every vanishing constraint: not excluded
    auto rep0 = orbit_exclusion(r1.spec, Algebra(3), opts, false);
    CHECK(rep0.verdict == Exclusion::NotExcluded);

    // a member of the set in its own basis is found in the identity cell
    auto rep10 = orbit_exclusion(r1.spec, catalog("T10"), opts, false);
    CHECK(rep10.verdict == Exclusion::NotExcluded);

    // the unstable printed specs are refused unless explicitly allowed
    CHECK_THROWS_AS(orbit_exclusion(r1.spec, catalog("T17"), opts, true), std::invalid_argument);

    // stable specs run directly
    auto repf = orbit_exclusion(stable_flag_spec_dim3(), catalog("T17"), opts, true);
    CHECK(repf.stability_ok);
    CHECK(repf.verdict == Exclusion::NotExcluded);
}

TEST_CASE("peirce obstruction: published pairs fire, witnessed edges do not") {
    for (const auto& [from, to] : published_peirce_nondegenerations_dim3()) {
        CAPTURE(from);
        CAPTURE(to);
        CHECK(peirce_obstruction(catalog(from), catalog(to)) == Obstruction::Obstructed);
    }
    // (T06, T07): the worked example
    CHECK(peirce_obstruction(catalog("T06"), catalog("T07")) == Obstruction::Obstructed);
    // (T02, T09) fires, (T03, T09) does not (a witness exists)
    CHECK(peirce_obstruction(catalog("T02"), catalog("T09")) == Obstruction::Obstructed);
    CHECK(peirce_obstruction(catalog("T03"), catalog("T09")) == Obstruction::NotObstructed);
    // nilpotent targets are rejected
    CHECK_THROWS_AS(peirce_obstruction(catalog("T03"), catalog("T17")), std::invalid_argument);
}

TEST_CASE("generic degree and the degree obstruction") {
    CHECK(generic_degree(catalog("T17")) == 3);
    CHECK(generic_degree(catalog("T07")) == 3);
    CHECK(generic_degree(catalog("T15")) == 3);
    CHECK(generic_degree(catalog("T04")) == 2);
    CHECK(generic_degree(catalog("T05")) == 2);
    CHECK(generic_degree(catalog("T10")) == 2);
    CHECK(generic_degree(catalog("T13")) == 2);
    CHECK(generic_degree(catalog("T02")) == 2);
    CHECK(generic_degree(catalog("T18")) == 2);
    CHECK(generic_degree(Algebra(3)) == 1);
    CHECK(generic_degree(catalog("B3")) == 2);

    CHECK(degree_obstruction(catalog("T04"), catalog("T17")) == Obstruction::Obstructed);
    CHECK(degree_obstruction(catalog("T05"), catalog("T17")) == Obstruction::Obstructed);
    CHECK(degree_obstruction(catalog("T10"), catalog("T17")) == Obstruction::Obstructed);
    CHECK(degree_obstruction(catalog("T13"), catalog("T17")) == Obstruction::Obstructed);
    CHECK(degree_obstruction(catalog("T02"), catalog("T07")) == Obstruction::Obstructed);
    CHECK(degree_obstruction(catalog("T15"), catalog("T17")) == Obstruction::NotObstructed);
}

TEST_CASE("generic degree never grows along a verified witness") {
    auto all = shipped_witnesses_dim3();
    auto d2 = shipped_witnesses_dim2();
    all.insert(all.end(), d2.begin(), d2.end());
    for (const auto& w : all) {
        CAPTURE(w.source_label);
        CAPTURE(w.target_label);
        CHECK(generic_degree(w.source) >= generic_degree(w.target));
    }
}

TEST_CASE("certificate checking and soundness coupling") {
    GroebnerOptions opts;
    for (const auto& cert : shipped_certificates_dim3()) {
        auto res = check_certificate(cert, catalog(cert.source), catalog(cert.target), opts);
        CAPTURE(cert.source);
        CAPTURE(cert.target);
        CAPTURE(res.detail);
        CHECK(res.ok);
    }
    for (const auto& cert : shipped_certificates_dim2()) {
        auto res = check_certificate(cert, catalog(cert.source), catalog(cert.target), opts);
        CHECK(res.ok);
    }
    // no certificate checker fires against a verified witness
    for (const auto& w : shipped_witnesses_dim3()) {
        CAPTURE(w.source_label);
        CAPTURE(w.target_label);
        CHECK(derivation_check(w.source, w.target).verdict == DerivationVerdict::Consistent);
        CHECK(degree_obstruction(w.source, w.target) == Obstruction::NotObstructed);
        if (!is_nilpotent(w.target).nilpotent)
            CHECK(peirce_obstruction(w.source, w.target) == Obstruction::NotObstructed);
    }
}

TEST_CASE("certificate file round trip") {
    NonDegenerationCertificate c;
    c.kind = NonDegenerationCertificate::Kind::ClosedSet;
    c.source = "T10";
    c.target = "T17";
    c.spec = published_closed_set_R1().spec;
    c.membership_basis = Matrix<Rational>::identity(3);
    std::string s = serialize_certificate(c);
    auto c2 = parse_certificate(s);
    CHECK(c2.kind == c.kind);
    CHECK(c2.source == "T10");
    CHECK(c2.spec.expanded() == c.spec.expanded());
    CHECK(c2.membership_basis == c.membership_basis);

    auto c3 = parse_certificate(R"({"kind": "generic-degree", "pair": ["T04", "T17"]})");
    CHECK(check_certificate(c3, catalog("T04"), catalog("T17")).ok);
    CHECK_THROWS(parse_certificate(R"({"kind": "nope", "pair": ["a","b"]})"));
}
