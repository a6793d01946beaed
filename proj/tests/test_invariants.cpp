#include "doctest.h"

#include "jord/catalog.hpp"
#include "jord/invariants.hpp"

#include <map>
#include <random>

using namespace jord;

namespace {

std::mt19937 rng(424242);

Matrix<Rational> random_small_invertible(size_t n) {
    // products of elementary operations keep coordinates of rational
    // idempotents at small height, which the canonical-frame search relies on
    Matrix<Rational> g = Matrix<Rational>::identity(n);
    std::uniform_int_distribution<int> which(0, 2), idx(0, static_cast<int>(n) - 1);
    std::uniform_int_distribution<int> coeff(-2, 2);
    const Rational scalars[4] = {Rational(2), Rational(-1), Rational(1, 2), Rational(3)};
    std::uniform_int_distribution<int> sidx(0, 3);
    for (int step = 0; step < 6; ++step) {
        int op = which(rng);
        size_t i = idx(rng), j = idx(rng);
        if (op == 0 && i != j) { // row add
            int c = coeff(rng);
            if (c == 0) c = 1;
            for (size_t k = 0; k < n; ++k) g(i, k) += Rational(c) * g(j, k);
        } else if (op == 1) { // scale
            Rational s = scalars[sidx(rng)];
            for (size_t k = 0; k < n; ++k) g(i, k) *= s;
        } else if (i != j) { // swap
            g.swap_rows(i, j);
        }
    }
    return g;
}

const std::map<std::string, long long> kIdempotentCounts = {
    {"T01", 7}, {"T02", -1}, {"T03", 3}, {"T04", -1}, {"T05", -1}, {"T06", 3}, {"T07", 1},
    {"T08", 1}, {"T09", 1},  {"T10", -1}, {"T11", -1}, {"T12", -1}, {"T13", -1}, {"T14", -1},
    {"T15", 1}, {"T16", 1},  {"T17", 0},  {"T18", 0},  {"T19", 0},  {"C3", 0},
};

} // namespace

TEST_CASE("derivation dimensions: published tables and the marginal family") {
    for (const auto& e : catalog_dim2()) {
        CAPTURE(e.label);
        CHECK(derivation_algebra(e.algebra).dim == static_cast<size_t>(e.der));
    }
    for (const auto& e : catalog_dim3()) {
        CAPTURE(e.label);
        CHECK(derivation_algebra(e.algebra).dim == static_cast<size_t>(e.der));
    }
    Algebra zero3(3);
    CHECK(derivation_algebra(zero3).dim == 9);
    CHECK(derivation_algebra(marginal_algebra(5)).dim == 20);
}

TEST_CASE("derivations satisfy the leibniz rule exactly") {
    for (const auto& label : {"T02", "T07", "T12", "T17"}) {
        Algebra a = catalog(label);
        auto ds = derivation_algebra(a);
        for (const auto& d : ds.basis)
            for (size_t i = 0; i < a.dim; ++i)
                for (size_t j = 0; j < a.dim; ++j) {
                    auto ei = a.basis_vector(i), ej = a.basis_vector(j);
                    auto lhs = d.apply(a.mult(ei, ej));
                    auto r1 = a.mult(d.apply(ei), ej);
                    auto r2 = a.mult(ei, d.apply(ej));
                    for (size_t k = 0; k < a.dim; ++k) CHECK(lhs[k] == r1[k] + r2[k]);
                }
    }
}

TEST_CASE("kaplansky bound on the catalog") {
    auto check = [](const Algebra& a) {
        if (a.is_zero_mult()) return;
        size_t n = a.dim;
        CHECK(derivation_algebra(a).dim <= n * n - n);
    };
    for (const auto& e : catalog_dim2()) check(e.algebra);
    for (const auto& e : catalog_dim3()) check(e.algebra);
    for (size_t k = 2; k <= 6; ++k) check(marginal_algebra(k));
}

TEST_CASE("trace form radical matches the published column") {
    for (const auto& e : catalog_dim3()) {
        CAPTURE(e.label);
        CHECK(trace_form_radical(e.algebra).size() == static_cast<size_t>(e.rad));
    }
    Algebra zero3(3);
    CHECK(trace_form_radical(zero3).size() == 3);
    Algebra bad(2);
    bad.at(0, 0, 1) = Rational(1);
    bad.at(0, 1, 0) = Rational(1);
    bad.at(1, 0, 0) = Rational(1);
    CHECK_THROWS_AS(trace_form_radical(bad), std::invalid_argument);
}

TEST_CASE("idempotent sets: counts, frames, positive-dimensional detection") {
    for (const auto& [label, count] : kIdempotentCounts) {
        Algebra a = catalog(label);
        auto idem = idempotent_frames(a);
        CAPTURE(label);
        if (count < 0) {
            CHECK_FALSE(idem.finite);
        } else {
            REQUIRE(idem.finite);
            REQUIRE(idem.complete);
            CHECK(idem.points.size() == static_cast<size_t>(count));
        }
    }

    // T01: the three-element frame exists among the maximal frames
    auto t01 = idempotent_frames(catalog("T01"));
    bool has_frame3 = false;
    for (const auto& f : t01.frames) {
        if (f.size() != 3) continue;
        has_frame3 = true;
        // members must be the three unit vectors
        for (size_t idx : f) {
            size_t nonzero = 0;
            for (const auto& c : t01.points[idx])
                if (!c.is_zero()) ++nonzero;
            CHECK(nonzero == 1);
        }
    }
    CHECK(has_frame3);

    // B2 has an idempotent line
    CHECK_FALSE(idempotent_frames(catalog("B2")).finite);
    // the marginal family too
    CHECK_FALSE(idempotent_frames(marginal_algebra(5)).finite);
}

TEST_CASE("peirce decomposition: dims and relations") {
    // J_k with respect to e: (0, k-1, 1)
    for (size_t k : {2, 4, 6}) {
        Algebra j = marginal_algebra(k);
        auto pd = peirce_decomposition(j, j.basis_vector(0));
        CHECK(pd.dims() == std::array<size_t, 3>{0, k - 1, 1});
    }
    // T05 with respect to e1: (1, 1, 1)
    auto pd = peirce_decomposition(catalog("T05"), catalog("T05").basis_vector(0));
    CHECK(pd.dims() == std::array<size_t, 3>{1, 1, 1});
    // e = 0 rejected
    Algebra t05 = catalog("T05");
    CHECK_THROWS_AS(peirce_decomposition(t05, std::vector<Rational>(3)), std::invalid_argument);
    // non-idempotent rejected
    std::vector<Rational> x{Rational(2), Rational(0), Rational(0)};
    CHECK_THROWS_AS(peirce_decomposition(t05, x), std::invalid_argument);
}

TEST_CASE("semisimple part: radical, quotient, lifted spectra") {
    // T03: radical <n1>, quotient with two orthogonal idempotents
    auto sp = semisimple_part(catalog("T03"));
    CHECK(sp.radical_basis.size() == 1);
    CHECK(sp.quotient.dim == 2);
    CHECK(sp.lifted_frame.size() == 2);
    CHECK(trace_form_radical(sp.quotient).empty());

    // T01: radical 0, quotient is the whole algebra
    auto sp01 = semisimple_part(catalog("T01"));
    CHECK(sp01.radical_basis.empty());
    CHECK(sp01.quotient.dim == 3);

    // T19: nilpotent, quotient is zero
    auto sp19 = semisimple_part(catalog("T19"));
    CHECK(sp19.quotient.dim == 0);
    CHECK(sp19.lifted_frame.empty());

    // quotient of the quotient is semisimple for everything in the catalog
    for (const auto& e : catalog_dim3()) {
        auto s = semisimple_part(e.algebra);
        CAPTURE(e.label);
        CHECK(trace_form_radical(s.quotient).empty());
        CHECK(s.radical_basis.size() + s.quotient.dim == e.algebra.dim);
        // every lifted idempotent really is one, and the frame is orthogonal
        for (size_t i = 0; i < s.lifted_frame.size(); ++i) {
            CHECK(is_idempotent(e.algebra, s.lifted_frame[i]));
            for (size_t j = i + 1; j < s.lifted_frame.size(); ++j) {
                auto prod = e.algebra.mult(s.lifted_frame[i], s.lifted_frame[j]);
                for (const auto& c : prod) CHECK(c.is_zero());
            }
        }
    }
}

TEST_CASE("reference spectra: hand-checked rows") {
    using Profile = std::array<size_t, 3>;
    auto spectra = [](const char* label) { return reference_spectra(catalog(label)); };
    CHECK(spectra("T07") == std::vector<Profile>{{0, 0, 3}});
    CHECK(spectra("T10") == std::vector<Profile>{{0, 1, 2}});
    CHECK(spectra("T13") == std::vector<Profile>{{1, 1, 1}});
    CHECK(spectra("T09") == std::vector<Profile>{{1, 0, 2}});
    CHECK(spectra("T02") == std::vector<Profile>{{0, 0, 3}, {1, 1, 1}, {1, 1, 1}});
    CHECK(spectra("T06") == std::vector<Profile>{{1, 0, 2}, {2, 0, 1}, {2, 0, 1}});
    CHECK(spectra("T05") == std::vector<Profile>{{0, 1, 2}, {1, 1, 1}, {2, 0, 1}});
}

TEST_CASE("fingerprints: discrimination across the dim-3 catalog") {
    std::vector<Fingerprint> fps;
    std::vector<std::string> labels;
    for (const auto& e : catalog_dim3()) {
        if (e.label == "C3") continue;
        fps.push_back(fingerprint(e.algebra));
        labels.push_back(e.label);
    }
    REQUIRE(fps.size() == 19);
    for (size_t i = 0; i < fps.size(); ++i)
        for (size_t j = i + 1; j < fps.size(); ++j) {
            CAPTURE(labels[i]);
            CAPTURE(labels[j]);
            CHECK_FALSE(fps[i] == fps[j]);
        }
}

TEST_CASE("fingerprints: invariance under basis change") {
    // spot-check a representative sample here (the acceptance suite covers
    // all nineteen with twenty changes each)
    for (const auto& label : {"T02", "T05", "T07", "T10", "T13", "T17", "B4"}) {
        Algebra a = catalog(label);
        Fingerprint fp = fingerprint(a);
        for (int it = 0; it < 5; ++it) {
            auto g = random_small_invertible(a.dim);
            Algebra b = change_basis(a, {g});
            CAPTURE(label);
            CHECK(fingerprint(b) == fp);
        }
    }
}

TEST_CASE("fingerprint of swapped B4 and of the zero algebra") {
    Algebra b4 = catalog("B4");
    Matrix<Rational> swap(2, 2);
    swap(0, 1) = Rational(1);
    swap(1, 0) = Rational(1);
    CHECK(fingerprint(change_basis(b4, {swap})) == fingerprint(b4));

    Algebra zero3(3);
    Fingerprint z = fingerprint(zero3);
    CHECK(z.dim == 3);
    CHECK(z.der_dim == 9);
    CHECK(z.rad_dim == 3);
    CHECK(z.nilpotent);
    CHECK(z.nilindex == 2);
    CHECK(z.idempotent_count == 0);
    CHECK(z.h2_dim == 18); // n^2(n+1)/2
}

TEST_CASE("fingerprint peirce profiles separate T07, T10, T13") {
    auto f07 = fingerprint(catalog("T07"));
    auto f10 = fingerprint(catalog("T10"));
    auto f13 = fingerprint(catalog("T13"));
    CHECK(f07.peirce_profiles == std::vector<std::array<size_t, 3>>{{0, 0, 3}});
    CHECK(f10.peirce_profiles == std::vector<std::array<size_t, 3>>{{0, 1, 2}});
    CHECK(f13.peirce_profiles == std::vector<std::array<size_t, 3>>{{1, 1, 1}});
}
