#include "doctest.h"

#include "jord/catalog.hpp"
#include "jord/cohomology.hpp"
#include "jord/invariants.hpp"

#include <random>

using namespace jord;

namespace {

std::mt19937 rng(13371337);

Matrix<Rational> random_matrix(size_t n) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    Matrix<Rational> m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m(i, j) = Rational(num(rng), den(rng));
    return m;
}

std::vector<std::string> all_labels() {
    std::vector<std::string> l;
    for (const auto& e : catalog_dim2()) l.push_back(e.label);
    for (const auto& e : catalog_dim3()) l.push_back(e.label);
    return l;
}

// Independent oracle: sample the (non-linearized) cubic relation at many
// random points and intersect the kernels. Any true cocycle satisfies every
// sampled equation, so the sampled kernel contains the cocycle space; with
// enough samples the two coincide.
size_t sampled_z2_dim(const Algebra& a, int samples) {
    size_t n = a.dim;
    size_t cols = n * (n + 1) / 2 * n;
    std::vector<std::vector<Rational>> rows;
    std::uniform_int_distribution<int> val(-4, 4);
    auto rnd_vec = [&] {
        std::vector<Rational> v(n);
        for (auto& x : v) x = Rational(val(rng));
        return v;
    };
    for (int s = 0; s < samples; ++s) {
        auto x = rnd_vec(), y = rnd_vec();
        // coefficient of each unknown h_{(i,j),k} in the relation at (x, y)
        for (size_t k = 0; k < n; ++k) rows.emplace_back(cols, Rational(0));
        size_t base = rows.size() - n;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i; j < n; ++j) {
                SymBilinearMap unit(n);
                for (size_t k = 0; k < n; ++k) {
                    unit.at(i, j, k) = Rational(1);
                    // evaluate the relation with h = unit_{(i,j),k}
                    auto h = [&](const std::vector<Rational>& u, const std::vector<Rational>& v) {
                        return unit.eval(u, v);
                    };
                    auto xx = a.mult(x, x);
                    auto xxy = a.mult(xx, y);
                    auto yx = a.mult(y, x);
                    std::vector<Rational> acc(n);
                    auto addv = [&](const std::vector<Rational>& v, int sign) {
                        for (size_t t = 0; t < n; ++t)
                            acc[t] += Rational(sign) * v[t];
                    };
                    addv(h(xxy, x), 1);
                    addv(a.mult(h(xx, y), x), 1);
                    addv(a.mult(a.mult(h(x, x), y), x), 1);
                    addv(h(xx, yx), -1);
                    addv(a.mult(h(x, x), yx), -1);
                    addv(a.mult(xx, h(y, x)), -1);
                    size_t col = SymBilinearMap::pair_offset(n, i, j) * n + k;
                    for (size_t t = 0; t < n; ++t) rows[base + t][col] = acc[t];
                    unit.at(i, j, k) = Rational(0);
                }
            }
    }
    Matrix<Rational> m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    return cols - m.rank();
}

} // namespace

TEST_CASE("coboundaries: zero map, identity map, derivation") {
    Algebra b3 = catalog("B3");
    Matrix<Rational> zero(2, 2);
    CHECK(coboundary_of(b3, zero) == SymBilinearMap(2));

    // mu = identity: d(mu)(a,b) = ab
    Matrix<Rational> id = Matrix<Rational>::identity(2);
    auto d = coboundary_of(b3, id);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j)
            for (size_t k = 0; k < 2; ++k) CHECK(d.at(i, j, k) == b3.at(i, j, k));

    // mu: n1 -> n1, n2 -> 2 n2 is a derivation of n1^2 = n2, so d(mu) = 0
    Matrix<Rational> mu(2, 2);
    mu(0, 0) = Rational(1);
    mu(1, 1) = Rational(2);
    CHECK(coboundary_of(b3, mu) == SymBilinearMap(2));
}

TEST_CASE("every coboundary is a cocycle, on every catalog algebra") {
    for (const auto& label : all_labels()) {
        Algebra a = catalog(label);
        CAPTURE(label);
        for (int it = 0; it < 50; ++it) {
            auto d = coboundary_of(a, random_matrix(a.dim));
            REQUIRE(is_cocycle(a, d));
        }
    }
}

TEST_CASE("zero algebra: every symmetric map is a cocycle") {
    for (size_t n : {2, 3}) {
        Algebra zero(n);
        auto rep = h2(zero);
        CHECK(rep.z2_dim == n * n * (n + 1) / 2);
        CHECK(rep.b2_dim == 0);
        CHECK(rep.h2_dim == n * n * (n + 1) / 2);
    }
}

TEST_CASE("dim B2 = n^2 - dim Der on the catalog") {
    for (const auto& label : all_labels()) {
        Algebra a = catalog(label);
        auto rep = h2(a);
        auto der = derivation_algebra(a).dim;
        CAPTURE(label);
        CHECK(rep.b2_dim == a.dim * a.dim - der);
    }
}

TEST_CASE("second cohomology of the marginal family vanishes") {
    for (size_t k = 2; k <= 6; ++k) {
        auto rep = h2(marginal_algebra(k));
        CAPTURE(k);
        CHECK(rep.z2_dim == rep.b2_dim);
        CHECK(rep.h2_dim == 0);
    }
}

TEST_CASE("B4 has vanishing second cohomology (sampled-oracle cross-check)") {
    Algebra b4 = catalog("B4");
    auto rep = h2(b4);
    CHECK(rep.h2_dim == 0);
    CHECK(rep.z2_dim == sampled_z2_dim(b4, 40));
}

TEST_CASE("sampled oracle agrees with the linearized system") {
    for (const auto& label : {"B1", "B2", "T02", "T13", "T17"}) {
        Algebra a = catalog(label);
        CAPTURE(label);
        CHECK(h2(a).z2_dim == sampled_z2_dim(a, 60));
    }
}

TEST_CASE("H2 dimension is a basis invariant") {
    std::mt19937 grng(5150);
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
    for (const auto& label : {"T07", "T12", "T18"}) {
        Algebra a = catalog(label);
        auto d0 = h2(a).h2_dim;
        for (int it = 0; it < 5; ++it) {
            Matrix<Rational> g(a.dim, a.dim);
            do {
                for (size_t i = 0; i < a.dim; ++i)
                    for (size_t j = 0; j < a.dim; ++j) g(i, j) = Rational(num(grng), den(grng));
            } while (g.determinant() == Rational(0));
            CAPTURE(label);
            CHECK(h2(change_basis(a, {g})).h2_dim == d0);
        }
    }
}

TEST_CASE("cocycle_space returns an exact basis") {
    Algebra zero2(2);
    auto basis = cocycle_space(zero2);
    CHECK(basis.size() == 6); // n^2(n+1)/2
    for (const auto& h : basis) CHECK(is_cocycle(zero2, h));

    Algebra t13 = catalog("T13");
    auto b13 = cocycle_space(t13);
    CHECK(b13.size() == h2(t13).z2_dim);
    for (const auto& h : b13) CHECK(is_cocycle(t13, h));
}

TEST_CASE("derivations are exactly the kernel of the coboundary map") {
    for (const auto& label : {"T07", "T12", "B1"}) {
        Algebra a = catalog(label);
        auto ds = derivation_algebra(a);
        for (const auto& d : ds.basis) {
            CAPTURE(label);
            CHECK(coboundary_of(a, d) == SymBilinearMap(a.dim));
        }
        // dimension count closes the converse inclusion
        CHECK(h2(a).b2_dim + ds.dim == a.dim * a.dim);
    }
}

TEST_CASE("witness basis spans a complement of the coboundaries") {
    Algebra zero2(2);
    auto rep = h2(zero2, true);
    CHECK(rep.witness_basis.size() == rep.h2_dim);
    for (const auto& w : rep.witness_basis) CHECK(is_cocycle(zero2, w));

    auto rep17 = h2(catalog("T17"), true);
    CHECK(rep17.witness_basis.size() == rep17.h2_dim);
    for (const auto& w : rep17.witness_basis) CHECK(is_cocycle(catalog("T17"), w));
}
