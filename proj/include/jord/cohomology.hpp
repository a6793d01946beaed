#pragma once

#include "jord/algebra.hpp"

namespace jord {

// Symmetric bilinear map V x V -> V, stored on unordered index pairs.
struct SymBilinearMap {
    size_t dim = 0;
    std::vector<Rational> h; // index pair_offset(i,j)*dim + k

    SymBilinearMap() = default;
    explicit SymBilinearMap(size_t n) : dim(n), h(n * (n + 1) / 2 * n) {}

    static size_t pair_offset(size_t n, size_t i, size_t j) {
        if (i > j) std::swap(i, j);
        // pairs (0,0),(0,1),...,(0,n-1),(1,1),...
        return i * n - i * (i - 1) / 2 + (j - i);
    }
    Rational& at(size_t i, size_t j, size_t k) { return h[pair_offset(dim, i, j) * dim + k]; }
    const Rational& at(size_t i, size_t j, size_t k) const {
        return h[pair_offset(dim, i, j) * dim + k];
    }
    std::vector<Rational> eval(const std::vector<Rational>& x, const std::vector<Rational>& y) const;

    friend bool operator==(const SymBilinearMap&, const SymBilinearMap&) = default;
};

// d(mu)(a, b) = mu(a)b + a mu(b) - mu(ab); always symmetric for commutative
// multiplication. mu is given by its matrix (columns are images of basis vectors).
SymBilinearMap coboundary_of(const Algebra& a, const Matrix<Rational>& mu);

// Membership of h in the cocycle space: symmetry is structural, the cubic
// relation is imposed through its full multilinearization on basis quadruples.
bool is_cocycle(const Algebra& a, const SymBilinearMap& h);

std::vector<SymBilinearMap> cocycle_space(const Algebra& a);

struct CohomologyReport {
    size_t z2_dim = 0;
    size_t b2_dim = 0;
    size_t h2_dim = 0;
    std::vector<SymBilinearMap> witness_basis; // complement of the coboundaries, on request
};

CohomologyReport h2(const Algebra& a, bool with_witness_basis = false);

} // namespace jord
