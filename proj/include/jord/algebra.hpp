#pragma once

#include "jord/matrix.hpp"
#include "jord/ratfunc.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace jord {

// Commutative-algebra structure on a finite basis, given by the structure
// constants c[i][j][k]: the coefficient of basis element k in the product of
// basis elements i and j. Nothing is assumed at the type level; commutativity
// and the Jordan identity are checkable properties.
template <typename F>
struct AlgebraT {
    size_t dim = 0;
    std::vector<F> c; // dim^3, index (i*dim + j)*dim + k
    std::string label;
    std::vector<std::string> basis_names;

    AlgebraT() = default;
    explicit AlgebraT(size_t n) : dim(n), c(n * n * n, F(0)) {
        basis_names.reserve(n);
        for (size_t i = 0; i < n; ++i) basis_names.push_back("b" + std::to_string(i + 1));
    }

    F& at(size_t i, size_t j, size_t k) { return c[(i * dim + j) * dim + k]; }
    const F& at(size_t i, size_t j, size_t k) const { return c[(i * dim + j) * dim + k]; }

    std::vector<F> mult(const std::vector<F>& x, const std::vector<F>& y) const {
        std::vector<F> r(dim, F(0));
        for (size_t i = 0; i < dim; ++i) {
            if (x[i] == F(0)) continue;
            for (size_t j = 0; j < dim; ++j) {
                if (y[j] == F(0)) continue;
                F f = x[i] * y[j];
                for (size_t k = 0; k < dim; ++k) {
                    const F& cc = at(i, j, k);
                    if (!(cc == F(0))) r[k] = r[k] + f * cc;
                }
            }
        }
        return r;
    }

    std::vector<F> basis_vector(size_t i) const {
        std::vector<F> v(dim, F(0));
        v[i] = F(1);
        return v;
    }

    // Matrix of left multiplication by x (columns are images of basis vectors).
    Matrix<F> left_mult(const std::vector<F>& x) const {
        Matrix<F> m(dim, dim);
        for (size_t j = 0; j < dim; ++j) {
            auto col = mult(x, basis_vector(j));
            for (size_t i = 0; i < dim; ++i) m(i, j) = col[i];
        }
        return m;
    }

    bool is_zero_mult() const {
        for (const auto& x : c)
            if (!(x == F(0))) return false;
        return true;
    }

    friend bool operator==(const AlgebraT& a, const AlgebraT& b) {
        return a.dim == b.dim && a.c == b.c;
    }
};

using Algebra = AlgebraT<Rational>;
using AlgebraOverT = AlgebraT<RatFunc>;

// Invertible rational basis change g acting by (g*mu)(x,y) = g mu(g^-1 x, g^-1 y).
struct BasisChange {
    Matrix<Rational> matrix;
};

bool is_commutative(const Algebra& a);

// Full linearization of (x^2 y)x = x^2(yx) checked on all basis quadruples;
// over characteristic zero this is equivalent to the identity itself.
// Requires commutativity.
bool is_jordan(const Algebra& a);
// The violating quadruple (i <= j <= k, b), if any.
std::optional<std::array<size_t, 4>> jordan_violation(const Algebra& a);

// Structure constants of a in the new basis whose i-th vector has the rows[i]
// coordinates in the old basis. Throws if the rows are not a basis.
template <typename F>
AlgebraT<F> constants_in_basis(const AlgebraT<F>& a, const Matrix<F>& rows);

Algebra change_basis(const Algebra& a, const BasisChange& g);

Algebra direct_sum(const Algebra& a, const Algebra& b);

// Dimensions of the plenary power chain A^1 ⊇ A^2 ⊇ ..., where
// A^k = sum of A^i A^j over i + j = k. The list ends at the first repeated
// value or at 0.
std::vector<size_t> power_dims(const Algebra& a);

struct Nilpotency {
    bool nilpotent;
    size_t index; // smallest k with A^k = 0 when nilpotent
};
Nilpotency is_nilpotent(const Algebra& a);

// dim A^2
size_t square_dim(const Algebra& a);

// Reduced basis of the span of the given vectors.
template <typename F>
std::vector<std::vector<F>> echelon_basis(std::vector<std::vector<F>> vecs);

extern template AlgebraT<Rational> constants_in_basis(const AlgebraT<Rational>&, const Matrix<Rational>&);
extern template AlgebraT<RatFunc> constants_in_basis(const AlgebraT<RatFunc>&, const Matrix<RatFunc>&);
extern template std::vector<std::vector<Rational>> echelon_basis(std::vector<std::vector<Rational>>);

} // namespace jord
