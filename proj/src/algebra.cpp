#include "jord/algebra.hpp"

namespace jord {

bool is_commutative(const Algebra& a) {
    for (size_t i = 0; i < a.dim; ++i)
        for (size_t j = i + 1; j < a.dim; ++j)
            for (size_t k = 0; k < a.dim; ++k)
                if (!(a.at(i, j, k) == a.at(j, i, k))) return false;
    return true;
}

namespace {

// C(x,y,z;b) = ((xy)b)z - (xy)(bz): one slot assignment of the cubic identity.
std::vector<Rational> jordan_slot(const Algebra& a, const std::vector<Rational>& x,
                                  const std::vector<Rational>& y, const std::vector<Rational>& z,
                                  const std::vector<Rational>& b) {
    auto xy = a.mult(x, y);
    auto lhs = a.mult(a.mult(xy, b), z);
    auto rhs = a.mult(xy, a.mult(b, z));
    for (size_t i = 0; i < a.dim; ++i) lhs[i] -= rhs[i];
    return lhs;
}

// Full polarization: cyclic sum over the three x-slots (symmetric in the
// first two already, so three cyclic shifts suffice).
std::vector<Rational> jordan_polarized(const Algebra& a, size_t i, size_t j, size_t k, size_t b) {
    auto ei = a.basis_vector(i), ej = a.basis_vector(j), ek = a.basis_vector(k),
         eb = a.basis_vector(b);
    auto r = jordan_slot(a, ei, ej, ek, eb);
    auto r2 = jordan_slot(a, ej, ek, ei, eb);
    auto r3 = jordan_slot(a, ek, ei, ej, eb);
    for (size_t t = 0; t < a.dim; ++t) r[t] += r2[t] + r3[t];
    return r;
}

} // namespace

std::optional<std::array<size_t, 4>> jordan_violation(const Algebra& a) {
    if (!is_commutative(a)) throw std::invalid_argument("jordan check requires a commutative algebra");
    for (size_t i = 0; i < a.dim; ++i)
        for (size_t j = i; j < a.dim; ++j)
            for (size_t k = j; k < a.dim; ++k)
                for (size_t b = 0; b < a.dim; ++b) {
                    auto v = jordan_polarized(a, i, j, k, b);
                    for (const auto& x : v)
                        if (!x.is_zero()) return std::array<size_t, 4>{i, j, k, b};
                }
    return std::nullopt;
}

bool is_jordan(const Algebra& a) { return !jordan_violation(a).has_value(); }

template <typename F>
AlgebraT<F> constants_in_basis(const AlgebraT<F>& a, const Matrix<F>& rows) {
    if (rows.rows() != a.dim || rows.cols() != a.dim)
        throw std::invalid_argument("basis matrix dimension mismatch");
    auto inv = rows.inverse();
    if (!inv) throw std::invalid_argument("singular basis matrix");
    AlgebraT<F> r(a.dim);
    r.label = a.label;
    r.basis_names = a.basis_names;
    size_t n = a.dim;
    for (size_t i = 0; i < n; ++i) {
        std::vector<F> fi(n), fj(n);
        for (size_t t = 0; t < n; ++t) fi[t] = rows(i, t);
        for (size_t j = 0; j < n; ++j) {
            for (size_t t = 0; t < n; ++t) fj[t] = rows(j, t);
            auto v = a.mult(fi, fj);
            // coordinates in the new basis: w = v * rows^{-1} (row vector)
            for (size_t k = 0; k < n; ++k) {
                F w(0);
                for (size_t t = 0; t < n; ++t)
                    if (!(v[t] == F(0))) w = w + v[t] * (*inv)(t, k);
                r.at(i, j, k) = w;
            }
        }
    }
    return r;
}

template AlgebraT<Rational> constants_in_basis(const AlgebraT<Rational>&, const Matrix<Rational>&);
template AlgebraT<RatFunc> constants_in_basis(const AlgebraT<RatFunc>&, const Matrix<RatFunc>&);

Algebra change_basis(const Algebra& a, const BasisChange& g) {
    auto ginv = g.matrix.inverse();
    if (!ginv) throw std::invalid_argument("singular basis change");
    return constants_in_basis(a, ginv->transpose());
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
    Algebra r(a.dim + b.dim);
    for (size_t i = 0; i < a.dim; ++i)
        for (size_t j = 0; j < a.dim; ++j)
            for (size_t k = 0; k < a.dim; ++k) r.at(i, j, k) = a.at(i, j, k);
    for (size_t i = 0; i < b.dim; ++i)
        for (size_t j = 0; j < b.dim; ++j)
            for (size_t k = 0; k < b.dim; ++k)
                r.at(a.dim + i, a.dim + j, a.dim + k) = b.at(i, j, k);
    r.basis_names.clear();
    for (const auto& s : a.basis_names) r.basis_names.push_back(s);
    for (const auto& s : b.basis_names) r.basis_names.push_back(s + "'");
    return r;
}

template <typename F>
std::vector<std::vector<F>> echelon_basis(std::vector<std::vector<F>> vecs) {
    if (vecs.empty()) return {};
    size_t n = vecs[0].size();
    Matrix<F> m(vecs.size(), n);
    for (size_t i = 0; i < vecs.size(); ++i)
        for (size_t j = 0; j < n; ++j) m(i, j) = vecs[i][j];
    auto pivots = m.echelonize();
    std::vector<std::vector<F>> basis;
    for (size_t r = 0; r < pivots.size(); ++r) {
        std::vector<F> v(n);
        for (size_t j = 0; j < n; ++j) v[j] = m(r, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

template std::vector<std::vector<Rational>> echelon_basis(std::vector<std::vector<Rational>>);

namespace {

// span of all products u*v, u in U, v in V
std::vector<std::vector<Rational>> subspace_product(const Algebra& a,
                                                    const std::vector<std::vector<Rational>>& u,
                                                    const std::vector<std::vector<Rational>>& v) {
    std::vector<std::vector<Rational>> prods;
    for (const auto& x : u)
        for (const auto& y : v) prods.push_back(a.mult(x, y));
    return echelon_basis(std::move(prods));
}

} // namespace

std::vector<size_t> power_dims(const Algebra& a) {
    std::vector<std::vector<std::vector<Rational>>> powers; // powers[k-1] = basis of A^k
    std::vector<std::vector<Rational>> full;
    for (size_t i = 0; i < a.dim; ++i) full.push_back(a.basis_vector(i));
    powers.push_back(full);
    std::vector<size_t> dims{a.dim};
    while (true) {
        size_t k = powers.size() + 1;
        std::vector<std::vector<Rational>> acc;
        for (size_t i = 1; i < k; ++i) {
            auto part = subspace_product(a, powers[i - 1], powers[k - i - 1]);
            for (auto& v : part) acc.push_back(std::move(v));
        }
        auto next = echelon_basis(std::move(acc));
        size_t d = next.size();
        dims.push_back(d);
        if (d == 0 || d == dims[dims.size() - 2]) break;
        powers.push_back(std::move(next));
    }
    return dims;
}

Nilpotency is_nilpotent(const Algebra& a) {
    auto dims = power_dims(a);
    if (dims.back() == 0) return {true, dims.size()};
    return {false, 0};
}

size_t square_dim(const Algebra& a) {
    std::vector<std::vector<Rational>> full;
    for (size_t i = 0; i < a.dim; ++i) full.push_back(a.basis_vector(i));
    std::vector<std::vector<Rational>> prods;
    for (size_t i = 0; i < a.dim; ++i)
        for (size_t j = 0; j < a.dim; ++j) prods.push_back(a.mult(full[i], full[j]));
    return echelon_basis(std::move(prods)).size();
}

} // namespace jord
