#include "jord/cohomology.hpp"

#include <map>

namespace jord {

namespace {

// Linear form in the h-unknowns, one sparse map per output component.
using LinForm = std::map<size_t, Rational>;
struct LinVec {
    std::vector<LinForm> comp;
    explicit LinVec(size_t n) : comp(n) {}
};

void add_into(LinForm& dst, const LinForm& src, const Rational& factor) {
    if (factor.is_zero()) return;
    for (const auto& [id, c] : src) {
        Rational& slot = dst[id];
        slot += c * factor;
        if (slot.is_zero()) dst.erase(id);
    }
}

struct RowBuilder {
    const Algebra& a;
    size_t n;
    explicit RowBuilder(const Algebra& alg) : a(alg), n(alg.dim) {}

    size_t unknown(size_t i, size_t j, size_t k) const {
        return SymBilinearMap::pair_offset(n, i, j) * n + k;
    }

    LinVec h_of(const std::vector<Rational>& u, const std::vector<Rational>& v) const {
        LinVec r(n);
        for (size_t i = 0; i < n; ++i) {
            if (u[i].is_zero()) continue;
            for (size_t j = 0; j < n; ++j) {
                if (v[j].is_zero()) continue;
                Rational f = u[i] * v[j];
                for (size_t k = 0; k < n; ++k) {
                    Rational& slot = r.comp[k][unknown(i, j, k)];
                    slot += f;
                    if (slot.is_zero()) r.comp[k].erase(unknown(i, j, k));
                }
            }
        }
        return r;
    }

    // (w * v) with w linear in the unknowns and v concrete
    LinVec mult_lin_conc(const LinVec& w, const std::vector<Rational>& v) const {
        LinVec r(n);
        for (size_t i = 0; i < n; ++i) {
            if (w.comp[i].empty()) continue;
            for (size_t j = 0; j < n; ++j) {
                if (v[j].is_zero()) continue;
                for (size_t k = 0; k < n; ++k) {
                    const Rational& c = a.at(i, j, k);
                    if (c.is_zero()) continue;
                    add_into(r.comp[k], w.comp[i], v[j] * c);
                }
            }
        }
        return r;
    }

    LinVec mult_conc_lin(const std::vector<Rational>& v, const LinVec& w) const {
        LinVec r(n);
        for (size_t i = 0; i < n; ++i) {
            if (v[i].is_zero()) continue;
            for (size_t j = 0; j < n; ++j) {
                if (w.comp[j].empty()) continue;
                for (size_t k = 0; k < n; ++k) {
                    const Rational& c = a.at(i, j, k);
                    if (c.is_zero()) continue;
                    add_into(r.comp[k], w.comp[j], v[i] * c);
                }
            }
        }
        return r;
    }

    // C(x,y,z;b) = h((xy)b,z) + h(xy,b)z + (h(x,y)b)z - h(xy,bz) - h(x,y)(bz) - (xy)h(b,z)
    LinVec slot(const std::vector<Rational>& x, const std::vector<Rational>& y,
                const std::vector<Rational>& z, const std::vector<Rational>& b) const {
        auto xy = a.mult(x, y);
        auto bz = a.mult(b, z);
        LinVec r(n);
        auto acc = [&](const LinVec& t, int sign) {
            for (size_t k = 0; k < n; ++k) add_into(r.comp[k], t.comp[k], Rational(sign));
        };
        acc(h_of(a.mult(xy, b), z), 1);
        acc(mult_lin_conc(h_of(xy, b), z), 1);
        acc(mult_lin_conc(mult_lin_conc(h_of(x, y), b), z), 1);
        acc(h_of(xy, bz), -1);
        acc(mult_lin_conc(h_of(x, y), bz), -1);
        acc(mult_conc_lin(xy, h_of(b, z)), -1);
        return r;
    }

    // full polarization: cyclic sum over the three cubic slots
    LinVec polarized(size_t p, size_t q, size_t r, size_t b) const {
        auto ep = a.basis_vector(p), eq = a.basis_vector(q), er = a.basis_vector(r),
             eb = a.basis_vector(b);
        LinVec s = slot(ep, eq, er, eb);
        LinVec s2 = slot(eq, er, ep, eb);
        LinVec s3 = slot(er, ep, eq, eb);
        for (size_t k = 0; k < n; ++k) {
            add_into(s.comp[k], s2.comp[k], Rational(1));
            add_into(s.comp[k], s3.comp[k], Rational(1));
        }
        return s;
    }
};

// Incremental sparse row reduction keeping the pivot rows reduced.
struct SparseReducer {
    std::map<size_t, LinForm> pivots; // leading column -> row (leading coeff 1)

    void reduce(LinForm& row) const {
        while (!row.empty()) {
            size_t lead = row.begin()->first;
            auto it = pivots.find(lead);
            if (it == pivots.end()) return;
            Rational f = row.begin()->second;
            add_into(row, it->second, -f);
        }
    }

    bool insert(LinForm row) {
        reduce(row);
        if (row.empty()) return false;
        Rational inv = row.begin()->second.inverse();
        if (!inv.is_one()) {
            for (auto& [id, c] : row) c *= inv;
        }
        pivots.emplace(row.begin()->first, std::move(row));
        return true;
    }

    size_t rank() const { return pivots.size(); }
};

std::vector<LinForm> cocycle_rows(const Algebra& a) {
    RowBuilder rb(a);
    size_t n = a.dim;
    std::vector<LinForm> rows;
    for (size_t p = 0; p < n; ++p)
        for (size_t q = p; q < n; ++q)
            for (size_t r = q; r < n; ++r)
                for (size_t b = 0; b < n; ++b) {
                    LinVec e = rb.polarized(p, q, r, b);
                    for (size_t k = 0; k < n; ++k)
                        if (!e.comp[k].empty()) rows.push_back(std::move(e.comp[k]));
                }
    return rows;
}

size_t sym_space_dim(size_t n) { return n * (n + 1) / 2 * n; }

} // namespace

std::vector<Rational> SymBilinearMap::eval(const std::vector<Rational>& x,
                                           const std::vector<Rational>& y) const {
    std::vector<Rational> r(dim);
    for (size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            Rational f = x[i] * y[j];
            for (size_t k = 0; k < dim; ++k) r[k] += f * at(i, j, k);
        }
    }
    return r;
}

SymBilinearMap coboundary_of(const Algebra& a, const Matrix<Rational>& mu) {
    size_t n = a.dim;
    if (mu.rows() != n || mu.cols() != n)
        throw std::invalid_argument("coboundary: matrix dimension mismatch");
    SymBilinearMap d(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            std::vector<Rational> mi(n), mj(n);
            for (size_t r = 0; r < n; ++r) {
                mi[r] = mu(r, i);
                mj[r] = mu(r, j);
            }
            auto v = a.mult(mi, a.basis_vector(j));
            auto w = a.mult(a.basis_vector(i), mj);
            std::vector<Rational> muij(n); // mu(e_i e_j)
            for (size_t t = 0; t < n; ++t) {
                const Rational& c = a.at(i, j, t);
                if (c.is_zero()) continue;
                for (size_t r = 0; r < n; ++r) muij[r] += mu(r, t) * c;
            }
            for (size_t k = 0; k < n; ++k) d.at(i, j, k) = v[k] + w[k] - muij[k];
        }
    return d;
}

bool is_cocycle(const Algebra& a, const SymBilinearMap& h) {
    RowBuilder rb(a);
    size_t n = a.dim;
    for (size_t p = 0; p < n; ++p)
        for (size_t q = p; q < n; ++q)
            for (size_t r = q; r < n; ++r)
                for (size_t b = 0; b < n; ++b) {
                    LinVec e = rb.polarized(p, q, r, b);
                    for (size_t k = 0; k < n; ++k) {
                        Rational acc(0);
                        for (const auto& [id, c] : e.comp[k]) acc += c * h.h[id];
                        if (!acc.is_zero()) return false;
                    }
                }
    return true;
}

std::vector<SymBilinearMap> cocycle_space(const Algebra& a) {
    size_t n = a.dim;
    size_t cols = sym_space_dim(n);
    SparseReducer red;
    for (auto& row : cocycle_rows(a)) red.insert(std::move(row));
    // dense kernel of the reduced row space
    Matrix<Rational> m(red.rank(), cols);
    size_t r = 0;
    for (const auto& [lead, row] : red.pivots) {
        for (const auto& [id, c] : row) m(r, id) = c;
        ++r;
    }
    std::vector<SymBilinearMap> basis;
    for (auto& v : m.kernel()) {
        SymBilinearMap h(n);
        h.h = std::move(v);
        basis.push_back(std::move(h));
    }
    return basis;
}

CohomologyReport h2(const Algebra& a, bool with_witness_basis) {
    size_t n = a.dim;
    size_t cols = sym_space_dim(n);

    SparseReducer eq;
    for (auto& row : cocycle_rows(a)) eq.insert(std::move(row));
    size_t z2 = cols - eq.rank();

    // rank of mu -> d(mu) over the standard matrix units
    SparseReducer db;
    for (size_t rr = 0; rr < n; ++rr)
        for (size_t cc = 0; cc < n; ++cc) {
            Matrix<Rational> mu(n, n);
            mu(rr, cc) = Rational(1);
            SymBilinearMap d = coboundary_of(a, mu);
            LinForm row;
            for (size_t id = 0; id < d.h.size(); ++id)
                if (!d.h[id].is_zero()) row[id] = d.h[id];
            db.insert(std::move(row));
        }
    size_t b2 = db.rank();

    CohomologyReport rep;
    rep.z2_dim = z2;
    rep.b2_dim = b2;
    if (b2 > z2) throw std::logic_error("coboundary space not contained in cocycle space");
    rep.h2_dim = z2 - b2;

    if (with_witness_basis && rep.h2_dim > 0) {
        auto z2_basis = cocycle_space(a);
        SparseReducer span = db;
        for (auto& h : z2_basis) {
            LinForm row;
            for (size_t id = 0; id < h.h.size(); ++id)
                if (!h.h[id].is_zero()) row[id] = h.h[id];
            if (span.insert(std::move(row))) rep.witness_basis.push_back(std::move(h));
        }
    }
    return rep;
}

} // namespace jord
