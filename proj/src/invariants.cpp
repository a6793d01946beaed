#include "jord/invariants.hpp"

#include "jord/cohomology.hpp"

#include <algorithm>
#include <sstream>

namespace jord {

namespace {

size_t mat_unknown(size_t n, size_t r, size_t c) { return r * n + c; }

} // namespace

DerivationSpace derivation_algebra(const Algebra& a) {
    size_t n = a.dim;
    // unknowns: d(e_c) = sum_r d[r][c] e_r
    std::vector<std::vector<Rational>> rows;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j)
            for (size_t r = 0; r < n; ++r) {
                std::vector<Rational> row(n * n);
                for (size_t k = 0; k < n; ++k) {
                    const Rational& c = a.at(i, j, k);
                    if (!c.is_zero()) row[mat_unknown(n, r, k)] += c;
                }
                for (size_t p = 0; p < n; ++p) {
                    const Rational& c = a.at(p, j, r);
                    if (!c.is_zero()) row[mat_unknown(n, p, i)] -= c;
                }
                for (size_t q = 0; q < n; ++q) {
                    const Rational& c = a.at(i, q, r);
                    if (!c.is_zero()) row[mat_unknown(n, q, j)] -= c;
                }
                rows.push_back(std::move(row));
            }
    Matrix<Rational> m(rows.size(), n * n);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < n * n; ++j) m(i, j) = rows[i][j];
    DerivationSpace ds;
    for (const auto& v : m.kernel()) {
        Matrix<Rational> d(n, n);
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c) d(r, c) = v[mat_unknown(n, r, c)];
        ds.basis.push_back(std::move(d));
    }
    ds.dim = ds.basis.size();
    return ds;
}

std::vector<std::vector<Rational>> trace_form_radical(const Algebra& a) {
    size_t n = a.dim;
    if (!is_jordan(a)) throw std::invalid_argument("trace-form radical requires a Jordan algebra");
    std::vector<Rational> ltrace(n); // trace of left multiplication by e_k
    for (size_t k = 0; k < n; ++k)
        for (size_t m = 0; m < n; ++m) ltrace[k] += a.at(k, m, m);
    Matrix<Rational> gram(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Rational t(0);
            for (size_t k = 0; k < n; ++k) {
                const Rational& c = a.at(i, j, k);
                if (!c.is_zero()) t += c * ltrace[k];
            }
            gram(i, j) = t;
        }
    return gram.kernel();
}

bool is_idempotent(const Algebra& a, const std::vector<Rational>& x) {
    return a.mult(x, x) == x;
}

std::optional<std::vector<Rational>> express_in_basis(
    const std::vector<std::vector<Rational>>& basis_rows, const std::vector<Rational>& v) {
    if (basis_rows.empty()) {
        for (const auto& x : v)
            if (!x.is_zero()) return std::nullopt;
        return std::vector<Rational>{};
    }
    size_t n = v.size(), m = basis_rows.size();
    Matrix<Rational> aug(n, m + 1);
    for (size_t j = 0; j < m; ++j)
        for (size_t i = 0; i < n; ++i) aug(i, j) = basis_rows[j][i];
    for (size_t i = 0; i < n; ++i) aug(i, m) = v[i];
    auto pivots = aug.echelonize();
    std::vector<Rational> coords(m);
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == m) return std::nullopt; // inconsistent
        coords[pivots[r]] = aug(r, m);
    }
    return coords;
}

namespace {

// ---- idempotent variety -------------------------------------------------

std::vector<MultiPoly> idempotent_system(const Algebra& a) {
    size_t n = a.dim;
    std::vector<MultiPoly> gens;
    for (size_t k = 0; k < n; ++k) {
        MultiPoly p(n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                const Rational& c = a.at(i, j, k);
                if (c.is_zero()) continue;
                Monomial m(n, 0);
                m[i] += 1;
                m[j] += 1;
                p.add_term(m, c);
            }
        Monomial lin(n, 0);
        lin[k] = 1;
        p.add_term(lin, Rational(-1));
        gens.push_back(std::move(p));
    }
    return gens;
}

// All divisors of |x| up to a work cap; nullopt when x is too large to factor.
std::optional<std::vector<BigInt>> divisors(BigInt x) {
    if (x < 0) x = -x;
    if (x == 0) return std::nullopt;
    if (x > BigInt(1'000'000'000'000LL)) return std::nullopt;
    std::vector<BigInt> divs{1};
    BigInt n = x;
    for (BigInt p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        size_t count = divs.size();
        BigInt pk = 1;
        while (n % p == 0) {
            n /= p;
            pk *= p;
            for (size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
        }
    }
    if (n > 1) {
        size_t count = divs.size();
        for (size_t i = 0; i < count; ++i) divs.push_back(divs[i] * n);
    }
    return divs;
}

// Rational roots of a univariate polynomial given as (degree -> coefficient).
std::optional<std::vector<Rational>> rational_roots(const std::map<int, Rational>& poly) {
    int deg = poly.rbegin()->first;
    if (deg == 0) return std::vector<Rational>{};
    // clear denominators
    BigInt lcm = 1;
    for (const auto& [d, c] : poly) lcm = boost::multiprecision::lcm(lcm, c.den());
    std::map<int, BigInt> ip;
    for (const auto& [d, c] : poly) ip[d] = c.num() * (lcm / c.den());
    int valuation = ip.begin()->first;
    std::vector<Rational> roots;
    if (valuation > 0) roots.push_back(Rational(0));
    BigInt a0 = ip.begin()->second; // lowest nonzero coefficient (after shifting out t^valuation)
    BigInt an = ip.rbegin()->second;
    auto d0 = divisors(a0), dn = divisors(an);
    if (!d0 || !dn) return std::nullopt;
    auto value_at = [&](const Rational& r) {
        Rational acc(0);
        for (const auto& [d, c] : ip) {
            Rational term(c);
            for (int k = 0; k < d - valuation; ++k) term *= r;
            acc += term;
        }
        return acc;
    };
    for (const BigInt& p : *d0)
        for (const BigInt& q : *dn)
            for (int s : {1, -1}) {
                Rational cand(s * p, q);
                if (value_at(cand).is_zero() &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
    return roots;
}

// Enumerate all rational solutions of a zero-dimensional system by lex
// elimination and back substitution. May fail (nullopt) on oversized
// coefficients; soundness is certified by the caller against the
// quotient dimension.
std::optional<std::vector<std::vector<Rational>>> enumerate_solutions(
    std::vector<MultiPoly> gens, size_t nvars, std::vector<int> active,
    const GroebnerOptions& opts) {
    GroebnerOptions lex = opts;
    lex.order = MonomialOrder::Lex;
    auto gb = groebner_basis(gens, lex);
    for (const auto& g : gb)
        if (g.is_constant() && !g.is_zero()) return std::vector<std::vector<Rational>>{};
    if (active.empty()) return std::vector<std::vector<Rational>>{std::vector<Rational>(nvars)};

    int last = active.back();
    // univariate member in the last active variable
    std::optional<std::map<int, Rational>> uni;
    for (const auto& g : gb) {
        bool only_last = true;
        for (const auto& [m, c] : g.terms())
            for (size_t v = 0; v < nvars; ++v)
                if (m[v] > 0 && static_cast<int>(v) != last) only_last = false;
        if (!only_last || g.is_zero()) continue;
        std::map<int, Rational> p;
        for (const auto& [m, c] : g.terms()) p[m[last]] = c;
        if (!uni || p.rbegin()->first < uni->rbegin()->first) uni = p;
    }
    if (!uni) return std::nullopt; // not zero-dimensional in the remaining variables

    auto roots = rational_roots(*uni);
    if (!roots) return std::nullopt;
    std::vector<std::vector<Rational>> solutions;
    std::vector<int> rest(active.begin(), active.end() - 1);
    for (const auto& r : *roots) {
        std::vector<MultiPoly> sub;
        for (const auto& g : gb) sub.push_back(g.specialize(static_cast<size_t>(last), r));
        auto part = enumerate_solutions(std::move(sub), nvars, rest, opts);
        if (!part) return std::nullopt;
        for (auto& sol : *part) {
            sol[static_cast<size_t>(last)] = r;
            solutions.push_back(std::move(sol));
        }
    }
    return solutions;
}

} // namespace

IdempotentSet idempotent_frames(const Algebra& a, const GroebnerOptions& opts) {
    IdempotentSet result;
    auto gens = idempotent_system(a);
    auto gb = groebner_basis(gens, opts);
    auto qd = quotient_dimension(gb, opts.order);
    result.finite = qd.has_value();
    if (!result.finite) return result;

    std::vector<int> active(a.dim);
    for (size_t i = 0; i < a.dim; ++i) active[i] = static_cast<int>(i);
    auto sols = enumerate_solutions(gens, a.dim, active, opts);
    if (!sols) {
        result.complete = false;
        return result;
    }
    // completeness: every complex point is rational and simple
    result.complete = static_cast<long long>(sols->size()) == *qd;
    for (auto& s : *sols) {
        bool zero = true;
        for (const auto& x : s) zero = zero && x.is_zero();
        if (!zero) result.points.push_back(std::move(s));
    }
    std::sort(result.points.begin(), result.points.end(),
              [](const auto& x, const auto& y) {
                  for (size_t i = 0; i < x.size(); ++i)
                      if (!(x[i] == y[i])) return x[i] < y[i];
                  return false;
              });

    // maximal pairwise-orthogonal subsets
    size_t m = result.points.size();
    if (m > 0 && m <= 16) {
        std::vector<std::vector<bool>> orth(m, std::vector<bool>(m));
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) {
                auto prod = a.mult(result.points[i], result.points[j]);
                bool z = true;
                for (const auto& x : prod) z = z && x.is_zero();
                orth[i][j] = i != j && z;
            }
        for (size_t mask = 1; mask < (size_t{1} << m); ++mask) {
            bool clique = true;
            for (size_t i = 0; i < m && clique; ++i)
                for (size_t j = i + 1; j < m && clique; ++j)
                    if ((mask >> i & 1) && (mask >> j & 1) && !orth[i][j]) clique = false;
            if (!clique) continue;
            bool maximal = true;
            for (size_t x = 0; x < m && maximal; ++x) {
                if (mask >> x & 1) continue;
                bool extends = true;
                for (size_t i = 0; i < m && extends; ++i)
                    if ((mask >> i & 1) && !orth[i][x]) extends = false;
                if (extends) maximal = false;
            }
            if (!maximal) continue;
            std::vector<size_t> frame;
            for (size_t i = 0; i < m; ++i)
                if (mask >> i & 1) frame.push_back(i);
            result.frames.push_back(std::move(frame));
        }
    }
    return result;
}

PeirceDecomposition peirce_decomposition(const Algebra& a, const std::vector<Rational>& e) {
    bool zero = true;
    for (const auto& x : e) zero = zero && x.is_zero();
    if (zero) throw std::invalid_argument("peirce decomposition needs a nonzero idempotent");
    if (!is_idempotent(a, e)) throw std::invalid_argument("peirce decomposition needs an idempotent");

    PeirceDecomposition pd;
    pd.idempotent = e;
    Matrix<Rational> l = a.left_mult(e);
    const Rational eigs[3] = {Rational(0), Rational(1, 2), Rational(1)};
    size_t total = 0;
    for (int s = 0; s < 3; ++s) {
        Matrix<Rational> shifted = l;
        for (size_t i = 0; i < a.dim; ++i) shifted(i, i) -= eigs[s];
        pd.components[s] = shifted.kernel();
        total += pd.components[s].size();
    }
    if (total != a.dim)
        throw std::logic_error("left multiplication by the idempotent is not diagonalizable over "
                               "{0, 1/2, 1}; the Jordan identity must fail for this input");

    // multiplication relations: J0J0<=J0, J2J2<=J2, J0J2=0, J0J1<=J1, J2J1<=J1, J1J1<=J0+J2
    auto contained = [&](int u, int v, std::vector<int> targets) {
        std::vector<std::vector<Rational>> span;
        for (int t : targets)
            for (const auto& w : pd.components[t]) span.push_back(w);
        for (const auto& x : pd.components[u])
            for (const auto& y : pd.components[v]) {
                auto p = a.mult(x, y);
                bool z = true;
                for (const auto& c : p) z = z && c.is_zero();
                if (z) continue;
                if (span.empty() || !in_span(span, p))
                    throw std::logic_error("peirce multiplication relation violated");
            }
    };
    contained(0, 0, {0});
    contained(2, 2, {2});
    contained(0, 2, {});
    contained(0, 1, {1});
    contained(2, 1, {1});
    contained(1, 1, {0, 2});
    return pd;
}

std::array<size_t, 3> peirce_profile(const Algebra& a, const std::vector<Rational>& e) {
    auto pd = peirce_decomposition(a, e);
    return pd.dims();
}

namespace {

std::optional<std::vector<Rational>> solve_linear(const Matrix<Rational>& m,
                                                  const std::vector<Rational>& rhs) {
    Matrix<Rational> aug(m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = rhs[i];
    }
    auto pivots = aug.echelonize();
    std::vector<Rational> x(m.cols());
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == m.cols()) return std::nullopt;
        x[pivots[r]] = aug(r, m.cols());
    }
    return x;
}

struct SubalgebraView {
    Algebra alg;
    std::vector<std::vector<Rational>> embedding; // rows: subalgebra basis in ambient coords
};

SubalgebraView restrict_to_subspace(const Algebra& ambient,
                                    const std::vector<std::vector<Rational>>& basis) {
    SubalgebraView sv;
    sv.embedding = basis;
    sv.alg = Algebra(basis.size());
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j) {
            auto p = ambient.mult(basis[i], basis[j]);
            auto coords = express_in_basis(basis, p);
            if (!coords) throw std::logic_error("subspace is not closed under multiplication");
            for (size_t k = 0; k < basis.size(); ++k) sv.alg.at(i, j, k) = (*coords)[k];
        }
    return sv;
}

std::vector<Rational> embed(const SubalgebraView& sv, const std::vector<Rational>& local) {
    size_t n = sv.embedding.empty() ? 0 : sv.embedding[0].size();
    std::vector<Rational> v(n);
    for (size_t i = 0; i < sv.embedding.size(); ++i)
        for (size_t j = 0; j < n; ++j) v[j] += local[i] * sv.embedding[i][j];
    return v;
}

std::optional<std::vector<Rational>> unity_of(const Algebra& a) {
    size_t n = a.dim;
    if (n == 0) return std::nullopt;
    // solve sum_i u_i (e_i e_j) = e_j for all j
    Matrix<Rational> m(n * n, n);
    std::vector<Rational> rhs(n * n);
    for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k) {
            for (size_t i = 0; i < n; ++i) m(j * n + k, i) = a.at(i, j, k);
            rhs[j * n + k] = j == k ? Rational(1) : Rational(0);
        }
    auto u = solve_linear(m, rhs);
    if (!u) return std::nullopt;
    return u;
}

// deterministic small-height rational search values
std::vector<Rational> candidate_values() {
    std::vector<Rational> vals{Rational(0), Rational(1), Rational(-1)};
    for (int h = 2; h <= 6; ++h)
        for (int p = 1; p < h; ++p) {
            if (boost::multiprecision::gcd(BigInt(p), BigInt(h)) != 1) continue;
            vals.push_back(Rational(p, h));
            vals.push_back(Rational(-p, h));
            vals.push_back(Rational(h, p));
            vals.push_back(Rational(-h, p));
        }
    return vals;
}

// A proper rational idempotent (neither 0 nor the unity) of a semisimple
// algebra whose idempotent variety is positive-dimensional: cut with
// hyperplanes x_i = v of growing height until a zero-dimensional slice
// yields one.
std::optional<std::vector<Rational>> proper_idempotent_by_slicing(
    const Algebra& q, const std::vector<Rational>& unity, const GroebnerOptions& opts) {
    auto gens = idempotent_system(q);
    size_t n = q.dim;
    for (const Rational& v : candidate_values()) {
        for (size_t cut = 0; cut < n; ++cut) {
            std::vector<MultiPoly> sliced;
            for (const auto& g : gens) sliced.push_back(g.specialize(cut, v));
            MultiPoly fix = MultiPoly::var(n, cut) - MultiPoly::constant(n, v);
            sliced.push_back(fix);
            std::vector<int> active(n);
            for (size_t i = 0; i < n; ++i) active[i] = static_cast<int>(i);
            std::optional<std::vector<std::vector<Rational>>> sols;
            try {
                sols = enumerate_solutions(sliced, n, active, opts);
            } catch (const BudgetExhausted&) {
                continue;
            }
            if (!sols) continue;
            for (auto& s : *sols) {
                bool zero = true, is_unity = true;
                for (size_t i = 0; i < n; ++i) {
                    zero = zero && s[i].is_zero();
                    is_unity = is_unity && s[i] == unity[i];
                }
                if (!zero && !is_unity && is_idempotent(q, s)) return s;
            }
        }
    }
    return std::nullopt;
}

// finest orthogonal frame of a semisimple algebra, deterministic
std::vector<std::vector<Rational>> canonical_frame(const Algebra& q, const GroebnerOptions& opts) {
    if (q.dim == 0) return {};
    auto idem = idempotent_frames(q, opts);
    if (idem.finite && idem.complete) {
        if (idem.points.empty()) return {};
        size_t best = 0;
        bool found = false;
        std::vector<size_t> chosen;
        for (const auto& f : idem.frames)
            if (!found || f.size() > best) {
                best = f.size();
                chosen = f;
                found = true;
            }
        std::vector<std::vector<Rational>> frame;
        for (size_t idx : chosen) frame.push_back(idem.points[idx]);
        return frame;
    }
    // positive-dimensional: split along a proper idempotent and recurse
    auto u = unity_of(q);
    if (!u) throw std::runtime_error("cannot canonicalize: no unity in a semisimple quotient");
    auto p = proper_idempotent_by_slicing(q, *u, opts);
    if (!p) throw std::runtime_error("cannot canonicalize: no proper rational idempotent found");
    auto pd = peirce_decomposition(q, *p);
    std::vector<std::vector<Rational>> frame;
    for (int side : {2, 0}) {
        if (pd.components[side].empty()) continue;
        SubalgebraView sv = restrict_to_subspace(q, pd.components[side]);
        for (const auto& f : canonical_frame(sv.alg, opts)) frame.push_back(embed(sv, f));
    }
    return frame;
}

} // namespace

SemisimplePart semisimple_part(const Algebra& a, const GroebnerOptions& opts) {
    SemisimplePart sp;
    sp.radical_basis = trace_form_radical(a);
    size_t n = a.dim;

    // complement of the radical spanned by standard basis vectors off the pivots
    std::vector<bool> pivot_col(n, false);
    {
        auto rad = echelon_basis(sp.radical_basis);
        for (const auto& row : rad)
            for (size_t j = 0; j < n; ++j)
                if (!row[j].is_zero()) {
                    pivot_col[j] = true;
                    break;
                }
        sp.radical_basis = std::move(rad);
    }
    for (size_t j = 0; j < n; ++j)
        if (!pivot_col[j]) {
            std::vector<Rational> v(n);
            v[j] = Rational(1);
            sp.section.push_back(std::move(v));
        }

    // quotient structure constants via projection along the radical
    size_t qn = sp.section.size();
    sp.quotient = Algebra(qn);
    sp.quotient.label = a.label.empty() ? "" : a.label + "_ss";
    std::vector<std::vector<Rational>> combined = sp.section;
    for (const auto& r : sp.radical_basis) combined.push_back(r);
    for (size_t i = 0; i < qn; ++i)
        for (size_t j = 0; j < qn; ++j) {
            auto p = a.mult(sp.section[i], sp.section[j]);
            auto coords = express_in_basis(combined, p);
            if (!coords) throw std::logic_error("radical complement bookkeeping failed");
            for (size_t k = 0; k < qn; ++k) sp.quotient.at(i, j, k) = (*coords)[k];
        }

    // canonical frame of the quotient, lifted to orthogonal idempotents
    auto qframe = canonical_frame(sp.quotient, opts);
    std::vector<Rational> running_sum(n, Rational(0));
    bool have_sum = false;
    for (const auto& fq : qframe) {
        // representative in the algebra
        std::vector<Rational> x(n);
        for (size_t i = 0; i < qn; ++i)
            for (size_t j = 0; j < n; ++j) x[j] += fq[i] * sp.section[i][j];
        if (have_sum) {
            // project onto the 0-eigenspace of the sum lifted so far
            Matrix<Rational> l = a.left_mult(running_sum);
            const Rational eigs[3] = {Rational(0), Rational(1, 2), Rational(1)};
            std::vector<std::vector<Rational>> eigbasis;
            std::vector<size_t> zero_indices;
            for (int s = 0; s < 3; ++s) {
                Matrix<Rational> shifted = l;
                for (size_t i = 0; i < n; ++i) shifted(i, i) -= eigs[s];
                for (auto& v : shifted.kernel()) {
                    if (s == 0) zero_indices.push_back(eigbasis.size());
                    eigbasis.push_back(std::move(v));
                }
            }
            auto coords = express_in_basis(eigbasis, x);
            if (!coords) throw std::logic_error("idempotent lift: eigenbasis incomplete");
            std::vector<Rational> x0(n);
            for (size_t zi : zero_indices)
                for (size_t j = 0; j < n; ++j) x0[j] += (*coords)[zi] * eigbasis[zi][j];
            x = std::move(x0);
        }
        // Newton refinement within the subalgebra generated by x:
        // y = 3x^2 - 2x^3 squares the defect x^2 - x
        for (int iter = 0; iter < 64 && !is_idempotent(a, x); ++iter) {
            auto x2 = a.mult(x, x);
            auto x3 = a.mult(x2, x);
            for (size_t j = 0; j < n; ++j) x[j] = Rational(3) * x2[j] - Rational(2) * x3[j];
        }
        if (!is_idempotent(a, x)) throw std::logic_error("idempotent lift did not converge");
        for (size_t j = 0; j < n; ++j) running_sum[j] += x[j];
        have_sum = true;
        if (!is_idempotent(a, running_sum))
            throw std::logic_error("lifted frame is not orthogonal");
        sp.lifted_frame.push_back(std::move(x));
    }

    // spectra over all nonzero subset sums of the lifted frame
    size_t m = sp.lifted_frame.size();
    for (size_t mask = 1; mask < (size_t{1} << m); ++mask) {
        std::vector<Rational> e(n);
        for (size_t i = 0; i < m; ++i)
            if (mask >> i & 1)
                for (size_t j = 0; j < n; ++j) e[j] += sp.lifted_frame[i][j];
        sp.action_spectra.emplace_back(e, peirce_profile(a, e));
    }
    return sp;
}

std::vector<std::vector<Rational>> reference_idempotents(const Algebra& a,
                                                         const GroebnerOptions& opts) {
    auto idem = idempotent_frames(a, opts);
    if (idem.finite && idem.complete) return idem.points;
    auto sp = semisimple_part(a, opts);
    std::vector<std::vector<Rational>> pts;
    for (const auto& [e, prof] : sp.action_spectra) pts.push_back(e);
    return pts;
}

std::vector<std::array<size_t, 3>> reference_spectra(const Algebra& a,
                                                     const GroebnerOptions& opts) {
    std::vector<std::array<size_t, 3>> spectra;
    for (const auto& e : reference_idempotents(a, opts)) spectra.push_back(peirce_profile(a, e));
    std::sort(spectra.begin(), spectra.end());
    return spectra;
}

Fingerprint fingerprint(const Algebra& a, const GroebnerOptions& opts) {
    if (!is_jordan(a)) throw std::invalid_argument("fingerprint requires a Jordan algebra");
    Fingerprint fp;
    fp.dim = a.dim;
    fp.der_dim = derivation_algebra(a).dim;
    fp.rad_dim = trace_form_radical(a).size();
    auto nil = is_nilpotent(a);
    fp.nilpotent = nil.nilpotent;
    fp.nilindex = nil.nilpotent ? nil.index : 0;
    fp.powers = power_dims(a);
    auto idem = idempotent_frames(a, opts);
    fp.idempotent_count = idem.finite && idem.complete
                              ? static_cast<long long>(idem.points.size())
                              : -1;
    fp.peirce_profiles = reference_spectra(a, opts);
    fp.square_dim = square_dim(a);
    fp.h2_dim = h2(a).h2_dim;
    return fp;
}

std::string Fingerprint::str() const {
    std::ostringstream os;
    os << "dim=" << dim << " der=" << der_dim << " rad=" << rad_dim;
    os << " nil=" << (nilpotent ? std::to_string(nilindex) : std::string("no"));
    os << " powers=";
    for (size_t i = 0; i < powers.size(); ++i) os << (i ? "," : "") << powers[i];
    os << " idem=" << (idempotent_count < 0 ? std::string("inf") : std::to_string(idempotent_count));
    os << " peirce=";
    for (size_t i = 0; i < peirce_profiles.size(); ++i)
        os << (i ? ";" : "") << peirce_profiles[i][0] << "," << peirce_profiles[i][1] << ","
           << peirce_profiles[i][2];
    os << " sq=" << square_dim << " h2=" << h2_dim;
    return os.str();
}

} // namespace jord
