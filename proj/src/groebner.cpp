#include "jord/groebner.hpp"

#include <algorithm>
#include <set>

namespace jord {

namespace {

bool divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
    return m;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

MultiPoly mono_mult(const MultiPoly& p, const Monomial& m, const Rational& c) {
    MultiPoly r(p.nvars());
    for (const auto& [pm, pc] : p.terms()) {
        Monomial q = pm;
        for (size_t i = 0; i < q.size(); ++i) q[i] += m[i];
        r.add_term(q, pc * c);
    }
    return r;
}

void spend(long long* budget, long long amount = 1) {
    if (!budget) return;
    *budget -= amount;
    if (*budget < 0) throw BudgetExhausted();
}

} // namespace

MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis,
                      MonomialOrder ord, long long* budget) {
    MultiPoly r = p;
    bool reduced = true;
    while (reduced && !r.is_zero()) {
        reduced = false;
        auto [lm, lc] = r.leading(ord);
        for (const auto& g : basis) {
            auto [glm, glc] = g.leading(ord);
            if (!divides(glm, lm)) continue;
            Monomial q = lm;
            for (size_t i = 0; i < q.size(); ++i) q[i] -= glm[i];
            r = r - mono_mult(g, q, lc / glc);
            spend(budget);
            reduced = true;
            break;
        }
    }
    return r;
}

std::vector<MultiPoly> groebner_basis(std::vector<MultiPoly> gens, const GroebnerOptions& opts) {
    long long budget = opts.budget;
    std::vector<MultiPoly> basis;
    for (auto& g : gens)
        if (!g.is_zero()) basis.push_back(std::move(g));
    if (basis.empty()) return basis;

    std::set<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) pairs.insert({i, j});

    while (!pairs.empty()) {
        auto [i, j] = *pairs.begin();
        pairs.erase(pairs.begin());
        auto [mi, ci] = basis[i].leading(opts.order);
        auto [mj, cj] = basis[j].leading(opts.order);
        if (coprime(mi, mj)) continue; // Buchberger's first criterion
        Monomial l = mono_lcm(mi, mj);
        Monomial qi = l, qj = l;
        for (size_t k = 0; k < l.size(); ++k) {
            qi[k] -= mi[k];
            qj[k] -= mj[k];
        }
        MultiPoly s = mono_mult(basis[i], qi, ci.inverse()) - mono_mult(basis[j], qj, cj.inverse());
        spend(&budget);
        MultiPoly r = normal_form(s, basis, opts.order, &budget);
        if (r.is_zero()) continue;
        size_t k = basis.size();
        basis.push_back(std::move(r));
        for (size_t m = 0; m < k; ++m) pairs.insert({m, k});
    }

    // reduce: drop members whose leading monomial is divisible by another's,
    // then fully reduce each against the rest and normalize leading coeff to 1
    std::vector<MultiPoly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        auto [mi, ci] = basis[i].leading(opts.order);
        bool redundant = false;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            auto [mj, cj] = basis[j].leading(opts.order);
            if (divides(mj, mi) && !(mi == mj && j > i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::vector<MultiPoly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MultiPoly r = others.empty() ? minimal[i] : normal_form(minimal[i], others, opts.order, &budget);
        if (r.is_zero()) continue;
        auto [lm, lc] = r.leading(opts.order);
        reduced.push_back(r * lc.inverse());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        return compare_monomials(a.leading(opts.order).first, b.leading(opts.order).first, opts.order) < 0;
    });
    return reduced;
}

Emptiness groebner_emptiness(const std::vector<MultiPoly>& gens, const GroebnerOptions& opts) {
    try {
        auto gb = groebner_basis(gens, opts);
        for (const auto& g : gb)
            if (g.is_constant() && !g.is_zero()) return Emptiness::EmptyOverC;
        return Emptiness::NonEmptyOverC;
    } catch (const BudgetExhausted&) {
        return Emptiness::Undecided;
    }
}

std::optional<long long> quotient_dimension(const std::vector<MultiPoly>& basis, MonomialOrder ord) {
    if (basis.empty()) return std::nullopt;
    size_t n = basis[0].nvars();
    std::vector<Monomial> lms;
    for (const auto& g : basis) lms.push_back(g.leading(ord).first);
    for (const auto& m : lms)
        if (total_degree(m) == 0) return 0; // ideal is the whole ring
    // zero-dimensionality: each variable has a pure power among the leading monomials
    std::vector<int> bound(n, -1);
    for (const auto& m : lms) {
        int var = -1;
        bool pure = true;
        for (size_t i = 0; i < n; ++i) {
            if (m[i] > 0) {
                if (var >= 0) {
                    pure = false;
                    break;
                }
                var = static_cast<int>(i);
            }
        }
        if (pure && var >= 0 && (bound[var] < 0 || m[var] < bound[var])) bound[var] = m[var];
    }
    for (size_t i = 0; i < n; ++i)
        if (bound[i] < 0) return std::nullopt;
    // count monomials below the staircase
    long long count = 0;
    Monomial cur(n, 0);
    auto under = [&](const Monomial& m) {
        for (const auto& lm : lms)
            if (divides(lm, m)) return false;
        return true;
    };
    // enumerate the box bounded by pure powers; standard monomials all lie inside
    std::vector<int> idx(n, 0);
    while (true) {
        if (under(cur)) ++count;
        size_t pos = 0;
        while (pos < n) {
            if (++cur[pos] < bound[pos]) break;
            cur[pos] = 0;
            ++pos;
        }
        if (pos == n) break;
    }
    return count;
}

} // namespace jord
