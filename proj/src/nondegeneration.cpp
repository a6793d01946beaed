#include "jord/nondegeneration.hpp"

#include "jord/algebra_io.hpp"
#include "jord/degeneration.hpp"
#include "jord/invariants.hpp"

#include "json.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace jord {

std::set<std::array<int, 3>> ClosedSetSpec::expanded() const {
    std::set<std::array<int, 3>> out;
    int n = static_cast<int>(dim);
    for (const auto& t : vanishing) {
        out.insert(t);
        out.insert({t[1], t[0], t[2]});
    }
    for (const auto& f : flags) {
        for (int i = f.a; i <= n; ++i)
            for (int j = f.b; j <= n; ++j)
                for (int k = 1; k < f.c; ++k) {
                    out.insert({i, j, k});
                    out.insert({j, i, k});
                }
    }
    return out;
}

bool membership(const ClosedSetSpec& spec, const Algebra& a) {
    if (spec.dim != a.dim) throw std::invalid_argument("spec dimension mismatch");
    for (const auto& t : spec.expanded())
        if (!a.at(t[0] - 1, t[1] - 1, t[2] - 1).is_zero()) return false;
    return true;
}

namespace {

// Variable layout for the symbolic stability check: structure constants
// first, then the two triangular matrices.
struct StabilityVars {
    size_t n;
    size_t c_base = 0, h_base, g_base, total;
    explicit StabilityVars(size_t dim) : n(dim) {
        h_base = n * n * n;
        g_base = h_base + n * n;
        total = g_base + n * n;
    }
    size_t c(size_t p, size_t q, size_t r) const { return (p * n + q) * n + r; }
    size_t h(size_t p, size_t i) const { return h_base + p * n + i; }
    size_t g(size_t k, size_t r) const { return g_base + k * n + r; }
};

} // namespace

bool borel_stability(const ClosedSetSpec& spec) {
    size_t n = spec.dim;
    StabilityVars v(n);
    auto constrained = spec.expanded();
    // transformed coordinate c'_{ij}^k = sum over p>=i, q>=j, k>=r of
    // h_{p,i} h_{q,j} g_{k,r} c_{p,q}^r  (triangular supports)
    for (const auto& target : constrained) {
        size_t i = static_cast<size_t>(target[0] - 1);
        size_t j = static_cast<size_t>(target[1] - 1);
        size_t k = static_cast<size_t>(target[2] - 1);
        MultiPoly cp(v.total);
        for (size_t p = i; p < n; ++p)
            for (size_t q = j; q < n; ++q)
                for (size_t r = 0; r <= k; ++r) {
                    Monomial m(v.total, 0);
                    m[v.h(p, i)] += 1;
                    m[v.h(q, j)] += 1;
                    m[v.g(k, r)] += 1;
                    m[v.c(p, q, r)] += 1;
                    cp.add_term(m, Rational(1));
                }
        for (const auto& [mono, coeff] : cp.terms()) {
            bool has_constrained_factor = false;
            for (const auto& t : constrained) {
                size_t idx = v.c(static_cast<size_t>(t[0] - 1), static_cast<size_t>(t[1] - 1),
                                 static_cast<size_t>(t[2] - 1));
                if (mono[idx] > 0) {
                    has_constrained_factor = true;
                    break;
                }
            }
            if (!has_constrained_factor) return false;
        }
    }
    return true;
}

namespace {

using MPolyMatrix = std::vector<std::vector<MultiPoly>>;

MPolyMatrix mp_identity(size_t n, size_t nvars) {
    MPolyMatrix m(n, std::vector<MultiPoly>(n, MultiPoly(nvars)));
    for (size_t i = 0; i < n; ++i) m[i][i] = MultiPoly::constant(nvars, Rational(1));
    return m;
}

MPolyMatrix mp_mult(const MPolyMatrix& a, const MPolyMatrix& b) {
    size_t n = a.size();
    size_t nvars = a[0][0].nvars();
    MPolyMatrix r(n, std::vector<MultiPoly>(n, MultiPoly(nvars)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < n; ++j) {
                if (b[k][j].is_zero()) continue;
                r[i][j] = r[i][j] + a[i][k] * b[k][j];
            }
        }
    return r;
}

std::vector<std::vector<int>> all_permutations(size_t n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace

ExclusionReport orbit_exclusion(const ClosedSetSpec& spec, const Algebra& b,
                                const GroebnerOptions& opts, bool require_stability) {
    if (spec.dim != b.dim) throw std::invalid_argument("spec dimension mismatch");
    ExclusionReport report;
    report.stability_ok = borel_stability(spec);
    if (require_stability && !report.stability_ok)
        throw std::invalid_argument("orbit exclusion requires a stable spec");

    size_t n = b.dim;
    auto constrained = spec.expanded();
    bool all_empty = true;
    bool any_undecided = false;

    for (const auto& w : all_permutations(n)) {
        // Cells for the triangular subgroup fixing the descending flag:
        // every invertible g factors as b * P_w * u with u lower-unitriangular
        // supported exactly where conjugation by w moves the entry above the
        // diagonal, so b may be dropped for a stable spec.
        std::vector<std::pair<size_t, size_t>> params;
        for (size_t j = 0; j < n; ++j)
            for (size_t i = j + 1; i < n; ++i)
                if (w[i] < w[j]) params.emplace_back(i, j);
        size_t nvars = params.size();

        // u = I + N with the free entries; u_inv = I - N + N^2 - ...
        MPolyMatrix u = mp_identity(n, nvars);
        for (size_t p = 0; p < params.size(); ++p)
            u[params[p].first][params[p].second] = MultiPoly::var(nvars, p);
        MPolyMatrix nmat = u;
        for (size_t i = 0; i < n; ++i)
            nmat[i][i] = nmat[i][i] - MultiPoly::constant(nvars, Rational(1));
        MPolyMatrix uinv = mp_identity(n, nvars);
        MPolyMatrix pw = nmat;
        int sign = -1;
        for (size_t step = 1; step < n; ++step) {
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    uinv[i][j] = sign > 0 ? uinv[i][j] + pw[i][j] : uinv[i][j] - pw[i][j];
            pw = mp_mult(pw, nmat);
            sign = -sign;
        }

        // g = P_w u: column i of g is P_w applied to column i of u
        MPolyMatrix g(n, std::vector<MultiPoly>(n, MultiPoly(nvars)));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) g[static_cast<size_t>(w[i])][j] = u[i][j];
        // g^-1 = u^-1 P_w^-1: column j of g^-1 is u^-1's column w[j]... P_w^-1 e_j = e_{w^-1(j)}
        std::vector<int> winv(n);
        for (size_t i = 0; i < n; ++i) winv[static_cast<size_t>(w[i])] = static_cast<int>(i);
        MPolyMatrix ginv(n, std::vector<MultiPoly>(n, MultiPoly(nvars)));
        for (size_t j = 0; j < n; ++j)
            for (size_t i = 0; i < n; ++i) ginv[i][j] = uinv[i][static_cast<size_t>(winv[j])];

        // transformed constants of b under g, then the spec's vanishing system
        std::vector<MultiPoly> gens;
        std::vector<std::string> names;
        for (size_t p = 0; p < params.size(); ++p)
            names.push_back("u" + std::to_string(params[p].first + 1) +
                            std::to_string(params[p].second + 1));
        for (const auto& t : constrained) {
            size_t i = static_cast<size_t>(t[0] - 1), j = static_cast<size_t>(t[1] - 1),
                   k = static_cast<size_t>(t[2] - 1);
            MultiPoly acc(nvars);
            for (size_t p = 0; p < n; ++p) {
                if (ginv[p][i].is_zero()) continue;
                for (size_t q = 0; q < n; ++q) {
                    if (ginv[q][j].is_zero()) continue;
                    for (size_t r = 0; r < n; ++r) {
                        const Rational& c = b.at(p, q, r);
                        if (c.is_zero() || g[k][r].is_zero()) continue;
                        acc = acc + ginv[p][i] * ginv[q][j] * g[k][r] * c;
                    }
                }
            }
            if (!acc.is_zero()) gens.push_back(std::move(acc));
        }

        CellTranscript cell;
        cell.permutation = w;
        cell.parameters = nvars;
        for (const auto& p : gens) cell.generators.push_back(p.str(names));
        try {
            auto gb = groebner_basis(gens, opts);
            for (const auto& p : gb) cell.reduced_basis.push_back(p.str(names));
            bool empty = false;
            for (const auto& p : gb)
                if (p.is_constant() && !p.is_zero()) empty = true;
            cell.verdict = empty ? Emptiness::EmptyOverC : Emptiness::NonEmptyOverC;
        } catch (const BudgetExhausted&) {
            cell.verdict = Emptiness::Undecided;
        }
        if (cell.verdict == Emptiness::NonEmptyOverC) all_empty = false;
        if (cell.verdict == Emptiness::Undecided) any_undecided = true;
        report.cells.push_back(std::move(cell));
    }

    if (any_undecided && all_empty) report.verdict = Exclusion::Undecided;
    else report.verdict = all_empty ? Exclusion::Excluded : Exclusion::NotExcluded;
    return report;
}

Obstruction peirce_obstruction(const Algebra& a, const Algebra& b, const GroebnerOptions& opts) {
    if (is_nilpotent(b).nilpotent)
        throw std::invalid_argument("peirce obstruction applies to non-nilpotent targets only");
    auto target_spectra = semisimple_part(b, opts).action_spectra;
    auto source_spectra = reference_spectra(a, opts);
    for (const auto& [e, prof] : target_spectra) {
        if (std::find(source_spectra.begin(), source_spectra.end(), prof) != source_spectra.end())
            return Obstruction::NotObstructed;
    }
    return Obstruction::Obstructed;
}

size_t generic_degree(const Algebra& a) {
    size_t n = a.dim;
    // symbolic generic element and its left-normed powers
    std::vector<std::vector<MultiPoly>> powers;
    std::vector<MultiPoly> x;
    for (size_t i = 0; i < n; ++i) x.push_back(MultiPoly::var(n, i));
    powers.push_back(x);
    auto mult_sym = [&](const std::vector<MultiPoly>& u, const std::vector<MultiPoly>& v) {
        std::vector<MultiPoly> r(n, MultiPoly(n));
        for (size_t i = 0; i < n; ++i) {
            if (u[i].is_zero()) continue;
            for (size_t j = 0; j < n; ++j) {
                if (v[j].is_zero()) continue;
                for (size_t k = 0; k < n; ++k) {
                    const Rational& c = a.at(i, j, k);
                    if (!c.is_zero()) r[k] = r[k] + u[i] * v[j] * c;
                }
            }
        }
        return r;
    };
    for (size_t m = 1; m < n; ++m) powers.push_back(mult_sym(powers.back(), x));

    // determinant of an m x m MultiPoly matrix by cofactor expansion
    std::function<MultiPoly(const std::vector<std::vector<MultiPoly>>&)> det =
        [&](const std::vector<std::vector<MultiPoly>>& m) -> MultiPoly {
        size_t k = m.size();
        if (k == 1) return m[0][0];
        MultiPoly acc(n);
        int sign = 1;
        for (size_t c = 0; c < k; ++c) {
            std::vector<std::vector<MultiPoly>> minor;
            for (size_t r = 1; r < k; ++r) {
                std::vector<MultiPoly> row;
                for (size_t cc = 0; cc < k; ++cc)
                    if (cc != c) row.push_back(m[r][cc]);
                minor.push_back(std::move(row));
            }
            MultiPoly term = m[0][c] * det(minor);
            acc = sign > 0 ? acc + term : acc - term;
            sign = -sign;
        }
        return acc;
    };

    size_t degree = 0;
    for (size_t m = 1; m <= n; ++m) {
        // some m x m minor of the rows x, x^2, ..., x^m must be nonzero
        std::vector<size_t> cols(m);
        std::iota(cols.begin(), cols.end(), 0);
        bool nonzero = false;
        while (true) {
            std::vector<std::vector<MultiPoly>> sub(m, std::vector<MultiPoly>(m, MultiPoly(n)));
            for (size_t r = 0; r < m; ++r)
                for (size_t c = 0; c < m; ++c) sub[r][c] = powers[r][cols[c]];
            if (!det(sub).is_zero()) {
                nonzero = true;
                break;
            }
            // next combination
            size_t i = m;
            while (i > 0 && cols[i - 1] == n - m + i - 1) --i;
            if (i == 0) break;
            ++cols[i - 1];
            for (size_t j = i; j < m; ++j) cols[j] = cols[j - 1] + 1;
        }
        if (!nonzero) break;
        degree = m;
    }
    return degree;
}

Obstruction degree_obstruction(const Algebra& a, const Algebra& b) {
    return generic_degree(a) < generic_degree(b) ? Obstruction::Obstructed
                                                 : Obstruction::NotObstructed;
}

CertificateCheck check_certificate(const NonDegenerationCertificate& cert, const Algebra& source,
                                   const Algebra& target, const GroebnerOptions& opts) {
    CertificateCheck out;
    std::ostringstream detail;
    switch (cert.kind) {
    case NonDegenerationCertificate::Kind::DerivationDimension: {
        auto rep = derivation_check(source, target);
        out.ok = rep.verdict == DerivationVerdict::Obstructed;
        detail << "dim Der(source) = " << rep.der_source << ", dim Der(target) = " << rep.der_target
               << (out.ok ? ": no strict increase, distinct fingerprints" : ": not obstructed");
        break;
    }
    case NonDegenerationCertificate::Kind::PeirceObstruction: {
        out.ok = peirce_obstruction(source, target, opts) == Obstruction::Obstructed;
        detail << (out.ok ? "no source idempotent matches any target frame spectrum"
                          : "a matching idempotent spectrum exists; not obstructed");
        break;
    }
    case NonDegenerationCertificate::Kind::GenericDegree: {
        size_t da = generic_degree(source), db = generic_degree(target);
        out.ok = da < db;
        detail << "generic degree " << da << " vs " << db
               << (out.ok ? ": target needs longer power chains" : ": not obstructed");
        break;
    }
    case NonDegenerationCertificate::Kind::ClosedSet: {
        Algebra in_basis = constants_in_basis(source, cert.membership_basis);
        bool member = membership(cert.spec, in_basis);
        bool stable = borel_stability(cert.spec);
        out.exclusion = orbit_exclusion(cert.spec, target, opts, false);
        bool excluded = out.exclusion.verdict == Exclusion::Excluded;
        out.ok = member && stable && excluded;
        detail << "membership=" << (member ? "yes" : "NO") << " stability=" << (stable ? "yes" : "NO")
               << " exclusion="
               << (out.exclusion.verdict == Exclusion::Excluded
                       ? "empty-over-C on every cell"
                       : out.exclusion.verdict == Exclusion::NotExcluded ? "NOT excluded"
                                                                         : "undecided");
        break;
    }
    }
    out.detail = detail.str();
    return out;
}

// ---- certificate files ------------------------------------------------------

namespace {
using nlohmann::json;
using nlohmann::ordered_json;

const char* kind_name(NonDegenerationCertificate::Kind k) {
    switch (k) {
    case NonDegenerationCertificate::Kind::DerivationDimension: return "derivation-dimension";
    case NonDegenerationCertificate::Kind::PeirceObstruction: return "peirce-obstruction";
    case NonDegenerationCertificate::Kind::ClosedSet: return "closed-set";
    case NonDegenerationCertificate::Kind::GenericDegree: return "generic-degree";
    }
    return "?";
}
} // namespace

NonDegenerationCertificate parse_certificate(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("certificate document is not valid JSON: ") + e.what());
    }
    NonDegenerationCertificate c;
    if (!doc.is_object() || !doc.contains("kind") || !doc.contains("pair"))
        throw ParseError("certificate document needs fields kind and pair");
    std::string kind = doc["kind"].get<std::string>();
    if (kind == "derivation-dimension") c.kind = NonDegenerationCertificate::Kind::DerivationDimension;
    else if (kind == "peirce-obstruction") c.kind = NonDegenerationCertificate::Kind::PeirceObstruction;
    else if (kind == "closed-set") c.kind = NonDegenerationCertificate::Kind::ClosedSet;
    else if (kind == "generic-degree") c.kind = NonDegenerationCertificate::Kind::GenericDegree;
    else throw ParseError("unknown certificate kind '" + kind + "'");
    c.source = doc["pair"].at(0).get<std::string>();
    c.target = doc["pair"].at(1).get<std::string>();
    if (c.kind == NonDegenerationCertificate::Kind::ClosedSet) {
        const auto& s = doc.at("spec");
        c.spec.dim = s.at("dim").get<size_t>();
        c.spec.name = s.value("name", "");
        for (const auto& t : s.value("vanishing", json::array()))
            c.spec.vanishing.push_back({t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()});
        for (const auto& f : s.value("flags", json::array()))
            c.spec.flags.push_back(
                {f.at("a").get<int>(), f.at("b").get<int>(), f.at("c").get<int>()});
        const auto& mb = doc.at("membership_basis");
        c.membership_basis = Matrix<Rational>(c.spec.dim, c.spec.dim);
        for (size_t i = 0; i < c.spec.dim; ++i)
            for (size_t j = 0; j < c.spec.dim; ++j)
                c.membership_basis(i, j) = Rational::parse(mb.at(i).at(j).get<std::string>());
    }
    return c;
}

std::string serialize_certificate(const NonDegenerationCertificate& cert) {
    ordered_json doc;
    doc["kind"] = kind_name(cert.kind);
    doc["pair"] = {cert.source, cert.target};
    if (cert.kind == NonDegenerationCertificate::Kind::ClosedSet) {
        ordered_json spec;
        spec["dim"] = cert.spec.dim;
        if (!cert.spec.name.empty()) spec["name"] = cert.spec.name;
        ordered_json vanish = ordered_json::array();
        for (const auto& t : cert.spec.vanishing) vanish.push_back({t[0], t[1], t[2]});
        spec["vanishing"] = std::move(vanish);
        ordered_json flags = ordered_json::array();
        for (const auto& f : cert.spec.flags)
            flags.push_back({{"a", f.a}, {"b", f.b}, {"c", f.c}});
        spec["flags"] = std::move(flags);
        doc["spec"] = std::move(spec);
        ordered_json mb = ordered_json::array();
        for (size_t i = 0; i < cert.membership_basis.rows(); ++i) {
            ordered_json row = ordered_json::array();
            for (size_t j = 0; j < cert.membership_basis.cols(); ++j)
                row.push_back(cert.membership_basis(i, j).str());
            mb.push_back(std::move(row));
        }
        doc["membership_basis"] = std::move(mb);
    }
    return doc.dump(2) + "\n";
}

} // namespace jord
