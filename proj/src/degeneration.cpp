#include "jord/degeneration.hpp"

#include "jord/algebra_io.hpp"
#include "jord/catalog.hpp"

#include "json.hpp"

#include <sstream>

namespace jord {

AlgebraOverT transform_by_parametrized_basis(const Algebra& a, const ParametrizedBasis& e) {
    if (e.rows.rows() != a.dim || e.rows.cols() != a.dim)
        throw std::invalid_argument("parametrized basis dimension mismatch");
    if (e.rows.determinant() == RatFunc(0))
        throw std::invalid_argument("parametrized basis is singular as a matrix of rational functions");
    AlgebraOverT at(a.dim);
    at.label = a.label;
    at.basis_names = a.basis_names;
    for (size_t i = 0; i < a.dim; ++i)
        for (size_t j = 0; j < a.dim; ++j)
            for (size_t k = 0; k < a.dim; ++k) at.at(i, j, k) = RatFunc(a.at(i, j, k));
    return constants_in_basis(at, e.rows);
}

WitnessReport verify_witness(const DegenerationWitness& w) {
    WitnessReport rep;
    if (w.source.dim != w.target.dim) {
        rep.issues.push_back("source and target dimensions differ");
        return rep;
    }
    AlgebraOverT t;
    try {
        t = transform_by_parametrized_basis(w.source, w.basis);
    } catch (const std::invalid_argument& e) {
        rep.issues.push_back(e.what());
        return rep;
    }
    size_t n = w.source.dim;
    rep.verified = true;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                const RatFunc& c = t.at(i, j, k);
                if (!c.is_polynomial()) rep.non_polynomial_entries = true;
                auto lim = c.limit_at_zero();
                std::ostringstream coord;
                coord << "c[" << i + 1 << "][" << j + 1 << "][" << k + 1 << "]";
                if (!lim) {
                    rep.verified = false;
                    rep.issues.push_back(coord.str() + " = " + c.str() + " has a pole at t=0");
                } else if (!(*lim == w.target.at(i, j, k))) {
                    rep.verified = false;
                    rep.issues.push_back(coord.str() + " -> " + lim->str() + " but the target needs " +
                                         w.target.at(i, j, k).str());
                }
            }
    return rep;
}

DegenerationWitness scaling_witness(const Algebra& source, const std::string& source_label,
                                    const Algebra& zero_target, const std::string& target_label) {
    DegenerationWitness w;
    w.source = source;
    w.source_label = source_label;
    w.target = zero_target;
    w.target_label = target_label;
    Matrix<RatFunc> rows(source.dim, source.dim);
    for (size_t i = 0; i < source.dim; ++i) rows(i, i) = RatFunc::t();
    w.basis.rows = std::move(rows);
    return w;
}

DerivationCheckReport derivation_check(const Algebra& a, const Algebra& b) {
    if (a.dim != b.dim) throw std::invalid_argument("derivation check needs equal dimensions");
    DerivationCheckReport rep;
    rep.der_source = derivation_algebra(a).dim;
    rep.der_target = derivation_algebra(b).dim;
    rep.orbit_dim_source = a.dim * a.dim - rep.der_source;
    rep.orbit_dim_target = b.dim * b.dim - rep.der_target;
    rep.fingerprints_equal = fingerprint(a) == fingerprint(b);
    rep.verdict = (!rep.fingerprints_equal && rep.der_source >= rep.der_target)
                      ? DerivationVerdict::Obstructed
                      : DerivationVerdict::Consistent;
    return rep;
}

// ---- expression parser ----------------------------------------------------

namespace {

struct ExprParser {
    const std::string& s;
    size_t pos = 0;

    explicit ExprParser(const std::string& text) : s(text) {}

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("rational-function expression: " + msg + " at position " +
                         std::to_string(pos) + " in '" + s + "'");
    }

    RatFunc parse() {
        RatFunc r = expr();
        skip();
        if (pos != s.size()) fail("trailing input");
        return r;
    }

    RatFunc expr() {
        RatFunc acc = term();
        while (true) {
            skip();
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else return acc;
        }
    }

    RatFunc term() {
        RatFunc acc = factor();
        while (true) {
            skip();
            if (eat('*')) acc = acc * factor();
            else if (eat('/')) {
                RatFunc d = factor();
                if (d.is_zero()) fail("division by zero");
                acc = acc / d;
            } else return acc;
        }
    }

    RatFunc factor() {
        skip();
        int sign = 1;
        while (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            if (s[pos] == '-') sign = -sign;
            ++pos;
            skip();
        }
        RatFunc base = atom();
        skip();
        if (eat('^')) {
            skip();
            bool neg = eat('-');
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) fail("exponent expected");
            long e = std::stol(s.substr(start, pos - start));
            RatFunc acc(1);
            for (long i = 0; i < e; ++i) acc = acc * base;
            base = neg ? acc.inverse() : acc;
        }
        return sign < 0 ? -base : base;
    }

    RatFunc atom() {
        skip();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            RatFunc r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (c == 't') {
            ++pos;
            return RatFunc::t();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            return RatFunc(Rational::parse(s.substr(start, pos - start)));
        }
        fail("expected number, 't' or '('");
    }
};

using nlohmann::json;
using nlohmann::ordered_json;

Algebra resolve_algebra(const json& node, std::string& label_out, const std::string& role) {
    if (node.is_string()) {
        label_out = normalize_label(node.get<std::string>());
        return catalog(label_out);
    }
    if (node.is_object()) {
        Algebra a = parse_algebra(node.dump());
        label_out = a.label;
        return a;
    }
    throw ParseError("witness " + role + " must be a catalog label or an inline algebra document");
}

} // namespace

RatFunc parse_ratfunc(const std::string& text) { return ExprParser(text).parse(); }

DegenerationWitness parse_witness(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("witness document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("source") || !doc.contains("target") ||
        !doc.contains("basis"))
        throw ParseError("witness document needs fields source, target, basis");
    DegenerationWitness w;
    w.source = resolve_algebra(doc["source"], w.source_label, "source");
    w.target = resolve_algebra(doc["target"], w.target_label, "target");
    const auto& rows = doc["basis"];
    if (!rows.is_array() || rows.size() != w.source.dim)
        throw ParseError("witness basis must be an n x n array of expressions");
    Matrix<RatFunc> m(w.source.dim, w.source.dim);
    for (size_t i = 0; i < w.source.dim; ++i) {
        if (!rows[i].is_array() || rows[i].size() != w.source.dim)
            throw ParseError("witness basis row " + std::to_string(i + 1) + " has the wrong length");
        for (size_t j = 0; j < w.source.dim; ++j) {
            if (!rows[i][j].is_string())
                throw ParseError("witness basis entries must be strings");
            m(i, j) = parse_ratfunc(rows[i][j].get<std::string>());
        }
    }
    w.basis.rows = std::move(m);
    return w;
}

std::string serialize_witness(const DegenerationWitness& w) {
    ordered_json doc;
    if (!w.source_label.empty()) doc["source"] = w.source_label;
    else doc["source"] = ordered_json::parse(serialize_algebra(w.source));
    if (!w.target_label.empty()) doc["target"] = w.target_label;
    else doc["target"] = ordered_json::parse(serialize_algebra(w.target));
    ordered_json rows = ordered_json::array();
    for (size_t i = 0; i < w.basis.rows.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (size_t j = 0; j < w.basis.rows.cols(); ++j) row.push_back(w.basis.rows(i, j).str());
        rows.push_back(std::move(row));
    }
    doc["basis"] = std::move(rows);
    return doc.dump(2) + "\n";
}

} // namespace jord
