#include "jord/algebra_io.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>

namespace jord {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

size_t find_name(const std::vector<std::string>& names, const std::string& s,
                 const std::string& context) {
    auto it = std::find(names.begin(), names.end(), s);
    if (it == names.end())
        throw ParseError("unknown basis name '" + s + "' in " + context);
    return static_cast<size_t>(it - names.begin());
}

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

} // namespace

std::vector<Rational> parse_linear_combination(const std::string& text,
                                               const std::vector<std::string>& names,
                                               const std::string& context) {
    std::vector<Rational> v(names.size(), Rational(0));
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i < text.size() && text[i] == '0' && (i + 1 == text.size() || text.substr(i) == "0"))
        return v; // the zero combination
    bool expect_term = true;
    int sign = 1;
    while (i < text.size()) {
        skip_ws();
        if (i >= text.size()) break;
        char c = text[i];
        if (c == '+' || c == '-') {
            if (expect_term && c == '-') {
                sign = -sign;
                ++i;
                continue;
            }
            if (expect_term) throw ParseError("dangling sign in " + context + ": '" + text + "'");
            sign = c == '-' ? -1 : 1;
            expect_term = true;
            ++i;
            continue;
        }
        if (!expect_term)
            throw ParseError("missing '+' or '-' between terms in " + context + ": '" + text + "'");
        // term: [rational '*'] name  or bare rational 0
        size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
                ++i;
            std::string num = text.substr(start, i - start);
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
                size_t ns = i;
                while (i < text.size() && is_name_char(text[i])) ++i;
                if (ns == i) throw ParseError("missing basis name after '*' in " + context);
                std::string name = text.substr(ns, i - ns);
                Rational coeff = Rational::parse(num);
                v[find_name(names, name, context)] += coeff * Rational(sign);
            } else if (num == "0") {
                // explicit zero term
            } else {
                throw ParseError("constant term '" + num + "' without basis name in " + context);
            }
        } else if (is_name_char(c)) {
            while (i < text.size() && is_name_char(text[i])) ++i;
            std::string name = text.substr(start, i - start);
            v[find_name(names, name, context)] += Rational(sign);
        } else {
            throw ParseError(std::string("unexpected character '") + c + "' in " + context + ": '" +
                             text + "'");
        }
        expect_term = false;
        sign = 1;
    }
    if (expect_term) throw ParseError("trailing operator in " + context + ": '" + text + "'");
    return v;
}

std::string format_linear_combination(const std::vector<Rational>& v,
                                      const std::vector<std::string>& names) {
    std::string s;
    for (size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        Rational a = v[k].abs();
        if (s.empty()) {
            if (v[k].sign() < 0) s += "-";
        } else {
            s += v[k].sign() < 0 ? " - " : " + ";
        }
        if (!a.is_one()) s += a.str() + "*";
        s += names[k];
    }
    return s.empty() ? "0" : s;
}

Algebra parse_algebra(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("algebra document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("algebra document must be a JSON object");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer())
        throw ParseError("missing integer field 'dim'");
    long long dim = doc["dim"].get<long long>();
    if (dim < 0 || dim > 64) throw ParseError("'dim' out of range: " + std::to_string(dim));
    if (!doc.contains("basis") || !doc["basis"].is_array())
        throw ParseError("missing list field 'basis'");
    std::vector<std::string> names;
    for (const auto& b : doc["basis"]) {
        if (!b.is_string()) throw ParseError("basis names must be strings");
        names.push_back(b.get<std::string>());
    }
    if (static_cast<long long>(names.size()) != dim)
        throw ParseError("dimension mismatch: dim=" + std::to_string(dim) + " but basis has " +
                         std::to_string(names.size()) + " names");
    for (size_t i = 0; i < names.size(); ++i) {
        if (names[i].empty()) throw ParseError("empty basis name at index " + std::to_string(i + 1));
        for (size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j]) throw ParseError("duplicate basis name '" + names[i] + "'");
    }

    Algebra a(static_cast<size_t>(dim));
    a.basis_names = names;
    if (doc.contains("label")) {
        if (!doc["label"].is_string()) throw ParseError("'label' must be a string");
        a.label = doc["label"].get<std::string>();
    }
    if (doc.contains("products")) {
        if (!doc["products"].is_object()) throw ParseError("'products' must be an object");
        std::vector<std::vector<bool>> seen(a.dim, std::vector<bool>(a.dim, false));
        for (const auto& [key, value] : doc["products"].items()) {
            std::string context = "products entry '" + key + "'";
            size_t star = key.find('*');
            if (star == std::string::npos)
                throw ParseError(context + ": key must have the form 'a*b'");
            size_t i = find_name(names, key.substr(0, star), context);
            size_t j = find_name(names, key.substr(star + 1), context);
            if (!value.is_string()) throw ParseError(context + ": value must be a string");
            auto v = parse_linear_combination(value.get<std::string>(), names, context);
            if (seen[j][i] || seen[i][j]) {
                for (size_t k = 0; k < a.dim; ++k)
                    if (!(a.at(i, j, k) == v[k]))
                        throw ParseError(context + ": disagrees with the product given earlier for '" +
                                         names[j] + "*" + names[i] + "'");
                continue;
            }
            seen[i][j] = true;
            for (size_t k = 0; k < a.dim; ++k) {
                a.at(i, j, k) = v[k];
                a.at(j, i, k) = v[k];
            }
        }
    }
    return a;
}

std::string serialize_algebra(const Algebra& a) {
    if (!is_commutative(a))
        throw std::invalid_argument("the algebra file format only represents commutative tables");
    ordered_json doc;
    doc["dim"] = a.dim;
    doc["basis"] = a.basis_names;
    if (!a.label.empty()) doc["label"] = a.label;
    ordered_json products = ordered_json::object();
    for (size_t i = 0; i < a.dim; ++i)
        for (size_t j = i; j < a.dim; ++j) {
            std::vector<Rational> v(a.dim);
            bool nonzero = false;
            for (size_t k = 0; k < a.dim; ++k) {
                v[k] = a.at(i, j, k);
                nonzero = nonzero || !v[k].is_zero();
            }
            if (!nonzero) continue;
            products[a.basis_names[i] + "*" + a.basis_names[j]] = format_linear_combination(v, a.basis_names);
        }
    doc["products"] = std::move(products);
    return doc.dump(2) + "\n";
}

} // namespace jord
