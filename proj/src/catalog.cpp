#include "jord/catalog.hpp"

#include <map>
#include <mutex>

namespace jord {

namespace {

struct ProductSpec {
    int i, j;                                  // 1-based basis indices
    std::vector<std::pair<Rational, int>> rhs; // coefficient, 1-based index
};

Algebra make(const std::string& label, std::vector<std::string> names,
             const std::vector<ProductSpec>& products) {
    Algebra a(names.size());
    a.label = label;
    a.basis_names = std::move(names);
    for (const auto& p : products) {
        for (const auto& [coeff, k] : p.rhs) {
            a.at(p.i - 1, p.j - 1, k - 1) = coeff;
            a.at(p.j - 1, p.i - 1, k - 1) = coeff;
        }
    }
    return a;
}

const Rational kHalf(1, 2);

std::vector<CatalogEntry> build_dim2() {
    std::vector<CatalogEntry> v;
    v.push_back({"B1", "A", "", "", 1, 1,
                 make("B1", {"e1", "n1"}, {{1, 1, {{1, 1}}}, {1, 2, {{1, 2}}}})});
    v.push_back({"B2", "", "", "", 2, 1,
                 make("B2", {"e1", "n1"}, {{1, 1, {{1, 1}}}, {1, 2, {{kHalf, 2}}}})});
    v.push_back({"B3", "AN", "", "", 2, 2, make("B3", {"n1", "n2"}, {{1, 1, {{1, 2}}}})});
    v.push_back({"B4", "A", "", "", 0, 0,
                 make("B4", {"e1", "e2"}, {{1, 1, {{1, 1}}}, {2, 2, {{1, 2}}}})});
    v.push_back({"B5", "A", "", "", 1, 1, make("B5", {"e1", "n1"}, {{1, 1, {{1, 1}}}})});
    v.push_back({"C2", "", "", "zero multiplication", 4, 2, make("C2", {"n1", "n2"}, {})});
    return v;
}

std::vector<CatalogEntry> build_dim3() {
    std::vector<CatalogEntry> v;
    v.push_back({"T01", "AUS", "A11", "Ce1 + Ce2 + Ce3", 0, 0,
                 make("T01", {"e1", "e2", "e3"},
                      {{1, 1, {{1, 1}}}, {2, 2, {{1, 2}}}, {3, 3, {{1, 3}}}})});
    v.push_back({"T02", "US", "J1", "", 1, 0,
                 make("T02", {"e1", "e2", "e3"},
                      {{1, 1, {{1, 1}}},
                       {2, 2, {{1, 2}}},
                       {3, 3, {{1, 1}, {1, 2}}},
                       {1, 3, {{kHalf, 3}}},
                       {2, 3, {{kHalf, 3}}}})});
    v.push_back({"T03", "AU", "A12", "B1 + Ce2", 1, 1,
                 make("T03", {"e1", "e2", "n1"},
                      {{1, 1, {{1, 1}}}, {2, 2, {{1, 2}}}, {1, 3, {{1, 3}}}})});
    v.push_back({"T04", "U", "J2", "", 2, 1,
                 make("T04", {"e1", "e2", "n1"},
                      {{1, 1, {{1, 1}}},
                       {2, 2, {{1, 2}}},
                       {1, 3, {{kHalf, 3}}},
                       {2, 3, {{kHalf, 3}}}})});
    v.push_back({"T05", "", "J3", "B2 + Ce1", 2, 1,
                 make("T05", {"e1", "e2", "n1"},
                      {{1, 1, {{1, 1}}}, {2, 2, {{1, 2}}}, {1, 3, {{kHalf, 3}}}})});
    v.push_back({"T06", "A", "A1", "Ce1 + Ce2 + Cn1", 1, 1,
                 make("T06", {"e1", "e2", "n1"}, {{1, 1, {{1, 1}}}, {2, 2, {{1, 2}}}})});
    v.push_back({"T07", "AU", "A13", "", 2, 2,
                 make("T07", {"e1", "n1", "n2"},
                      {{1, 1, {{1, 1}}}, {1, 2, {{1, 2}}}, {1, 3, {{1, 3}}}, {2, 2, {{1, 3}}}})});
    v.push_back({"T08", "AU", "A14", "", 4, 2,
                 make("T08", {"e1", "n1", "n2"},
                      {{1, 1, {{1, 1}}}, {1, 2, {{1, 2}}}, {1, 3, {{1, 3}}}})});
    v.push_back({"T09", "A", "A2", "B1 + Cn2", 2, 2,
                 make("T09", {"e1", "n1", "n2"}, {{1, 1, {{1, 1}}}, {1, 2, {{1, 2}}}})});
    v.push_back({"T10", "", "J7", "", 2, 2,
                 make("T10", {"e1", "n1", "n2"},
                      {{1, 1, {{1, 1}}},
                       {1, 2, {{kHalf, 2}}},
                       {1, 3, {{1, 3}}},
                       {2, 2, {{1, 3}}}})});
    v.push_back({"T11", "", "J4", "", 3, 2,
                 make("T11", {"e1", "n1", "n2"},
                      {{1, 1, {{1, 1}}}, {1, 2, {{kHalf, 2}}}, {1, 3, {{1, 3}}}})});
    v.push_back({"T12", "", "J5", "", 6, 2,
                 make("T12", {"e1", "n1", "n2"},
                      {{1, 1, {{1, 1}}}, {1, 2, {{kHalf, 2}}}, {1, 3, {{kHalf, 3}}}})});
    v.push_back({"T13", "", "J6", "", 2, 2,
                 make("T13", {"e1", "n1", "n2"},
                      {{1, 1, {{1, 1}}}, {1, 2, {{kHalf, 2}}}, {2, 2, {{1, 3}}}})});
    v.push_back({"T14", "", "J8", "B2 + Cn2", 3, 2,
                 make("T14", {"e1", "n1", "n2"}, {{1, 1, {{1, 1}}}, {1, 2, {{kHalf, 2}}}})});
    v.push_back({"T15", "A", "A3", "B3 + Ce1", 2, 2,
                 make("T15", {"e1", "n1", "n2"}, {{1, 1, {{1, 1}}}, {2, 2, {{1, 3}}}})});
    v.push_back({"T16", "A", "A5", "Ce1 + Cn1 + Cn2", 4, 2,
                 make("T16", {"e1", "n1", "n2"}, {{1, 1, {{1, 1}}}})});
    v.push_back({"T17", "AN", "A4", "", 3, 3,
                 make("T17", {"n1", "n2", "n3"}, {{1, 1, {{1, 2}}}, {1, 2, {{1, 3}}}})});
    v.push_back({"T18", "AN", "A6", "", 4, 3,
                 make("T18", {"n1", "n2", "n3"}, {{1, 2, {{1, 3}}}})});
    v.push_back({"T19", "AN", "A7", "B3 + Cn1", 5, 3,
                 make("T19", {"n1", "n2", "n3"}, {{1, 1, {{1, 2}}}})});
    v.push_back({"C3", "", "", "zero multiplication", 9, 3, make("C3", {"n1", "n2", "n3"}, {})});
    return v;
}

} // namespace

const std::vector<CatalogEntry>& catalog_dim2() {
    static const std::vector<CatalogEntry> v = build_dim2();
    return v;
}

const std::vector<CatalogEntry>& catalog_dim3() {
    static const std::vector<CatalogEntry> v = build_dim3();
    return v;
}

Algebra marginal_algebra(size_t k) {
    if (k < 2) throw std::invalid_argument("marginal algebra defined for k >= 2");
    Algebra a(k);
    a.label = "J" + std::to_string(k);
    a.basis_names[0] = "e";
    for (size_t i = 1; i < k; ++i) a.basis_names[i] = "n" + std::to_string(i);
    a.at(0, 0, 0) = Rational(1);
    for (size_t i = 1; i < k; ++i) {
        a.at(0, i, i) = kHalf;
        a.at(i, 0, i) = kHalf;
    }
    return a;
}

std::string normalize_label(const std::string& name) {
    // Translate unicode aliases into ASCII: blackboard T/C, fraktur B/J,
    // sub- and superscript digits.
    std::string out;
    size_t i = 0;
    auto starts = [&](const char* pat) {
        size_t len = std::char_traits<char>::length(pat);
        return name.compare(i, len, pat) == 0 ? len : 0;
    };
    static const std::pair<const char*, char> letters[] = {
        {"\xF0\x9D\x95\x8B", 'T'}, // double-struck T
        {"\xF0\x9D\x94\x85", 'B'}, // fraktur B
        {"\xF0\x9D\x94\x8D", 'J'}, // fraktur J
        {"\xE2\x84\x82", 'C'},     // double-struck C
    };
    static const std::pair<const char*, char> digits[] = {
        {"\xE2\x82\x80", '0'}, {"\xE2\x82\x81", '1'}, {"\xE2\x82\x82", '2'},
        {"\xE2\x82\x83", '3'}, {"\xE2\x82\x84", '4'}, {"\xE2\x82\x85", '5'},
        {"\xE2\x82\x86", '6'}, {"\xE2\x82\x87", '7'}, {"\xE2\x82\x88", '8'},
        {"\xE2\x82\x89", '9'}, {"\xC2\xB2", '2'},     {"\xC2\xB3", '3'},
        {"\xC2\xB9", '1'},     {"\xE2\x81\xB4", '4'},
    };
    while (i < name.size()) {
        bool matched = false;
        for (const auto& [pat, ch] : letters) {
            if (size_t len = starts(pat)) {
                out += ch;
                i += len;
                matched = true;
                break;
            }
        }
        if (matched) continue;
        for (const auto& [pat, ch] : digits) {
            if (size_t len = starts(pat)) {
                out += ch;
                i += len;
                matched = true;
                break;
            }
        }
        if (matched) continue;
        if (name[i] == '^') { // C^2, C^3
            ++i;
            continue;
        }
        out += name[i++];
    }
    // T1 -> T01 style padding for the dim-3 family
    if (out.size() == 2 && out[0] == 'T' && isdigit(static_cast<unsigned char>(out[1])))
        out = std::string("T0") + out[1];
    return out;
}

std::optional<CatalogEntry> catalog_entry(const std::string& name) {
    std::string label = normalize_label(name);
    for (const auto& e : catalog_dim2())
        if (e.label == label) return e;
    for (const auto& e : catalog_dim3())
        if (e.label == label) return e;
    if (label.size() >= 2 && label[0] == 'J') {
        bool digits_only = true;
        for (size_t i = 1; i < label.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(label[i]))) digits_only = false;
        if (digits_only) {
            long k = std::stol(label.substr(1));
            if (k >= 2 && k <= 64) {
                CatalogEntry e;
                e.label = label;
                e.der = static_cast<int>(k * k - k);
                e.rad = static_cast<int>(k - 1);
                e.algebra = marginal_algebra(static_cast<size_t>(k));
                return e;
            }
        }
    }
    return std::nullopt;
}

Algebra catalog(const std::string& name) {
    auto e = catalog_entry(name);
    if (!e) throw std::invalid_argument("unknown catalog label: '" + name + "'");
    return e->algebra;
}

} // namespace jord
