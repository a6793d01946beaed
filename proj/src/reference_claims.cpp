#include "jord/reference_claims.hpp"

#include "jord/catalog.hpp"

namespace jord {

DegenerationWitness witness_from_row(const WitnessRowData& row) {
    DegenerationWitness w;
    w.source_label = row.source;
    w.target_label = row.target;
    w.source = catalog(row.source);
    w.target = catalog(row.target);
    size_t n = w.source.dim;
    Matrix<RatFunc> m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m(i, j) = parse_ratfunc(row.rows[i][j]);
    w.basis.rows = std::move(m);
    return w;
}

std::vector<std::string> nodes_dim2() { return {"B1", "B2", "B3", "B4", "B5", "C2"}; }

std::vector<std::string> nodes_dim3() {
    std::vector<std::string> v;
    for (const auto& e : catalog_dim3()) v.push_back(e.label);
    return v;
}

namespace {

std::vector<DegenerationWitness> from_rows(const std::vector<WitnessRowData>& rows) {
    std::vector<DegenerationWitness> out;
    for (const auto& r : rows) out.push_back(witness_from_row(r));
    return out;
}

} // namespace

std::vector<DegenerationWitness> shipped_witnesses_dim2() {
    static const std::vector<WitnessRowData> rows = {
        {"B4", "B1", {{"1", "1"}, {"0", "t"}}},
        {"B4", "B5", {{"1", "0"}, {"0", "t"}}},
        {"B5", "B3", {{"t", "1"}, {"t^2", "0"}}},
        {"B1", "B3", {{"t", "1"}, {"t^2", "2*t"}}},
        {"B2", "C2", {{"t", "0"}, {"0", "t"}}},
        {"B3", "C2", {{"t", "0"}, {"0", "t"}}},
    };
    return from_rows(rows);
}

std::vector<DegenerationWitness> shipped_witnesses_dim3() {
    static const std::vector<WitnessRowData> rows = {
        // printed parametrized bases that verify as published
        {"T03", "T09", {{"1", "0", "0"}, {"0", "0", "1"}, {"0", "t", "0"}}},
        {"T04", "T08", {{"1", "1", "0"}, {"t", "-t", "0"}, {"0", "0", "t"}}},
        {"T05", "T11", {{"1", "1", "0"}, {"0", "0", "1"}, {"t", "0", "0"}}},
        {"T05", "T14", {{"1", "0", "0"}, {"0", "0", "1"}, {"0", "t", "0"}}},
        {"T05", "T16", {{"0", "1", "0"}, {"t", "0", "0"}, {"0", "0", "1"}}},
        {"T07", "T17", {{"t", "1", "0"}, {"0", "t", "1"}, {"0", "0", "t"}}},
        {"T08", "T19", {{"t", "1", "0"}, {"0", "t", "0"}, {"0", "0", "1"}}},
        {"T09", "T17", {{"t", "1", "1"}, {"0", "t", "-t"}, {"0", "t^2", "0"}}},
        {"T11", "T18", {{"t", "0", "0"}, {"0", "1", "2"}, {"0", "0", "t"}}},
        {"T13", "T14", {{"1", "0", "0"}, {"0", "t", "0"}, {"0", "0", "1"}}},
        {"T14", "T18", {{"t", "0", "0"}, {"0", "1", "-2"}, {"0", "0", "t"}}},
        // repaired rows (the printed bases have a pole resp. a sign defect)
        {"T03", "T15", {{"0", "1", "0"}, {"t", "0", "1"}, {"0", "0", "t"}}},
        {"T16", "T19", {{"t", "-1", "0"}, {"0", "t", "0"}, {"0", "0", "1"}}},
        // constructed witnesses for the inherited primary degenerations
        {"T01", "T03", {{"1", "0", "1"}, {"0", "1", "0"}, {"0", "0", "t"}}},
        {"T01", "T06", {{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "t"}}},
        {"T02", "T04", {{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "t"}}},
        {"T02", "T13", {{"1", "0", "0"}, {"0", "0", "t"}, {"t^2", "t^2", "0"}}},
        {"T03", "T07", {{"1", "1", "0"}, {"0", "t", "1"}, {"0", "t^2", "0"}}},
        {"T04", "T14", {{"1", "0", "0"}, {"0", "0", "1"}, {"0", "t", "0"}}},
        {"T06", "T09", {{"1", "1", "0"}, {"0", "t", "0"}, {"0", "0", "1"}}},
        {"T06", "T15", {{"1", "0", "0"}, {"0", "t", "1"}, {"0", "t^2", "0"}}},
        {"T07", "T08", {{"1", "0", "0"}, {"0", "t", "0"}, {"0", "0", "1"}}},
        {"T10", "T11", {{"1", "0", "0"}, {"0", "t", "0"}, {"0", "0", "1"}}},
        {"T15", "T16", {{"1", "0", "0"}, {"0", "t", "0"}, {"0", "0", "1"}}},
        {"T15", "T17", {{"t", "1", "0"}, {"t^2", "0", "1"}, {"t^3", "0", "0"}}},
        {"T17", "T18", {{"t", "0", "0"}, {"0", "1", "0"}, {"0", "0", "t"}}},
        {"T18", "T19", {{"1", "1", "0"}, {"0", "0", "2"}, {"0", "t", "0"}}},
    };
    return from_rows(rows);
}

std::vector<WitnessRowData> published_witness_rows_dim3() {
    return {
        {"T03", "T09", {{"1", "0", "0"}, {"0", "0", "1"}, {"0", "t", "0"}}},
        {"T03", "T15", {{"0", "1", "0"}, {"t", "0", "1"}, {"0", "0", "-t^2"}}},
        {"T04", "T08", {{"1", "1", "0"}, {"t", "-t", "0"}, {"0", "0", "t"}}},
        {"T04", "T17",
         {{"t^2", "t", "2*t - 2"}, {"0", "t^2", "-2*t"}, {"0", "0", "t^2"}}},
        {"T05", "T11", {{"1", "1", "0"}, {"0", "0", "1"}, {"t", "0", "0"}}},
        {"T05", "T14", {{"1", "0", "0"}, {"0", "0", "1"}, {"0", "t", "0"}}},
        {"T05", "T16", {{"0", "1", "0"}, {"t", "0", "0"}, {"0", "0", "1"}}},
        {"T05", "T17", {{"t^2", "t", "0"}, {"0", "t^2", "-1"}, {"t", "0", "0"}}},
        {"T07", "T17", {{"t", "1", "0"}, {"0", "t", "1"}, {"0", "0", "t"}}},
        {"T08", "T19", {{"t", "1", "0"}, {"0", "t", "0"}, {"0", "0", "1"}}},
        {"T09", "T17", {{"t", "1", "1"}, {"0", "t", "-t"}, {"0", "t^2", "0"}}},
        {"T11", "T18", {{"t", "0", "0"}, {"0", "1", "2"}, {"0", "0", "t"}}},
        {"T13", "T14", {{"1", "0", "0"}, {"0", "t", "0"}, {"0", "0", "1"}}},
        {"T14", "T18", {{"t", "0", "0"}, {"0", "1", "-2"}, {"0", "0", "t"}}},
        {"T16", "T19", {{"t", "1", "0"}, {"0", "t", "0"}, {"0", "0", "1"}}},
    };
}

std::vector<std::pair<std::string, std::string>> published_inherited_edges_dim3() {
    return {{"T01", "T03"}, {"T01", "T06"}, {"T02", "T04"}, {"T02", "T13"}, {"T03", "T07"},
            {"T04", "T14"}, {"T06", "T09"}, {"T06", "T15"}, {"T07", "T08"}, {"T10", "T11"},
            {"T15", "T16"}, {"T15", "T17"}, {"T17", "T18"}, {"T18", "T19"}};
}

std::vector<std::pair<std::string, std::string>> published_edges_dim2() {
    return {{"B4", "B1"}, {"B4", "B5"}, {"B5", "B3"}, {"B1", "B3"}, {"B2", "C2"}, {"B3", "C2"}};
}

std::vector<std::pair<std::string, std::string>> published_peirce_nondegenerations_dim3() {
    return {{"T02", "T09"}, {"T02", "T11"}, {"T02", "T16"}, {"T05", "T08"},
            {"T06", "T07"}, {"T06", "T08"}, {"T07", "T16"}, {"T09", "T16"},
            {"T10", "T08"}, {"T10", "T14"}, {"T10", "T16"}, {"T13", "T08"}};
}

namespace {

Matrix<Rational> basis_rows(std::vector<std::vector<long long>> rows) {
    size_t n = rows.size();
    Matrix<Rational> m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m(i, j) = Rational(rows[i][j]);
    return m;
}

} // namespace

PublishedClosedSet published_closed_set_R1() {
    PublishedClosedSet r;
    r.spec.dim = 3;
    r.spec.name = "R1";
    r.spec.vanishing = {{1, 1, 2}};
    // S1 S3 + S2^2 <= S3, S2 S3 = 0
    r.spec.flags = {{1, 3, 3}, {2, 2, 3}, {2, 3, 4}};
    r.members = {{"T10", basis_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})},
                 {"T13", basis_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})}};
    r.excluded_targets = {"T17"};
    return r;
}

PublishedClosedSet published_closed_set_R2() {
    PublishedClosedSet r;
    r.spec.dim = 3;
    r.spec.name = "R2";
    r.spec.vanishing = {{1, 1, 2}, {2, 3, 3}, {1, 3, 3}, {1, 3, 2}};
    // S2^2 <= S2, S3^2 <= S3
    r.spec.flags = {{2, 2, 2}, {3, 3, 3}};
    // membership of T02 in the basis e3, e2, e1+e2
    r.members = {{"T02", basis_rows({{0, 0, 1}, {0, 1, 0}, {1, 1, 0}})}};
    r.excluded_targets = {"T07"};
    return r;
}

ClosedSetSpec stable_flag_spec_dim3() {
    ClosedSetSpec s;
    s.dim = 3;
    s.name = "R1-flags";
    s.flags = {{1, 3, 3}, {2, 2, 3}, {2, 3, 4}};
    return s;
}

namespace {

NonDegenerationCertificate simple_cert(NonDegenerationCertificate::Kind kind, std::string from,
                                       std::string to) {
    NonDegenerationCertificate c;
    c.kind = kind;
    c.source = std::move(from);
    c.target = std::move(to);
    return c;
}

} // namespace

std::vector<NonDegenerationCertificate> shipped_certificates_dim2() {
    using K = NonDegenerationCertificate::Kind;
    return {
        simple_cert(K::DerivationDimension, "B2", "B1"),
        simple_cert(K::DerivationDimension, "B2", "B5"),
        simple_cert(K::PeirceObstruction, "B1", "B5"),
        simple_cert(K::DerivationDimension, "B3", "B5"),
    };
}

std::vector<NonDegenerationCertificate> shipped_certificates_dim3() {
    using K = NonDegenerationCertificate::Kind;
    std::vector<NonDegenerationCertificate> certs;
    for (const auto& [from, to] : published_peirce_nondegenerations_dim3())
        certs.push_back(simple_cert(K::PeirceObstruction, from, to));
    // the printed closed-set route is not mechanically stable, so the shipped
    // graph certifies these pairs through the generic-degree obstruction
    certs.push_back(simple_cert(K::GenericDegree, "T10", "T17"));
    certs.push_back(simple_cert(K::GenericDegree, "T13", "T17"));
    certs.push_back(simple_cert(K::GenericDegree, "T02", "T07"));
    // the two printed rows whose targets need longer power chains than the
    // sources admit; no parametrized basis can realize them
    certs.push_back(simple_cert(K::GenericDegree, "T04", "T17"));
    certs.push_back(simple_cert(K::GenericDegree, "T05", "T17"));
    // a derivation-dimension example pair
    certs.push_back(simple_cert(K::DerivationDimension, "T12", "T11"));
    return certs;
}

PublishedComponents published_components_dim2() {
    PublishedComponents p;
    p.rigid = {"B2", "B4"};
    p.components = {{"B2", {"B2", "C2"}}, {"B4", {"B1", "B3", "B4", "B5", "C2"}}};
    return p;
}

PublishedComponents published_components_dim3() {
    PublishedComponents p;
    p.rigid = {"T01", "T02", "T05", "T10", "T12"};
    p.components = {
        {"T01",
         {"T01", "T03", "T06", "T07", "T08", "T15", "T16", "T17", "T18", "T09", "T19", "C3"}},
        {"T02", {"T02", "T04", "T08", "T13", "T14", "T17", "T18", "T19", "C3"}},
        {"T05", {"T05", "T11", "T14", "T16", "T17", "T18", "T19", "C3"}},
        {"T10", {"T10", "T11", "T18", "T19", "C3"}},
        {"T12", {"T12", "C3"}},
    };
    return p;
}

PublishedComponents corrected_components_dim3() {
    PublishedComponents p = published_components_dim3();
    // the certified witness set reaches T17 from T01 only: the printed rows
    // claiming T04 -> T17 and T05 -> T17 fail (generic-degree obstruction)
    p.components[1].second.erase("T17");
    p.components[2].second.erase("T17");
    return p;
}

} // namespace jord
