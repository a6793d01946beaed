// Verification of the published claims exactly as printed. Several printed
// claims are refuted by the exact computations below; this suite reports each
// one precisely and exits nonzero, which is the intended outcome of a
// verifier run against the published data. The certified replacements live in
// the main acceptance suite and in the shipped graph data.

#include "jord/catalog.hpp"
#include "jord/graph.hpp"
#include "jord/reference_claims.hpp"

#include <iostream>

using namespace jord;

namespace {

int failures = 0;
int checks = 0;

void claim(const std::string& text, bool ok, const std::string& detail = "") {
    ++checks;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << text;
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << "\n";
    if (!ok) ++failures;
}

} // namespace

int main() {
    std::cout << "published witness rows (criterion: all fifteen verify)\n";
    for (const auto& row : published_witness_rows_dim3()) {
        auto w = witness_from_row(row);
        auto rep = verify_witness(w);
        std::string detail;
        if (!rep.verified && !rep.issues.empty()) detail = rep.issues.front();
        if (!rep.verified) {
            // distinguish repairable rows from impossible ones
            if (degree_obstruction(w.source, w.target) == Obstruction::Obstructed)
                detail += "; generic degree " + std::to_string(generic_degree(w.source)) + " < " +
                          std::to_string(generic_degree(w.target)) +
                          ", so no parametrized basis exists for this pair";
            else
                detail += "; a repaired basis for this edge ships with the graph data";
        }
        claim(std::string("row ") + row.source + " -> " + row.target, rep.verified, detail);
    }

    std::cout << "\npublished closed sets (criterion: membership, stability, exclusion)\n";
    GroebnerOptions opts;
    for (auto pcs : {published_closed_set_R1(), published_closed_set_R2()}) {
        for (const auto& [label, basis] : pcs.members)
            claim(pcs.spec.name + " contains " + label + " in the printed basis",
                  membership(pcs.spec, constants_in_basis(catalog(label), basis)));
        bool stable = borel_stability(pcs.spec);
        claim(pcs.spec.name + " is stable under the triangular subgroup", stable,
              stable ? ""
                     : "a transformed constrained coordinate has a monomial free of constrained "
                       "factors; an explicit escape inside the catalog exists (see the "
                       "non-degeneration test suite)");
        for (const auto& target : pcs.excluded_targets) {
            auto rep = orbit_exclusion(pcs.spec, catalog(target), opts, false);
            claim(pcs.spec.name + " excludes the orbit of " + target + " on every cell",
                  rep.verdict == Exclusion::Excluded);
        }
    }

    std::cout << "\npublished graph corollaries (criterion: element-for-element)\n";
    auto g3 = build_graph(nodes_dim3(), shipped_witnesses_dim3(), shipped_certificates_dim3());
    auto rep3 = components_and_rigid(g3);
    auto pub3 = published_components_dim3();
    claim("rigid set {T01, T02, T05, T10, T12}", rep3.rigid == pub3.rigid);
    for (size_t i = 0; i < pub3.components.size(); ++i) {
        bool same = rep3.components[i].second == pub3.components[i].second;
        std::string detail;
        if (!same) {
            detail = "certified closure misses:";
            for (const auto& x : pub3.components[i].second)
                if (!rep3.components[i].second.count(x)) detail += " " + x;
            detail += "; the printed edge into it is refuted by the generic-degree obstruction";
        }
        claim("closure(" + pub3.components[i].first + ") as printed", same, detail);
    }
    auto g2 = build_graph(nodes_dim2(), shipped_witnesses_dim2(), shipped_certificates_dim2());
    auto rep2 = components_and_rigid(g2);
    auto pub2 = published_components_dim2();
    claim("planar rigid set {B2, B4}", rep2.rigid == pub2.rigid);
    for (size_t i = 0; i < pub2.components.size(); ++i)
        claim("planar closure(" + pub2.components[i].first + ") as printed",
              rep2.components[i].second == pub2.components[i].second);

    std::cout << "\npublished non-degenerations through the Peirce lemma\n";
    bool peirce_ok = true;
    for (const auto& [from, to] : published_peirce_nondegenerations_dim3())
        if (peirce_obstruction(catalog(from), catalog(to)) != Obstruction::Obstructed)
            peirce_ok = false;
    claim("all twelve printed pairs are certified", peirce_ok);

    std::cout << "\n" << (checks - failures) << "/" << checks << " published claims verified";
    if (failures > 0)
        std::cout << "; " << failures
                  << " printed claims are refuted by exact computation (details above; the "
                     "certified data in this repository replaces them)";
    std::cout << "\n";
    return failures == 0 ? 0 : 1;
}
