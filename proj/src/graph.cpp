#include "jord/graph.hpp"

#include "jord/catalog.hpp"

#include "json.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace jord {

std::set<std::string> DegenerationGraph::successors(const std::string& node) const {
    std::set<std::string> out;
    for (const auto& e : edges)
        if (e.from == node) out.insert(e.to);
    return out;
}

DegenerationGraph build_graph(const std::vector<std::string>& node_labels,
                              const std::vector<DegenerationWitness>& witnesses,
                              const std::vector<NonDegenerationCertificate>& certificates,
                              const GroebnerOptions& opts) {
    DegenerationGraph g;
    g.nodes = node_labels;
    for (const auto& label : node_labels) {
        Algebra a = catalog(label);
        if (a.is_zero_mult()) g.zero_label = label;
        g.fingerprints.emplace(label, fingerprint(a, opts));
        g.algebras.emplace(label, std::move(a));
    }
    if (g.zero_label.empty())
        throw std::invalid_argument("graph needs the zero-multiplication algebra among its nodes");

    auto known = [&](const std::string& l) {
        return std::find(g.nodes.begin(), g.nodes.end(), l) != g.nodes.end();
    };

    std::vector<std::string> failures;
    std::set<std::pair<std::string, std::string>> seen; // collapse duplicate edges
    for (const auto& w : witnesses) {
        if (!known(w.source_label) || !known(w.target_label)) {
            failures.push_back("witness " + w.source_label + " -> " + w.target_label +
                               ": labels not in the node set");
            continue;
        }
        auto rep = verify_witness(w);
        if (!rep.verified) {
            std::string msg = "witness " + w.source_label + " -> " + w.target_label + " fails:";
            for (const auto& i : rep.issues) msg += " " + i;
            failures.push_back(msg);
            continue;
        }
        if (w.source_label == w.target_label) continue; // self loops suppressed
        if (!seen.insert({w.source_label, w.target_label}).second) continue;
        g.edges.push_back({w.source_label, w.target_label, w, false});
    }
    // implicit scaling degenerations to the zero algebra
    for (const auto& label : g.nodes) {
        if (label == g.zero_label) continue;
        if (seen.count({label, g.zero_label})) continue;
        auto w = scaling_witness(g.algebras.at(label), label, g.algebras.at(g.zero_label),
                                 g.zero_label);
        auto rep = verify_witness(w);
        if (!rep.verified) {
            failures.push_back("scaling witness " + label + " -> zero fails");
            continue;
        }
        g.edges.push_back({label, g.zero_label, std::move(w), true});
    }

    for (const auto& c : certificates) {
        if (!known(c.source) || !known(c.target)) {
            failures.push_back("certificate " + c.source + " -/-> " + c.target +
                               ": labels not in the node set");
            continue;
        }
        auto check = check_certificate(c, g.algebras.at(c.source), g.algebras.at(c.target), opts);
        if (!check.ok) {
            failures.push_back("certificate " + c.source + " -/-> " + c.target +
                               " does not check: " + check.detail);
            continue;
        }
        g.non_edges.push_back({c.source, c.target, c});
    }

    if (!failures.empty()) {
        std::string msg = "degeneration graph assembly failed:";
        for (const auto& f : failures) msg += "\n  " + f;
        throw std::runtime_error(msg);
    }

    // consistency: certified non-edges must not be reachable
    for (const auto& ne : g.non_edges) {
        auto cl = closure_set(g, ne.from);
        if (cl.count(ne.to))
            throw std::runtime_error("inconsistent graph: certified non-edge " + ne.from + " -/-> " +
                                     ne.to + " is reachable through verified witnesses");
    }
    return g;
}

std::set<std::string> closure_set(const DegenerationGraph& g, const std::string& from) {
    if (!g.fingerprints.count(from)) throw std::invalid_argument("unknown label: " + from);
    std::set<std::string> visited{from};
    std::vector<std::string> stack{from};
    while (!stack.empty()) {
        std::string cur = stack.back();
        stack.pop_back();
        for (const auto& next : g.successors(cur))
            if (visited.insert(next).second) stack.push_back(next);
    }
    return visited;
}

ComponentReport components_and_rigid(const DegenerationGraph& g) {
    ComponentReport rep;
    std::set<std::string> dominated; // properly reachable from another node
    for (const auto& node : g.nodes)
        for (const auto& other : g.nodes) {
            if (node == other) continue;
            if (closure_set(g, other).count(node)) {
                dominated.insert(node);
                break;
            }
        }
    for (const auto& node : g.nodes)
        if (!dominated.count(node)) rep.rigid.push_back(node);
    for (const auto& r : rep.rigid) rep.components.emplace_back(r, closure_set(g, r));

    // sanity: the component closures exhaust the node set
    std::set<std::string> covered;
    for (const auto& [r, cl] : rep.components) covered.insert(cl.begin(), cl.end());
    if (covered.size() != g.nodes.size())
        throw std::logic_error("component closures do not cover the catalog");
    return rep;
}

size_t level(const DegenerationGraph& g, const std::string& from) {
    if (!g.fingerprints.count(from)) throw std::invalid_argument("unknown label: " + from);
    std::map<std::string, size_t> memo;
    std::set<std::string> in_progress;
    std::function<size_t(const std::string&)> longest = [&](const std::string& node) -> size_t {
        auto it = memo.find(node);
        if (it != memo.end()) return it->second;
        if (!in_progress.insert(node).second)
            throw std::logic_error("degeneration graph has a proper cycle");
        size_t best = 0;
        for (const auto& next : g.successors(node))
            if (next != node) best = std::max(best, 1 + longest(next));
        in_progress.erase(node);
        memo[node] = best;
        return best;
    };
    return longest(from);
}

bool edge_is_primary(const DegenerationGraph& g, const std::string& from, const std::string& to) {
    for (const auto& mid : g.nodes) {
        if (mid == from || mid == to) continue;
        if (closure_set(g, from).count(mid) && closure_set(g, mid).count(to)) return false;
    }
    return true;
}

MarginalLevelCertificate marginal_level_certificate(size_t k) {
    if (k < 2) throw std::invalid_argument("the marginal family starts at dimension 2");
    MarginalLevelCertificate cert;
    cert.k = k;
    cert.der_dim = derivation_algebra(marginal_algebra(k)).dim;
    cert.ok = cert.der_dim == k * k - k;
    std::ostringstream os;
    os << "dim Der(J_" << k << ") = " << cert.der_dim << (cert.ok ? " = " : " != ") << k << "^2 - "
       << k << "; any proper degeneration target with nonzero multiplication would need a strictly "
       << "larger derivation algebra, exceeding the maximal dimension k^2 - k of any "
       << k << "-dimensional algebra with nonzero product; hence the only proper target is the "
       << "zero algebra and the level is one";
    cert.inference = os.str();
    return cert;
}

std::string export_graph_json(const DegenerationGraph& g) {
    nlohmann::ordered_json doc;
    doc["nodes"] = nlohmann::ordered_json::array();
    for (const auto& n : g.nodes) {
        nlohmann::ordered_json node;
        node["label"] = n;
        node["fingerprint"] = g.fingerprints.at(n).str();
        node["level"] = level(g, n);
        doc["nodes"].push_back(std::move(node));
    }
    doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : g.edges) {
        nlohmann::ordered_json edge;
        edge["from"] = e.from;
        edge["to"] = e.to;
        edge["kind"] = e.implicit_zero ? "scaling" : "primary";
        if (!e.implicit_zero) edge["primary"] = edge_is_primary(g, e.from, e.to);
        doc["edges"].push_back(std::move(edge));
    }
    doc["non_edges"] = nlohmann::ordered_json::array();
    for (const auto& ne : g.non_edges) {
        nlohmann::ordered_json item;
        item["from"] = ne.from;
        item["to"] = ne.to;
        switch (ne.certificate.kind) {
        case NonDegenerationCertificate::Kind::DerivationDimension:
            item["certificate"] = "derivation-dimension";
            break;
        case NonDegenerationCertificate::Kind::PeirceObstruction:
            item["certificate"] = "peirce-obstruction";
            break;
        case NonDegenerationCertificate::Kind::ClosedSet: item["certificate"] = "closed-set"; break;
        case NonDegenerationCertificate::Kind::GenericDegree:
            item["certificate"] = "generic-degree";
            break;
        }
        doc["non_edges"].push_back(std::move(item));
    }
    auto comp = components_and_rigid(g);
    doc["rigid"] = comp.rigid;
    doc["components"] = nlohmann::ordered_json::array();
    for (const auto& [r, cl] : comp.components) {
        nlohmann::ordered_json c;
        c["rigid"] = r;
        c["closure"] = std::vector<std::string>(cl.begin(), cl.end());
        doc["components"].push_back(std::move(c));
    }
    return doc.dump(2) + "\n";
}

std::string export_graph_dot(const DegenerationGraph& g) {
    std::ostringstream os;
    os << "digraph degenerations {\n";
    auto comp = components_and_rigid(g);
    std::set<std::string> rigid(comp.rigid.begin(), comp.rigid.end());
    for (const auto& n : g.nodes)
        os << "  \"" << n << "\"" << (rigid.count(n) ? " [style=bold]" : "") << ";\n";
    for (const auto& e : g.edges)
        os << "  \"" << e.from << "\" -> \"" << e.to << "\""
           << (e.implicit_zero ? " [style=dotted]" : "") << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace jord
