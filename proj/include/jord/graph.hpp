#pragma once

#include "jord/degeneration.hpp"
#include "jord/nondegeneration.hpp"

#include <map>
#include <set>

namespace jord {

struct GraphEdge {
    std::string from, to;
    DegenerationWitness witness;
    bool implicit_zero = false; // scaling degeneration added for every node
};

struct GraphNonEdge {
    std::string from, to;
    NonDegenerationCertificate certificate;
};

struct DegenerationGraph {
    std::vector<std::string> nodes;
    std::map<std::string, Algebra> algebras;
    std::map<std::string, Fingerprint> fingerprints;
    std::vector<GraphEdge> edges;
    std::vector<GraphNonEdge> non_edges;
    std::string zero_label;

    std::set<std::string> successors(const std::string& node) const;
};

// Assembles the graph from certified data: verifies every witness, checks
// every certificate, adds the implicit scaling edge to the zero algebra for
// every node and suppresses self loops. Any failing item aborts with a
// description of the failure; a certified non-edge reachable through verified
// edges is a fatal inconsistency.
DegenerationGraph build_graph(const std::vector<std::string>& node_labels,
                              const std::vector<DegenerationWitness>& witnesses,
                              const std::vector<NonDegenerationCertificate>& certificates,
                              const GroebnerOptions& opts = {});

// All labels reachable from `from` by directed paths, plus `from` itself.
std::set<std::string> closure_set(const DegenerationGraph& g, const std::string& from);

struct ComponentReport {
    // rigid label -> its closure
    std::vector<std::pair<std::string, std::set<std::string>>> components;
    std::vector<std::string> rigid;
};
// Rigid nodes are exactly those not properly reachable from any other node;
// the components are their closures.
ComponentReport components_and_rigid(const DegenerationGraph& g);

// Longest chain of proper degenerations starting at the node.
size_t level(const DegenerationGraph& g, const std::string& from);

// An edge is primary when no intermediate node gives a proper two-step path.
bool edge_is_primary(const DegenerationGraph& g, const std::string& from, const std::string& to);

struct MarginalLevelCertificate {
    size_t k = 0;
    size_t der_dim = 0;
    bool ok = false;
    std::string inference;
};
// Records that dim Der of the k-dimensional marginal algebra equals k^2 - k,
// which meets the maximal possible derivation dimension, so no proper
// degeneration target with nonzero multiplication exists: level one.
MarginalLevelCertificate marginal_level_certificate(size_t k);

std::string export_graph_json(const DegenerationGraph& g);
std::string export_graph_dot(const DegenerationGraph& g);

} // namespace jord
