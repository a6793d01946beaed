#pragma once

#include "jord/algebra.hpp"

#include <optional>

namespace jord {

// One catalog row: the multiplication table in its printed basis plus the
// published metadata for that row.
struct CatalogEntry {
    std::string label;         // canonical ASCII: T01..T19, B1..B5, C2, C3
    std::string superscript;   // opaque metadata, not interpreted
    std::string ks07_name;     // naming in the earlier classification, metadata only
    std::string decomposition; // direct-sum shape when printed, metadata only
    int der = -1;              // published derivation-algebra dimension
    int rad = -1;              // published radical dimension (dim 3 only)
    Algebra algebra;
};

// Canonical ASCII form of a catalog label; accepts unicode aliases
// (blackboard/fraktur letters, sub- and superscript digits).
std::string normalize_label(const std::string& name);

// Catalog lookup. Knows B1..B5, C2, T01..T19, C3 and the marginal family
// J<k> for k >= 2. Throws std::invalid_argument for unknown labels.
Algebra catalog(const std::string& name);

const std::vector<CatalogEntry>& catalog_dim2();
const std::vector<CatalogEntry>& catalog_dim3();
std::optional<CatalogEntry> catalog_entry(const std::string& name);

// The k-dimensional marginal algebra: e^2 = e, e n_i = n_i / 2, n_i n_j = 0.
Algebra marginal_algebra(size_t k);

} // namespace jord
