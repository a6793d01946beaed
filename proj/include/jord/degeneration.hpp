#pragma once

#include "jord/algebra.hpp"
#include "jord/invariants.hpp"

namespace jord {

// Row i holds the coordinates of the parametrized basis vector E_i^t in the
// source basis; the determinant must be a nonzero rational function so the
// rows form a basis for all but finitely many t.
struct ParametrizedBasis {
    Matrix<RatFunc> rows;
};

struct DegenerationWitness {
    std::string source_label; // empty for inline algebras
    std::string target_label;
    Algebra source;
    Algebra target;
    ParametrizedBasis basis;
};

// Structure constants of a in the parametrized basis, as rational functions.
AlgebraOverT transform_by_parametrized_basis(const Algebra& a, const ParametrizedBasis& e);

struct WitnessReport {
    bool verified = false;
    std::vector<std::string> issues;        // pole / mismatch coordinates
    bool non_polynomial_entries = false;    // some transformed constant is not polynomial in t
};
WitnessReport verify_witness(const DegenerationWitness& w);

// The scaling witness: basis t*E over the source, target zero multiplication.
DegenerationWitness scaling_witness(const Algebra& source, const std::string& source_label,
                                    const Algebra& zero_target, const std::string& target_label);

enum class DerivationVerdict { Consistent, Obstructed };
struct DerivationCheckReport {
    DerivationVerdict verdict;
    size_t der_source = 0, der_target = 0;
    size_t orbit_dim_source = 0, orbit_dim_target = 0; // n^2 - dim Der
    bool fingerprints_equal = false;
};
// Necessary condition for a proper degeneration: the derivation dimension
// grows strictly.
DerivationCheckReport derivation_check(const Algebra& a, const Algebra& b);

// Rational-function expressions in t: integers, rationals, t, + - * / ^ and
// parentheses.
RatFunc parse_ratfunc(const std::string& text);

// Witness document: JSON with source/target (catalog label or inline algebra
// document) and basis = n x n array of rational-function strings.
DegenerationWitness parse_witness(const std::string& text);
std::string serialize_witness(const DegenerationWitness& w);

} // namespace jord
