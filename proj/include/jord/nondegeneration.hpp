#pragma once

#include "jord/algebra.hpp"
#include "jord/groebner.hpp"

#include <array>
#include <set>

namespace jord {

// Coordinate-vanishing description of a closed set of structure tensors,
// stable only under the triangular subgroup when borel_stability says so.
// Flags are the descending spans S_i = <e_i, ..., e_n> (1-based); the
// condition S_a S_b <= S_c expands to c_{ij}^k = 0 for i >= a, j >= b (and
// symmetrically), k < c. c = n + 1 encodes S_a S_b = 0.
struct FlagCondition {
    int a = 1, b = 1, c = 1;
};

struct ClosedSetSpec {
    size_t dim = 0;
    std::vector<std::array<int, 3>> vanishing; // explicit 1-based triples (i, j, k)
    std::vector<FlagCondition> flags;
    std::string name;

    // Union of the explicit triples (symmetrized in i, j) and the expanded flags.
    std::set<std::array<int, 3>> expanded() const;
};

// True iff every constrained coordinate vanishes in a's structure constants,
// in a's given basis.
bool membership(const ClosedSetSpec& spec, const Algebra& a);

// Mechanical stability check under the triangular subgroup fixing the
// descending flag: substitutes fully symbolic triangular elements for the
// group element and its inverse and accepts iff every monomial of each
// transformed constrained coordinate contains a constrained factor.
bool borel_stability(const ClosedSetSpec& spec);

struct CellTranscript {
    std::vector<int> permutation;         // images of 0..n-1
    size_t parameters = 0;                // free unipotent entries
    std::vector<std::string> generators;  // polynomial system imposed by the spec
    std::vector<std::string> reduced_basis;
    Emptiness verdict = Emptiness::Undecided;
};

enum class Exclusion { Excluded, NotExcluded, Undecided };

struct ExclusionReport {
    Exclusion verdict = Exclusion::Undecided;
    bool stability_ok = false;
    std::vector<CellTranscript> cells;
};

// Decides whether some triangular-reduced basis change puts b into the spec:
// ranges over the Bruhat cells g = w*u (the triangular factor is dropped,
// which is sound exactly when the spec is stable) and reports emptiness of
// the per-cell polynomial systems. `require_stability` refuses to run on an
// unstable spec; when disabled the report still records the stability status.
ExclusionReport orbit_exclusion(const ClosedSetSpec& spec, const Algebra& b,
                                const GroebnerOptions& opts = {}, bool require_stability = true);

enum class Obstruction { Obstructed, NotObstructed };

// Peirce-data obstruction: the target's lifted semisimple frame spectra must
// all be realizable by reference idempotents of the source. Requires b
// non-nilpotent.
Obstruction peirce_obstruction(const Algebra& a, const Algebra& b,
                               const GroebnerOptions& opts = {});

// Largest m such that x, x^2, ..., x^m are linearly independent for generic x
// (powers left-normed). The identity "degree <= m" passes to every
// degeneration target, so deg(source) < deg(target) obstructs.
size_t generic_degree(const Algebra& a);
Obstruction degree_obstruction(const Algebra& a, const Algebra& b);

struct NonDegenerationCertificate {
    enum class Kind { DerivationDimension, PeirceObstruction, ClosedSet, GenericDegree };
    Kind kind = Kind::DerivationDimension;
    std::string source, target; // catalog labels
    // closed-set payload
    ClosedSetSpec spec;
    Matrix<Rational> membership_basis; // rows: basis exhibiting membership of the source
};

struct CertificateCheck {
    bool ok = false;
    std::string detail;
    ExclusionReport exclusion; // filled for closed-set certificates
};
CertificateCheck check_certificate(const NonDegenerationCertificate& cert, const Algebra& source,
                                   const Algebra& target, const GroebnerOptions& opts = {});

// Certificate document (JSON) for files shipped under data/.
NonDegenerationCertificate parse_certificate(const std::string& text);
std::string serialize_certificate(const NonDegenerationCertificate& cert);

} // namespace jord
