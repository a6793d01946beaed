#pragma once

#include "jord/algebra.hpp"
#include "jord/groebner.hpp"

#include <array>

namespace jord {

// Basis of the derivation algebra: matrices d with d(xy) = d(x)y + x d(y).
struct DerivationSpace {
    size_t dim = 0;
    std::vector<Matrix<Rational>> basis;
};
DerivationSpace derivation_algebra(const Algebra& a);

// Kernel of the trace form tau(x, y) = trace of left multiplication by xy.
// For a Jordan algebra in characteristic zero this is the radical.
std::vector<std::vector<Rational>> trace_form_radical(const Algebra& a);

// Solutions of x*x = x. `finite` reports whether the solution variety over the
// complex numbers is finite; `complete` certifies that the rational points
// listed exhaust it (their count equals the quotient-ring dimension).
struct IdempotentSet {
    bool finite = false;
    bool complete = false;
    std::vector<std::vector<Rational>> points; // nonzero idempotents
    std::vector<std::vector<size_t>> frames;   // maximal pairwise-orthogonal subsets, by index
};
IdempotentSet idempotent_frames(const Algebra& a, const GroebnerOptions& opts = {});

struct PeirceDecomposition {
    std::vector<Rational> idempotent;
    // eigenspaces of left multiplication by the idempotent, eigenvalues 0, 1/2, 1
    std::array<std::vector<std::vector<Rational>>, 3> components;
    std::array<size_t, 3> dims() const {
        return {components[0].size(), components[1].size(), components[2].size()};
    }
};
// Requires e nonzero idempotent. Verifies the Peirce multiplication relations
// and throws std::logic_error if any fails (that would contradict the Jordan
// identity for the input).
PeirceDecomposition peirce_decomposition(const Algebra& a, const std::vector<Rational>& e);

// Spectrum of left multiplication by an idempotent: multiplicities of the
// eigenvalues 0, 1/2, 1.
std::array<size_t, 3> peirce_profile(const Algebra& a, const std::vector<Rational>& e);

struct SemisimplePart {
    std::vector<std::vector<Rational>> radical_basis;
    Algebra quotient;
    std::vector<std::vector<Rational>> section; // row i: representative of quotient basis i
    // Orthogonal idempotents of the algebra lifting a finest frame of the quotient.
    std::vector<std::vector<Rational>> lifted_frame;
    // For every nonzero subset sum of the lifted frame: the idempotent and its profile.
    std::vector<std::pair<std::vector<Rational>, std::array<size_t, 3>>> action_spectra;
};
SemisimplePart semisimple_part(const Algebra& a, const GroebnerOptions& opts = {});

// The idempotents fingerprints and obstruction checks compare against:
// all nonzero idempotents when the variety is finite, otherwise the subset
// sums of the canonical lifted frame.
std::vector<std::vector<Rational>> reference_idempotents(const Algebra& a,
                                                         const GroebnerOptions& opts = {});
std::vector<std::array<size_t, 3>> reference_spectra(const Algebra& a,
                                                     const GroebnerOptions& opts = {});

struct Fingerprint {
    size_t dim = 0;
    size_t der_dim = 0;
    size_t rad_dim = 0;
    bool nilpotent = false;
    size_t nilindex = 0; // 0 when not nilpotent
    std::vector<size_t> powers;
    long long idempotent_count = 0; // -1: positive-dimensional idempotent variety
    std::vector<std::array<size_t, 3>> peirce_profiles; // sorted
    size_t square_dim = 0;
    size_t h2_dim = 0;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
    std::string str() const;
};
Fingerprint fingerprint(const Algebra& a, const GroebnerOptions& opts = {});

// Helpers shared with other modules.
std::optional<std::vector<Rational>> express_in_basis(
    const std::vector<std::vector<Rational>>& basis_rows, const std::vector<Rational>& v);
bool is_idempotent(const Algebra& a, const std::vector<Rational>& x);

} // namespace jord
