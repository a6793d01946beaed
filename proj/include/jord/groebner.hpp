#pragma once

#include "jord/multipoly.hpp"

#include <optional>

namespace jord {

struct GroebnerOptions {
    MonomialOrder order = MonomialOrder::GrevLex;
    // Counted in single reduction steps across the whole run.
    long long budget = 2'000'000;
};

struct BudgetExhausted : std::runtime_error {
    BudgetExhausted() : std::runtime_error("groebner work budget exhausted") {}
};

// Reduced Groebner basis of the ideal generated by gens. Throws BudgetExhausted.
std::vector<MultiPoly> groebner_basis(std::vector<MultiPoly> gens, const GroebnerOptions& opts = {});

// Normal form of p modulo basis (multivariate division remainder).
MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis,
                      MonomialOrder ord, long long* budget = nullptr);

enum class Emptiness { EmptyOverC, NonEmptyOverC, Undecided };

// Weak Nullstellensatz test: the complex variety of gens is empty iff the
// reduced basis contains a nonzero constant. Sound over the complex numbers
// even though all arithmetic is rational.
Emptiness groebner_emptiness(const std::vector<MultiPoly>& gens, const GroebnerOptions& opts = {});

// Number of standard monomials of the ideal (= dim of the quotient ring as a
// vector space) when finite; nullopt when the quotient is infinite-dimensional.
std::optional<long long> quotient_dimension(const std::vector<MultiPoly>& basis, MonomialOrder ord);

} // namespace jord
