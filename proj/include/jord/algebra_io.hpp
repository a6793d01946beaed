#pragma once

#include "jord/algebra.hpp"

#include <stdexcept>

namespace jord {

// Parse/format errors carry a human-readable location (byte offset for JSON
// syntax errors, the offending key or entry otherwise).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Algebra document: JSON with fields dim (integer), basis (list of names),
// label (optional string), products (object mapping "a*b" to a linear
// combination such as "e1 + -..." / "1/2*n1 - n2"). Omitted products are zero;
// a product may be given in either order, and when both are present they must
// agree.
Algebra parse_algebra(const std::string& text);

// Canonical form: products emitted in lexicographic (i, j) index order with
// i <= j, coefficients in lowest terms. parse(serialize(a)) reproduces a
// exactly and serialize is a fixed point on its own output.
std::string serialize_algebra(const Algebra& a);

// Linear-combination string over named basis vectors: signed terms
// "coef*name" with exact rational coefficients, "coef*" optional when 1.
std::vector<Rational> parse_linear_combination(const std::string& text,
                                               const std::vector<std::string>& names,
                                               const std::string& context);
std::string format_linear_combination(const std::vector<Rational>& v,
                                      const std::vector<std::string>& names);

} // namespace jord
