#pragma once

#include "jord/unipoly.hpp"

#include <optional>

namespace jord {

// Rational function in t. Invariants: denominator nonzero and monic,
// gcd(numerator, denominator) = 1.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rational(1)) {}
    RatFunc(Rational c) : num_(std::move(c)), den_(Rational(1)) {}
    RatFunc(long long c) : RatFunc(Rational(c)) {}
    RatFunc(UniPoly p) : num_(std::move(p)), den_(Rational(1)) {}
    RatFunc(UniPoly num, UniPoly den);

    static RatFunc t() { return RatFunc(UniPoly::t()); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc inverse() const;
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // Value at t = 0 when finite; nullopt signals a pole. (The reduced form
    // guarantees numerator and denominator never vanish at 0 together.)
    std::optional<Rational> limit_at_zero() const;

    std::string str(const std::string& var = "t") const;

private:
    UniPoly num_;
    UniPoly den_;
};

} // namespace jord
