#pragma once

#include "jord/rational.hpp"

#include <vector>

namespace jord {

// Univariate polynomial in t over the rationals, coefficients indexed by degree.
// Invariant: leading coefficient nonzero unless the polynomial is zero (empty).
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(Rational c) { if (!c.is_zero()) coeffs_.push_back(std::move(c)); }
    UniPoly(long long c) : UniPoly(Rational(c)) {}
    explicit UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UniPoly t() { return UniPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int d) const {
        return d >= 0 && d < static_cast<int>(coeffs_.size()) ? coeffs_[d] : Rational(0);
    }
    const Rational& leading() const {
        if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    Rational eval(const Rational& x) const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly operator*(const Rational& c) const;
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    // Euclidean division: *this = q*d + r with deg r < deg d.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
    UniPoly monic() const;

    std::string str(const std::string& var = "t") const;

private:
    std::vector<Rational> coeffs_;
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);

} // namespace jord
