#include "jord/rational.hpp"

#include <ostream>

namespace jord {

void Rational::normalize() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    normalize();
}

Rational Rational::parse(std::string_view text) {
    auto bad = [&] { throw std::invalid_argument("bad rational literal: '" + std::string(text) + "'"); };
    if (text.empty()) bad();
    size_t slash = text.find('/');
    auto parse_int = [&](std::string_view s) -> BigInt {
        if (s.empty()) bad();
        size_t i = 0;
        if (s[0] == '+' || s[0] == '-') i = 1;
        if (i == s.size()) bad();
        for (size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9') bad();
        return BigInt(std::string(s));
    };
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::inverse() const {
    if (num_ == 0) throw std::domain_error("inverse of zero");
    Rational r;
    if (num_ > 0) {
        r.num_ = den_;
        r.den_ = num_;
    } else {
        r.num_ = -den_;
        r.den_ = -num_;
    }
    return r;
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace jord
