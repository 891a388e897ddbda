#pragma once

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "padicmeasure/error.hpp"
#include "padicmeasure/padic.hpp"

namespace padicmeasure {

using bigint = boost::multiprecision::cpp_int;

/// Exact rational num/den with gcd(|num|, den) = 1 and den >= 1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(i64 n) : num_(n), den_(1) {}  // NOLINT: integers convert implicitly
    Rational(bigint n, bigint d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const bigint& num() const noexcept { return num_; }
    const bigint& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const { return Rational(-num_, den_); }
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    Rational pow(unsigned e) const {
        Rational r(1);
        for (unsigned j = 0; j < e; ++j) r *= *this;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        bigint l = a.num_ * b.den_, r = b.num_ * a.den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "num/den", always with an explicit denominator.
    std::string to_string() const { return num_.str() + "/" + den_.str(); }

    /// Accepts "a", "-a", "a/b".
    static Rational parse(std::string_view text) {
        auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos) return Rational(bigint(std::string(text)), 1);
            return Rational(bigint(std::string(text.substr(0, slash))),
                            bigint(std::string(text.substr(slash + 1))));
        } catch (const std::exception&) {
            throw std::invalid_argument("not a rational number: " + std::string(text));
        }
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        bigint g = boost::multiprecision::gcd(num_ < 0 ? bigint(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    bigint num_;
    bigint den_;
};

/// p-adic valuation of a nonzero rational (may be negative).
inline int valuation(const Rational& q, u64 p) {
    if (q.is_zero()) throw std::domain_error("valuation of zero");
    int v = 0;
    bigint n = q.num() < 0 ? bigint(-q.num()) : q.num();
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    bigint d = q.den();
    while (d % p == 0) {
        d /= p;
        --v;
    }
    return v;
}

/// q reduced into Z/p^N; p must not divide the denominator.
inline PadicInt reduce(const Rational& q, const PadicContext& ctx) {
    const u64 m = ctx.modulus();
    if (q.den() % ctx.prime() == 0)
        throw DenominatorDivisibleByP(q.to_string() + " has p = " + std::to_string(ctx.prime()) +
                                      " in its denominator");
    bigint n = q.num() % m;
    if (n < 0) n += m;
    const u64 d = static_cast<u64>(q.den() % m);
    return PadicInt(ctx, ctx.mul(static_cast<u64>(n), ctx.inverse(d)));
}

}  // namespace padicmeasure
