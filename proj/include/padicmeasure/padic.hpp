#pragma once

// Fixed-precision arithmetic in Z/p^N as a model of the p-adic integers Z_p.
//
// A PadicContext fixes an odd prime p and a digit count N; every PadicInt
// carries its context and a canonical representative 0 <= rep < p^N. Hot
// loops (Riemann sums, transforms) work on bare residues through the
// context's arithmetic methods instead of PadicInt.

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "padicmeasure/error.hpp"

#if !defined(__SIZEOF_INT128__)
#error "padicmeasure requires unsigned __int128 (GCC/Clang)."
#endif

namespace padicmeasure {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

/// Every modulus p^n handled by the library stays below this bound, so the
/// sum of two residues never overflows a u64.
inline constexpr u64 modulus_limit = u64{1} << 62;

namespace detail {

constexpr bool is_prime(u64 n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (u64 d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// p^n, or nullopt when it reaches modulus_limit.
constexpr std::optional<u64> checked_pow(u64 p, unsigned n) noexcept {
    u64 r = 1;
    for (unsigned j = 0; j < n; ++j) {
        if (r > (modulus_limit - 1) / p) return std::nullopt;
        r *= p;
    }
    return r;
}

/// Largest n with p^n < modulus_limit.
constexpr unsigned max_exponent(u64 p) noexcept {
    unsigned n = 0;
    while (checked_pow(p, n + 1)) ++n;
    return n;
}

constexpr u64 gcd(u64 a, u64 b) noexcept {
    while (b != 0) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Inverse of a modulo m, or nullopt when gcd(a, m) != 1.
constexpr std::optional<u64> inverse_mod(u64 a, u64 m) noexcept {
    if (m == 1) return 0;
    i128 r0 = m, r1 = a % m, s0 = 0, s1 = 1;
    while (r1 != 0) {
        i128 q = r0 / r1;
        i128 t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    if (r0 != 1) return std::nullopt;
    if (s0 < 0) s0 += m;
    return static_cast<u64>(s0);
}

/// Signed value reduced into [0, m).
constexpr u64 reduce_signed(i128 x, u64 m) noexcept {
    i128 r = x % static_cast<i128>(m);
    if (r < 0) r += m;
    return static_cast<u64>(r);
}

/// Modular arithmetic for one modulus q < 2^62. Moduli below 2^32 take a
/// Barrett path that avoids the hardware divide.
class modulus {
public:
    constexpr modulus() = default;
    explicit constexpr modulus(u64 q) : q_(q), small_(q < (u64{1} << 32)) {
        barrett_ = ~u64{0} / q;
    }

    constexpr u64 value() const noexcept { return q_; }

    constexpr u64 reduce(u64 x) const noexcept {
        if (small_) {
            u64 qhat = static_cast<u64>((static_cast<u128>(x) * barrett_) >> 64);
            u64 r = x - qhat * q_;
            while (r >= q_) r -= q_;
            return r;
        }
        return x % q_;
    }

    constexpr u64 reduce(u128 x) const noexcept {
        if (small_ && (x >> 64) == 0) return reduce(static_cast<u64>(x));
        return static_cast<u64>(x % q_);
    }

    constexpr u64 add(u64 a, u64 b) const noexcept {
        u64 r = a + b;
        return r >= q_ ? r - q_ : r;
    }
    constexpr u64 sub(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + (q_ - b); }
    constexpr u64 neg(u64 a) const noexcept { return a == 0 ? 0 : q_ - a; }

    constexpr u64 mul(u64 a, u64 b) const noexcept {
        if (small_) return reduce(a * b);
        return static_cast<u64>(static_cast<u128>(a) * b % q_);
    }

    constexpr u64 pow(u64 base, u64 e) const noexcept {
        u64 r = q_ == 1 ? 0 : 1;
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            e >>= 1;
            if (e) base = mul(base, base);
        }
        return r;
    }

    constexpr bool operator==(const modulus& o) const noexcept { return q_ == o.q_; }

private:
    u64 q_ = 1;
    u64 barrett_ = 0;
    bool small_ = true;
};

}  // namespace detail

/// The pair (p, N): an odd prime and the number of base-p digits carried.
class PadicContext {
public:
    PadicContext(u64 p, unsigned precision) : p_(p), n_(precision) {
        if (!detail::is_prime(p))
            throw InvalidContext("p = " + std::to_string(p) + " is not prime");
        if (p == 2) throw InvalidContext("p = 2 is not supported; p must be odd");
        if (precision < 1) throw InvalidContext("precision must be at least 1");
        auto q = detail::checked_pow(p, precision);
        if (!q)
            throw InvalidContext("p^N = " + std::to_string(p) + "^" + std::to_string(precision) +
                                 " exceeds 2^62");
        mod_ = detail::modulus(*q);
    }

    u64 prime() const noexcept { return p_; }
    unsigned precision() const noexcept { return n_; }
    /// p^N
    u64 modulus() const noexcept { return mod_.value(); }
    const detail::modulus& arith() const noexcept { return mod_; }

    /// p^n for any n with p^n < 2^62.
    u64 power_of_p(unsigned n) const {
        auto r = detail::checked_pow(p_, n);
        if (!r)
            throw LevelExceedsMeasure("p^" + std::to_string(n) + " exceeds the 64-bit ball index range");
        return *r;
    }

    /// Largest level n whose balls can be indexed (p^n < 2^62).
    unsigned max_level() const noexcept { return detail::max_exponent(p_); }

    // Residue arithmetic on canonical representatives.
    u64 add(u64 a, u64 b) const noexcept { return mod_.add(a, b); }
    u64 sub(u64 a, u64 b) const noexcept { return mod_.sub(a, b); }
    u64 neg(u64 a) const noexcept { return mod_.neg(a); }
    u64 mul(u64 a, u64 b) const noexcept { return mod_.mul(a, b); }
    u64 pow(u64 a, u64 e) const noexcept { return mod_.pow(a, e); }
    u64 reduce(u64 x) const noexcept { return mod_.reduce(x); }
    u64 reduce_signed(i128 x) const noexcept { return detail::reduce_signed(x, mod_.value()); }

    /// Inverse of a residue not divisible by p.
    u64 inverse(u64 a) const {
        auto r = detail::inverse_mod(a, mod_.value());
        if (!r) throw NotAUnit(std::to_string(a) + " is divisible by p = " + std::to_string(p_));
        return *r;
    }

    /// p-adic valuation of a residue; returns N for zero.
    unsigned valuation(u64 a) const noexcept {
        if (a == 0) return n_;
        unsigned v = 0;
        while (a % p_ == 0) {
            a /= p_;
            ++v;
        }
        return v;
    }

    bool operator==(const PadicContext& o) const noexcept { return p_ == o.p_ && n_ == o.n_; }

private:
    u64 p_;
    unsigned n_;
    detail::modulus mod_;
};

/// An element of Z/p^N with its canonical representative.
class PadicInt {
public:
    explicit PadicInt(const PadicContext& ctx) : ctx_(ctx), rep_(0) {}
    PadicInt(const PadicContext& ctx, u64 rep) : ctx_(ctx), rep_(ctx.reduce(rep)) {}

    static PadicInt from_int(const PadicContext& ctx, i64 value) {
        return PadicInt(ctx, ctx.reduce_signed(value));
    }

    const PadicContext& context() const noexcept { return ctx_; }
    u64 rep() const noexcept { return rep_; }

    bool is_zero() const noexcept { return rep_ == 0; }
    bool is_unit() const noexcept { return rep_ % ctx_.prime() != 0; }
    /// v_p; equals N for the zero element.
    unsigned valuation() const noexcept { return ctx_.valuation(rep_); }

    /// Little-endian base-p digits, exactly N of them.
    std::vector<u64> digits() const {
        std::vector<u64> d(ctx_.precision());
        u64 x = rep_;
        for (auto& di : d) {
            di = x % ctx_.prime();
            x /= ctx_.prime();
        }
        return d;
    }

    /// The representative reduced modulo p^k (k <= N).
    u64 truncated(unsigned k) const { return k >= ctx_.precision() ? rep_ : rep_ % ctx_.power_of_p(k); }

    PadicInt inverse() const { return PadicInt(ctx_, ctx_.inverse(rep_)); }

    /// Exact division by p^k; the value must be divisible by p^k. The result is
    /// only determined modulo p^(N-k); the representative returned has its top
    /// k digits zero.
    PadicInt divide_by_p_power(unsigned k) const {
        if (k == 0) return *this;
        if (rep_ != 0 && valuation() < k)
            throw NotDivisible("value is not divisible by p^" + std::to_string(k));
        return PadicInt(ctx_, rep_ / ctx_.power_of_p(k));
    }

    PadicInt operator-() const { return PadicInt(ctx_, ctx_.neg(rep_)); }

    friend PadicInt operator+(const PadicInt& a, const PadicInt& b) {
        check_same(a, b);
        return PadicInt(a.ctx_, a.ctx_.add(a.rep_, b.rep_));
    }
    friend PadicInt operator-(const PadicInt& a, const PadicInt& b) {
        check_same(a, b);
        return PadicInt(a.ctx_, a.ctx_.sub(a.rep_, b.rep_));
    }
    friend PadicInt operator*(const PadicInt& a, const PadicInt& b) {
        check_same(a, b);
        return PadicInt(a.ctx_, a.ctx_.mul(a.rep_, b.rep_));
    }
    PadicInt& operator+=(const PadicInt& b) { return *this = *this + b; }
    PadicInt& operator-=(const PadicInt& b) { return *this = *this - b; }
    PadicInt& operator*=(const PadicInt& b) { return *this = *this * b; }

    PadicInt pow(u64 e) const { return PadicInt(ctx_, ctx_.pow(rep_, e)); }

    friend bool operator==(const PadicInt& a, const PadicInt& b) noexcept {
        return a.ctx_ == b.ctx_ && a.rep_ == b.rep_;
    }

    /// True when a and b agree modulo p^k.
    friend bool congruent(const PadicInt& a, const PadicInt& b, unsigned k) {
        check_same(a, b);
        return a.truncated(k) == b.truncated(k);
    }

private:
    static void check_same(const PadicInt& a, const PadicInt& b) {
        if (!(a.ctx_ == b.ctx_)) throw ContextMismatch("operands carry different (p, N)");
    }

    PadicContext ctx_;
    u64 rep_;
};

/// A PadicInt that is not divisible by p.
class PadicUnit {
public:
    explicit PadicUnit(const PadicInt& x) : value_(x) {
        if (!x.is_unit()) throw NotAUnit(std::to_string(x.rep()) + " is not a p-adic unit");
    }
    PadicUnit(const PadicContext& ctx, i64 x) : PadicUnit(PadicInt::from_int(ctx, x)) {}

    const PadicInt& value() const noexcept { return value_; }
    const PadicContext& context() const noexcept { return value_.context(); }
    u64 rep() const noexcept { return value_.rep(); }
    operator const PadicInt&() const noexcept { return value_; }

    PadicUnit inverse() const { return PadicUnit(value_.inverse()); }

    friend PadicUnit operator*(const PadicUnit& a, const PadicUnit& b) {
        return PadicUnit(a.value_ * b.value_);
    }
    friend bool operator==(const PadicUnit& a, const PadicUnit& b) noexcept {
        return a.value_ == b.value_;
    }

private:
    PadicInt value_;
};

/// num/den embedded in Z/p^N.
inline PadicInt from_rational(i64 num, i64 den, const PadicContext& ctx) {
    if (den == 0) throw DenominatorDivisibleByP("zero denominator");
    const i128 d = den;
    if (d % static_cast<i128>(ctx.prime()) == 0)
        throw DenominatorDivisibleByP(std::to_string(den) + " is divisible by p = " +
                                      std::to_string(ctx.prime()));
    const u64 n = ctx.reduce_signed(num);
    const u64 inv = ctx.inverse(ctx.reduce_signed(d));
    return PadicInt(ctx, ctx.mul(n, inv));
}

/// Teichmuller representative of a residue: the (p-1)-st root of unity
/// congruent to x mod p, obtained by iterating y -> y^p N times.
inline u64 teichmuller_rep(const PadicContext& ctx, u64 x) {
    u64 y = ctx.reduce(x);
    for (unsigned j = 0; j < ctx.precision(); ++j) y = ctx.pow(y, ctx.prime());
    return y;
}

/// omega(x)
inline PadicUnit teichmuller(const PadicUnit& x) {
    return PadicUnit(PadicInt(x.context(), teichmuller_rep(x.context(), x.rep())));
}

/// [x] = x * omega(x)^{-1}, the principal-unit part; always = 1 mod p.
inline PadicUnit angle(const PadicUnit& x) {
    return x * teichmuller(x).inverse();
}

/// u^s for u = 1 (mod p) and s in Z_p, using the exponent s mod p^{N-1}.
inline PadicUnit unit_pow(const PadicUnit& u, const PadicInt& s) {
    const auto& ctx = u.context();
    if (u.rep() % ctx.prime() != 1)
        throw BaseNotOneModP(std::to_string(u.rep()) + " is not congruent to 1 mod p");
    if (!(s.context() == ctx)) throw ContextMismatch("exponent and base carry different (p, N)");
    const u64 e = s.truncated(ctx.precision() - 1);
    return PadicUnit(PadicInt(ctx, ctx.pow(u.rep(), e)));
}

/// omega(a) for a = 0..p-1 (entry 0 is unused and left 0).
inline std::vector<u64> teichmuller_table(const PadicContext& ctx) {
    std::vector<u64> t(ctx.prime(), 0);
    for (u64 a = 1; a < ctx.prime(); ++a) t[a] = teichmuller_rep(ctx, a);
    return t;
}

}  // namespace padicmeasure
