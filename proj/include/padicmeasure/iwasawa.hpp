#pragma once

// Truncated power series over Z/p^N and the Iwasawa transform
//
//   P_n(mu) = sum_{a < p^n} mu(a + p^n Z_p) (1 + T)^a   mod T^M,
//
// the level-n surrogate for the isomorphism sending the Dirac mass at 1 to
// 1 + T. Since (1+T)^{p^n} - 1 has every coefficient below T^M divisible by
// p^{n - floor(log_p M)}, P_n and P_{n+1} agree to that many digits.
//
// The closed forms are built from binomial series with rational exponents,
// whose coefficients are computed exactly and only then reduced.

#include <algorithm>
#include <string>
#include <vector>

#include "padicmeasure/bernoulli.hpp"
#include "padicmeasure/integrate.hpp"
#include "padicmeasure/measure.hpp"
#include "padicmeasure/padic.hpp"
#include "padicmeasure/rational.hpp"

namespace padicmeasure {

/// c_0 + c_1 T + ... + c_{M-1} T^{M-1} in (Z/p^N)[T] / T^M.
class PowerSeries {
public:
    PowerSeries(const PadicContext& ctx, unsigned order) : ctx_(ctx), c_(order, 0) {
        if (order == 0) throw OrderTooSmall("a power series needs order M >= 1");
    }
    PowerSeries(const PadicContext& ctx, std::vector<u64> coeffs) : ctx_(ctx), c_(std::move(coeffs)) {
        if (c_.empty()) throw OrderTooSmall("a power series needs order M >= 1");
        for (auto& x : c_) x = ctx_.reduce(x);
    }

    static PowerSeries constant(const PadicContext& ctx, unsigned order, u64 value) {
        PowerSeries s(ctx, order);
        s.c_[0] = ctx.reduce(value);
        return s;
    }

    const PadicContext& context() const noexcept { return ctx_; }
    unsigned order() const noexcept { return static_cast<unsigned>(c_.size()); }
    const std::vector<u64>& coefficients() const noexcept { return c_; }
    PadicInt coefficient(unsigned j) const { return PadicInt(ctx_, c_.at(j)); }

    PowerSeries truncated(unsigned order) const {
        if (order > this->order()) throw OrderTooSmall("cannot extend a truncated series");
        return PowerSeries(ctx_, std::vector<u64>(c_.begin(), c_.begin() + order));
    }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        check_compatible(a, b);
        PowerSeries r(a.ctx_, a.order());
        for (unsigned j = 0; j < a.order(); ++j) r.c_[j] = a.ctx_.add(a.c_[j], b.c_[j]);
        return r;
    }
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
        check_compatible(a, b);
        PowerSeries r(a.ctx_, a.order());
        for (unsigned j = 0; j < a.order(); ++j) r.c_[j] = a.ctx_.sub(a.c_[j], b.c_[j]);
        return r;
    }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        check_compatible(a, b);
        const auto& ctx = a.ctx_;
        PowerSeries r(ctx, a.order());
        for (unsigned i = 0; i < a.order(); ++i) {
            if (a.c_[i] == 0) continue;
            for (unsigned j = 0; i + j < a.order(); ++j)
                r.c_[i + j] = ctx.add(r.c_[i + j], ctx.mul(a.c_[i], b.c_[j]));
        }
        return r;
    }
    friend PowerSeries operator*(const PadicInt& s, const PowerSeries& a) {
        if (!(s.context() == a.ctx_)) throw ContextMismatch("scalar and series contexts differ");
        PowerSeries r(a.ctx_, a.order());
        for (unsigned j = 0; j < a.order(); ++j) r.c_[j] = a.ctx_.mul(s.rep(), a.c_[j]);
        return r;
    }
    PowerSeries operator-() const {
        PowerSeries r(ctx_, order());
        for (unsigned j = 0; j < order(); ++j) r.c_[j] = ctx_.neg(c_[j]);
        return r;
    }

    /// Multiplicative inverse; the constant term must be a unit.
    PowerSeries inverse() const {
        const u64 a0_inv = ctx_.inverse(c_[0]);
        PowerSeries r(ctx_, order());
        r.c_[0] = a0_inv;
        for (unsigned j = 1; j < order(); ++j) {
            u64 s = 0;
            for (unsigned i = 1; i <= j; ++i) s = ctx_.add(s, ctx_.mul(c_[i], r.c_[j - i]));
            r.c_[j] = ctx_.neg(ctx_.mul(a0_inv, s));
        }
        return r;
    }

    /// f / T for f with zero constant term. The top coefficient is lost, so
    /// the result has order M - 1.
    PowerSeries divide_by_t() const {
        if (c_[0] != 0)
            throw NonzeroConstantTerm("constant term " + std::to_string(c_[0]) + " blocks division by T");
        if (order() < 2) throw OrderTooSmall("dividing an order-1 series by T leaves nothing");
        return PowerSeries(ctx_, std::vector<u64>(c_.begin() + 1, c_.end()));
    }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) noexcept {
        return a.ctx_ == b.ctx_ && a.c_ == b.c_;
    }

    /// Coefficient-wise agreement mod p^digits over the common order.
    friend bool congruent(const PowerSeries& a, const PowerSeries& b, unsigned digits) {
        check_same_context(a, b);
        const unsigned order = std::min(a.order(), b.order());
        for (unsigned j = 0; j < order; ++j)
            if (!congruent(a.coefficient(j), b.coefficient(j), digits)) return false;
        return true;
    }

private:
    static void check_same_context(const PowerSeries& a, const PowerSeries& b) {
        if (!(a.ctx_ == b.ctx_)) throw ContextMismatch("series carry different (p, N)");
    }
    static void check_compatible(const PowerSeries& a, const PowerSeries& b) {
        check_same_context(a, b);
        if (a.order() != b.order()) throw OrderTooSmall("series of different truncation orders");
    }

    PadicContext ctx_;
    std::vector<u64> c_;
};

/// (1+T)^z for rational z with p not dividing its denominator; the
/// coefficients C(z, j) are computed exactly, then reduced.
inline PowerSeries binomial_series(const Rational& z, const PadicContext& ctx, unsigned order) {
    if (z.den() % ctx.prime() == 0)
        throw DenominatorDivisibleByP("exponent " + z.to_string() + " is not p-integral");
    std::vector<u64> c(order);
    Rational term(1);
    for (unsigned j = 0; j < order; ++j) {
        c[j] = reduce(term, ctx).rep();
        term = term * (z - Rational(static_cast<i64>(j))) / Rational(static_cast<i64>(j + 1));
    }
    return PowerSeries(ctx, std::move(c));
}

/// (1+T)^z for z in Z/p^N, taken as its integer lift. The falling products
/// z(z-1)...(z-j+1) are carried at precision N + v_p((M-1)!) so that the
/// division by j! leaves N correct digits.
inline PowerSeries binomial_series(const PadicInt& z, unsigned order) {
    const auto& ctx = z.context();
    const u64 p = ctx.prime();
    unsigned pad = 0;
    for (unsigned j = 2; j < order; ++j)
        for (unsigned t = j; t % p == 0; t /= static_cast<unsigned>(p)) ++pad;
    const PadicContext wide(p, ctx.precision() + pad);

    std::vector<u64> c(order);
    u64 falling = 1;     // z (z-1) ... (z-j+1) mod p^{N+pad}
    u64 fact_unit = 1;   // unit part of j! mod p^{N+pad}
    unsigned fact_val = 0;
    for (unsigned j = 0; j < order; ++j) {
        if (j > 0) {
            falling = wide.mul(falling, wide.reduce_signed(static_cast<i128>(z.rep()) - (j - 1)));
            unsigned t = j;
            while (t % p == 0) {
                t /= static_cast<unsigned>(p);
                ++fact_val;
            }
            fact_unit = wide.mul(fact_unit, t);
        }
        const u64 shifted = falling / wide.power_of_p(fact_val);
        c[j] = ctx.mul(ctx.reduce(shifted), ctx.inverse(ctx.reduce(fact_unit)));
    }
    return PowerSeries(ctx, std::move(c));
}

/// floor(log_p M)
inline unsigned floor_log(u64 p, unsigned order) {
    unsigned l = 0;
    u64 x = p;
    while (x <= order) {
        x *= p;
        ++l;
    }
    return l;
}

/// ceil(log_p M)
inline unsigned ceil_log(u64 p, unsigned order) {
    unsigned l = 0;
    u64 x = 1;
    while (x < order) {
        x *= p;
        ++l;
    }
    return l;
}

/// Digits of each coefficient of P_n guaranteed to match the limit.
inline unsigned transform_certified_digits(u64 p, unsigned level, unsigned order) {
    const unsigned loss = floor_log(p, order);
    return level > loss ? level - loss : 0;
}

/// The level needed for target_digits certified digits per coefficient.
inline unsigned transform_level_for(u64 p, unsigned target_digits, unsigned order) {
    return target_digits + ceil_log(p, order) + 1;
}

/// P_n(mu) mod T^M.
template <ball_measure M>
PowerSeries transform(const M& mu, unsigned n, unsigned order) {
    detail::require_level(mu, n);
    if (order == 0) throw OrderTooSmall("transform needs order M >= 1");
    return PowerSeries(mu.context(), detail::binomial_sums(mu, n, order, Region::zp));
}

namespace detail {

inline Rational fraction_value(const FractionClass& f) {
    return Rational(bigint(f.numerator()), bigint(f.denominator()));
}

/// ((1+T)^z - 1) / T mod T^M.
inline PowerSeries difference_quotient(const Rational& z, const PadicContext& ctx, unsigned order) {
    PowerSeries s = binomial_series(z, ctx, order + 1);
    return (s - PowerSeries::constant(ctx, order + 1, 1)).divide_by_t();
}

}  // namespace detail

/// ((1+T)^{i/m} - 1) / T, the transform of mu(i/m).
inline PowerSeries closed_form_mu(const FractionClass& f, const PadicContext& ctx, unsigned order) {
    return detail::difference_quotient(detail::fraction_value(f), ctx, order);
}

/// The coefficients C(i/m, j+1), j < M, of ((1+T)^{i/m} - 1) / T as exact rationals.
inline std::vector<Rational> closed_form_mu_exact(const FractionClass& f, unsigned order) {
    const Rational z = detail::fraction_value(f);
    std::vector<Rational> c;
    c.reserve(order);
    Rational term = z;  // C(z, 1)
    for (unsigned j = 0; j < order; ++j) {
        c.push_back(term);
        term = term * (z - Rational(static_cast<i64>(j + 1))) / Rational(static_cast<i64>(j + 2));
    }
    return c;
}

/// ((1+T)^{i/m} - 1)/T - c ((1+T)^{c i/m} - 1) / ((1+T)^c - 1), the
/// transform of mu_c(i/m).
inline PowerSeries closed_form_mu_c(const FractionClass& f, const UnitScaling& c, unsigned order) {
    c.require_not_root_of_unity();
    const auto& ctx = c.context();
    const Rational cz = c.as_rational();
    const Rational x = detail::fraction_value(f);
    const PowerSeries u = detail::difference_quotient(cz, ctx, order);  // ((1+T)^c - 1)/T
    const PowerSeries moved = detail::difference_quotient(cz * x, ctx, order);
    return detail::difference_quotient(x, ctx, order) - c.value().value() * (moved * u.inverse());
}

/// 1/T - c / ((1+T)^c - 1), the transform of E_{1,c}.
inline PowerSeries closed_form_bernoulli(const UnitScaling& c, unsigned order) {
    const auto& ctx = c.context();
    const PowerSeries u = detail::difference_quotient(c.as_rational(), ctx, order + 1);
    const PowerSeries numerator = u - PowerSeries::constant(ctx, order + 1, c.lift());
    return numerator.divide_by_t() * u.truncated(order).inverse();
}

/// (1+T)^{i/m} / T - c (1+T)^{c i/m} / ((1+T)^c - 1), the transform of
/// E_{1,c} + mu_c(i/m), evaluated as
///   [(1+T)^{i/m} u(T) - c (1+T)^{c i/m}] / (T u(T)),  (1+T)^c - 1 = T u(T).
inline PowerSeries closed_form_combined(const FractionClass& f, const UnitScaling& c, unsigned order) {
    c.require_not_root_of_unity();
    const auto& ctx = c.context();
    const Rational cz = c.as_rational();
    const Rational x = detail::fraction_value(f);
    const PowerSeries u = detail::difference_quotient(cz, ctx, order + 1);
    const PowerSeries numerator =
        binomial_series(x, ctx, order + 1) * u - c.value().value() * binomial_series(cz * x, ctx, order + 1);
    if (numerator.coefficients()[0] != 0)
        throw NonzeroConstantTerm("combined closed form: numerator constant term is " +
                                  std::to_string(numerator.coefficients()[0]));
    return numerator.divide_by_t() * u.truncated(order).inverse();
}

/// int x^k dmu read off the transform as (D^k P)(0), D = (1+T) d/dT.
inline PadicInt series_moment(const PowerSeries& ps, unsigned k) {
    if (k >= ps.order())
        throw OrderTooSmall("moment " + std::to_string(k) + " needs order > " + std::to_string(k) + ", have " +
                            std::to_string(ps.order()));
    const auto& ctx = ps.context();
    std::vector<u64> c = ps.coefficients();
    // D(sum c_j T^j) = sum_j (j c_j + (j+1) c_{j+1}) T^j; each pass drops one valid coefficient.
    for (unsigned step = 0; step < k; ++step) {
        const std::size_t len = c.size() - 1;
        std::vector<u64> d(len);
        for (std::size_t j = 0; j < len; ++j)
            d[j] = ctx.add(ctx.mul(ctx.reduce(j), c[j]), ctx.mul(ctx.reduce(j + 1), c[j + 1]));
        c = std::move(d);
    }
    return PadicInt(ctx, c[0]);
}

}  // namespace padicmeasure
