#pragma once

// p-adic Hurwitz-type zeta values and L-values as functions of s in Z_p:
//
//   H(1-s, omega^b, i/m) = int_{Z_p^x} [x]^s x^{-1} omega(x)^b dmu(i/m)
//
//   L^beta(1-s) = (1 - omega(c)^beta [c]^s)^{-1}
//                 int_{Z_p^x} [x]^s x^{-1} omega(x)^beta d(E_{1,c} + mu_c(i/m))
//
// At s = k with k = b (mod p-1) both reduce to Bernoulli closed forms, which
// interpolation_report checks row by row.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "padicmeasure/bernoulli.hpp"
#include "padicmeasure/integrate.hpp"
#include "padicmeasure/measure.hpp"

namespace padicmeasure {

namespace detail {
inline unsigned working_level(const PadicContext& ctx, unsigned digits) {
    return std::min(std::max(default_max_level(ctx), digits + 1), ctx.max_level());
}

inline u64 character_residue(const PadicContext& ctx, i64 b) {
    const i64 order = static_cast<i64>(ctx.prime() - 1);
    return static_cast<u64>(((b % order) + order) % order);
}
}  // namespace detail

/// H(1-s, omega^b, i/m), certified to `digits` digits.
inline CertifiedValue hurwitz_tilde(const FractionClass& f, const PadicInt& s, i64 b, unsigned digits) {
    const auto& ctx = s.context();
    const auto mu = mu_frac(ctx, f, detail::working_level(ctx, digits));
    return integrate_adaptive(mu, CharacterIntegrand{s, detail::character_residue(ctx, b)}, digits);
}

/// A possibly non-integral p-adic number L = numerator / p^denominator_exponent,
/// known to achieved_digits digits of absolute precision (the numerator is
/// known mod p^{achieved_digits + denominator_exponent}).
struct LValue {
    PadicInt numerator;
    unsigned denominator_exponent = 0;
    unsigned achieved_digits = 0;
    unsigned normalizer_valuation = 0;  // v_p(1 - omega(c)^beta [c]^s), the digits lost
    PadicInt integral;                  // the unnormalized integral

    unsigned numerator_digits() const noexcept { return achieved_digits + denominator_exponent; }

    /// Absolute digits to which L agrees with the rational q (capped at
    /// achieved_digits); 0 when q is not representable at this scale.
    unsigned agreement_with(const Rational& q) const {
        const auto& ctx = numerator.context();
        const Rational scaled = q * Rational(static_cast<i64>(ctx.prime())).pow(denominator_exponent);
        if (scaled.den() % ctx.prime() == 0) return 0;
        const unsigned v = (reduce(scaled, ctx) - numerator).valuation();
        const unsigned capped = std::min(v, numerator_digits());
        return capped > denominator_exponent ? capped - denominator_exponent : 0;
    }

    bool matches(const Rational& q) const { return agreement_with(q) >= achieved_digits; }
};

/// True when a and b agree to the smaller of their achieved precisions.
inline bool lvalues_agree(const LValue& a, const LValue& b) {
    const auto& ctx = a.numerator.context();
    const unsigned e = std::max(a.denominator_exponent, b.denominator_exponent);
    const PadicInt pa = PadicInt(ctx, ctx.power_of_p(e - a.denominator_exponent)) * a.numerator;
    const PadicInt pb = PadicInt(ctx, ctx.power_of_p(e - b.denominator_exponent)) * b.numerator;
    const unsigned digits = std::min(ctx.precision(), std::min(a.achieved_digits, b.achieved_digits) + e);
    return congruent(pa, pb, digits);
}

/// L^beta(1-s) for the combined measure attached to (i/m, c).
inline LValue l_value(const FractionClass& f, const PadicInt& s, i64 beta, const UnitScaling& c, unsigned digits) {
    const auto& ctx = s.context();
    if (!(c.context() == ctx)) throw ContextMismatch("scaling and exponent carry different (p, N)");
    c.require_not_root_of_unity();
    const u64 beta_res = detail::character_residue(ctx, beta);

    // 1 - omega(c)^beta [c]^s
    const PadicUnit omega_c = teichmuller(c.value());
    const PadicInt normalizer =
        PadicInt(ctx, 1) - omega_c.value().pow(beta_res) * unit_pow(angle(c.value()), s).value();
    if (normalizer.is_zero())
        throw DenominatorVanishes("1 - omega(c)^beta [c]^s is 0 mod p^N");
    const unsigned v = normalizer.valuation();
    if (v >= digits)
        throw DenominatorVanishes("normalizer has valuation " + std::to_string(v) + ", leaving no digits of " +
                                  std::to_string(digits));

    const auto mu = combined_measure(f, c, detail::working_level(ctx, digits));
    const CertifiedValue integral = integrate_adaptive(mu, CharacterIntegrand{s, beta_res}, digits);

    // integral / (p^v u): scale by u^{-1}, then cancel as much of p^v as the
    // known digits allow.
    const PadicInt unit_part = normalizer.divide_by_p_power(v);
    const u64 scaled = (integral.value * unit_part.inverse()).truncated(digits);
    const unsigned known = scaled == 0 ? v : std::min(PadicInt(ctx, scaled).valuation(), v);
    return LValue{PadicInt(ctx, scaled / ctx.power_of_p(known)), v - known, digits - v, v, integral.value};
}

struct InterpolationRow {
    unsigned k = 0;
    u64 character = 0;                // b = k mod (p-1)
    PadicInt measured;                // numerator of the measured value
    unsigned denominator_exponent = 0;
    Rational oracle;
    unsigned required_digits = 0;
    unsigned agreement_digits = 0;
    bool ok = false;
    bool stable = true;  // false when the two-level check failed
};

/// H(1-k, omega^k, i/m) against the Bernoulli closed form for k = 1..k_max,
/// integrating against the supplied measure (normally mu(i/m)). Never throws
/// on disagreement; failures show up in the rows.
template <ball_measure M>
std::vector<InterpolationRow> interpolation_report(const M& mu, const FractionClass& f, unsigned k_max,
                                                   unsigned digits) {
    const auto& ctx = mu.context();
    std::vector<InterpolationRow> rows;
    for (unsigned k = 1; k <= k_max; ++k) {
        const u64 b = detail::character_residue(ctx, k);
        const CharacterIntegrand integrand{PadicInt(ctx, k), b};
        const Rational oracle = moment_closed_form(f, k, Region::units);
        // An unstable measure is reported as a failed row carrying its finest sum.
        PadicInt value(ctx);
        bool stable = true;
        try {
            value = integrate_adaptive(mu, integrand, digits).value;
        } catch (const StabilityCheckFailed&) {
            stable = false;
            value = riemann_sum(mu, integrand, std::min(digits + 1, mu.max_level()));
        }
        const unsigned agree = std::min((value - reduce(oracle, ctx)).valuation(), digits);
        rows.push_back({k, b, value, 0, oracle, digits, agree, stable && agree >= digits, stable});
    }
    return rows;
}

inline std::vector<InterpolationRow> interpolation_report(const FractionClass& f, const PadicContext& ctx,
                                                          unsigned k_max, unsigned digits) {
    return interpolation_report(mu_frac(ctx, f, detail::working_level(ctx, digits)), f, k_max, digits);
}

/// L^k(1-k) against B_k(i/m)/k - p^{k-1} B_k([i p^{-1}]_m/m)/k for k = 1..k_max.
inline std::vector<InterpolationRow> l_value_interpolation_report(const FractionClass& f, const UnitScaling& c,
                                                                  unsigned k_max, unsigned digits) {
    const auto& ctx = c.context();
    std::vector<InterpolationRow> rows;
    for (unsigned k = 1; k <= k_max; ++k) {
        const u64 beta = detail::character_residue(ctx, k);
        const LValue l = l_value(f, PadicInt(ctx, k), static_cast<i64>(beta), c, digits);
        const Rational oracle = l_value_closed_form(f, k);
        const unsigned agree = l.agreement_with(oracle);
        rows.push_back({k, beta, l.numerator, l.denominator_exponent, oracle, l.achieved_digits, agree,
                        agree >= l.achieved_digits, true});
    }
    return rows;
}

}  // namespace padicmeasure
