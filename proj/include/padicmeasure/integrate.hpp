#pragma once

// Riemann-sum integration against measures on Z_p.
//
// At level n the sum S_n = sum_a f(a) mu(a + p^n Z_p) runs over 0 <= a < p^n.
// Both integrand families used here (x^{k-1}, and [x]^s x^{-1} omega(x)^b on
// the units) move by at most |x - y|_p between points of the same ball, and
// every measure is Z_p-valued, so S_n agrees with the integral mod p^n.
// Sums are accumulated directly in Z/p^N.

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "padicmeasure/measure.hpp"
#include "padicmeasure/padic.hpp"
#include "padicmeasure/region.hpp"

namespace padicmeasure {

/// x^{k-1} over a region.
struct PowerIntegrand {
    unsigned k = 1;
    Region region = Region::zp;
};

/// [x]^s x^{-1} omega(x)^b over Z_p^x; b is a residue mod p - 1.
struct CharacterIntegrand {
    PadicInt s;
    u64 b = 0;
};

using IntegrandSpec = std::variant<PowerIntegrand, CharacterIntegrand>;

/// A value together with the number of base-p digits known to be correct.
struct CertifiedValue {
    PadicInt value;
    unsigned digits = 0;
    unsigned level = 0;  // finest level evaluated
};

namespace detail {

template <ball_measure M>
void require_level(const M& mu, unsigned n) {
    if (n > mu.max_level())
        throw LevelExceedsMeasure("level " + std::to_string(n) + " exceeds max_level " +
                                  std::to_string(mu.max_level()));
}

inline bool in_region(u64 a_mod_p, Region region) noexcept {
    switch (region) {
        case Region::zp: return true;
        case Region::units: return a_mod_p != 0;
        case Region::multiples_of_p: return a_mod_p == 0;
    }
    return true;
}

/// sum of x * y over many terms, reduced only at the end when the modulus is
/// small enough for the 128-bit accumulator to absorb every product.
class lazy_dot {
public:
    explicit lazy_dot(const modulus& m) : m_(m), lazy_(m.value() < (u64{1} << 32)) {}

    void add(u64 x, u64 y) noexcept {
        if (lazy_) {
            acc_ += static_cast<u128>(x * y);
        } else {
            acc_ = (acc_ + static_cast<u128>(x) * y % m_.value()) % m_.value();
        }
    }
    u64 value() const noexcept { return m_.reduce(acc_); }

private:
    modulus m_;
    bool lazy_;
    u128 acc_ = 0;
};

/// The small-modulus kernel with a compile-time number K of coefficients:
/// products are summed in 64 bits and reduced once per batch, sized so the
/// running sums cannot overflow.
template <unsigned K, ball_measure M>
std::array<u64, K> binomial_sums_fixed(const M& mu, unsigned n, Region region) {
    const auto& ctx = mu.context();
    const u64 p = ctx.prime();
    const u64 pn = ctx.power_of_p(n);
    const u64 q = ctx.modulus();
    const u64 batch = (~u64{0} - q) / ((q - 1) * (q - 1));
    std::array<u64, K> binom{}, acc{};
    binom[0] = 1;
    u64 count = 0, a_mod_p = 0;
    for (u64 a = 0; a < pn; ++a) {
        if (in_region(a_mod_p, region)) {
            const u64 v = mu.ball_rep(n, a);
            for (unsigned j = 0; j < K; ++j) acc[j] += binom[j] * v;
            if (++count == batch) {
                for (auto& x : acc) x %= q;
                count = 0;
            }
        }
        for (unsigned j = K - 1; j >= 1; --j) {
            const u64 b = binom[j] + binom[j - 1];
            binom[j] = b >= q ? b - q : b;
        }
        if (++a_mod_p == p) a_mod_p = 0;
    }
    for (auto& x : acc) x %= q;
    return acc;
}

/// T_j = sum of C(a, j) mu(a + p^n Z_p) over a < p^n in the region, j < order.
template <ball_measure M>
std::vector<u64> binomial_sums(const M& mu, unsigned n, unsigned order, Region region) {
    const auto& ctx = mu.context();
    if (order == 0) return {};
    if (ctx.modulus() <= (u64{1} << 32)) {
        auto take = [order](const auto& full) { return std::vector<u64>(full.begin(), full.begin() + order); };
        if (order <= 4) return take(binomial_sums_fixed<4>(mu, n, region));
        if (order <= 8) return take(binomial_sums_fixed<8>(mu, n, region));
        if (order <= 16) return take(binomial_sums_fixed<16>(mu, n, region));
    }
    const u64 p = ctx.prime();
    const u64 pn = ctx.power_of_p(n);
    std::vector<u64> binom(order, 0), acc(order, 0);
    binom[0] = 1;
    u64 a_mod_p = 0;
    for (u64 a = 0; a < pn; ++a) {
        if (in_region(a_mod_p, region)) {
            const u64 v = mu.ball_rep(n, a);
            for (unsigned j = 0; j < order; ++j) acc[j] = ctx.add(acc[j], ctx.mul(binom[j], v));
        }
        for (unsigned j = order; j-- > 1;) binom[j] = ctx.add(binom[j], binom[j - 1]);
        if (++a_mod_p == p) a_mod_p = 0;
    }
    return acc;
}

}  // namespace detail

/// Riemann sums of x^{k-1} for k = 1..k_max in one pass; entry [k-1].
///
/// The pass accumulates T_j = sum_a C(a, j) mu(a), which needs only additions
/// per ball, and converts with a^e = sum_j S(e, j) j! C(a, j) (S = Stirling
/// numbers of the second kind). Both are integer identities, so the result
/// equals the direct power sums exactly.
template <ball_measure M>
std::vector<PadicInt> riemann_moments(const M& mu, unsigned k_max, unsigned n, Region region) {
    detail::require_level(mu, n);
    const auto& ctx = mu.context();
    const std::vector<u64> sums = detail::binomial_sums(mu, n, k_max, region);

    // stirling[j] = S(e, j) j! for the current exponent e
    std::vector<u64> stirling(k_max + 1, 0);
    stirling[0] = 1;
    std::vector<PadicInt> out;
    out.reserve(k_max);
    for (unsigned e = 0; e < k_max; ++e) {
        if (e > 0) {
            // S(e, j) j! = j (S(e-1, j) j! + S(e-1, j-1) (j-1)!)
            for (unsigned j = e; j >= 1; --j)
                stirling[j] = ctx.mul(ctx.reduce(u64{j}), ctx.add(stirling[j], stirling[j - 1]));
            stirling[0] = 0;
        }
        u64 sum = 0;
        for (unsigned j = 0; j <= e; ++j) sum = ctx.add(sum, ctx.mul(stirling[j], sums[j]));
        out.emplace_back(ctx, sum);
    }
    return out;
}

/// S_n = sum_a a^{k-1} mu(a + p^n Z_p), a over the residues of the region.
template <ball_measure M>
PadicInt riemann_moment(const M& mu, unsigned k, unsigned n, Region region = Region::zp) {
    if (k == 0) throw std::invalid_argument("riemann_moment needs k >= 1");
    detail::require_level(mu, n);
    const auto& ctx = mu.context();
    const u64 p = ctx.prime();
    const u64 pn = ctx.power_of_p(n);
    const u64 q = ctx.modulus();
    detail::lazy_dot acc(ctx.arith());
    u64 a_mod_q = 0, a_mod_p = 0;
    for (u64 a = 0; a < pn; ++a) {
        if (detail::in_region(a_mod_p, region)) acc.add(ctx.pow(a_mod_q, k - 1), mu.ball_rep(n, a));
        if (++a_mod_q == q) a_mod_q = 0;
        if (++a_mod_p == p) a_mod_p = 0;
    }
    return PadicInt(ctx, acc.value());
}

/// sum over unit residues a of [a]^s a^{-1} omega(a)^b mu(a + p^n Z_p).
template <ball_measure M>
PadicInt integrate_character(const M& mu, const PadicInt& s, u64 b, unsigned n) {
    detail::require_level(mu, n);
    const auto& ctx = mu.context();
    if (!(s.context() == ctx)) throw ContextMismatch("exponent and measure carry different (p, N)");
    const u64 p = ctx.prime();
    const u64 pn = ctx.power_of_p(n);
    const u64 q = ctx.modulus();
    const u64 order = p - 1;

    // [a]^s a^{-1} omega(a)^b = [a]^{s-1} omega(a)^{b-1}; [a]^t depends on t mod p^{N-1}.
    const u64 exp_mod = ctx.power_of_p(ctx.precision() - 1);
    const u64 e = exp_mod == 1 ? 0 : (s.truncated(ctx.precision() - 1) + exp_mod - 1) % exp_mod;
    const u64 char_exp = (b % order + order - 1) % order;

    const auto omega = teichmuller_table(ctx);
    std::vector<u64> omega_inv(p, 0), twist(p, 0);
    for (u64 r = 1; r < p; ++r) {
        omega_inv[r] = ctx.inverse(omega[r]);
        twist[r] = ctx.pow(omega[r], char_exp);
    }

    detail::lazy_dot acc(ctx.arith());
    u64 a_mod_q = 0, a_mod_p = 0;
    for (u64 a = 0; a < pn; ++a) {
        if (a_mod_p != 0) {
            const u64 principal = ctx.mul(a_mod_q, omega_inv[a_mod_p]);
            acc.add(ctx.mul(ctx.pow(principal, e), twist[a_mod_p]), mu.ball_rep(n, a));
        }
        if (++a_mod_q == q) a_mod_q = 0;
        if (++a_mod_p == p) a_mod_p = 0;
    }
    return PadicInt(ctx, acc.value());
}

/// The Riemann sum for either integrand family at level n.
template <ball_measure M>
PadicInt riemann_sum(const M& mu, const IntegrandSpec& spec, unsigned n) {
    return std::visit(
        [&](const auto& f) -> PadicInt {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, PowerIntegrand>)
                return riemann_moment(mu, f.k, n, f.region);
            else
                return integrate_character(mu, f.s, f.b, n);
        },
        spec);
}

/// Evaluates at levels target and target + 1, requires agreement mod
/// p^target, and returns the finer value certified to target digits.
///
/// The constant integrand (k = 1) has exact Riemann sums from level 0 on Z_p
/// (level 1 on the units or p Z_p); its two levels must agree exactly and
/// the result is certified to all N digits.
template <ball_measure M>
CertifiedValue integrate_adaptive(const M& mu, const IntegrandSpec& spec, unsigned target_digits) {
    const auto& ctx = mu.context();
    if (target_digits > ctx.precision())
        throw LevelExceedsMeasure("target of " + std::to_string(target_digits) + " digits exceeds precision " +
                                  std::to_string(ctx.precision()));
    if (target_digits > mu.max_level())
        throw LevelExceedsMeasure("target of " + std::to_string(target_digits) + " digits exceeds max_level " +
                                  std::to_string(mu.max_level()));

    const auto* power = std::get_if<PowerIntegrand>(&spec);
    if (power && power->k == 1) {
        const unsigned base = power->region == Region::zp ? 0 : 1;
        if (base + 1 > mu.max_level())
            throw StabilityCheckFailed("max_level " + std::to_string(mu.max_level()) +
                                       " leaves no second level to compare");
        PadicInt coarse = riemann_sum(mu, spec, base);
        PadicInt fine = riemann_sum(mu, spec, base + 1);
        if (!(coarse == fine))
            throw StabilityCheckFailed("total mass differs between levels " + std::to_string(base) + " and " +
                                       std::to_string(base + 1));
        return {fine, ctx.precision(), base + 1};
    }

    const unsigned n = target_digits;
    if (n + 1 > mu.max_level())
        throw StabilityCheckFailed("max_level " + std::to_string(mu.max_level()) +
                                   " leaves no level above " + std::to_string(n) + " to compare");
    PadicInt coarse = riemann_sum(mu, spec, n);
    PadicInt fine = riemann_sum(mu, spec, n + 1);
    if (!congruent(coarse, fine, target_digits))
        throw StabilityCheckFailed("levels " + std::to_string(n) + " and " + std::to_string(n + 1) +
                                   " disagree mod p^" + std::to_string(target_digits));
    return {fine, target_digits, n + 1};
}

}  // namespace padicmeasure
