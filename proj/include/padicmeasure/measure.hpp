#pragma once

// Measures on Z_p, represented by their values on the balls a + p^n Z_p for
// 0 <= a < p^n and n up to a declared max_level. Every measure here is
// Z_p-valued and satisfies the distribution relation
//
//   sum_{b<p} mu(a + b p^n + p^{n+1} Z_p) = mu(a + p^n Z_p)
//
// exactly in Z/p^N.
//
// Concrete measure types are plain value types modelling `ball_measure`;
// the algorithms in integrate.hpp and iwasawa.hpp are templates over that
// concept. `Measure` type-erases any of them when the kind is only known at
// run time.

#include <algorithm>
#include <concepts>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padicmeasure/digits.hpp"
#include "padicmeasure/padic.hpp"
#include "padicmeasure/rational.hpp"

namespace padicmeasure {

/// ball_rep(n, a) is the unchecked ball value: callers guarantee
/// n <= max_level() and a < p^n.
template <class M>
concept ball_measure = requires(const M& m, unsigned n, u64 a) {
    { m.context() } -> std::convertible_to<const PadicContext&>;
    { m.max_level() } -> std::convertible_to<unsigned>;
    { m.ball_rep(n, a) } -> std::convertible_to<u64>;
};

inline unsigned default_max_level(const PadicContext& ctx) {
    return std::min(ctx.precision() + 4, ctx.max_level());
}

/// mu(a + p^n Z_p) with bounds checking.
template <ball_measure M>
PadicInt ball(const M& mu, unsigned n, u64 a) {
    if (n > mu.max_level())
        throw LevelExceedsMeasure("level " + std::to_string(n) + " exceeds max_level " +
                                  std::to_string(mu.max_level()));
    if (a >= mu.context().power_of_p(n))
        throw BallIndexOutOfRange("a = " + std::to_string(a) + " is not below p^" + std::to_string(n));
    return PadicInt(mu.context(), mu.ball_rep(n, a));
}

namespace detail {

/// p^n moduli for levels 0..max_level.
inline std::vector<modulus> level_moduli(const PadicContext& ctx, unsigned max_level) {
    std::vector<modulus> out;
    out.reserve(max_level + 1);
    for (unsigned n = 0; n <= max_level; ++n) out.emplace_back(ctx.power_of_p(n));
    return out;
}

/// x^{-1} mod p^n for levels 0..max_level, from an integer lift x.
inline std::vector<u64> level_inverses(const PadicContext& ctx, u64 x, unsigned max_level) {
    std::vector<u64> out;
    out.reserve(max_level + 1);
    for (unsigned n = 0; n <= max_level; ++n) {
        const u64 pn = ctx.power_of_p(n);
        out.push_back(*inverse_mod(x % pn, pn));
    }
    return out;
}

inline void check_level(const PadicContext& ctx, unsigned max_level) {
    if (max_level > ctx.max_level())
        throw LevelExceedsMeasure("max_level " + std::to_string(max_level) + " exceeds the indexable range " +
                                  std::to_string(ctx.max_level()));
}

}  // namespace detail

/// A unit c in Z_p^x used to rescale measures. Ball formulas use the
/// canonical integer lift of c (its representative in [1, p^N)), which makes
/// every derived measure exact at all levels.
class UnitScaling {
public:
    explicit UnitScaling(const PadicUnit& c) : c_(c) {}
    UnitScaling(const PadicContext& ctx, i64 c) : c_(ctx, c) {}

    const PadicUnit& value() const noexcept { return c_; }
    const PadicContext& context() const noexcept { return c_.context(); }
    u64 lift() const noexcept { return c_.rep(); }
    Rational as_rational() const { return Rational(static_cast<i64>(c_.rep())); }

    /// c^{p-1} = 1 in Z/p^N, the computable test for c in mu_{p-1}.
    bool is_root_of_unity() const {
        return c_.value().pow(context().prime() - 1) == PadicInt(context(), 1);
    }

    void require_not_root_of_unity() const {
        if (is_root_of_unity())
            throw ScalingIsRootOfUnity("c = " + std::to_string(lift()) + " satisfies c^(p-1) = 1 mod p^N");
    }

private:
    PadicUnit c_;
};

/// mu(i/m)(a + p^n Z_p) = [i p^{-n}]_m / m + delta_n(a).
class FractionMeasure {
public:
    FractionMeasure(const PadicContext& ctx, FractionClass f)
        : FractionMeasure(ctx, std::move(f), default_max_level(ctx)) {}

    FractionMeasure(const PadicContext& ctx, FractionClass f, unsigned max_level)
        : ctx_(ctx), f_(std::move(f)), max_level_(max_level) {
        if (f_.prime() != ctx.prime()) throw ContextMismatch("fraction class and context use different p");
        detail::check_level(ctx, max_level);
        const u64 m_inv = from_rational(1, static_cast<i64>(f_.denominator()), ctx).rep();
        base_.reserve(max_level + 1);
        tau_.reserve(max_level + 1);
        for (unsigned n = 0; n <= max_level; ++n) {
            base_.push_back(ctx.mul(ctx.reduce(f_.shifted_numerator(n)), m_inv));
            tau_.push_back(f_.threshold(n));
        }
    }

    const PadicContext& context() const noexcept { return ctx_; }
    unsigned max_level() const noexcept { return max_level_; }
    const FractionClass& fraction() const noexcept { return f_; }

    u64 ball_rep(unsigned n, u64 a) const noexcept {
        return a >= tau_[n] ? ctx_.sub(base_[n], 1) : base_[n];
    }

    /// The exact rational ball value.
    Rational ball_rational(unsigned n, u64 a) const {
        return Rational(bigint(f_.shifted_numerator(n)), bigint(f_.denominator())) +
               Rational(f_.delta(n, a));
    }

private:
    PadicContext ctx_;
    FractionClass f_;
    unsigned max_level_;
    std::vector<u64> base_;
    std::vector<u64> tau_;
};

/// The Bernoulli measure
///   E_{1,c}(a + p^n Z_p) = a/p^n - c <c^{-1} a / p^n> + (c - 1)/2,
/// with <.> the fractional part taken at level n. Its total mass is (c-1)/2
/// and its moments are int x^{k-1} dE_{1,c} = (1 - c^k) B_k / k.
class BernoulliMeasure {
public:
    explicit BernoulliMeasure(const UnitScaling& c) : BernoulliMeasure(c, default_max_level(c.context())) {}

    BernoulliMeasure(const UnitScaling& c, unsigned max_level)
        : ctx_(c.context()), c_(c.lift()), max_level_(max_level) {
        detail::check_level(ctx_, max_level);
        mod_ = detail::level_moduli(ctx_, max_level);
        c_inv_ = detail::level_inverses(ctx_, c_, max_level);
        half_c_minus_1_ = from_rational(1, 2, ctx_).rep();
        half_c_minus_1_ = ctx_.mul(half_c_minus_1_, ctx_.sub(c_, 1));
    }

    const PadicContext& context() const noexcept { return ctx_; }
    unsigned max_level() const noexcept { return max_level_; }
    u64 scaling() const noexcept { return c_; }

    u64 ball_rep(unsigned n, u64 a) const noexcept {
        const u64 pn = mod_[n].value();
        const u64 b = mod_[n].mul(c_inv_[n], a);
        // c b = a mod p^n with c b >= a, so (a - c b) / p^n is an integer in (-c, 0].
        i64 quotient;
        if (b == 0) {
            quotient = static_cast<i64>(a / pn);
        } else if (c_ <= (u64{1} << 63) / pn) {
            quotient = -static_cast<i64>((c_ * b - a) / pn);
        } else {
            quotient = static_cast<i64>((static_cast<i128>(a) - static_cast<i128>(c_) * b) / pn);
        }
        return ctx_.add(ctx_.reduce_signed(quotient), half_c_minus_1_);
    }

    Rational ball_rational(unsigned n, u64 a) const {
        const u64 pn = mod_[n].value();
        const u64 b = mod_[n].mul(c_inv_[n], a);
        return Rational(bigint(a) - bigint(c_) * b, bigint(pn)) +
               Rational(bigint(c_) - 1, bigint(2));
    }

private:
    PadicContext ctx_;
    u64 c_;
    unsigned max_level_;
    std::vector<detail::modulus> mod_;
    std::vector<u64> c_inv_;
    u64 half_c_minus_1_ = 0;
};

/// (alpha . mu)(a + p^n Z_p) = alpha mu(alpha^{-1} a + p^n Z_p), so that
/// int f d(alpha . mu) = alpha int f(alpha x) dmu.
template <ball_measure M>
class UnitAction {
public:
    UnitAction(const PadicUnit& alpha, M inner)
        : inner_(std::move(inner)), alpha_(alpha.rep()), max_level_(inner_.max_level()) {
        if (!(alpha.context() == inner_.context())) throw ContextMismatch("unit and measure contexts differ");
        mod_ = detail::level_moduli(inner_.context(), max_level_);
        alpha_inv_ = detail::level_inverses(inner_.context(), alpha_, max_level_);
    }

    const PadicContext& context() const noexcept { return inner_.context(); }
    unsigned max_level() const noexcept { return max_level_; }
    const M& inner() const noexcept { return inner_; }

    u64 ball_rep(unsigned n, u64 a) const noexcept {
        return inner_.context().mul(alpha_, inner_.ball_rep(n, mod_[n].mul(alpha_inv_[n], a)));
    }

private:
    M inner_;
    u64 alpha_;
    unsigned max_level_;
    std::vector<detail::modulus> mod_;
    std::vector<u64> alpha_inv_;
};

/// coeff_a * A + coeff_b * B, ball by ball.
template <ball_measure A, ball_measure B>
class LinearCombination {
public:
    LinearCombination(const PadicInt& coeff_a, A a, const PadicInt& coeff_b, B b)
        : a_(std::move(a)), b_(std::move(b)), ca_(coeff_a.rep()), cb_(coeff_b.rep()) {
        if (!(a_.context() == b_.context()) || !(coeff_a.context() == a_.context()) ||
            !(coeff_b.context() == a_.context()))
            throw ContextMismatch("linear combination of measures over different contexts");
        max_level_ = std::min<unsigned>(a_.max_level(), b_.max_level());
    }

    const PadicContext& context() const noexcept { return a_.context(); }
    unsigned max_level() const noexcept { return max_level_; }
    const A& first() const noexcept { return a_; }
    const B& second() const noexcept { return b_; }

    u64 ball_rep(unsigned n, u64 a) const noexcept {
        const auto& ctx = a_.context();
        return ctx.add(ctx.mul(ca_, a_.ball_rep(n, a)), ctx.mul(cb_, b_.ball_rep(n, a)));
    }

private:
    A a_;
    B b_;
    u64 ca_, cb_;
    unsigned max_level_ = 0;
};

using MuCMeasure = LinearCombination<FractionMeasure, UnitAction<FractionMeasure>>;
using CombinedMeasure = LinearCombination<BernoulliMeasure, MuCMeasure>;

template <ball_measure M>
using ParityPart = LinearCombination<M, UnitAction<M>>;

inline FractionMeasure mu_frac(const PadicContext& ctx, const FractionClass& f) {
    return FractionMeasure(ctx, f);
}
inline FractionMeasure mu_frac(const PadicContext& ctx, const FractionClass& f, unsigned max_level) {
    return FractionMeasure(ctx, f, max_level);
}

inline BernoulliMeasure bernoulli_measure(const UnitScaling& c) { return BernoulliMeasure(c); }
inline BernoulliMeasure bernoulli_measure(const UnitScaling& c, unsigned max_level) {
    return BernoulliMeasure(c, max_level);
}

template <ball_measure M>
UnitAction<M> act_unit(const PadicUnit& alpha, M mu) {
    return UnitAction<M>(alpha, std::move(mu));
}

/// iota: the action of -1.
template <ball_measure M>
UnitAction<M> iota(M mu) {
    PadicUnit minus_one(mu.context(), -1);
    return UnitAction<M>(minus_one, std::move(mu));
}

/// (mu^+, mu^-) with mu^{+-} = (mu +- iota(mu)) / 2.
template <ball_measure M>
std::pair<ParityPart<M>, ParityPart<M>> parity_parts(const M& mu) {
    const auto& ctx = mu.context();
    const PadicInt half = from_rational(1, 2, ctx);
    return {ParityPart<M>(half, mu, half, iota(mu)), ParityPart<M>(half, mu, -half, iota(mu))};
}

/// mu_c(i/m) = mu(i/m) - c mu(i/m) o c^{-1}; c must not be a (p-1)-st root of unity.
inline MuCMeasure mu_c_frac(const FractionClass& f, const UnitScaling& c, unsigned max_level) {
    c.require_not_root_of_unity();
    const auto& ctx = c.context();
    FractionMeasure mu(ctx, f, max_level);
    return MuCMeasure(PadicInt(ctx, 1), mu, PadicInt::from_int(ctx, -1), act_unit(c.value(), mu));
}
inline MuCMeasure mu_c_frac(const FractionClass& f, const UnitScaling& c) {
    return mu_c_frac(f, c, default_max_level(c.context()));
}

/// E_{1,c} + mu_c(i/m).
inline CombinedMeasure combined_measure(const FractionClass& f, const UnitScaling& c, unsigned max_level) {
    const auto& ctx = c.context();
    return CombinedMeasure(PadicInt(ctx, 1), BernoulliMeasure(c, max_level), PadicInt(ctx, 1),
                           mu_c_frac(f, c, max_level));
}
inline CombinedMeasure combined_measure(const FractionClass& f, const UnitScaling& c) {
    return combined_measure(f, c, default_max_level(c.context()));
}

/// Exact rational ball value of mu_c(i/m) (integer lift of c).
inline Rational mu_c_ball_rational(const FractionMeasure& mu, const UnitScaling& c, unsigned n, u64 a) {
    const u64 pn = mu.context().power_of_p(n);
    const u64 c_inv = *detail::inverse_mod(c.lift() % pn, pn);
    const u64 moved = static_cast<u64>(static_cast<u128>(c_inv) * a % pn);
    return mu.ball_rational(n, a) - c.as_rational() * mu.ball_rational(n, moved);
}

/// Type-erased measure, for measures chosen at run time (CLI, fault injection).
class Measure {
public:
    using ball_function = std::function<u64(unsigned, u64)>;

    template <ball_measure M>
        requires(!std::same_as<std::remove_cvref_t<M>, Measure>)
    Measure(M mu)  // NOLINT: implicit erasure is the point
        : self_(std::make_shared<model<M>>(std::move(mu))) {}

    /// A measure given directly by a ball function; no distribution check is
    /// made here (see check_distribution).
    Measure(const PadicContext& ctx, unsigned max_level, ball_function f)
        : self_(std::make_shared<function_model>(ctx, max_level, std::move(f))) {}

    const PadicContext& context() const noexcept { return self_->context(); }
    unsigned max_level() const noexcept { return self_->max_level(); }
    u64 ball_rep(unsigned n, u64 a) const { return self_->ball_rep(n, a); }

private:
    struct concept_base {
        virtual ~concept_base() = default;
        virtual const PadicContext& context() const noexcept = 0;
        virtual unsigned max_level() const noexcept = 0;
        virtual u64 ball_rep(unsigned n, u64 a) const = 0;
    };

    template <class M>
    struct model final : concept_base {
        explicit model(M m) : mu(std::move(m)) {}
        const PadicContext& context() const noexcept override { return mu.context(); }
        unsigned max_level() const noexcept override { return mu.max_level(); }
        u64 ball_rep(unsigned n, u64 a) const override { return mu.ball_rep(n, a); }
        M mu;
    };

    struct function_model final : concept_base {
        function_model(const PadicContext& c, unsigned l, ball_function f)
            : ctx(c), level(l), fn(std::move(f)) {}
        const PadicContext& context() const noexcept override { return ctx; }
        unsigned max_level() const noexcept override { return level; }
        u64 ball_rep(unsigned n, u64 a) const override { return ctx.reduce(fn(n, a)); }
        PadicContext ctx;
        unsigned level;
        ball_function fn;
    };

    std::shared_ptr<const concept_base> self_;
};

struct DistributionViolation {
    unsigned level;  // parent level n
    u64 a;           // parent ball a + p^n Z_p
    u64 parent;      // mu(a + p^n Z_p)
    u64 children;    // sum over the p child balls
};

struct DistributionReport {
    bool ok = true;
    unsigned up_to_level = 0;
    std::optional<DistributionViolation> violation;
};

/// Checks sum_b mu(a + b p^n + p^{n+1} Z_p) = mu(a + p^n Z_p) for every ball at
/// every level n <= up_to_level; stops at the first violation.
template <ball_measure M>
DistributionReport check_distribution(const M& mu, unsigned up_to_level) {
    if (up_to_level >= mu.max_level())
        throw LevelExceedsMeasure("check_distribution needs up_to_level < max_level (" +
                                  std::to_string(mu.max_level()) + ")");
    const auto& ctx = mu.context();
    const u64 p = ctx.prime();
    DistributionReport report;
    report.up_to_level = up_to_level;
    u64 pn = 1;
    for (unsigned n = 0; n <= up_to_level; ++n, pn *= p) {
        for (u64 a = 0; a < pn; ++a) {
            u64 sum = 0;
            for (u64 b = 0; b < p; ++b) sum = ctx.add(sum, mu.ball_rep(n + 1, a + b * pn));
            const u64 parent = mu.ball_rep(n, a);
            if (sum != parent) {
                report.ok = false;
                report.violation = DistributionViolation{n, a, parent, sum};
                return report;
            }
        }
    }
    return report;
}

/// First ball (n, a) with mu(a + p^n Z_p) != mu(p a + p^{n+1} Z_p), n <= up_to_level.
/// E_{1,c} has none.
template <ball_measure M>
std::optional<std::pair<unsigned, u64>> first_periodicity_violation(const M& mu, unsigned up_to_level) {
    if (up_to_level >= mu.max_level())
        throw LevelExceedsMeasure("periodicity check needs up_to_level < max_level");
    const u64 p = mu.context().prime();
    u64 pn = 1;
    for (unsigned n = 0; n <= up_to_level; ++n, pn *= p)
        for (u64 a = 0; a < pn; ++a)
            if (mu.ball_rep(n, a) != mu.ball_rep(n + 1, p * a)) return std::pair{n, a};
    return std::nullopt;
}

}  // namespace padicmeasure
