#pragma once

// Residue-digit machinery for a fraction i/m with p not dividing m.
//
//   r_n   = [i p^{-n}]_m, the shifted numerators, 0 <= r_n < m
//   k_n   = the base-p digits of -i/m, from p r_{n+1} = r_n + k_n m
//   tau_n = 1 + sum_{a<n} (p-1-k_a) p^a, the threshold at which the
//           correction delta_n switches from 0 to -1
//
// All quantities up to the cache level are filled at construction, so a
// FractionClass is immutable and safe to share.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "padicmeasure/error.hpp"
#include "padicmeasure/padic.hpp"

namespace padicmeasure {

/// [a/b]_m: the r in [0, m) with b r = a (mod m).
inline u64 residue_class(i64 a, i64 b, u64 m) {
    if (m == 0) throw NotCoprime("modulus must be positive");
    const u64 bm = detail::reduce_signed(b, m);
    auto inv = detail::inverse_mod(bm, m);
    if (!inv)
        throw NotCoprime("gcd(" + std::to_string(b) + ", " + std::to_string(m) + ") != 1");
    return static_cast<u64>(static_cast<u128>(detail::reduce_signed(a, m)) * *inv % m);
}

enum class Sign { plus, minus };

class FractionClass {
public:
    static constexpr unsigned default_cache_levels = 24;

    FractionClass(u64 p, u64 m, u64 i, unsigned cache_levels = default_cache_levels)
        : p_(p), m_(m), i_(i) {
        if (!detail::is_prime(p) || p == 2)
            throw InvalidFractionClass("p = " + std::to_string(p) + " must be an odd prime");
        if (m < 2) throw InvalidFractionClass("m must be at least 2");
        if (m % p == 0)
            throw InvalidFractionClass("p = " + std::to_string(p) + " divides m = " + std::to_string(m));
        if (i == 0 || i >= m)
            throw InvalidFractionClass("need 0 < i < m, got i = " + std::to_string(i));
        p_inv_ = *detail::inverse_mod(p % m, m);

        levels_ = std::min(cache_levels, detail::max_exponent(p));
        r_.resize(levels_ + 1);
        k_.resize(levels_);
        tau_.resize(levels_ + 1);
        r_[0] = i;
        tau_[0] = 1;
        u64 pw = 1;
        for (unsigned n = 0; n < levels_; ++n) {
            r_[n + 1] = next_numerator(r_[n]);
            k_[n] = digit_from(r_[n], r_[n + 1]);
            tau_[n + 1] = tau_[n] + (p_ - 1 - k_[n]) * pw;
            pw *= p_;
        }
    }

    u64 prime() const noexcept { return p_; }
    u64 denominator() const noexcept { return m_; }
    u64 numerator() const noexcept { return i_; }
    /// Level up to which r_n, k_n, tau_n are tabulated.
    unsigned cached_levels() const noexcept { return levels_; }

    /// r_n = [i p^{-n}]_m
    u64 shifted_numerator(unsigned n) const {
        if (n <= levels_) return r_[n];
        u64 r = r_[levels_];
        for (unsigned j = levels_; j < n; ++j) r = next_numerator(r);
        return r;
    }

    /// k_r, the r-th base-p digit of -i/m.
    u64 digit(unsigned r) const {
        if (r < levels_) return k_[r];
        return digit_from(shifted_numerator(r), shifted_numerator(r + 1));
    }

    /// tau_n = 1 + sum_{a<n} (p-1-k_a) p^a; lies in [1, p^n] and is = i/m mod p^n.
    u64 threshold(unsigned n) const {
        if (n <= levels_) return tau_[n];
        throw LevelExceedsMeasure("threshold level " + std::to_string(n) +
                                  " exceeds the indexable range for p = " + std::to_string(p_));
    }

    /// delta_n(a): -1 when a >= tau_n, else 0.
    int delta(unsigned n, u64 a) const {
        const u64 tau = threshold(n);
        if (a >= *detail::checked_pow(p_, n))
            throw BallIndexOutOfRange("a = " + std::to_string(a) + " is not below p^" + std::to_string(n));
        return a >= tau ? -1 : 0;
    }

    /// v_n(+i/m) or v_n(-i/m): the truncation of +-i/m to its digits 0..n,
    /// a number in [0, p^{n+1}).
    u64 truncation_v(unsigned n, Sign sign) const {
        const u64 pn1 = detail::checked_pow(p_, n + 1).value_or(0);
        if (pn1 == 0 || n + 1 > levels_)
            throw LevelExceedsMeasure("truncation level " + std::to_string(n) + " out of range");
        if (sign == Sign::plus) return tau_[n + 1] % pn1;
        u64 v = 0, pw = 1;
        for (unsigned a = 0; a <= n; ++a) {
            v += k_[a] * pw;
            pw *= p_;
        }
        return v;
    }

    /// Multiplicative order of p modulo m; the digit sequence has this period.
    unsigned period() const noexcept {
        unsigned ord = 1;
        u64 x = p_ % m_;
        while (x != 1 % m_) {
            x = static_cast<u64>(static_cast<u128>(x) * p_ % m_);
            ++ord;
        }
        return ord;
    }

    std::string to_string() const {
        return std::to_string(i_) + "/" + std::to_string(m_) + " (p = " + std::to_string(p_) + ")";
    }

    bool operator==(const FractionClass& o) const noexcept {
        return p_ == o.p_ && m_ == o.m_ && i_ == o.i_;
    }

private:
    u64 next_numerator(u64 r) const noexcept {
        return static_cast<u64>(static_cast<u128>(r) * p_inv_ % m_);
    }
    u64 digit_from(u64 r_n, u64 r_next) const noexcept {
        return static_cast<u64>((static_cast<u128>(p_) * r_next - r_n) / m_);
    }

    u64 p_, m_, i_;
    u64 p_inv_ = 0;
    unsigned levels_ = 0;
    std::vector<u64> r_, k_, tau_;
};

}  // namespace padicmeasure
