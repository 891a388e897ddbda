#pragma once

// Exact Bernoulli numbers and polynomials, and the closed-form moment
// formulas they feed.
//
// Convention: t e^{xt} / (e^t - 1) = sum B_k(x) t^k / k!, so B_1 = -1/2 and
// B_1(x) = x - 1/2. With this choice (B_k(x) - B_k)/k = sum_{0<=a<x} a^{k-1}
// for integer x, which is what the k = 1 moment identities need.
//
// Individual B_k may have p in the denominator; only the combined
// closed forms below are p-integral, so reduce() is applied to those and
// never to a bare B_k.

#include <vector>

#include "padicmeasure/digits.hpp"
#include "padicmeasure/rational.hpp"
#include "padicmeasure/region.hpp"

namespace padicmeasure {

inline bigint binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    bigint r = 1;
    for (unsigned j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

/// B_0..B_K from sum_{j=0}^{k} C(k+1, j) B_j = 0.
class BernoulliTable {
public:
    explicit BernoulliTable(unsigned max_index) : values_(max_index + 1) {
        values_[0] = Rational(1);
        for (unsigned k = 1; k <= max_index; ++k) {
            Rational s;
            for (unsigned j = 0; j < k; ++j) s += Rational(binomial(k + 1, j), 1) * values_[j];
            values_[k] = -s / Rational(bigint(k + 1), 1);
        }
    }

    unsigned max_index() const noexcept { return static_cast<unsigned>(values_.size() - 1); }
    const Rational& operator[](unsigned k) const { return values_.at(k); }

private:
    std::vector<Rational> values_;
};

namespace detail {
inline const BernoulliTable& shared_bernoulli_table() {
    static const BernoulliTable table(64);
    return table;
}
}  // namespace detail

inline Rational bernoulli_number(unsigned k) {
    const auto& t = detail::shared_bernoulli_table();
    if (k <= t.max_index()) return t[k];
    return BernoulliTable(k)[k];
}

/// B_k(q) = sum_j C(k, j) B_j q^{k-j}
inline Rational bernoulli_poly_eval(unsigned k, const Rational& q) {
    Rational s;
    Rational qpow(1);  // q^{k-j}, built from j = k downwards
    for (unsigned j = k + 1; j-- > 0;) {
        s += Rational(binomial(k, j), 1) * bernoulli_number(j) * qpow;
        qpow *= q;
    }
    return s;
}

/// The moment of x^{k-1} against mu(i/m) over the given region:
///   zp:    (B_k(i/m) - B_k) / k
///   units: the zp value minus p^{k-1} (B_k([i p^{-1}]_m / m) - B_k) / k
///   multiples_of_p: that subtracted p^{k-1} term alone
inline Rational moment_closed_form(const FractionClass& f, unsigned k, Region region) {
    if (k == 0) throw std::invalid_argument("moment_closed_form needs k >= 1");
    const Rational m(static_cast<i64>(f.denominator()));
    const Rational x(static_cast<i64>(f.numerator()));
    const Rational x1(static_cast<i64>(f.shifted_numerator(1)));
    const Rational bk = bernoulli_number(k);
    const Rational kk(static_cast<i64>(k));
    const Rational whole = (bernoulli_poly_eval(k, x / m) - bk) / kk;
    const Rational pk = Rational(static_cast<i64>(f.prime())).pow(k - 1);
    const Rational inner = pk * (bernoulli_poly_eval(k, x1 / m) - bk) / kk;
    switch (region) {
        case Region::zp: return whole;
        case Region::units: return whole - inner;
        case Region::multiples_of_p: return inner;
    }
    return whole;
}

/// B_k(i/m)/k - p^{k-1} B_k([i p^{-1}]_m / m)/k, the value at s = k of the
/// normalized L-function built from the combined measure.
inline Rational l_value_closed_form(const FractionClass& f, unsigned k) {
    const Rational m(static_cast<i64>(f.denominator()));
    const Rational kk(static_cast<i64>(k));
    const Rational pk = Rational(static_cast<i64>(f.prime())).pow(k - 1);
    return bernoulli_poly_eval(k, Rational(static_cast<i64>(f.numerator())) / m) / kk -
           pk * bernoulli_poly_eval(k, Rational(static_cast<i64>(f.shifted_numerator(1))) / m) / kk;
}

/// Moment of x^{k-1} against the Bernoulli measure E_{1,c}:
/// (1 - c^k) B_k / k over Z_p, times (1 - p^{k-1}) over the units.
inline Rational bernoulli_measure_moment_closed_form(const Rational& c, unsigned k, u64 p, Region region) {
    const Rational base = (Rational(1) - c.pow(k)) * bernoulli_number(k) / Rational(static_cast<i64>(k));
    const Rational pk = Rational(static_cast<i64>(p)).pow(k - 1);
    switch (region) {
        case Region::zp: return base;
        case Region::units: return (Rational(1) - pk) * base;
        case Region::multiples_of_p: return pk * base;
    }
    return base;
}

/// Moment of x^{k-1} against mu_c(i/m) = mu(i/m) - c mu(i/m) o c^{-1}.
inline Rational mu_c_moment_closed_form(const FractionClass& f, const Rational& c, unsigned k, Region region) {
    return (Rational(1) - c.pow(k)) * moment_closed_form(f, k, region);
}

/// Moment of x^{k-1} against E_{1,c} + mu_c(i/m); over Z_p this is
/// (1 - c^k) B_k(i/m) / k.
inline Rational combined_moment_closed_form(const FractionClass& f, const Rational& c, unsigned k,
                                            Region region) {
    return bernoulli_measure_moment_closed_form(c, k, f.prime(), region) +
           mu_c_moment_closed_form(f, c, k, region);
}

}  // namespace padicmeasure
