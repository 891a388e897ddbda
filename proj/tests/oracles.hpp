#pragma once

// Test-side reference computations. They use only exact big-integer
// arithmetic and brute force, and none of the library's own algorithms, so a
// bug in the library cannot cancel against the same bug here.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using big = boost::multiprecision::cpp_int;
using std::uint64_t;

struct Frac {
    big num, den;  // den > 0, reduced
};

inline big gcd(big a, big b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        big t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline Frac make(big n, big d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    big g = gcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return {n, d};
}

inline Frac add(const Frac& a, const Frac& b) { return make(a.num * b.den + b.num * a.den, a.den * b.den); }
inline Frac sub(const Frac& a, const Frac& b) { return make(a.num * b.den - b.num * a.den, a.den * b.den); }
inline Frac mul(const Frac& a, const Frac& b) { return make(a.num * b.num, a.den * b.den); }
inline Frac div(const Frac& a, const Frac& b) { return make(a.num * b.den, a.den * b.num); }
inline bool equal(const Frac& a, const Frac& b) { return a.num == b.num && a.den == b.den; }

inline uint64_t ipow(uint64_t p, unsigned n) {
    uint64_t r = 1;
    while (n--) r *= p;
    return r;
}

inline uint64_t mod_of(const big& x, uint64_t q) {
    big r = x % q;
    if (r < 0) r += q;
    return static_cast<uint64_t>(r);
}

/// Inverse of d mod q by exhaustive search; q is kept small by callers.
inline std::optional<uint64_t> brute_inverse(uint64_t d, uint64_t q) {
    d %= q;
    for (uint64_t x = 1; x < q; ++x)
        if (static_cast<unsigned __int128>(d) * x % q == 1) return x;
    if (q == 1) return 0;
    return std::nullopt;
}

/// Inverse via the extended Euclidean algorithm on big integers.
inline big inverse_big(big a, const big& q) {
    a %= q;
    if (a < 0) a += q;
    big r0 = q, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        big t = r0 / r1;
        big r2 = r0 - t * r1;
        r0 = r1;
        r1 = r2;
        big s2 = s0 - t * s1;
        s0 = s1;
        s1 = s2;
    }
    s0 %= q;
    if (s0 < 0) s0 += q;
    return s0;
}

/// num/den mod q for den prime to q.
inline uint64_t frac_mod(const Frac& f, uint64_t q) {
    return mod_of(f.num * inverse_big(f.den, q), q);
}

inline uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t q) {
    big r = 1, b = a % q;
    while (e) {
        if (e & 1) r = r * b % q;
        b = b * b % q;
        e >>= 1;
    }
    return static_cast<uint64_t>(r);
}

/// Bernoulli numbers with B_1 = -1/2 by the Akiyama-Tanigawa algorithm,
/// which produces B_1 = +1/2; the sign is flipped afterwards.
inline std::vector<Frac> bernoulli_akiyama_tanigawa(unsigned n_max) {
    std::vector<Frac> out;
    std::vector<Frac> a(n_max + 1);
    for (unsigned m = 0; m <= n_max; ++m) {
        a[m] = make(1, m + 1);
        for (unsigned j = m; j >= 1; --j) a[j - 1] = mul(make(j, 1), sub(a[j - 1], a[j]));
        out.push_back(a[0]);
    }
    if (n_max >= 1) out[1] = make(-1, 2);
    return out;
}

/// B_k(x) = sum_j C(k, j) B_j x^{k-j}.
inline Frac bernoulli_poly(unsigned k, const Frac& x, const std::vector<Frac>& b) {
    Frac s = make(0, 1);
    big binom = 1;
    for (unsigned j = 0; j <= k; ++j) {
        Frac xp = make(1, 1);
        for (unsigned t = 0; t < k - j; ++t) xp = mul(xp, x);
        s = add(s, mul(mul(make(binom, 1), b[j]), xp));
        binom = binom * (k - j) / (j + 1);
    }
    return s;
}

/// The Teichmuller representative of a mod p^N found by searching the
/// residues = a mod p for a (p-1)-st root of unity.
inline uint64_t teichmuller_search(uint64_t a, uint64_t p, unsigned n) {
    const uint64_t q = ipow(p, n);
    for (uint64_t x = a % p; x < q; x += p)
        if (pow_mod(x, p - 1, q) == 1) return x;
    return 0;
}

/// Deterministic generator for property tests.
inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20240611);
    return g;
}

inline uint64_t uniform(uint64_t lo, uint64_t hi) {
    return std::uniform_int_distribution<uint64_t>(lo, hi)(rng());
}

}  // namespace oracle
