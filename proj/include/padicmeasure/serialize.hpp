#pragma once

// JSON and text encodings of p-adic values, rationals and power series.
//
// A p-adic value is {"p": 5, "precision": 2, "rep": "7", "digits": [2, 1]}
// (digits little-endian, rep as a decimal string so 62-bit values survive
// JSON readers that use doubles). The compact text form is "7 mod 5^2".

#include <charconv>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "padicmeasure/iwasawa.hpp"
#include "padicmeasure/padic.hpp"
#include "padicmeasure/rational.hpp"

namespace padicmeasure {

using json = nlohmann::ordered_json;

namespace detail {
inline u64 parse_u64(std::string_view text, const char* what) {
    u64 v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw std::invalid_argument(std::string("bad ") + what + ": '" + std::string(text) + "'");
    return v;
}
}  // namespace detail

inline json to_json(const PadicInt& x) {
    return json{{"p", x.context().prime()},
                {"precision", x.context().precision()},
                {"rep", std::to_string(x.rep())},
                {"digits", x.digits()}};
}

/// Inverse of to_json; "digits" is optional but must match "rep" when given.
inline PadicInt padic_from_json(const json& j) {
    const PadicContext ctx(j.at("p").get<u64>(), j.at("precision").get<unsigned>());
    const u64 rep = detail::parse_u64(j.at("rep").get<std::string>(), "rep");
    if (rep >= ctx.modulus()) throw std::invalid_argument("rep " + std::to_string(rep) + " is not below p^N");
    PadicInt x(ctx, rep);
    if (j.contains("digits") && j.at("digits").get<std::vector<u64>>() != x.digits())
        throw std::invalid_argument("digits do not match rep " + std::to_string(rep));
    return x;
}

inline std::string to_text(const PadicInt& x) {
    return std::to_string(x.rep()) + " mod " + std::to_string(x.context().prime()) + "^" +
           std::to_string(x.context().precision());
}

/// Parses "rep mod p^N".
inline PadicInt padic_from_text(std::string_view text) {
    const auto mod = text.find(" mod ");
    const auto caret = text.rfind('^');
    if (mod == std::string_view::npos || caret == std::string_view::npos || caret < mod)
        throw std::invalid_argument("expected 'rep mod p^N', got '" + std::string(text) + "'");
    const u64 rep = detail::parse_u64(text.substr(0, mod), "rep");
    const u64 p = detail::parse_u64(text.substr(mod + 5, caret - mod - 5), "prime");
    const u64 n = detail::parse_u64(text.substr(caret + 1), "precision");
    const PadicContext ctx(p, static_cast<unsigned>(n));
    if (rep >= ctx.modulus()) throw std::invalid_argument("rep " + std::to_string(rep) + " is not below p^N");
    return PadicInt(ctx, rep);
}

inline json to_json(const Rational& q) { return q.to_string(); }
inline Rational rational_from_json(const json& j) { return Rational::parse(j.get<std::string>()); }

/// Coefficient objects indexed by the power of T.
inline json to_json(const PowerSeries& s) {
    json out = json::array();
    for (unsigned j = 0; j < s.order(); ++j) out.push_back(to_json(s.coefficient(j)));
    return out;
}

inline PowerSeries series_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("a series is a non-empty array of coefficients");
    const PadicContext ctx = padic_from_json(j.front()).context();
    std::vector<u64> c;
    for (const auto& e : j) {
        const PadicInt x = padic_from_json(e);
        if (!(x.context() == ctx)) throw ContextMismatch("series coefficients carry different (p, N)");
        c.push_back(x.rep());
    }
    return PowerSeries(ctx, std::move(c));
}

}  // namespace padicmeasure
