#include "cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "padicmeasure.hpp"

namespace padicmeasure::cli {
namespace {

struct Options {
    unsigned precision = 8;
    std::string format = "json";

    u64 p = 0;
    u64 m = 0;
    u64 i = 0;
    i64 c = 2;
    std::string measure = "mu";

    unsigned n = 0;
    u64 a = 0;
    unsigned len = 8;
    unsigned k = 1;
    std::string region = "zp";
    std::string s = "1";
    i64 b = 1;
    i64 beta = 1;
    unsigned digits = 0;  // 0: min(6, N)
    unsigned order = 8;
    unsigned level = 0;   // 0: derived from digits and order
    unsigned k_max = 8;
    std::string kind = "hurwitz";
    bool quick = false;
};

/// A command's output: scalar fields, optionally followed by a table.
struct Report {
    json fields = json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---- rendering ---------------------------------------------------------

std::string cell_text(const json& v) {
    if (v.is_object() && v.contains("rep") && v.contains("p")) return to_text(padic_from_json(v));
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (std::size_t j = 0; j < v.size(); ++j) s += (j ? " " : "") + cell_text(v[j]);
        return s;
    }
    return v.dump();
}

std::string csv_cell(const json& v) {
    std::string s = cell_text(v);
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char ch : s) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return quoted + "\"";
}

void render(const Report& r, const std::string& format, std::ostream& out) {
    if (format == "json") {
        json doc = r.fields;
        if (!r.columns.empty()) {
            json rows = json::array();
            for (const auto& row : r.rows) {
                json obj = json::object();
                for (std::size_t j = 0; j < r.columns.size(); ++j) obj[r.columns[j]] = row[j];
                rows.push_back(std::move(obj));
            }
            doc["rows"] = std::move(rows);
        }
        out << doc.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        if (r.columns.empty()) {
            out << "key,value\n";
            for (const auto& [key, value] : r.fields.items()) out << key << "," << csv_cell(value) << "\n";
            return;
        }
        for (std::size_t j = 0; j < r.columns.size(); ++j) out << (j ? "," : "") << r.columns[j];
        out << "\n";
        for (const auto& row : r.rows) {
            for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << csv_cell(row[j]);
            out << "\n";
        }
        return;
    }
    for (const auto& [key, value] : r.fields.items()) out << key << ": " << cell_text(value) << "\n";
    if (!r.columns.empty()) {
        std::vector<std::vector<std::string>> cells;
        std::vector<std::size_t> width(r.columns.size());
        for (std::size_t j = 0; j < r.columns.size(); ++j) width[j] = r.columns[j].size();
        for (const auto& row : r.rows) {
            auto& line = cells.emplace_back();
            for (std::size_t j = 0; j < row.size(); ++j) {
                line.push_back(cell_text(row[j]));
                width[j] = std::max(width[j], line.back().size());
            }
        }
        auto emit = [&](const std::vector<std::string>& line) {
            for (std::size_t j = 0; j < line.size(); ++j) {
                out << line[j];
                if (j + 1 < line.size()) out << std::string(width[j] - line[j].size() + 2, ' ');
            }
            out << "\n";
        };
        emit(r.columns);
        for (const auto& line : cells) emit(line);
    }
}

// ---- argument helpers --------------------------------------------------

unsigned digits_for(const Options& o, const PadicContext& ctx) {
    const unsigned d = o.digits == 0 ? std::min(6u, ctx.precision()) : o.digits;
    if (d > ctx.precision())
        throw UsageError("--digits " + std::to_string(d) + " exceeds precision " + std::to_string(ctx.precision()));
    return d;
}

/// A measure max_level that covers `needed`.
unsigned level_for(const PadicContext& ctx, unsigned needed) {
    if (needed > ctx.max_level())
        throw LevelExceedsMeasure("level " + std::to_string(needed) + " is beyond p^n < 2^62");
    return std::max(default_max_level(ctx), needed);
}

Region parse_region(const std::string& s) {
    if (s == "zp") return Region::zp;
    if (s == "units") return Region::units;
    return Region::multiples_of_p;
}

/// The exponent s: an integer or a fraction with denominator prime to p.
PadicInt parse_exponent(const std::string& text, const PadicContext& ctx) {
    Rational q;
    try {
        q = Rational::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string("--s: ") + e.what());
    }
    return reduce(q, ctx);
}

/// s as a positive integer, when it is one.
std::optional<unsigned> positive_integer(const std::string& text) {
    try {
        const Rational q = Rational::parse(text);
        if (q.is_integer() && q.num() >= 1 && q.num() <= 1000) return static_cast<unsigned>(q.num());
    } catch (const std::exception&) {
    }
    return std::nullopt;
}

u64 residue_mod(i64 x, u64 order) {
    const i64 o = static_cast<i64>(order);
    return static_cast<u64>(((x % o) + o) % o);
}

FractionClass fraction_of(const Options& o) {
    if (o.m == 0 || o.i == 0) throw UsageError("this measure needs --m and --i");
    return FractionClass(o.p, o.m, o.i);
}

/// A measure chosen on the command line, with its exact ball values and the
/// closed-form moments that go with it.
struct Selected {
    Measure mu;
    std::function<Rational(unsigned, u64)> rational;
    std::function<Rational(unsigned, Region)> moment_oracle;
    std::function<PowerSeries(unsigned)> closed_form;
};

Selected select_measure(const Options& o, const PadicContext& ctx, unsigned max_level) {
    if (o.measure == "mu") {
        const FractionClass f = fraction_of(o);
        FractionMeasure mu(ctx, f, max_level);
        return {mu, [mu](unsigned n, u64 a) { return mu.ball_rational(n, a); },
                [f](unsigned k, Region r) { return moment_closed_form(f, k, r); },
                [f, ctx](unsigned order) { return closed_form_mu(f, ctx, order); }};
    }
    const UnitScaling c(ctx, o.c);
    if (o.measure == "e") {
        BernoulliMeasure e(c, max_level);
        const u64 p = ctx.prime();
        return {e, [e](unsigned n, u64 a) { return e.ball_rational(n, a); },
                [c, p](unsigned k, Region r) { return bernoulli_measure_moment_closed_form(c.as_rational(), k, p, r); },
                [c](unsigned order) { return closed_form_bernoulli(c, order); }};
    }
    const FractionClass f = fraction_of(o);
    const FractionMeasure base(ctx, f, max_level);
    if (o.measure == "mu_c") {
        return {mu_c_frac(f, c, max_level),
                [base, c](unsigned n, u64 a) { return mu_c_ball_rational(base, c, n, a); },
                [f, c](unsigned k, Region r) { return mu_c_moment_closed_form(f, c.as_rational(), k, r); },
                [f, c](unsigned order) { return closed_form_mu_c(f, c, order); }};
    }
    const BernoulliMeasure e(c, max_level);
    return {combined_measure(f, c, max_level),
            [base, e, c](unsigned n, u64 a) { return e.ball_rational(n, a) + mu_c_ball_rational(base, c, n, a); },
            [f, c](unsigned k, Region r) { return combined_moment_closed_form(f, c.as_rational(), k, r); },
            [f, c](unsigned order) { return closed_form_combined(f, c, order); }};
}

void describe(Report& r, const Options& o, const PadicContext& ctx, bool with_fraction, bool with_c) {
    r.fields["p"] = ctx.prime();
    r.fields["precision"] = ctx.precision();
    if (with_fraction) {
        r.fields["m"] = o.m;
        r.fields["i"] = o.i;
    }
    if (with_c) r.fields["c"] = o.c;
}

bool uses_fraction(const std::string& measure) { return measure != "e"; }
bool uses_c(const std::string& measure) { return measure != "mu"; }

/// The oracle rational next to its reduction, when it is p-integral.
void add_oracle(Report& r, const Rational& q, const PadicContext& ctx) {
    r.fields["oracle"] = to_json(q);
    if (q.den() % ctx.prime() != 0) r.fields["oracle_padic"] = to_json(reduce(q, ctx));
}

// ---- commands ----------------------------------------------------------

Report cmd_digits(const Options& o) {
    const FractionClass f(o.p, o.m, o.i);
    if (o.len > f.cached_levels())
        throw LevelExceedsMeasure("--len " + std::to_string(o.len) + " exceeds " +
                                  std::to_string(f.cached_levels()) + " for p = " + std::to_string(o.p));
    std::vector<u64> k, r, tau;
    for (unsigned j = 0; j < o.len; ++j) k.push_back(f.digit(j));
    for (unsigned j = 0; j <= o.len; ++j) {
        r.push_back(f.shifted_numerator(j));
        tau.push_back(f.threshold(j));
    }
    // p^n r_n = i + (sum_{a<n} k_a p^a) m for every n printed.
    bigint pn = 1, partial = 0;
    for (unsigned n = 0; n <= o.len; ++n) {
        if (pn * r[n] != bigint(o.i) + partial * o.m)
            throw IdentityViolated("p^n r_n = i + (sum k_a p^a) m fails at n = " + std::to_string(n));
        if (n < o.len) partial += bigint(k[n]) * pn;
        pn *= o.p;
    }
    Report rep;
    rep.fields["p"] = o.p;
    rep.fields["m"] = o.m;
    rep.fields["i"] = o.i;
    rep.fields["len"] = o.len;
    rep.fields["k"] = k;
    rep.fields["r"] = r;
    rep.fields["tau"] = tau;
    rep.fields["period"] = f.period();
    return rep;
}

Report cmd_ball(const Options& o, const PadicContext& ctx) {
    const auto sel = select_measure(o, ctx, level_for(ctx, o.n));
    const PadicInt v = ball(sel.mu, o.n, o.a);
    Report r;
    r.fields["measure"] = o.measure;
    describe(r, o, ctx, uses_fraction(o.measure), uses_c(o.measure));
    r.fields["n"] = o.n;
    r.fields["a"] = o.a;
    r.fields["value"] = to_json(v);
    r.fields["rational"] = to_json(sel.rational(o.n, o.a));
    return r;
}

Report cmd_balls(const Options& o, const PadicContext& ctx) {
    constexpr u64 row_limit = 1'000'000;
    const u64 pn = ctx.power_of_p(o.n);
    if (pn > row_limit) throw UsageError("level " + std::to_string(o.n) + " has more than 10^6 balls");
    const auto sel = select_measure(o, ctx, level_for(ctx, o.n));
    Report r;
    r.fields["measure"] = o.measure;
    describe(r, o, ctx, uses_fraction(o.measure), uses_c(o.measure));
    r.fields["n"] = o.n;
    r.columns = {"a", "value", "rational"};
    for (u64 a = 0; a < pn; ++a)
        r.rows.push_back({a, to_json(ball(sel.mu, o.n, a)), to_json(sel.rational(o.n, a))});
    return r;
}

Report cmd_moment(const Options& o, const PadicContext& ctx) {
    if (o.k == 0) throw UsageError("--k must be at least 1");
    const unsigned d = digits_for(o, ctx);
    const auto sel = select_measure(o, ctx, level_for(ctx, d + 1));
    const Region region = parse_region(o.region);
    const CertifiedValue v = integrate_adaptive(sel.mu, PowerIntegrand{o.k, region}, d);
    const Rational oracle = sel.moment_oracle(o.k, region);
    Report r;
    r.fields["measure"] = o.measure;
    describe(r, o, ctx, uses_fraction(o.measure), uses_c(o.measure));
    r.fields["k"] = o.k;
    r.fields["region"] = to_string(region);
    r.fields["value"] = to_json(v.value);
    r.fields["certified_digits"] = v.digits;
    r.fields["level"] = v.level;
    add_oracle(r, oracle, ctx);
    r.fields["agrees"] = congruent(v.value, reduce(oracle, ctx), v.digits);
    return r;
}

Report cmd_integral(const Options& o, const PadicContext& ctx) {
    const unsigned d = digits_for(o, ctx);
    const auto sel = select_measure(o, ctx, level_for(ctx, d + 1));
    const PadicInt s = parse_exponent(o.s, ctx);
    const u64 b = residue_mod(o.b, ctx.prime() - 1);
    const CertifiedValue v = integrate_adaptive(sel.mu, CharacterIntegrand{s, b}, d);
    Report r;
    r.fields["measure"] = o.measure;
    describe(r, o, ctx, uses_fraction(o.measure), uses_c(o.measure));
    r.fields["s"] = o.s;
    r.fields["b"] = b;
    r.fields["value"] = to_json(v.value);
    r.fields["certified_digits"] = v.digits;
    r.fields["level"] = v.level;
    return r;
}

Report cmd_hurwitz(const Options& o, const PadicContext& ctx) {
    const FractionClass f(o.p, o.m, o.i);
    const unsigned d = digits_for(o, ctx);
    const u64 b = residue_mod(o.b, ctx.prime() - 1);
    const CertifiedValue v = hurwitz_tilde(f, parse_exponent(o.s, ctx), static_cast<i64>(b), d);
    Report r;
    describe(r, o, ctx, true, false);
    r.fields["s"] = o.s;
    r.fields["b"] = b;
    r.fields["value"] = to_json(v.value);
    r.fields["certified_digits"] = v.digits;
    if (auto k = positive_integer(o.s); k && residue_mod(*k, ctx.prime() - 1) == b) {
        const Rational oracle = moment_closed_form(f, *k, Region::units);
        add_oracle(r, oracle, ctx);
        r.fields["agrees"] = congruent(v.value, reduce(oracle, ctx), v.digits);
    }
    return r;
}

Report cmd_lvalue(const Options& o, const PadicContext& ctx) {
    const FractionClass f(o.p, o.m, o.i);
    const unsigned d = digits_for(o, ctx);
    const u64 beta = residue_mod(o.beta, ctx.prime() - 1);
    const LValue l = l_value(f, parse_exponent(o.s, ctx), static_cast<i64>(beta), UnitScaling(ctx, o.c), d);
    Report r;
    describe(r, o, ctx, true, true);
    r.fields["s"] = o.s;
    r.fields["beta"] = beta;
    r.fields["value"] = to_json(l.numerator);
    r.fields["denominator_exponent"] = l.denominator_exponent;
    r.fields["achieved_digits"] = l.achieved_digits;
    r.fields["normalizer_valuation"] = l.normalizer_valuation;
    if (auto k = positive_integer(o.s); k && residue_mod(*k, ctx.prime() - 1) == beta) {
        const Rational oracle = l_value_closed_form(f, *k);
        r.fields["oracle"] = to_json(oracle);
        r.fields["agrees"] = l.matches(oracle);
    }
    return r;
}

Report cmd_series(const Options& o, const PadicContext& ctx) {
    if (o.order == 0) throw UsageError("--M must be at least 1");
    const unsigned d = digits_for(o, ctx);
    const unsigned level = o.level != 0 ? o.level : transform_level_for(ctx.prime(), d, o.order);
    const auto sel = select_measure(o, ctx, level_for(ctx, level));
    const PowerSeries p = transform(sel.mu, level, o.order);
    const PowerSeries closed = sel.closed_form(o.order);
    const unsigned certified = std::min(ctx.precision(), transform_certified_digits(ctx.prime(), level, o.order));
    Report r;
    r.fields["measure"] = o.measure;
    describe(r, o, ctx, uses_fraction(o.measure), uses_c(o.measure));
    r.fields["order"] = o.order;
    r.fields["level"] = level;
    r.fields["certified_digits"] = certified;
    r.fields["agrees"] = congruent(p, closed, certified);
    std::optional<std::vector<Rational>> exact;
    if (o.measure == "mu") exact = closed_form_mu_exact(fraction_of(o), o.order);
    r.columns = {"j", "transform", "closed_form"};
    if (exact) r.columns.push_back("exact");
    for (unsigned j = 0; j < o.order; ++j) {
        std::vector<json> row{j, to_json(p.coefficient(j)), to_json(closed.coefficient(j))};
        if (exact) row.push_back(to_json((*exact)[j]));
        r.rows.push_back(std::move(row));
    }
    return r;
}

void add_interpolation_rows(Report& r, const std::vector<InterpolationRow>& rows) {
    bool all = true;
    r.columns = {"k", "character", "value", "denominator_exponent", "oracle", "required_digits",
                 "agreement_digits", "stable", "ok"};
    for (const auto& row : rows) {
        all = all && row.ok;
        r.rows.push_back({row.k, row.character, to_json(row.measured), row.denominator_exponent,
                          to_json(row.oracle), row.required_digits, row.agreement_digits, row.stable, row.ok});
    }
    r.fields["all_agree"] = all;
}

Report cmd_table(const Options& o, const PadicContext& ctx) {
    const FractionClass f(o.p, o.m, o.i);
    const unsigned d = digits_for(o, ctx);
    Report r;
    r.fields["kind"] = o.kind;
    describe(r, o, ctx, true, o.kind == "lvalue");
    r.fields["digits"] = d;
    if (o.kind == "lvalue")
        add_interpolation_rows(r, l_value_interpolation_report(f, UnitScaling(ctx, o.c), o.k_max, d));
    else
        add_interpolation_rows(r, interpolation_report(f, ctx, o.k_max, d));
    return r;
}

/// A second admissible scaling: the first unit c > 2 with c^(p-1) != 1.
i64 second_scaling(const PadicContext& ctx) {
    for (i64 c = 3;; ++c) {
        if (static_cast<u64>(c) % ctx.prime() == 0) continue;
        if (!UnitScaling(ctx, c).is_root_of_unity()) return c;
    }
}

Report cmd_selfcheck(const Options& o, const PadicContext& ctx_in) {
    struct Cell {
        u64 p, m;
    };
    const std::vector<Cell> grid = o.quick ? std::vector<Cell>{{3, 4}, {5, 4}, {3, 7}}
                                           : std::vector<Cell>{{3, 4}, {5, 4}, {7, 4}, {3, 7}, {5, 7}};
    const unsigned kmax = o.quick ? 4 : 8;
    const unsigned order = o.quick ? 4 : 8;
    const unsigned precision = ctx_in.precision();

    Report r;
    r.fields["mode"] = o.quick ? "quick" : "full";
    r.fields["precision"] = precision;
    r.columns = {"p", "m", "i", "check", "ok"};
    bool all = true;
    auto record = [&](const Cell& cell, u64 i, const char* name, bool ok) {
        all = all && ok;
        r.rows.push_back({cell.p, cell.m, i, name, ok});
    };

    for (const Cell& cell : grid) {
        const PadicContext ctx(cell.p, precision);
        const unsigned d = std::min(o.quick ? 4u : 6u, precision);
        const unsigned level = transform_level_for(cell.p, d, order);
        const UnitScaling c(ctx, 2), c2(ctx, second_scaling(ctx));
        const unsigned i_max = o.quick ? 1 : static_cast<unsigned>(cell.m - 1);
        for (u64 i = 1; i <= i_max; ++i) {
            const FractionClass f(cell.p, cell.m, i);
            const auto mu = mu_frac(ctx, f, level_for(ctx, level));

            record(cell, i, "distribution", check_distribution(mu, d).ok);

            bool moments = true;
            for (Region region : {Region::zp, Region::units}) {
                const auto sums = riemann_moments(mu, kmax, d + 2, region);
                for (unsigned k = 1; k <= kmax; ++k)
                    moments = moments && congruent(sums[k - 1], reduce(moment_closed_form(f, k, region), ctx), d);
            }
            record(cell, i, "moments", moments);

            record(cell, i, "transform",
                   congruent(transform(mu, level, order), closed_form_mu(f, ctx, order), d));

            const auto comb = combined_measure(f, c, level_for(ctx, level));
            bool combined = true;
            const auto csums = riemann_moments(comb, kmax, d + 2, Region::zp);
            for (unsigned k = 1; k <= kmax; ++k)
                combined = combined && congruent(csums[k - 1],
                                                 reduce(combined_moment_closed_form(f, c.as_rational(), k, Region::zp), ctx), d);
            record(cell, i, "combined_moments", combined);

            bool interp = true;
            for (const auto& row : interpolation_report(mu, f, kmax, d)) interp = interp && row.ok;
            for (const auto& row : l_value_interpolation_report(f, c, kmax, d)) interp = interp && row.ok;
            record(cell, i, "interpolation", interp);

            bool independent = true;
            for (unsigned k = 1; k <= kmax; ++k) {
                const PadicInt s(ctx, k);
                const i64 beta = static_cast<i64>(k % (cell.p - 1));
                independent = independent && lvalues_agree(l_value(f, s, beta, c, d), l_value(f, s, beta, c2, d));
            }
            record(cell, i, "scaling_independence", independent);
        }
    }
    r.fields["all_passed"] = all;
    if (!all) r.fields["status"] = "FAILED";
    return r;
}

// ---- wiring ------------------------------------------------------------

int exit_for(error_kind kind) {
    switch (kind) {
        case error_kind::precondition: return exit_precondition;
        case error_kind::consistency: return exit_consistency;
        case error_kind::stability: return exit_stability;
    }
    return exit_unexpected;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"p-adic measures, Iwasawa series and p-adic zeta values"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--precision,-N", o.precision, "Digits N carried (p^N < 2^62)")
        ->envname("PADICM_PRECISION")
        ->capture_default_str();
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();

    const std::vector<std::string> measures{"mu", "e", "mu_c", "combined"};
    auto prime = [&](CLI::App* sub) { sub->add_option("--p", o.p, "Odd prime p")->required(); };
    auto fraction = [&](CLI::App* sub, bool required) {
        auto* m = sub->add_option("--m", o.m, "Denominator m, prime to p");
        auto* i = sub->add_option("--i", o.i, "Numerator i, 0 < i < m");
        if (required) {
            m->required();
            i->required();
        }
    };
    auto scaling = [&](CLI::App* sub) { sub->add_option("--c", o.c, "Unit scaling c")->capture_default_str(); };
    auto measure = [&](CLI::App* sub) {
        sub->add_option("--measure", o.measure, "mu | e | mu_c | combined")
            ->check(CLI::IsMember(measures))
            ->capture_default_str();
        prime(sub);
        fraction(sub, false);
        scaling(sub);
    };
    auto digits = [&](CLI::App* sub) {
        sub->add_option("--digits", o.digits, "Requested digits (default min(6, N))");
    };

    auto* s_digits = app.add_subcommand("digits", "Digit sequence k_r, numerators r_n and thresholds tau_n of i/m");
    prime(s_digits);
    fraction(s_digits, true);
    s_digits->add_option("--len", o.len, "Number of digits")->capture_default_str();

    auto* s_ball = app.add_subcommand("ball", "One ball value mu(a + p^n Z_p)");
    measure(s_ball);
    s_ball->add_option("--n", o.n, "Level")->required();
    s_ball->add_option("--a", o.a, "Ball index, a < p^n")->required();

    auto* s_balls = app.add_subcommand("balls", "Every ball value at one level");
    measure(s_balls);
    s_balls->add_option("--n", o.n, "Level")->required();

    auto* s_moment = app.add_subcommand("moment", "int x^(k-1) dmu over a region, with its closed form");
    measure(s_moment);
    s_moment->add_option("--k", o.k, "Exponent k >= 1")->required();
    s_moment->add_option("--region", o.region, "zp | units | pzp")
        ->check(CLI::IsMember({"zp", "units", "pzp"}))
        ->capture_default_str();
    digits(s_moment);

    auto* s_integral = app.add_subcommand("integral", "int over Z_p^x of [x]^s x^(-1) omega(x)^b dmu");
    measure(s_integral);
    s_integral->add_option("--s", o.s, "Exponent s (integer or p-integral fraction)")->capture_default_str();
    s_integral->add_option("--b", o.b, "Character exponent b (mod p-1)")->capture_default_str();
    digits(s_integral);

    auto* s_hurwitz = app.add_subcommand("hurwitz", "p-adic Hurwitz zeta value H(1-s, omega^b, i/m)");
    prime(s_hurwitz);
    fraction(s_hurwitz, true);
    s_hurwitz->add_option("--s", o.s, "Exponent s")->capture_default_str();
    s_hurwitz->add_option("--b", o.b, "Character exponent b (mod p-1)")->capture_default_str();
    digits(s_hurwitz);

    auto* s_lvalue = app.add_subcommand("lvalue", "L^beta(1-s) from the combined measure");
    prime(s_lvalue);
    fraction(s_lvalue, true);
    scaling(s_lvalue);
    s_lvalue->add_option("--s", o.s, "Exponent s")->capture_default_str();
    s_lvalue->add_option("--beta", o.beta, "Character exponent beta (mod p-1)")->capture_default_str();
    digits(s_lvalue);

    auto* s_series = app.add_subcommand("series", "Iwasawa transform next to its closed form");
    measure(s_series);
    s_series->add_option("--M", o.order, "Truncation order M (mod T^M)")->capture_default_str();
    s_series->add_option("--level", o.level, "Transform level (default from --digits and --M)");
    digits(s_series);

    auto* s_table = app.add_subcommand("table", "Interpolation table (k, value, Bernoulli oracle)");
    prime(s_table);
    fraction(s_table, true);
    scaling(s_table);
    s_table->add_option("--kind", o.kind, "hurwitz | lvalue")
        ->check(CLI::IsMember({"hurwitz", "lvalue"}))
        ->capture_default_str();
    s_table->add_option("--kmax", o.k_max, "Largest k")->capture_default_str();
    digits(s_table);

    auto* s_selfcheck = app.add_subcommand("selfcheck", "Run the invariant suite on a small grid");
    s_selfcheck->add_flag("--quick", o.quick, "Smaller grid and fewer moments");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        const std::string name = app.get_subcommands().front()->get_name();
        Report r;
        if (name == "digits") {
            r = cmd_digits(o);
        } else {
            const PadicContext ctx(name == "selfcheck" ? 3 : o.p, o.precision);
            if (name == "ball") r = cmd_ball(o, ctx);
            else if (name == "balls") r = cmd_balls(o, ctx);
            else if (name == "moment") r = cmd_moment(o, ctx);
            else if (name == "integral") r = cmd_integral(o, ctx);
            else if (name == "hurwitz") r = cmd_hurwitz(o, ctx);
            else if (name == "lvalue") r = cmd_lvalue(o, ctx);
            else if (name == "series") r = cmd_series(o, ctx);
            else if (name == "table") r = cmd_table(o, ctx);
            else r = cmd_selfcheck(o, ctx);
        }
        render(r, o.format, out);
        if (name == "selfcheck" && !r.fields["all_passed"].get<bool>()) return exit_consistency;
        return exit_ok;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const error& e) {
        err << e.what() << "\n";
        return exit_for(e.kind());
    } catch (const std::exception& e) {
        err << "unexpected error: " << e.what() << "\n";
        return exit_unexpected;
    }
}

}  // namespace padicmeasure::cli
