#pragma once

// Command-line surface. Subcommands: precompute, add, double, neg, mul,
// order, lpoly, bench, selftest. Output is line-oriented and deterministic
// for a fixed --seed; --json emits the same data as a JSON object.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hec/curve.hpp"
#include "hec/divisor.hpp"
#include "hec/explicit3.hpp"
#include "hec/generic.hpp"
#include "hec/io.hpp"
#include "hec/poly.hpp"
#include "hec/rng.hpp"
#include "hec/zeta.hpp"

namespace hec {
namespace cli {

struct Options {
    std::uint64_t p = 0;
    int g = 3;
    std::string f;
    std::string curve_file;
    std::string d1, d2;
    std::uint64_t k = 0;
    std::uint64_t n = 1000;
    std::uint64_t seed = 0;
    int threads = 1;
    bool json = false;
    std::string bench_op = "add";
};

namespace detail {

// Random curve with f monic of degree 2g+2 and f_{2g+1} = 0, retried until
// separable.
inline CurveModel random_curve(const FieldCtx& F, int g, SplitMix64& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Fp> coeffs(2 * g + 3, 0);
        for (int i = 0; i <= 2 * g; ++i) coeffs[i] = rng.below(F.p());
        coeffs[2 * g + 1] = 0;
        coeffs[2 * g + 2] = 1;
        try {
            return new_curve(F, g, coeffs);
        } catch (const BadCurve&) {
            continue;
        }
    }
    throw BadCurve("could not sample a separable curve");
}

inline CurveModel resolve_curve(const Options& o, SplitMix64& rng) {
    if (!o.curve_file.empty()) {
        std::ifstream in(o.curve_file);
        if (!in) throw ParseError("cannot open curve file '" + o.curve_file + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_curve(ss.str());
    }
    if (o.p == 0) throw ParseError("need --p (or --curve-file)");
    FieldCtx F(o.p);
    if (!o.f.empty()) {
        auto raw = parse_coeff_list(o.f);
        if (raw.size() != static_cast<std::size_t>(2 * o.g + 3))
            throw ParseError("f needs exactly 2g+3 coefficients");
        for (auto& c : raw) c = F.reduce(c);
        return new_curve(F, o.g, raw);
    }
    return random_curve(F, o.g, rng);
}

inline void emit_op_result(const BalancedDivisor& r, bool fast, const OpCount& delta, bool json,
                           std::ostream& out) {
    if (json) {
        nlohmann::json j;
        j["u"] = r.u.coeffs();
        j["v"] = r.v.coeffs();
        j["n"] = r.n;
        j["path"] = fast ? "fast" : "fallback";
        j["ops"] = {{"I", delta.inv}, {"M", delta.mul}, {"A", delta.add}};
        out << j.dump() << "\n";
    } else {
        out << format_divisor(r) << "\n";
        out << "path=" << (fast ? "fast" : "fallback") << "\n";
        out << "I=" << delta.inv << " M=" << delta.mul << " A=" << delta.add << "\n";
    }
}

inline int selftest(const Options& o, std::ostream& out) {
    SplitMix64 rng(o.seed);
    int failures = 0;
    auto report = [&](const std::string& name, bool ok) {
        out << (ok ? "ok   " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };

    for (std::uint64_t p : {101ull, 1009ull}) {
        FieldCtx F(p);
        CurveModel c = random_curve(F, 3, rng);
        OpCount ctr;
        const BalancedDivisor id = identity(c);
        bool equiv = true, closed = true, axioms = true;
        for (int i = 0; i < 200; ++i) {
            BalancedDivisor a = random_element(c, rng);
            BalancedDivisor b = random_element(c, rng);
            BalancedDivisor fast = explicit3::add(a, b, c, ctr);
            BalancedDivisor slow = generic::addition(a, b, c, ctr);
            equiv = equiv && fast == slow;
            closed = closed && validate(fast, c).empty();
            axioms = axioms && generic::addition(a, id, c, ctr) == a &&
                     generic::addition(a, generic::negation(a, c, ctr), c, ctr) == id &&
                     explicit3::negate(explicit3::negate(a, c, ctr), c, ctr) == a;
        }
        report("oracle equivalence p=" + std::to_string(p), equiv);
        report("closure p=" + std::to_string(p), closed);
        report("group axioms p=" + std::to_string(p), axioms);
    }
    return failures == 0 ? 0 : 1;
}

inline int bench(const Options& o, std::ostream& out) {
    SplitMix64 rng(o.seed);
    CurveModel c = resolve_curve(o, rng);
    OpCount total;
    std::uint64_t fast = 0;
    const std::uint64_t n = o.n == 0 ? 1 : o.n;
    for (std::uint64_t i = 0; i < n; ++i) {
        BalancedDivisor a = random_element(c, rng);
        OpCount ctr;
        if (o.bench_op == "add") {
            BalancedDivisor b = random_element(c, rng);
            auto res = explicit3::typical_addition(a, b, c, ctr);
            fast += res.used_fast_path;
        } else if (o.bench_op == "double") {
            auto res = explicit3::typical_doubling(a, c, ctr);
            fast += res.used_fast_path;
        } else if (o.bench_op == "neg") {
            auto res = explicit3::typical_negation(a, c, ctr);
            fast += res.used_fast_path;
        } else {
            throw ParseError("unknown bench op '" + o.bench_op + "'");
        }
        total += ctr;
    }
    const double frac = static_cast<double>(fast) / static_cast<double>(n);
    auto mean = [&](std::int64_t v) {
        std::ostringstream ss;
        if (v % static_cast<std::int64_t>(n) == 0)
            ss << v / static_cast<std::int64_t>(n);
        else
            ss << static_cast<double>(v) / static_cast<double>(n);
        return ss.str();
    };
    if (o.json) {
        nlohmann::json j;
        j["op"] = o.bench_op;
        j["n"] = n;
        j["fast_fraction"] = frac;
        j["mean_ops"] = {{"I", static_cast<double>(total.inv) / n},
                         {"M", static_cast<double>(total.mul) / n},
                         {"A", static_cast<double>(total.add) / n}};
        out << j.dump() << "\n";
    } else {
        out << "fast_fraction=" << frac << "\n";
        out << "I=" << mean(total.inv) << " M=" << mean(total.mul) << " A=" << mean(total.add)
            << "\n";
    }
    return 0;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"balanced-divisor arithmetic on genus-3 hyperelliptic Jacobians"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--p", o.p, "prime modulus");
        sub->add_option("--g", o.g, "genus (default 3)");
        sub->add_option("--f", o.f, "curve coefficients [f0,...,f_{2g+2}]");
        sub->add_option("--curve-file", o.curve_file, "file containing a curve line");
        sub->add_option("--seed", o.seed, "PRNG seed (default 0)");
        sub->add_option("--threads", o.threads, "worker threads for point counting");
        sub->add_flag("--json", o.json, "emit JSON");
    };

    CLI::App* precompute = app.add_subcommand("precompute", "print the auxiliary polynomial V");
    CLI::App* addc = app.add_subcommand("add", "add two divisor classes");
    CLI::App* dblc = app.add_subcommand("double", "double a divisor class");
    CLI::App* negc = app.add_subcommand("neg", "negate a divisor class");
    CLI::App* mulc = app.add_subcommand("mul", "scalar multiple k*D");
    CLI::App* orderc = app.add_subcommand("order", "L-polynomial plus annihilation check");
    CLI::App* lpolyc = app.add_subcommand("lpoly", "L-polynomial from point counts");
    CLI::App* benchc = app.add_subcommand("bench", "mean op counts over random typical inputs");
    CLI::App* selftestc = app.add_subcommand("selftest", "run oracle-equivalence checks");
    for (CLI::App* sub : {precompute, addc, dblc, negc, mulc, orderc, lpolyc, benchc, selftestc})
        add_common(sub);
    addc->add_option("--d1", o.d1, "first divisor");
    addc->add_option("--d2", o.d2, "second divisor");
    dblc->add_option("--d1", o.d1, "divisor");
    negc->add_option("--d1", o.d1, "divisor");
    mulc->add_option("--d1", o.d1, "divisor");
    mulc->add_option("--k", o.k, "scalar");
    benchc->add_option("--op", o.bench_op, "add | double | neg");
    benchc->add_option("--n", o.n, "number of samples");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        SplitMix64 rng(o.seed);
        if (app.got_subcommand(selftestc)) return detail::selftest(o, out);
        if (app.got_subcommand(benchc)) return detail::bench(o, out);

        CurveModel c = detail::resolve_curve(o, rng);
        const FieldCtx& F = c.field();

        if (app.got_subcommand(precompute)) {
            if (o.json) {
                nlohmann::json j;
                j["V"] = c.V().coeffs();
                out << j.dump() << "\n";
            } else {
                out << "V=" << format_poly(c.V()) << "\n";
            }
            return 0;
        }
        if (app.got_subcommand(lpolyc) || app.got_subcommand(orderc)) {
            LPolynomial L = lpolynomial(c, CharImpl::SquaresTable, o.threads);
            std::string lp = "[";
            for (int i = 0; i <= 6; ++i) lp += (i ? "," : "") + std::to_string(L.at(i));
            lp += "]";
            if (o.json) {
                nlohmann::json j;
                j["Lp"] = std::vector<std::int64_t>(L.a.begin(), L.a.end());
                j["order"] = L.order();
                out << j.dump() << "\n";
            } else {
                out << "Lp=" << lp << "; order=" << L.order() << "\n";
            }
            if (app.got_subcommand(orderc)) {
                OpCount ctr;
                bool ok = true;
                for (int i = 0; i < 5; ++i) {
                    BalancedDivisor d = random_element(c, rng);
                    ok = ok && generic::scalar_mul(static_cast<std::uint64_t>(L.order()), d, c,
                                                   ctr) == identity(c);
                }
                out << "annihilation=" << (ok ? "ok" : "FAIL") << "\n";
                return ok ? 0 : 1;
            }
            return 0;
        }

        // group operations
        auto get_divisor = [&](const std::string& text) {
            if (text.empty()) return random_element(c, rng);
            BalancedDivisor d = parse_divisor(text, F);
            auto bad = validate(d, c);
            if (!bad.empty()) throw ParseError("invalid divisor: " + bad.front());
            return d;
        };

        if (app.got_subcommand(addc)) {
            BalancedDivisor a = get_divisor(o.d1);
            BalancedDivisor b = get_divisor(o.d2);
            OpCount ctr;
            auto res = a == b ? explicit3::typical_doubling(a, c, ctr)
                              : explicit3::typical_addition(a, b, c, ctr);
            detail::emit_op_result(res.result, res.used_fast_path, ctr, o.json, out);
            return 0;
        }
        if (app.got_subcommand(dblc)) {
            BalancedDivisor a = get_divisor(o.d1);
            OpCount ctr;
            auto res = explicit3::typical_doubling(a, c, ctr);
            detail::emit_op_result(res.result, res.used_fast_path, ctr, o.json, out);
            return 0;
        }
        if (app.got_subcommand(negc)) {
            BalancedDivisor a = get_divisor(o.d1);
            OpCount ctr;
            auto res = explicit3::typical_negation(a, c, ctr);
            detail::emit_op_result(res.result, res.used_fast_path, ctr, o.json, out);
            return 0;
        }
        if (app.got_subcommand(mulc)) {
            BalancedDivisor a = get_divisor(o.d1);
            OpCount ctr;
            BalancedDivisor r = explicit3::scalar_mul(o.k, a, c, ctr);
            if (o.json) {
                nlohmann::json j;
                j["u"] = r.u.coeffs();
                j["v"] = r.v.coeffs();
                j["n"] = r.n;
                out << j.dump() << "\n";
            } else {
                out << format_divisor(r) << "\n";
            }
            return 0;
        }
        err << "error: no subcommand handled\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace cli
}  // namespace hec
