#pragma once

/*
 * Command-line front end.  run() takes the arguments after the program
 * name and writes to the given streams, so tests drive it in-process.
 *
 *   family  SCHEME --n N [--at k=v,...] [--format text|json]
 *   verify  [EXPR...] [--file PATH] [--at k=v,...]
 *   curve   [SCHEME] [--n N] [--at k=v,...] [--coeffs C --point P] [--format text|json]
 *           (over Q the report includes a torsion certificate)
 *   search  --a N|LO..HI --height H [--format csv|json] [--threads T]
 *   table   [--file PATH] [--format text|json]
 *
 * Exit codes: 0 ok; 1 failed check or bad --a range; 2 pole or degenerate
 * point; 3 symbolic depth exceeded; 64 usage error or malformed input.
 */

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "xyzfam/curve/torsion.hpp"
#include "xyzfam/families/families.hpp"
#include "xyzfam/search/search.hpp"

namespace xyzfam::cli {

enum Exit : int { kOk = 0, kFailed = 1, kPole = 2, kDepth = 3, kUsage = 64 };

struct ARange {
    long lo, hi;
};

/// "N" or "LO..HI".  Throws ParseError.
inline ARange parse_a_range(const std::string& text) {
    auto to_long = [&](const std::string& t) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(t, &used);
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (t.empty() || used != t.size()) throw ParseError("bad --a value '" + text + "'");
        return v;
    };
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        long v = to_long(trim(text));
        return {v, v};
    }
    ARange r{to_long(trim(text.substr(0, dots))), to_long(trim(text.substr(dots + 2)))};
    if (r.hi < r.lo) throw ParseError("empty --a range '" + text + "'");
    return r;
}

inline Scheme parse_cli_scheme(const std::string& name) {
    if (name == "euler") return Scheme::euler3;
    if (name == "elkies") return Scheme::elkies3;
    return parse_scheme(name);
}

namespace detail {

struct Options {
    std::string scheme;
    long n = 2;
    std::string at;
    std::string format = "text";
    std::string file;
    std::string a;
    long height = 0;
    unsigned threads = 0;
    std::string coeffs, point;
    std::vector<std::string> exprs;
};

/// Fully numeric value of f at `at`.  Throws Undefined for a free variable.
inline Rational value_at(const RationalFunction& f, const Bindings& at) {
    RationalFunction v = f.substitute(at);
    if (!v.is_constant()) throw Undefined("'" + to_string(f) + "' has an unbound variable");
    return v.constant_value();
}

inline int cmd_family(const Options& o, std::ostream& out) {
    Scheme scheme = parse_cli_scheme(o.scheme);
    auto ctx = family_context(scheme);
    std::vector<std::string> names, values;
    bool verified = false;
    nlohmann::json j;
    if (o.at.empty()) {
        auto tuple = family_member(ctx, o.n);
        verified = verify_solution_identity(tuple);
        j = to_json(tuple, verified);
        names = tuple.names;
        for (const auto& c : tuple.components) values.push_back(to_string(c));
    } else {
        Bindings at = parse_bindings(o.at);
        NumericTuple num;
        if (o.n <= ctx.cap) {
            num = specialize(family_member(ctx, o.n), at);
        } else {
            // Past the symbolic cap: run the pipeline over Q directly.
            auto tuple = family_member(specialize(ctx, at), o.n);
            num = {tuple.names, tuple.components, verify_solution_identity(tuple)};
        }
        names = num.names;
        verified = num.verified;
        for (const auto& v : num.values) values.push_back(v.to_string());
        j = {{"scheme", std::string(scheme_name(scheme))},
             {"n", o.n},
             {"variables", AnsatzConfig::defaults(scheme).variables()},
             {"at", nlohmann::json::object()},
             {"components", values},
             {"verified", verified}};
        for (const auto& [k, v] : at) j["at"][k] = v.to_string();
    }
    if (o.format == "json") {
        out << j.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < names.size(); ++i) out << names[i] << " = " << values[i] << "\n";
        out << "verified: " << (verified ? "true" : "false") << "\n";
    }
    return verified ? kOk : kFailed;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
    std::vector<RationalFunction> comps;
    if (!o.file.empty()) {
        std::ifstream in(o.file);
        if (!in) throw ParseError("cannot open '" + o.file + "'");
        nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("components") || !j["components"].is_array())
            throw ParseError("expected a JSON object with a components array");
        for (const auto& c : j["components"]) {
            if (!c.is_string()) throw ParseError("components must be strings");
            comps.push_back(parse_rational_function(c.get<std::string>()));
        }
    }
    for (const auto& e : o.exprs) comps.push_back(parse_rational_function(e));
    if (comps.empty()) throw ParseError("no components given");
    bool ok;
    if (o.at.empty()) {
        ok = verify_solution_identity(comps, param::fa());
    } else {
        Bindings at = parse_bindings(o.at);
        std::vector<Rational> vals;
        for (const auto& c : comps) vals.push_back(value_at(c, at));
        ok = verify_solution_identity(vals, value_at(param::fa(), at));
    }
    out << "verified: " << (ok ? "true" : "false") << "\n";
    return ok ? kOk : kFailed;
}

template <class F>
nlohmann::json curve_report(const WeierstrassCurve<F>& curve, const CurvePoint<F>& p, long n) {
    nlohmann::json j;
    j["curve"] = to_string(curve);
    j["point"] = to_string(p);
    j["on_curve"] = curve.contains(p);
    j["discriminant"] = to_string(curve.discriminant());
    if (!curve.contains(p)) return j;
    j["n"] = n;
    j["multiple"] = to_string(scalar_mul(curve, n, p));
    if constexpr (std::is_same_v<F, Rational>) j["torsion"] = to_json(non_torsion_certificate(curve, p));
    return j;
}

inline bool is_numeric_curve(const std::string& coeffs) {
    try {
        parse_curve<Rational>(coeffs);
        return true;
    } catch (const ParseError&) {
        return false;
    }
}

inline int cmd_curve(const Options& o, std::ostream& out) {
    nlohmann::json j;
    if (!o.coeffs.empty() || !o.point.empty()) {
        if (o.coeffs.empty() || o.point.empty()) throw ParseError("--coeffs and --point go together");
        if (is_numeric_curve(o.coeffs))
            j = curve_report(parse_curve<Rational>(o.coeffs), parse_point<Rational>(o.point), o.n);
        else
            j = curve_report(parse_curve<RationalFunction>(o.coeffs), parse_point<RationalFunction>(o.point), o.n);
    } else {
        if (o.scheme.empty()) throw ParseError("curve needs a scheme or --coeffs and --point");
        auto ctx = family_context(parse_cli_scheme(o.scheme));
        if (o.at.empty()) {
            j = curve_report(ctx.curve, ctx.base, o.n);
        } else {
            auto local = specialize(ctx, parse_bindings(o.at));
            j = curve_report(local.curve, local.base, o.n);
        }
    }
    const bool on = j["on_curve"].get<bool>();
    if (o.format == "json") {
        out << j.dump(2) << "\n";
        return on ? kOk : kFailed;
    }
    out << "curve: " << j["curve"].get<std::string>() << "\n";
    out << "point: " << j["point"].get<std::string>() << "\n";
    out << "on curve: " << (on ? "yes" : "no") << "\n";
    if (j.contains("multiple")) out << o.n << "P: " << j["multiple"].get<std::string>() << "\n";
    if (j.contains("torsion")) {
        const auto& t = j["torsion"];
        out << "integral model: " << t["curve"].get<std::string>() << "\n";
        for (const auto& w : t["witness"])
            out << "  " << w["n"].get<long>() << "P = (" << w["X"].get<std::string>() << ", "
                << w["Y"].get<std::string>() << ")  integral: " << w["integral"].get<std::string>() << "\n";
        out << "verdict: " << t["verdict"].get<std::string>();
        if (t.contains("order")) out << " (order " << t["order"].get<long>() << ")";
        out << "\n";
    }
    return on ? kOk : kFailed;
}

inline int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
    ARange r;
    try {
        r = parse_a_range(o.a);
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return kFailed;
    }
    if (o.height < 1) throw ParseError("--height must be at least 1");
    if (o.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : search_range(r.lo, r.hi, o.height, o.threads)) rows.push_back(to_json(row));
        out << rows.dump(2) << "\n";
        return kOk;
    }
    search_range(r.lo, r.hi, o.height, o.threads, [&](const std::vector<TableRow>& rows) {
        for (const auto& row : rows) out << to_csv(row) << "\n";
        out.flush();
    });
    return kOk;
}

inline int cmd_table(const Options& o, std::ostream& out) {
    std::vector<TableRow> rows;
    if (o.file.empty()) {
        rows = table1();
    } else {
        std::ifstream in(o.file);
        if (!in) throw MalformedRow("cannot open '" + o.file + "'");
        rows = read_table_csv(in);
    }
    TableReport report = verify_table(rows);
    if (o.format == "json") {
        nlohmann::json j{{"rows", report.checked}, {"failures", nlohmann::json::array()}};
        for (const auto& f : report.failures)
            j["failures"].push_back({{"row", f.index}, {"values", to_csv(f.row)}, {"reason", f.reason}});
        out << j.dump(2) << "\n";
    } else {
        out << to_string(report);
    }
    return report.ok() ? kOk : kFailed;
}

}  // namespace detail

/// Runs one command; returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Parametric and numeric solutions of xyz(x+y+z) = a", "xyzfam"};
    app.require_subcommand(1);
    detail::Options o;
    auto formats = CLI::IsMember({"text", "json", "csv"});

    auto* family = app.add_subcommand("family", "Solution family member from n*P");
    family->add_option("scheme", o.scheme, "euler | elkies | fourvar")->required();
    family->add_option("--n", o.n, "Multiple of the base point")->required();
    family->add_option("--at", o.at, "Bindings such as a=1,s=1,t=1");
    family->add_option("--format", o.format, "text | json")->check(formats);

    auto* verify = app.add_subcommand("verify", "Check prod * sum == a");
    verify->add_option("components", o.exprs, "Component expressions");
    verify->add_option("--file", o.file, "JSON from family --format json");
    verify->add_option("--at", o.at, "Check numerically at these bindings");

    auto* curve = app.add_subcommand("curve", "On-curve, multiple and torsion diagnostics");
    curve->add_option("scheme", o.scheme, "euler | elkies | fourvar");
    curve->add_option("--n", o.n, "Multiple to compute (default 2)");
    curve->add_option("--at", o.at, "Bindings; adds a torsion certificate");
    curve->add_option("--coeffs", o.coeffs, "[a1, a3, a2, a4, a6]");
    curve->add_option("--point", o.point, "(X, Y)");
    curve->add_option("--format", o.format, "text | json")->check(formats);

    auto* search = app.add_subcommand("search", "Brute-force search for small positive solutions");
    search->add_option("--a", o.a, "N or LO..HI")->required();
    search->add_option("--height", o.height, "Height bound for x and y")->required();
    search->add_option("--format", o.format, "csv | json")->check(formats);
    search->add_option("--threads", o.threads, "Worker threads (0: all cores)");

    auto* table = app.add_subcommand("table", "Verify a table of solutions");
    table->add_option("--file", o.file, "CSV a,x,y,z (default: the shipped table)");
    table->add_option("--format", o.format, "text | json")->check(formats);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    }

    try {
        if (family->parsed()) return detail::cmd_family(o, out);
        if (verify->parsed()) return detail::cmd_verify(o, out);
        if (curve->parsed()) return detail::cmd_curve(o, out);
        if (search->parsed()) return detail::cmd_search(o, out, err);
        return detail::cmd_table(o, out);
    } catch (const PoleAtPoint& e) {
        err << e.what() << "\n";
        return kPole;
    } catch (const ExceptionalPoint& e) {
        err << e.what() << "\n";
        return kPole;
    } catch (const SingularCurve& e) {
        err << e.what() << "\n";
        return kPole;
    } catch (const SingularQuartic& e) {
        err << e.what() << "\n";
        return kPole;
    } catch (const SymbolicDepthExceeded& e) {
        err << e.what() << "\n";
        return kDepth;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace xyzfam::cli
