#include "ghg/borel.hpp"
#include "ghg/config.hpp"
#include "ghg/suites.hpp"
#include "ghg/symbol.hpp"
#include "ghg/turning.hpp"
#include "ghg/voros.hpp"
#include "ghg/wkb.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

using namespace ghg;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kComputation = 3 };

struct Options {
    std::string config, out, suite = "all";
    bool principal = false;
    std::optional<double> tol;
};

class Failure : public std::runtime_error {
public:
    Failure(int code, json payload, const std::string& msg) : std::runtime_error(msg), code(code), payload(std::move(payload)) {}
    int code;
    json payload;
};

json error_payload(const std::string& code, const std::string& message) {
    return {{"error", {{"code", code}, {"message", message}}}};
}

void emit(const json& j, const std::string& out) {
    const std::string text = j.dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw Failure(kUsage, error_payload("usage", "cannot write " + out), "cannot write " + out);
    f << text;
}

json cplx_json(cplx z) { return json::array({z.real() + 0.0, z.imag() + 0.0}); }

// Polynomial in x with rational coefficients as [[power, "p/q"], ...], ascending.
json x_poly_json(const MultiPoly& p) {
    const VarId x = x_var();
    json out = json::array();
    for (int e = 0; e <= std::max(0, p.degree(x)); ++e) {
        MultiPoly c = p.coeff(x, e);
        if (c.is_zero()) continue;
        if (!c.is_constant()) throw std::runtime_error("symbol coefficient is not a rational number");
        out.push_back(json::array({e, c.constant_value().str()}));
    }
    return out;
}

json laurent_json(const LaurentX<Rational>& s) {
    json c = json::array();
    for (const auto& v : s.data()) c.push_back(v.str());
    json j = {{"lowest", s.valuation()}, {"coeffs", c}};
    j["truncation"] = s.is_exact() ? json(nullptr) : json(s.precision());
    return j;
}

json cmd_symbol(const JobConfig& c, bool principal) {
    const OperatorSymbol s = total_symbol(c.params);
    const VarId z = zeta_var();
    json records = json::array();
    const int top = principal ? 0 : s.eta_degree();
    for (int k = 0; k <= top; ++k) {
        const MultiPoly sk = s.sigma(k);
        for (int d = 0; d <= std::max(0, sk.degree(z)); ++d) {
            MultiPoly cd = sk.coeff(z, d);
            if (cd.is_zero()) continue;
            records.push_back({{"eta_order", k}, {"zeta_degree", d}, {"x_polynomial", x_poly_json(cd)}});
        }
    }
    return {{"N", c.params.N}, {"principal_only", principal}, {"records", records}};
}

json cmd_turning_points(const JobConfig& c) {
    auto tps = turning_points(c.params, c.tp_tol);
    std::sort(tps.begin(), tps.end(), [](const TurningPoint& a, const TurningPoint& b) {
        if (a.x.real() != b.x.real()) return a.x.real() < b.x.real();
        return a.x.imag() < b.x.imag();
    });
    json list = json::array();
    for (const auto& tp : tps) {
        auto t = classify_turning_point(c.params, tp, c.point, default_path(tp, c.point));
        list.push_back({{"x", cplx_json(tp.x)},
                        {"zeta", cplx_json(tp.zeta)},
                        {"type", {t.first, t.second}},
                        {"simple", tp.simple},
                        {"residuals", {{"sigma0", tp.res_sigma}, {"dzeta_sigma0", tp.res_dzeta}}}});
    }
    return {{"point", point_name(c.point)}, {"count", list.size()}, {"turning_points", list}};
}

json cmd_wkb(const JobConfig& c) {
    json branches = json::array();
    for (int m = 1; m <= c.params.N; ++m) {
        auto S = riccati_series<Rational>(c.params, c.point, m, c.eta_order, c.x_order);
        json series = json::array();
        for (int l = -1; l <= c.eta_order; ++l) series.push_back({{"eta_order", l}, {"laurent", laurent_json(S[l])}});
        branches.push_back({{"rho", point_name(c.point)}, {"m", m}, {"series", series}});
    }
    return {{"eta_order", c.eta_order}, {"x_order", c.x_order}, {"branches", branches}};
}

std::string exact_value(const PoleSum& v) {
    if (!v.poles().empty() || v.has_logs() || !v.polynomial_part().is_constant())
        throw std::runtime_error("closed form did not evaluate to a rational number");
    return v.polynomial_part().constant_value().str();
}

json cmd_voros(const JobConfig& c) {
    const VorosClosedForm v = voros_terms(c.params, c.point, c.j, c.k);
    json terms = json::array();
    for (const auto& t : v.terms)
        terms.push_back({{"sign", t.sign},
                         {"form", t.form.str()},
                         {"kappa0", t.form.kappa0(c.params).constant_value().str()},
                         {"kappa1", t.form.kappa1(c.params).constant_value().str()}});
    json coeffs = json::array();
    for (int l = 2; l <= c.eta_order; ++l) {
        PoleSum V = voros_bernoulli_sum(v, c.params, l);
        coeffs.push_back({{"ell", l}, {"V", exact_value(V)}, {"value", exact_value(voros_weight(l) * V)}});
    }
    return {{"rho", point_name(c.point)}, {"pair", {c.j, c.k}}, {"terms", terms}, {"coefficients", coeffs}};
}

json verdict_json(const SummabilityVerdict& v) {
    json bad = json::array();
    for (const auto& x : v.violated) bad.push_back({{"form", x.form.str()}, {"real_part", x.real_part}});
    return {{"rho", point_name(v.rho)}, {"pair", {v.j, v.k}}, {"summable", v.summable}, {"violated", bad}};
}

json cmd_borel(const JobConfig& c) {
    const NumericParams np = NumericParams::from(c.params);
    try {
        BorelEvaluation e = borel_sum_voros(np, c.point, c.j, c.k, c.eta, c.eta_order, c.summability_tol);
        json partials = json::array();
        for (std::size_t i = 0; i < e.partials.size(); ++i)
            partials.push_back({{"through_ell", int(i) + 2}, {"value", cplx_json(e.partials[i])}});
        return {{"eta", e.eta},
                {"value", cplx_json(e.value)},
                {"partials", partials},
                {"discrepancy", e.discrepancy},
                {"first_omitted", e.first_omitted},
                {"verdict", verdict_json(e.verdict)}};
    } catch (const NotSummable& ns) {
        json p = error_payload("not_summable", ns.what());
        p["error"]["verdict"] = verdict_json(ns.verdict());
        throw Failure(kComputation, p, ns.what());
    }
}

int cmd_verify(const JobConfig& c, const std::string& suite, const std::string& out) {
    std::vector<std::string> names;
    if (suite == "all")
        names = suite_names();
    else
        names = {suite};
    json report = json::object();
    bool all_ok = true;
    std::fprintf(stderr, "%-10s %8s %8s  %s\n", "suite", "checks", "failed", "status");
    for (const auto& n : names) {
        CheckReport r = run_suite(n, c);
        json entries = json::array();
        for (const auto& e : r.entries) entries.push_back({{"name", e.name}, {"ok", e.ok}, {"detail", e.detail}});
        report[n] = {{"ok", r.ok}, {"checks", r.entries.size()}, {"failed", r.failures()}, {"entries", entries}};
        std::fprintf(stderr, "%-10s %8zu %8d  %s\n", n.c_str(), r.entries.size(), r.failures(), r.ok ? "pass" : "FAIL");
        for (const auto& e : r.entries)
            if (!e.ok) std::fprintf(stderr, "  failed: %s %s\n", e.name.c_str(), e.detail.substr(0, 200).c_str());
        all_ok = all_ok && r.ok;
    }
    emit({{"config", config_to_json(c)}, {"ok", all_ok}, {"suites", report}}, out);
    return all_ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized hypergeometric operators with a large parameter: symbols, turning points, WKB "
                 "series, Voros coefficients and their Borel sums."};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    double tol = 0.0;
    app.add_option("--config", o.config, "Job config (JSON, or TOML when the name ends in .toml)");
    app.add_option("--out", o.out, "Write the result to this file instead of standard output");
    auto* tol_opt = app.add_option("--tol", tol, "Numeric tolerance for turning points and summability");
    auto* sym = app.add_subcommand("symbol", "Total symbol of the operator");
    sym->add_flag("--principal", o.principal, "Only the principal symbol");
    app.add_subcommand("turning-points", "Turning points with their types at the configured point");
    app.add_subcommand("wkb", "Riccati series S_{-1}..S_L of every branch at the configured point");
    app.add_subcommand("voros", "Closed-form Voros coefficients for the configured pair and point");
    app.add_subcommand("borel", "Borel sum of the Voros coefficient at the configured eta");
    auto* ver = app.add_subcommand("verify", "Run verification suites");
    ver->add_option("--suite", o.suite, "algebra|symbol|turning|wkb|voros|borel|all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    if (tol_opt->count()) o.tol = tol;

    try {
        if (ver->parsed()) {
            const auto& names = suite_names();
            if (o.suite != "all" && std::find(names.begin(), names.end(), o.suite) == names.end())
                throw Failure(kUsage, error_payload("usage", "unknown suite \"" + o.suite + "\""),
                              "unknown suite \"" + o.suite + "\"");
        }
        JobConfig c = o.config.empty() ? default_config() : load_config(o.config);
        if (o.tol) {
            if (!(*o.tol >= 0.0)) throw Failure(kUsage, error_payload("usage", "--tol must be nonnegative"), "--tol must be nonnegative");
            c.tp_tol = *o.tol;
            c.summability_tol = *o.tol;
        }
        register_variables(c.params.N);
        const std::string sub = app.get_subcommands().front()->get_name();
        if (sub == "verify") return cmd_verify(c, o.suite, o.out);
        json result;
        if (sub == "symbol")
            result = cmd_symbol(c, o.principal);
        else if (sub == "turning-points")
            result = cmd_turning_points(c);
        else if (sub == "wkb")
            result = cmd_wkb(c);
        else if (sub == "voros")
            result = cmd_voros(c);
        else
            result = cmd_borel(c);
        emit(result, o.out);
        return kOk;
    } catch (const ConfigError& e) {
        json p = error_payload("parse", e.what());
        p["error"]["field"] = e.path();
        std::cout << p.dump(2) << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Failure& f) {
        std::cout << f.payload.dump(2) << "\n";
        std::cerr << "error: " << f.what() << "\n";
        return f.code;
    } catch (const std::exception& e) {
        std::cout << error_payload("computation", e.what()).dump(2) << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return kComputation;
    }
}
