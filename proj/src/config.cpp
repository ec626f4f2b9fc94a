#include "ghg/config.hpp"

#include <toml.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ghg {

namespace {

using nlohmann::json;

Rational rational_field(const json& v, const std::string& path) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (!v.is_string()) throw ConfigError(path, "expected a rational string such as \"3/4\"");
    try {
        return Rational::parse(v.get<std::string>());
    } catch (const std::exception& e) {
        throw ConfigError(path, e.what());
    }
}

int int_field(const json& v, const std::string& path) {
    if (!v.is_number_integer()) throw ConfigError(path, "expected an integer");
    return v.get<int>();
}

double number_field(const json& v, const std::string& path) {
    if (!v.is_number()) throw ConfigError(path, "expected a number");
    return v.get<double>();
}

std::vector<std::pair<Rational, Rational>> pairs_field(const json& v, const std::string& name, std::size_t n) {
    if (!v.is_array()) throw ConfigError(name, "expected a list of [x0, x1] pairs");
    if (v.size() != n) throw ConfigError(name, "expected " + std::to_string(n) + " entries, got " + std::to_string(v.size()));
    std::vector<std::pair<Rational, Rational>> out;
    for (std::size_t i = 0; i < n; ++i) {
        const std::string p = name + "[" + std::to_string(i) + "]";
        if (!v[i].is_array() || v[i].size() != 2) throw ConfigError(p, "expected a pair [x0, x1]");
        out.emplace_back(rational_field(v[i][0], p + "[0]"), rational_field(v[i][1], p + "[1]"));
    }
    return out;
}

json toml_to_json(const toml::node& n) {
    if (const auto* t = n.as_table()) {
        json o = json::object();
        for (const auto& [k, v] : *t) o[std::string(k.str())] = toml_to_json(v);
        return o;
    }
    if (const auto* a = n.as_array()) {
        json arr = json::array();
        for (const auto& v : *a) arr.push_back(toml_to_json(v));
        return arr;
    }
    if (auto v = n.value_exact<std::string>()) return *v;
    if (auto v = n.value_exact<int64_t>()) return *v;
    if (auto v = n.value_exact<double>()) return *v;
    if (auto v = n.value_exact<bool>()) return *v;
    throw ConfigError("line " + std::to_string(n.source().begin.line), "unsupported TOML value type");
}

}  // namespace

JobConfig default_config() {
    JobConfig c;
    using R = Rational;
    c.params = ParameterSet::exact(3, {{R(1, 3), R(2)}, {R(1, 2), R(3)}, {R(-1, 4), R(5)}},
                                   {{R(1, 5), R(7)}, {R(2, 7), R(11, 2)}});
    return c;
}

JobConfig parse_config(const json& j) {
    if (!j.is_object()) throw ConfigError("$", "config must be an object");
    static const std::vector<std::string> known = {"N", "a", "b", "truncation", "pair", "point", "eta", "tolerance"};
    for (const auto& [key, v] : j.items()) {
        (void)v;
        if (std::find(known.begin(), known.end(), key) == known.end()) throw ConfigError(key, "unknown field");
    }
    JobConfig c = default_config();
    if (!j.contains("N")) throw ConfigError("N", "missing field");
    const int N = int_field(j["N"], "N");
    if (N < 2) throw ConfigError("N", "N must be at least 2");
    if (!j.contains("a")) throw ConfigError("a", "missing field");
    if (!j.contains("b")) throw ConfigError("b", "missing field");
    auto a = pairs_field(j["a"], "a", std::size_t(N));
    auto b = pairs_field(j["b"], "b", std::size_t(N - 1));
    c.params = ParameterSet::exact(N, a, b);
    if (j.contains("truncation")) {
        const json& t = j["truncation"];
        if (!t.is_object()) throw ConfigError("truncation", "expected an object");
        for (const auto& [key, v] : t.items()) {
            if (key == "eta_order")
                c.eta_order = int_field(v, "truncation.eta_order");
            else if (key == "x_order")
                c.x_order = int_field(v, "truncation.x_order");
            else
                throw ConfigError("truncation." + key, "unknown field");
        }
        if (c.eta_order < 2) throw ConfigError("truncation.eta_order", "must be at least 2");
        if (c.x_order < 1) throw ConfigError("truncation.x_order", "must be positive");
    }
    if (j.contains("pair")) {
        const json& p = j["pair"];
        if (!p.is_array() || p.size() != 2) throw ConfigError("pair", "expected [j, k]");
        c.j = int_field(p[0], "pair[0]");
        c.k = int_field(p[1], "pair[1]");
        if (!(1 <= c.j && c.j < c.k && c.k <= N)) throw ConfigError("pair", "need 1 <= j < k <= N");
    }
    if (j.contains("point")) {
        const json& p = j["point"];
        if (p == "0" || p == 0)
            c.point = Point::Zero;
        else if (p == "inf")
            c.point = Point::Infinity;
        else
            throw ConfigError("point", "expected \"0\" or \"inf\"");
    }
    if (j.contains("eta")) {
        c.eta = number_field(j["eta"], "eta");
        if (!(c.eta > 0.0)) throw ConfigError("eta", "must be positive");
    }
    if (j.contains("tolerance")) {
        const json& t = j["tolerance"];
        if (!t.is_object()) throw ConfigError("tolerance", "expected an object");
        for (const auto& [key, v] : t.items()) {
            if (key == "turning_points")
                c.tp_tol = number_field(v, "tolerance.turning_points");
            else if (key == "summability")
                c.summability_tol = number_field(v, "tolerance.summability");
            else
                throw ConfigError("tolerance." + key, "unknown field");
        }
    }
    return c;
}

json parse_toml(const std::string& text) {
    try {
        return toml_to_json(toml::parse(text));
    } catch (const toml::parse_error& e) {
        throw ConfigError("line " + std::to_string(e.source().begin.line), std::string(e.description()));
    }
}

JobConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path, "cannot open config file");
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    const bool toml = path.size() >= 5 && path.compare(path.size() - 5, 5, ".toml") == 0;
    json j;
    if (toml) {
        j = parse_toml(text);
    } else {
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            throw ConfigError("byte " + std::to_string(e.byte), e.what());
        }
    }
    return parse_config(j);
}

json config_to_json(const JobConfig& c) {
    const ParameterSet& p = c.params;
    json a = json::array(), b = json::array();
    for (int i = 0; i < p.N; ++i) a.push_back({p.value_a(i + 1, 0).str(), p.value_a(i + 1, 1).str()});
    for (int i = 0; i + 1 < p.N; ++i) b.push_back({p.value_b(i + 1, 0).str(), p.value_b(i + 1, 1).str()});
    return {{"N", p.N},
            {"a", a},
            {"b", b},
            {"truncation", {{"eta_order", c.eta_order}, {"x_order", c.x_order}}},
            {"pair", {c.j, c.k}},
            {"point", point_name(c.point)},
            {"eta", c.eta},
            {"tolerance", {{"turning_points", c.tp_tol}, {"summability", c.summability_tol}}}};
}

}  // namespace ghg
