#include "ghg/polesum.hpp"

#include <ostream>
#include <stdexcept>

namespace ghg {

namespace {

void check_form(const MultiPoly& form) {
    if (form.is_zero()) throw std::domain_error("pole or logarithm at a zero linear form");
    if (form.total_degree() > 1) throw std::invalid_argument("pole form must be linear: " + form.str());
}

template <class K>
void accumulate(std::map<K, MultiPoly>& m, const K& key, const MultiPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = m.try_emplace(key, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
}

MultiPoly integrate_poly(const MultiPoly& p, VarId v) {
    std::vector<MultiPoly::Term> out;
    for (const auto& t : p.terms()) {
        Monomial m = t.m;
        int e = m.e[v] + 1;
        if (e > 255) throw std::overflow_error("monomial exponent exceeds 255");
        m.e[v] = static_cast<std::uint8_t>(e);
        out.push_back({m, t.c * Rational(1, e)});
    }
    return MultiPoly::from_terms(std::move(out));
}

}  // namespace

void PoleSum::add_pole(const MultiPoly& monic_form, int k, const MultiPoly& c) {
    accumulate(poles_, std::make_pair(monic_form, k), c);
}

void PoleSum::add_log(const MultiPoly& monic_form, const MultiPoly& d) { accumulate(logs_, monic_form, d); }

void PoleSum::add_const_log(const Rational& s, const MultiPoly& e) {
    if (s.is_one()) return;
    accumulate(const_logs_, s, e);
}

PoleSum PoleSum::pole(const MultiPoly& form, int k, const MultiPoly& c) {
    if (k < 1) throw std::invalid_argument("pole order must be positive");
    check_form(form);
    PoleSum r;
    if (form.is_constant()) {
        r.poly_ = c.scaled(form.constant_value().inverse().pow(k));
        return r;
    }
    Rational s = form.lead().c;
    r.add_pole(form.monic(), k, c.scaled(s.inverse().pow(k)));
    return r;
}

PoleSum PoleSum::log(const MultiPoly& form, const MultiPoly& d) {
    check_form(form);
    PoleSum r;
    if (form.is_constant()) {
        r.add_const_log(form.constant_value(), d);
        return r;
    }
    r.add_const_log(form.lead().c, d);
    r.add_log(form.monic(), d);
    return r;
}

PoleSum& PoleSum::operator+=(const PoleSum& o) {
    poly_ += o.poly_;
    for (const auto& [key, c] : o.poles_) accumulate(poles_, key, c);
    for (const auto& [f, d] : o.logs_) accumulate(logs_, f, d);
    for (const auto& [s, e] : o.const_logs_) accumulate(const_logs_, s, e);
    return *this;
}

PoleSum& PoleSum::operator-=(const PoleSum& o) { return *this += -o; }

PoleSum PoleSum::scaled(const MultiPoly& c) const {
    PoleSum r;
    if (c.is_zero()) return r;
    r.poly_ = poly_ * c;
    for (const auto& [key, x] : poles_) r.poles_.emplace(key, x * c);
    for (const auto& [f, d] : logs_) r.logs_.emplace(f, d * c);
    for (const auto& [s, e] : const_logs_) r.const_logs_.emplace(s, e * c);
    return r;
}

PoleSum PoleSum::derivative(VarId v) const {
    PoleSum r;
    r.poly_ = poly_.derivative(v);
    for (const auto& [key, c] : poles_) {
        const auto& [f, k] = key;
        r.add_pole(f, k, c.derivative(v));
        Rational s = f.coeff(v, 1).constant_value();
        if (!s.is_zero()) r.add_pole(f, k + 1, c.scaled(Rational(-k) * s));
    }
    for (const auto& [f, d] : logs_) {
        r.add_log(f, d.derivative(v));
        Rational s = f.coeff(v, 1).constant_value();
        if (!s.is_zero()) r.add_pole(f, 1, d.scaled(s));
    }
    for (const auto& [s, e] : const_logs_) r.add_const_log(s, e.derivative(v));
    return r;
}

std::optional<PoleSum> PoleSum::integral(VarId v) const {
    PoleSum r;
    r.poly_ = integrate_poly(poly_, v);
    for (const auto& [key, c] : poles_) {
        const auto& [f, k] = key;
        Rational s = f.coeff(v, 1).constant_value();
        if (s.is_zero() || c.depends_on(v)) return std::nullopt;
        if (k == 1)
            r.add_log(f, c.scaled(s.inverse()));
        else
            r.add_pole(f, k - 1, c.scaled((s * Rational(1 - k)).inverse()));
    }
    if (!logs_.empty()) return std::nullopt;
    for (const auto& [s, e] : const_logs_) r.add_const_log(s, integrate_poly(e, v));
    return r;
}

std::string PoleSum::str() const {
    std::string s;
    auto add = [&s](const std::string& coeff, const std::string& atom) {
        if (!s.empty()) s += " + ";
        s += "(" + coeff + ")" + atom;
    };
    if (!poly_.is_zero() || is_zero()) s = poly_.str();
    for (const auto& [key, c] : poles_)
        add(c.str(), "/(" + key.first.str() + ")" + (key.second > 1 ? "^" + std::to_string(key.second) : ""));
    for (const auto& [f, d] : logs_) add(d.str(), "*log(" + f.str() + ")");
    for (const auto& [q, e] : const_logs_) add(e.str(), "*log(" + q.str() + ")");
    return s;
}

std::ostream& operator<<(std::ostream& os, const PoleSum& s) { return os << s.str(); }

}  // namespace ghg
