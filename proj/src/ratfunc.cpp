#include "ghg/ratfunc.hpp"

#include <deque>
#include <mutex>
#include <ostream>
#include <stdexcept>

namespace ghg {

namespace {

struct AtomTable {
    std::mutex mu;
    std::deque<MultiPoly> polys;
    std::map<MultiPoly, int> index;
};

AtomTable& atoms() {
    static AtomTable t;
    return t;
}

std::vector<std::pair<int, MultiPoly>> atom_snapshot() {
    auto& t = atoms();
    std::lock_guard lock(t.mu);
    std::vector<std::pair<int, MultiPoly>> r;
    for (std::size_t i = 0; i < t.polys.size(); ++i) r.emplace_back(int(i), t.polys[i]);
    return r;
}

MultiPoly expand(const std::map<int, int>& f) {
    MultiPoly r(1);
    for (const auto& [id, e] : f) r *= RatFunc::atom_poly(id).pow(e);
    return r;
}

// Split p = c * prod(atom^e) * rest with rest free of known atoms.
struct Split {
    std::map<int, int> exps;
    MultiPoly rest;
};

Split split_over_atoms(MultiPoly p) {
    Split s;
    for (const auto& [id, a] : atom_snapshot()) {
        while (true) {
            auto q = p.divide_exact(a);
            if (!q) break;
            p = std::move(*q);
            ++s.exps[id];
        }
    }
    s.rest = std::move(p);
    return s;
}

}  // namespace

int RatFunc::atom(const MultiPoly& p) {
    if (p.is_constant()) throw std::invalid_argument("constant polynomial cannot be an atom");
    MultiPoly m = p.monic();
    auto& t = atoms();
    std::lock_guard lock(t.mu);
    auto it = t.index.find(m);
    if (it != t.index.end()) return it->second;
    int id = int(t.polys.size());
    t.polys.push_back(m);
    t.index.emplace(std::move(m), id);
    return id;
}

const MultiPoly& RatFunc::atom_poly(int id) {
    auto& t = atoms();
    std::lock_guard lock(t.mu);
    return t.polys.at(static_cast<std::size_t>(id));
}

RatFunc RatFunc::fraction(const MultiPoly& p, const MultiPoly& q) {
    if (q.is_zero()) throw std::domain_error("rational function with zero denominator");
    return RatFunc(p) * RatFunc(q).inverse();
}

MultiPoly RatFunc::denominator() const { return expand(den_); }

Rational RatFunc::constant_value() const {
    if (!den_.empty()) throw std::domain_error("rational function is not constant: " + str());
    return num_.constant_value();
}

void RatFunc::cancel() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto it = den_.begin(); it != den_.end();) {
        const MultiPoly& a = atom_poly(it->first);
        while (it->second > 0) {
            auto q = num_.divide_exact(a);
            if (!q) break;
            num_ = std::move(*q);
            --it->second;
        }
        it = it->second == 0 ? den_.erase(it) : std::next(it);
    }
}

RatFunc RatFunc::inverse() const {
    if (num_.is_zero()) throw std::domain_error("inverse of zero rational function");
    Split s = split_over_atoms(num_);
    MultiPoly rest = s.rest;
    if (!rest.is_constant()) {
        int id = atom(rest);
        Rational lc = rest.lead().c;
        ++s.exps[id];
        rest = MultiPoly(lc);
    }
    RatFunc r;
    r.num_ = expand(den_).scaled(rest.constant_value().inverse());
    r.den_ = std::move(s.exps);
    r.cancel();
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (o.num_.is_zero()) return *this;
    if (num_.is_zero()) return *this = o;
    std::map<int, int> den = den_;
    for (const auto& [id, e] : o.den_) den[id] = std::max(den[id], e);
    std::map<int, int> fa, fb;
    for (const auto& [id, e] : den) {
        auto ia = den_.find(id);
        auto ib = o.den_.find(id);
        int ea = ia == den_.end() ? 0 : ia->second;
        int eb = ib == o.den_.end() ? 0 : ib->second;
        if (e > ea) fa[id] = e - ea;
        if (e > eb) fb[id] = e - eb;
    }
    num_ = num_ * expand(fa) + o.num_ * expand(fb);
    den_ = std::move(den);
    cancel();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    if (num_.is_zero() || o.num_.is_zero()) return *this = RatFunc();
    num_ *= o.num_;
    for (const auto& [id, e] : o.den_) den_[id] += e;
    cancel();
    return *this;
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

bool operator==(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.denominator() == b.num_ * a.denominator();
}

RatFunc RatFunc::derivative(VarId v) const {
    RatFunc r(num_.derivative(v));
    for (const auto& [id, e] : den_) {
        const MultiPoly& a = atom_poly(id);
        MultiPoly da = a.derivative(v);
        if (da.is_zero()) continue;
        // d/dv a^{-e} = -e a' a^{-e-1}
        RatFunc t(num_ * da.scaled(Rational(-e)));
        t.den_[id] = 1;
        t.cancel();
        r += t;
    }
    RatFunc out;
    out.num_ = MultiPoly(1);
    out.den_ = den_;
    return r * out;
}

RatFunc RatFunc::substitute(const std::map<VarId, MultiPoly>& s) const {
    RatFunc r(num_.substitute(s));
    for (const auto& [id, e] : den_) {
        MultiPoly a = atom_poly(id).substitute(s);
        if (a.is_zero()) throw std::domain_error("substitution annihilates a denominator");
        RatFunc ai = RatFunc(a).inverse();
        for (int k = 0; k < e; ++k) r *= ai;
    }
    return r;
}

Rational RatFunc::evaluate(const std::map<VarId, Rational>& vals) const {
    Rational d(1);
    for (const auto& [id, e] : den_) d *= atom_poly(id).evaluate(vals).pow(e);
    if (d.is_zero()) throw std::domain_error("evaluation at a pole");
    return num_.evaluate(vals) / d;
}

std::complex<double> RatFunc::evaluate(const std::map<VarId, std::complex<double>>& vals) const {
    std::complex<double> d(1);
    for (const auto& [id, e] : den_) d *= std::pow(atom_poly(id).evaluate(vals), e);
    return num_.evaluate(vals) / d;
}

std::string RatFunc::str() const {
    if (den_.empty()) return num_.str();
    std::string s = "(" + num_.str() + ")/(";
    bool first = true;
    for (const auto& [id, e] : den_) {
        if (!first) s += "*";
        first = false;
        s += "(" + atom_poly(id).str() + ")";
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.str(); }

}  // namespace ghg
