#include "ghg/multipoly.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace ghg {

namespace {

struct Registry {
    std::mutex mu;
    std::deque<std::string> names;
    std::unordered_map<std::string, VarId> ids;
};

Registry& registry() {
    static Registry r;
    return r;
}

}  // namespace

VarId var(std::string_view name) {
    auto& r = registry();
    std::lock_guard lock(r.mu);
    auto it = r.ids.find(std::string(name));
    if (it != r.ids.end()) return it->second;
    if (r.names.size() >= kMaxVars) throw std::length_error("too many polynomial variables");
    VarId id = static_cast<VarId>(r.names.size());
    r.names.emplace_back(name);
    r.ids.emplace(std::string(name), id);
    return id;
}

const std::string& var_name(VarId v) {
    auto& r = registry();
    std::lock_guard lock(r.mu);
    if (v >= r.names.size()) throw std::out_of_range("unknown variable id");
    return r.names[v];
}

std::optional<VarId> find_var(std::string_view name) {
    auto& r = registry();
    std::lock_guard lock(r.mu);
    auto it = r.ids.find(std::string(name));
    if (it == r.ids.end()) return std::nullopt;
    return it->second;
}

int Monomial::total_degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
}

bool Monomial::is_one() const {
    for (auto x : e)
        if (x) return false;
    return true;
}

bool Monomial::divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (e[i] > o.e[i]) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    bool overflow = false;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        unsigned s = unsigned(a.e[i]) + b.e[i];
        overflow |= s > 255;
        r.e[i] = static_cast<std::uint8_t>(s);
    }
    if (overflow) throw std::overflow_error("monomial exponent exceeds 255");
    return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        if (b.e[i] > a.e[i]) throw std::domain_error("monomial not divisible");
        r.e[i] = static_cast<std::uint8_t>(a.e[i] - b.e[i]);
    }
    return r;
}

namespace {

using Terms = std::vector<MultiPoly::Term>;

Terms merge(const Terms& a, const Terms& b, bool negate_b) {
    Terms r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].m > b[j].m) {
            r.push_back(a[i++]);
        } else if (b[j].m > a[i].m) {
            r.push_back(b[j++]);
            if (negate_b) r.back().c = -r.back().c;
        } else {
            Rational c = negate_b ? a[i].c - b[j].c : a[i].c + b[j].c;
            if (!c.is_zero()) r.push_back({a[i].m, std::move(c)});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    for (; j < b.size(); ++j) {
        r.push_back(b[j]);
        if (negate_b) r.back().c = -r.back().c;
    }
    return r;
}

// Heap-ordered product: terms come out in decreasing order and coefficients
// of equal monomials are accumulated in place.
Terms heap_mul(const Terms& a, const Terms& b) {
    struct Node {
        Monomial m;
        std::uint32_t i, j;
    };
    auto less = [](const Node& x, const Node& y) { return x.m < y.m; };
    std::vector<Node> heap;
    heap.reserve(a.size());
    for (std::uint32_t i = 0; i < a.size(); ++i) heap.push_back({a[i].m * b[0].m, i, 0});
    std::make_heap(heap.begin(), heap.end(), less);
    Terms r;
    Rational acc;
    Monomial cur;
    bool have = false;
    auto flush = [&] {
        if (have && !acc.is_zero()) r.push_back({cur, std::move(acc)});
        acc = Rational();
    };
    while (!heap.empty()) {
        std::pop_heap(heap.begin(), heap.end(), less);
        Node& n = heap.back();
        if (have && n.m == cur) {
            acc += a[n.i].c * b[n.j].c;
        } else {
            flush();
            cur = n.m;
            have = true;
            acc = a[n.i].c * b[n.j].c;
        }
        if (n.j + 1 < b.size()) {
            ++n.j;
            n.m = a[n.i].m * b[n.j].m;
            std::push_heap(heap.begin(), heap.end(), less);
        } else {
            heap.pop_back();
        }
    }
    flush();
    return r;
}

}  // namespace

MultiPoly::MultiPoly(const Rational& c) {
    if (!c.is_zero()) t_.push_back({Monomial{}, c});
}

MultiPoly MultiPoly::variable(VarId v, int power) {
    if (power < 0 || power > 255) throw std::out_of_range("variable power out of range");
    Monomial m;
    m.e[v] = static_cast<std::uint8_t>(power);
    return term(m, Rational(1));
}

MultiPoly MultiPoly::term(const Monomial& m, const Rational& c) {
    MultiPoly p;
    if (!c.is_zero()) p.t_.push_back({m, c});
    return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.m > b.m; });
    MultiPoly p;
    for (auto& t : terms) {
        if (!p.t_.empty() && p.t_.back().m == t.m) {
            p.t_.back().c += t.c;
            if (p.t_.back().c.is_zero()) p.t_.pop_back();
        } else if (!t.c.is_zero()) {
            p.t_.push_back(std::move(t));
        }
    }
    return p;
}

Rational MultiPoly::constant_value() const {
    if (!is_constant()) throw std::domain_error("polynomial is not constant: " + str());
    return t_.empty() ? Rational(0) : t_[0].c;
}

Rational MultiPoly::constant_term() const {
    if (!t_.empty() && t_.back().m.is_one()) return t_.back().c;
    return Rational(0);
}

int MultiPoly::degree(VarId v) const {
    if (t_.empty()) return -1;
    int d = 0;
    for (const auto& t : t_) d = std::max(d, int(t.m.e[v]));
    return d;
}

int MultiPoly::total_degree() const {
    if (t_.empty()) return -1;
    int d = 0;
    for (const auto& t : t_) d = std::max(d, t.m.total_degree());
    return d;
}

std::vector<VarId> MultiPoly::variables() const {
    std::array<bool, kMaxVars> seen{};
    for (const auto& t : t_)
        for (std::size_t i = 0; i < kMaxVars; ++i)
            if (t.m.e[i]) seen[i] = true;
    std::vector<VarId> r;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (seen[i]) r.push_back(static_cast<VarId>(i));
    return r;
}

MultiPoly MultiPoly::coeff(VarId v, int k) const {
    std::vector<Term> r;
    for (const auto& t : t_) {
        if (t.m.e[v] != k) continue;
        Term u = t;
        u.m.e[v] = 0;
        r.push_back(std::move(u));
    }
    return from_terms(std::move(r));
}

std::vector<MultiPoly> MultiPoly::coeffs(VarId v) const {
    int d = degree(v);
    std::vector<std::vector<Term>> buckets(std::max(d + 1, 0));
    for (const auto& t : t_) {
        Term u = t;
        int k = u.m.e[v];
        u.m.e[v] = 0;
        buckets[k].push_back(std::move(u));
    }
    std::vector<MultiPoly> r;
    r.reserve(buckets.size());
    for (auto& b : buckets) r.push_back(from_terms(std::move(b)));
    return r;
}

MultiPoly MultiPoly::derivative(VarId v) const {
    std::vector<Term> r;
    for (const auto& t : t_) {
        int k = t.m.e[v];
        if (!k) continue;
        Term u = t;
        u.m.e[v] = static_cast<std::uint8_t>(k - 1);
        u.c *= Rational(k);
        r.push_back(std::move(u));
    }
    return from_terms(std::move(r));
}

MultiPoly MultiPoly::substitute(VarId v, const MultiPoly& s) const {
    auto cs = coeffs(v);
    MultiPoly r;
    for (std::size_t k = cs.size(); k-- > 0;) r = r * s + cs[k];
    return r;
}

MultiPoly MultiPoly::substitute(const std::map<VarId, MultiPoly>& s) const {
    // Simultaneous substitution: route through fresh powers per variable.
    std::map<VarId, std::vector<MultiPoly>> powers;
    for (const auto& [v, p] : s) powers[v].push_back(MultiPoly(1));
    MultiPoly r;
    std::vector<Term> keep;
    for (const auto& t : t_) {
        Term rest = t;
        MultiPoly factor(t.c);
        bool touched = false;
        for (const auto& [v, p] : s) {
            int k = rest.m.e[v];
            if (!k) continue;
            touched = true;
            auto& pw = powers[v];
            while (int(pw.size()) <= k) pw.push_back(pw.back() * p);
            factor *= pw[k];
            rest.m.e[v] = 0;
        }
        if (!touched) {
            keep.push_back(t);
            continue;
        }
        rest.c = Rational(1);
        r += factor * term(rest.m, Rational(1));
    }
    return r + from_terms(std::move(keep));
}

Rational MultiPoly::evaluate(const std::map<VarId, Rational>& vals) const {
    Rational r;
    for (const auto& t : t_) {
        Rational c = t.c;
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            if (!t.m.e[i]) continue;
            auto it = vals.find(static_cast<VarId>(i));
            if (it == vals.end()) throw std::domain_error("unbound variable " + var_name(static_cast<VarId>(i)));
            c *= it->second.pow(t.m.e[i]);
        }
        r += c;
    }
    return r;
}

std::complex<double> MultiPoly::evaluate(const std::map<VarId, std::complex<double>>& vals) const {
    std::complex<double> r;
    for (const auto& t : t_) {
        std::complex<double> c = t.c.to_double();
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            if (!t.m.e[i]) continue;
            auto it = vals.find(static_cast<VarId>(i));
            if (it == vals.end()) throw std::domain_error("unbound variable " + var_name(static_cast<VarId>(i)));
            for (int k = 0; k < t.m.e[i]; ++k) c *= it->second;
        }
        r += c;
    }
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r(1), b(*this);
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    if (c.is_zero()) return {};
    MultiPoly r(*this);
    for (auto& t : r.t_) t.c *= c;
    return r;
}

MultiPoly MultiPoly::monic() const {
    if (t_.empty()) return {};
    return scaled(t_[0].c.inverse());
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    if (is_zero()) return MultiPoly{};
    if (d.is_constant()) return scaled(d.constant_value().inverse());
    for (VarId v : d.variables())
        if (degree(v) < d.degree(v)) return std::nullopt;
    if (d.size() == 1) {
        MultiPoly q;
        Rational inv = d.lead().c.inverse();
        for (const auto& t : t_) {
            if (!d.lead().m.divides(t.m)) return std::nullopt;
            q.t_.push_back({t.m / d.lead().m, t.c * inv});
        }
        return q;
    }
    std::map<Monomial, Rational, std::greater<Monomial>> rem;
    for (const auto& t : t_) rem.emplace(t.m, t.c);
    const Term& dl = d.lead();
    Rational dinv = dl.c.inverse();
    MultiPoly q;
    while (!rem.empty()) {
        auto it = rem.begin();
        if (!dl.m.divides(it->first)) return std::nullopt;
        Monomial qm = it->first / dl.m;
        Rational qc = it->second * dinv;
        rem.erase(it);
        for (std::size_t k = 1; k < d.t_.size(); ++k) {
            Monomial m = d.t_[k].m * qm;
            auto [pos, inserted] = rem.try_emplace(m, Rational());
            pos->second -= d.t_[k].c * qc;
            if (pos->second.is_zero()) rem.erase(pos);
        }
        q.t_.push_back({qm, std::move(qc)});
    }
    return q;
}

std::optional<int> MultiPoly::homogeneous_degree(const std::vector<VarId>& vars) const {
    if (t_.empty()) return std::nullopt;
    std::optional<int> deg;
    for (const auto& t : t_) {
        int d = 0;
        for (VarId v : vars) d += t.m.e[v];
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg;
}

std::string MultiPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : t_) {
        Rational c = t.c;
        bool neg = c.sign() < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool unit = c.is_one() && !t.m.is_one();
        if (!unit) os << c;
        bool need_star = !unit;
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            if (!t.m.e[i]) continue;
            if (need_star) os << "*";
            os << var_name(static_cast<VarId>(i));
            if (t.m.e[i] > 1) os << "^" << int(t.m.e[i]);
            need_star = true;
        }
    }
    return os.str();
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    t_ = merge(t_, o.t_, false);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    t_ = merge(t_, o.t_, true);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    *this = *this * o;
    return *this;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    r.t_ = merge(a.t_, b.t_, false);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    r.t_ = merge(a.t_, b.t_, true);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    if (a.t_.empty() || b.t_.empty()) return r;
    if (a.t_.size() <= b.t_.size())
        r.t_ = heap_mul(a.t_, b.t_);
    else
        r.t_ = heap_mul(b.t_, a.t_);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& t : r.t_) t.c = -t.c;
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (std::size_t i = 0; i < a.t_.size(); ++i)
        if (!(a.t_[i].m == b.t_[i].m) || a.t_[i].c != b.t_[i].c) return false;
    return true;
}

bool operator<(const MultiPoly& a, const MultiPoly& b) {
    std::size_t n = std::min(a.t_.size(), b.t_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.t_[i].m < b.t_[i].m) return true;
        if (b.t_[i].m < a.t_[i].m) return false;
        if (a.t_[i].c < b.t_[i].c) return true;
        if (b.t_[i].c < a.t_[i].c) return false;
    }
    return a.t_.size() < b.t_.size();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

}  // namespace ghg
