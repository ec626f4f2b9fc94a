#include "ghg/voros.hpp"

#include "ghg/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace ghg {

namespace {

using LF = LinearForm;

LinearForm combine(const LinearForm& x, const LinearForm& y, int s) {
    LinearForm r = x;
    r.constant += s < 0 ? -y.constant : y.constant;
    for (const auto& [q, c] : y.coef) {
        auto it = std::find_if(r.coef.begin(), r.coef.end(), [&](const auto& e) { return e.first == q; });
        if (it == r.coef.end()) {
            r.coef.emplace_back(q, s * c);
        } else {
            it->second += s * c;
            if (it->second == 0) r.coef.erase(it);
        }
    }
    return r;
}

void check_pair(int N, int j, int k) {
    if (j < 1 || k < 1 || j > N || k > N || j == k) throw std::invalid_argument("invalid index pair");
}

VorosClosedForm negated(VorosClosedForm v) {
    std::swap(v.j, v.k);
    for (auto& t : v.terms) t.sign = -t.sign;
    return v;
}

}  // namespace

LinearForm LinearForm::of(ShiftParam q) {
    LinearForm f;
    f.coef.emplace_back(q, 1);
    return f;
}

LinearForm LinearForm::operator+(const LinearForm& o) const { return combine(*this, o, 1); }
LinearForm LinearForm::operator-(const LinearForm& o) const { return combine(*this, o, -1); }
LinearForm LinearForm::operator+(const Rational& c) const {
    LinearForm r = *this;
    r.constant += c;
    return r;
}
LinearForm LinearForm::operator-() const { return LinearForm{} - *this; }

int LinearForm::coefficient(ShiftParam q) const {
    for (const auto& [p, c] : coef)
        if (p == q) return c;
    return 0;
}

MultiPoly LinearForm::kappa0(const ParameterSet& p) const {
    MultiPoly r(constant);
    for (const auto& [q, c] : coef) r += p.entry(q, 0).scaled(Rational(c));
    return r;
}

MultiPoly LinearForm::kappa1(const ParameterSet& p) const {
    MultiPoly r;
    for (const auto& [q, c] : coef) r += p.entry(q, 1).scaled(Rational(c));
    return r;
}

namespace {

std::complex<double> numeric_entry(const NumericParams& p, ShiftParam q, int k) {
    const auto& v = q.kind == ParamKind::A ? (k ? p.a1 : p.a0) : (k ? p.b1 : p.b0);
    return v.at(std::size_t(q.index - 1));
}

}  // namespace

std::complex<double> LinearForm::kappa0(const NumericParams& p) const {
    std::complex<double> r = constant.to_double();
    for (const auto& [q, c] : coef) r += double(c) * numeric_entry(p, q, 0);
    return r;
}

std::complex<double> LinearForm::kappa1(const NumericParams& p) const {
    std::complex<double> r = 0.0;
    for (const auto& [q, c] : coef) r += double(c) * numeric_entry(p, q, 1);
    return r;
}

std::string LinearForm::str() const {
    std::string s;
    for (const auto& [q, c] : coef) {
        std::string name = std::string(q.kind == ParamKind::A ? "a" : "b") + std::to_string(q.index);
        if (s.empty())
            s = c == 1 ? name : c == -1 ? "-" + name : std::to_string(c) + "*" + name;
        else
            s += (c > 0 ? " + " : " - ") + (std::abs(c) == 1 ? name : std::to_string(std::abs(c)) + "*" + name);
    }
    if (!constant.is_zero() || s.empty()) {
        if (s.empty())
            s = constant.str();
        else
            s += (constant.sign() > 0 ? " + " : " - ") + constant.abs().str();
    }
    return s;
}

VorosClosedForm voros_terms(int N, Point rho, int j, int k) {
    check_pair(N, j, k);
    if (j > k) return negated(voros_terms(N, rho, k, j));
    VorosClosedForm v{rho, j, k, {}};
    auto add = [&v](int s, const LinearForm& f) { v.terms.push_back({s, f}); };
    const LF bj = LF::b(j);
    if (rho == Point::Zero && k != N) {
        const LF bk = LF::b(k);
        add(1, bj - Rational(1));
        add(-1, bk - Rational(1));
        for (int i = 1; i <= N; ++i) add(1, bk - LF::a(i));
        for (int i = 1; i <= N; ++i) add(-1, bj - LF::a(i));
        for (int m = 1; m < N; ++m)
            if (m != j) add(1, bj - LF::b(m));
        for (int m = 1; m < N; ++m)
            if (m != k) add(-1, bk - LF::b(m));
    } else if (rho == Point::Zero) {
        add(1, bj - Rational(1));
        for (int i = 1; i <= N; ++i) add(-1, LF::a(i));
        for (int i = 1; i <= N; ++i) add(-1, bj - LF::a(i));
        for (int m = 1; m < N; ++m)
            if (m != j) add(1, bj - LF::b(m));
        for (int m = 1; m < N; ++m) add(1, LF::b(m));
    } else {
        const LF aj = LF::a(j), ak = LF::a(k);
        for (int m = 1; m < N; ++m) add(1, LF::b(m) - ak);
        for (int m = 1; m < N; ++m) add(-1, LF::b(m) - aj);
        add(1, aj);
        for (int i = 1; i <= N; ++i)
            if (i != j) add(1, LF::a(i) - aj);
        add(-1, ak);
        for (int i = 1; i <= N; ++i)
            if (i != k) add(-1, LF::a(i) - ak);
    }
    return v;
}

VorosClosedForm voros_terms(const ParameterSet& p, Point rho, int j, int k) {
    VorosClosedForm v = voros_terms(p.N, rho, j, k);
    for (const auto& t : v.terms)
        if (t.form.kappa1(p).is_zero())
            throw std::domain_error("non-generic parameter direction: " + t.form.str() + " has zero eta-part");
    return v;
}

VorosClosedForm voros_terms_n3_display(Point rho, int j, int k) {
    check_pair(3, j, k);
    if (j > k) return negated(voros_terms_n3_display(rho, k, j));
    VorosClosedForm v{rho, j, k, {}};
    auto add = [&v](int s, const LinearForm& f) { v.terms.push_back({s, f}); };
    if (rho == Point::Infinity) {
        const LF aj = LF::a(j), ak = LF::a(k);
        for (int m = 1; m <= 2; ++m) {
            add(1, LF::b(m) - ak);
            add(-1, LF::b(m) - aj);
        }
        add(1, aj);
        for (int i = 1; i <= 3; ++i)
            if (i != j) add(1, LF::a(i) - aj);
        add(-1, ak);
        for (int i = 1; i <= 3; ++i)
            if (i != k) add(-1, LF::a(i) - ak);
        return v;
    }
    const LF b1 = LF::b(1), b2 = LF::b(2);
    if (k == 2) {
        for (int i = 1; i <= 3; ++i)
            for (int jj = 1; jj <= 2; ++jj) add(jj % 2 ? -1 : 1, LF::b(jj) - LF::a(i));
        add(1, b1 - Rational(1));
        add(-1, b2 - Rational(1));
        add(1, b1 - b2 + Rational(1));
        add(1, b1 - b2);
        return v;
    }
    const LF bj = LF::b(j), bo = LF::b(3 - j);
    for (int i = 1; i <= 3; ++i) add(-1, bj - LF::a(i));
    for (int i = 1; i <= 3; ++i) add(-1, LF::a(i));
    add(1, bj);
    add(1, bj - Rational(1));
    add(1, bo);
    add(1, bj - bo);
    return v;
}

PoleSum voros_bernoulli_sum(const VorosClosedForm& v, const ParameterSet& p, int l) {
    if (l < 2) throw std::invalid_argument("Bernoulli sums start at l = 2");
    PoleSum s;
    for (const auto& t : v.terms) {
        MultiPoly k1 = t.form.kappa1(p);
        if (k1.is_zero()) throw std::domain_error("non-generic parameter direction: " + t.form.str());
        MultiPoly num = bernoulli_at(unsigned(l), t.form.kappa0(p));
        s += PoleSum::pole(k1, l - 1, t.sign > 0 ? num : -num);
    }
    return s;
}

std::complex<double> voros_bernoulli_sum(const VorosClosedForm& v, const NumericParams& p, int l) {
    if (l < 2) throw std::invalid_argument("Bernoulli sums start at l = 2");
    std::complex<double> s = 0.0;
    for (const auto& t : v.terms) {
        std::complex<double> k1 = t.form.kappa1(p);
        if (k1 == 0.0) throw std::domain_error("non-generic parameter direction: " + t.form.str());
        s += double(t.sign) * bernoulli_at(unsigned(l), t.form.kappa0(p)) / std::pow(k1, l - 1);
    }
    return s;
}

Rational voros_weight(int l) { return Rational(l % 2 ? 1 : -1, 2L * l * (l - 1)); }

EtaSeries<PoleSum> voros_series(const ParameterSet& p, Point rho, int j, int k, int L) {
    VorosClosedForm v = voros_terms(p, rho, j, k);
    EtaSeries<PoleSum> s(-1, L - 1);
    for (int l = 2; l <= L; ++l) s.at(l - 1) = voros_weight(l) * voros_bernoulli_sum(v, p, l);
    return s;
}

EtaSeries<std::complex<double>> voros_series(const NumericParams& p, Point rho, int j, int k, int L) {
    VorosClosedForm v = voros_terms(p.N, rho, j, k);
    EtaSeries<std::complex<double>> s(-1, L - 1);
    for (int l = 2; l <= L; ++l) s.at(l - 1) = voros_weight(l).to_double() * voros_bernoulli_sum(v, p, l);
    return s;
}

namespace {

std::string pair_name(Point rho, int j, int k) {
    return std::string("V_") + point_name(rho) + "^(" + std::to_string(j) + "," + std::to_string(k) + ")";
}

}  // namespace

CheckReport cocycle_check(const ParameterSet& p, Point rho, int j, int k, int m, int L) {
    if (j == k || k == m || j == m) throw std::invalid_argument("cocycle needs three distinct indices");
    auto jk = voros_series(p, rho, j, k, L);
    auto km = voros_series(p, rho, k, m, L);
    auto jm = voros_series(p, rho, j, m, L);
    auto kj = voros_series(p, rho, k, j, L);
    CheckReport r;
    for (int n = -1; n < L; ++n) {
        PoleSum d = jk[n] + km[n] - jm[n];
        r.add("cocycle " + pair_name(rho, j, k) + " + " + pair_name(rho, k, m) + " eta^" + std::to_string(-n),
              d.is_zero(), d.is_zero() ? "" : d.str());
        PoleSum a = jk[n] + kj[n];
        r.add("antisymmetry " + pair_name(rho, j, k) + " eta^" + std::to_string(-n), a.is_zero(),
              a.is_zero() ? "" : a.str());
    }
    return r;
}

CheckReport homogeneity_check(const ParameterSet& p, Point rho, int j, int k, const Rational& lambda, int L) {
    if (lambda.is_zero()) throw std::invalid_argument("zero scaling factor");
    auto v = voros_series(p, rho, j, k, L);
    auto w = voros_series(p.scale_linear(lambda), rho, j, k, L);
    CheckReport r;
    for (int n = 1; n < L; ++n) {
        PoleSum d = w[n] - lambda.pow(-n) * v[n];
        r.add("homogeneity " + pair_name(rho, j, k) + " degree " + std::to_string(-n) + " lambda=" + lambda.str(),
              d.is_zero(), d.is_zero() ? "" : d.str());
    }
    return r;
}

CheckReport display_consistency_check(int lmax) {
    const ParameterSet p = ParameterSet::symbolic(3);
    CheckReport r;
    for (Point rho : {Point::Zero, Point::Infinity})
        for (int j = 1; j <= 3; ++j)
            for (int k = j + 1; k <= 3; ++k) {
                VorosClosedForm g = voros_terms(p, rho, j, k);
                VorosClosedForm d = voros_terms_n3_display(rho, j, k);
                for (int l = 2; l <= lmax; ++l) {
                    PoleSum diff = voros_bernoulli_sum(g, p, l) - voros_bernoulli_sum(d, p, l);
                    r.add("generic vs displayed " + pair_name(rho, j, k) + " l=" + std::to_string(l), diff.is_zero(),
                          diff.is_zero() ? "" : diff.str());
                }
            }
    return r;
}

std::vector<LinearForm> summability_forms(int N, Point rho, int j, int k) {
    check_pair(N, j, k);
    if (j > k) std::swap(j, k);
    std::vector<LinearForm> f;
    if (rho == Point::Zero && k != N) {
        f.push_back(LF::b(j));
        f.push_back(LF::b(k));
        for (int i = 1; i <= N; ++i) f.push_back(LF::b(j) - LF::a(i));
        for (int m = 1; m < N; ++m)
            if (m != j) f.push_back(LF::b(j) - LF::b(m));
        for (int i = 1; i <= N; ++i) f.push_back(LF::b(k) - LF::a(i));
        for (int m = 1; m < N; ++m)
            if (m != k) f.push_back(LF::b(k) - LF::b(m));
    } else if (rho == Point::Zero) {
        for (int i = 1; i <= N; ++i) f.push_back(LF::a(i));
        for (int m = 1; m < N; ++m) f.push_back(LF::b(m));
        for (int i = 1; i <= N; ++i) f.push_back(LF::b(j) - LF::a(i));
        for (int m = 1; m < N; ++m)
            if (m != j) f.push_back(LF::b(j) - LF::b(m));
    } else {
        f.push_back(LF::a(j));
        f.push_back(LF::a(k));
        for (int m = 1; m < N; ++m) f.push_back(LF::b(m) - LF::a(k));
        for (int m = 1; m < N; ++m) f.push_back(LF::b(m) - LF::a(j));
        for (int i = 1; i <= N; ++i)
            if (i != j) f.push_back(LF::a(i) - LF::a(j));
        for (int i = 1; i <= N; ++i)
            if (i != k) f.push_back(LF::a(i) - LF::a(k));
    }
    return f;
}

}  // namespace ghg
