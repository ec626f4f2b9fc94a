#pragma once

#include "ghg/polesum.hpp"
#include "ghg/ratfunc.hpp"
#include "ghg/rational.hpp"

#include <algorithm>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace ghg {

// Coefficient-domain hooks shared by the series templates.
inline bool coeff_is_zero(const Rational& c) { return c.is_zero(); }
inline bool coeff_is_zero(const RatFunc& c) { return c.is_zero(); }
inline bool coeff_is_zero(const std::complex<double>& c) { return c == 0.0; }
inline bool coeff_is_zero(const PoleSum& c) { return c.is_zero(); }
inline Rational coeff_inverse(const Rational& c) { return c.inverse(); }
inline RatFunc coeff_inverse(const RatFunc& c) { return c.inverse(); }
inline std::complex<double> coeff_inverse(const std::complex<double>& c) {
    if (c == 0.0) throw std::domain_error("division by zero");
    return 1.0 / c;
}
inline std::string coeff_str(const Rational& c) { return c.str(); }
inline std::string coeff_str(const RatFunc& c) { return c.str(); }
inline std::string coeff_str(const PoleSum& c) { return c.str(); }
inline std::string coeff_str(const std::complex<double>& c) {
    return "(" + std::to_string(c.real()) + "," + std::to_string(c.imag()) + ")";
}

template <class C>
struct CoeffFrom;
template <>
struct CoeffFrom<Rational> {
    static Rational from(const Rational& r) { return r; }
};
template <>
struct CoeffFrom<RatFunc> {
    static RatFunc from(const Rational& r) { return RatFunc(r); }
};
template <>
struct CoeffFrom<PoleSum> {
    static PoleSum from(const Rational& r) { return PoleSum(r); }
};
template <>
struct CoeffFrom<std::complex<double>> {
    static std::complex<double> from(const Rational& r) { return r.to_double(); }
};
template <class C>
C from_rational(const Rational& r) {
    return CoeffFrom<C>::from(r);
}

enum class Point { Zero, Infinity };

inline const char* point_name(Point p) { return p == Point::Zero ? "0" : "inf"; }

// Absolute precision value meaning "exact"; sums saturate at it.
inline constexpr int kExact = std::numeric_limits<int>::max() / 4;

inline int prec_add(int a, int b) { return (a >= kExact || b >= kExact) ? kExact : a + b; }

// Truncated Laurent series in the local variable t (t = x at 0, t = 1/x at
// infinity). Coefficients of t^e are known for all e < precision(); an exact
// series has precision kExact. The exact zero carries no point tag.
template <class C>
class LaurentX {
public:
    LaurentX() = default;
    explicit LaurentX(Point p) : pt_(p) {}

    static LaurentX constant(Point p, const C& c) { return monomial(p, c, 0); }
    static LaurentX monomial(Point p, const C& c, int e) {
        LaurentX r(p);
        if (!coeff_is_zero(c)) {
            r.val_ = e;
            r.c_.push_back(c);
        }
        return r;
    }
    // Coefficients of t^{val}, t^{val+1}, ...; everything below prec not listed is zero.
    static LaurentX from_coeffs(Point p, int val, std::vector<C> c, int prec = kExact) {
        LaurentX r(p);
        r.val_ = val;
        r.c_ = std::move(c);
        r.prec_ = prec;
        if (prec < kExact && int(r.c_.size()) > prec - val) r.c_.resize(std::max(0, prec - val));
        r.normalize();
        return r;
    }
    // Zero known only up to t^{prec-1}.
    static LaurentX big_o(Point p, int prec) {
        LaurentX r(p);
        r.prec_ = prec;
        r.val_ = prec;
        return r;
    }

    Point point() const { return pt_; }
    int valuation() const { return val_; }
    int precision() const { return prec_; }
    bool is_exact() const { return prec_ >= kExact; }
    bool is_zero() const { return c_.empty(); }
    bool is_exact_zero() const { return c_.empty() && is_exact(); }
    const std::vector<C>& data() const { return c_; }
    int top() const { return val_ + int(c_.size()); }

    C coeff(int e) const {
        if (e >= prec_) throw std::out_of_range("coefficient beyond series precision");
        if (e < val_ || e >= top()) return C{};
        return c_[static_cast<std::size_t>(e - val_)];
    }
    const C& lead() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of a zero series");
        return c_.front();
    }

    LaurentX truncated(int p) const {
        if (p >= prec_) return *this;
        LaurentX r(*this);
        r.prec_ = p;
        if (r.top() > p) r.c_.resize(static_cast<std::size_t>(std::max(0, p - r.val_)));
        r.normalize();
        return r;
    }

    // Multiply by t^k.
    LaurentX shifted(int k) const {
        LaurentX r(*this);
        if (!r.c_.empty()) r.val_ += k;
        if (r.prec_ < kExact) r.prec_ += k;
        if (r.c_.empty() && r.prec_ < kExact) r.val_ = r.prec_;
        return r;
    }

    LaurentX operator-() const {
        LaurentX r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }

    LaurentX& operator+=(const LaurentX& o) { return add(o, false); }
    LaurentX& operator-=(const LaurentX& o) { return add(o, true); }
    friend LaurentX operator+(LaurentX a, const LaurentX& b) { return a += b; }
    friend LaurentX operator-(LaurentX a, const LaurentX& b) { return a -= b; }

    friend LaurentX operator*(const LaurentX& a, const LaurentX& b) {
        Point p = a.tag_with(b);
        int prec = std::min(prec_add(a.lowest(), b.prec_), prec_add(b.lowest(), a.prec_));
        if (a.c_.empty() || b.c_.empty()) return big_o_or_zero(p, prec);
        int v = a.val_ + b.val_;
        int n = int(a.c_.size() + b.c_.size()) - 1;
        if (prec < kExact) n = std::min(n, prec - v);
        std::vector<C> c(static_cast<std::size_t>(std::max(n, 0)));
        for (int i = 0; i < int(a.c_.size()) && i < n; ++i) {
            if (coeff_is_zero(a.c_[i])) continue;
            for (int j = 0; j < int(b.c_.size()) && i + j < n; ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return from_coeffs(p, v, std::move(c), prec);
    }
    LaurentX& operator*=(const LaurentX& o) { return *this = *this * o; }

    friend LaurentX operator*(const C& s, const LaurentX& a) {
        if (coeff_is_zero(s)) return big_o_or_zero(a.pt_, a.prec_ < kExact ? a.prec_ : kExact);
        LaurentX r(a);
        for (auto& c : r.c_) c = s * c;
        return r;
    }

    // 1/a. An exact input needs an explicit absolute precision for the result.
    LaurentX inverse(int prec_if_exact = kExact) const {
        if (c_.empty()) throw std::domain_error("inverse of a zero series");
        int prec = is_exact() ? prec_if_exact : prec_ - 2 * val_;
        if (prec >= kExact) throw std::domain_error("inverse of an exact series needs a precision");
        int n = prec + val_;  // number of coefficients of the inverse
        C inv0 = coeff_inverse(c_[0]);
        std::vector<C> r(static_cast<std::size_t>(std::max(n, 0)));
        for (int k = 0; k < n; ++k) {
            C s = k == 0 ? from_rational<C>(Rational(1)) : C{};
            for (int i = 1; i <= k && i < int(c_.size()); ++i) s -= c_[i] * r[k - i];
            r[k] = s * inv0;
        }
        return from_coeffs(pt_, -val_, std::move(r), prec);
    }

    // d/dx; at infinity this is -t^2 d/dt.
    LaurentX derivative() const {
        LaurentX r(pt_);
        if (pt_ == Point::Zero) {
            r.prec_ = prec_ < kExact ? prec_ - 1 : kExact;
            std::vector<C> c;
            for (int i = 0; i < int(c_.size()); ++i) c.push_back(from_rational<C>(Rational(val_ + i)) * c_[i]);
            if (c_.empty()) return big_o_or_zero(pt_, r.prec_);
            return from_coeffs(pt_, val_ - 1, std::move(c), r.prec_);
        }
        int prec = prec_ < kExact ? prec_ + 1 : kExact;
        if (c_.empty()) return big_o_or_zero(pt_, prec);
        std::vector<C> c;
        for (int i = 0; i < int(c_.size()); ++i) c.push_back(from_rational<C>(Rational(-(val_ + i))) * c_[i]);
        return from_coeffs(pt_, val_ + 1, std::move(c), prec);
    }

    // Equal on all exponents below min(p, both precisions)?
    bool agrees_with(const LaurentX& o, int p = kExact) const {
        int lim = std::min({p, prec_, o.prec_});
        int lo = std::min(lowest(), o.lowest());
        int hi = std::min(lim, std::max(top(), o.top()));
        for (int e = lo; e < hi; ++e)
            if (!coeff_is_zero(coeff_or_zero(e) - o.coeff_or_zero(e))) return false;
        return true;
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < int(c_.size()); ++i) {
            if (coeff_is_zero(c_[i])) continue;
            if (!s.empty()) s += " + ";
            s += "(" + coeff_str(c_[i]) + ")*t^" + std::to_string(val_ + i);
        }
        if (s.empty()) s = "0";
        if (!is_exact()) s += " + O(t^" + std::to_string(prec_) + ")";
        return s;
    }

private:
    static LaurentX big_o_or_zero(Point p, int prec) { return prec >= kExact ? LaurentX(p) : big_o(p, prec); }

    int lowest() const { return c_.empty() ? (prec_ >= kExact ? kExact : prec_) : val_; }
    C coeff_or_zero(int e) const { return (e < val_ || e >= top()) ? C{} : c_[e - val_]; }

    Point tag_with(const LaurentX& o) const {
        if (is_exact_zero()) return o.pt_;
        if (o.is_exact_zero()) return pt_;
        if (pt_ != o.pt_) throw std::invalid_argument("mixing series at different points");
        return pt_;
    }

    LaurentX& add(const LaurentX& o, bool neg) {
        Point p = tag_with(o);
        int prec = std::min(prec_, o.prec_);
        int lo = std::min(lowest(), o.lowest());
        int hi = std::max(top(), o.top());
        if (prec < kExact) hi = std::min(hi, prec);
        std::vector<C> c;
        if (hi > lo) {
            c.resize(static_cast<std::size_t>(hi - lo));
            for (int e = lo; e < hi; ++e) {
                C x = coeff_or_zero(e);
                if (neg)
                    x -= o.coeff_or_zero(e);
                else
                    x += o.coeff_or_zero(e);
                c[e - lo] = std::move(x);
            }
        }
        *this = from_coeffs(p, hi > lo ? lo : 0, std::move(c), prec);
        return *this;
    }

    void normalize() {
        std::size_t s = 0;
        while (s < c_.size() && coeff_is_zero(c_[s])) ++s;
        if (s) {
            c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(s));
            val_ += int(s);
        }
        while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
        if (c_.empty()) val_ = prec_ >= kExact ? 0 : prec_;
    }

    Point pt_ = Point::Zero;
    int val_ = 0;
    int prec_ = kExact;
    std::vector<C> c_;
};

// Truncated series sum_{k=lo}^{hi} c_k eta^{-k}.
template <class C>
class EtaSeries {
public:
    EtaSeries() = default;
    EtaSeries(int lo, int hi) : lo_(lo), hi_(hi), c_(static_cast<std::size_t>(std::max(0, hi - lo + 1))) {}
    EtaSeries(int lo, std::vector<C> c) : lo_(lo), hi_(lo + int(c.size()) - 1), c_(std::move(c)) {}
    static EtaSeries constant(const C& c, int hi) {
        EtaSeries r(0, hi);
        if (hi >= 0) r.c_[0] = c;
        return r;
    }

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    // Coefficient of eta^{-k}; zero below lo, error above hi.
    C operator[](int k) const {
        if (k > hi_) throw std::out_of_range("eta order beyond truncation");
        if (k < lo_) return C{};
        return c_[static_cast<std::size_t>(k - lo_)];
    }
    C& at(int k) {
        if (k < lo_ || k > hi_) throw std::out_of_range("eta order outside storage");
        return c_[static_cast<std::size_t>(k - lo_)];
    }

    EtaSeries truncated(int hi) const {
        if (hi >= hi_) return *this;
        EtaSeries r(*this);
        r.hi_ = hi;
        r.c_.resize(static_cast<std::size_t>(std::max(0, hi - lo_ + 1)));
        return r;
    }

    EtaSeries operator-() const {
        EtaSeries r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend EtaSeries operator+(const EtaSeries& a, const EtaSeries& b) { return combine(a, b, false); }
    friend EtaSeries operator-(const EtaSeries& a, const EtaSeries& b) { return combine(a, b, true); }

    friend EtaSeries operator*(const EtaSeries& a, const EtaSeries& b) {
        int lo = a.lo_ + b.lo_;
        int hi = std::min(a.hi_ + b.lo_, b.hi_ + a.lo_);
        EtaSeries r(lo, hi);
        for (int k = lo; k <= hi; ++k) {
            C s{};
            for (int i = a.lo_; i <= a.hi_ && i <= k - b.lo_; ++i) {
                int j = k - i;
                if (j > b.hi_) continue;
                s += a[i] * b[j];
            }
            r.at(k) = std::move(s);
        }
        return r;
    }

    // inv inverts the leading coefficient; one is the unit of the coefficient ring.
    template <class Inv>
    EtaSeries inverse(Inv inv, const C& one) const {
        if (c_.empty()) throw std::domain_error("inverse of an empty eta series");
        int lo = -lo_;
        int hi = hi_ - 2 * lo_;
        EtaSeries r(lo, hi);
        C i0 = inv(c_[0]);
        for (int k = lo; k <= hi; ++k) {
            C s = k == lo ? one : C{};
            for (int m = 1; m <= k - lo && lo_ + m <= hi_; ++m) s -= (*this)[lo_ + m] * r[k - m];
            r.at(k) = s * i0;
        }
        return r;
    }
    EtaSeries inverse() const {
        return inverse([](const C& c) { return coeff_inverse(c); }, from_rational<C>(Rational(1)));
    }

    template <class F>
    auto map(F f) const {
        using D = decltype(f(std::declval<C>()));
        std::vector<D> c;
        for (const auto& x : c_) c.push_back(f(x));
        EtaSeries<D> r(lo_, std::move(c));
        return r;
    }

private:
    static EtaSeries combine(const EtaSeries& a, const EtaSeries& b, bool neg) {
        int lo = std::min(a.lo_, b.lo_);
        int hi = std::min(a.hi_, b.hi_);
        EtaSeries r(lo, hi);
        for (int k = lo; k <= hi; ++k) r.at(k) = neg ? a[k] - b[k] : a[k] + b[k];
        return r;
    }

    int lo_ = 0;
    int hi_ = -1;
    std::vector<C> c_;
};

// Delta_rho s = sum_{m>=1} eta^{-m}/m! d^m s / d rho^m, kept to the same order.
// deriv(c, v) differentiates a coefficient in v; scale(q, c) multiplies by a rational.
template <class C, class D, class Sc>
EtaSeries<C> eta_shift(const EtaSeries<C>& s, VarId rho, D deriv, Sc scale) {
    EtaSeries<C> r(s.lo() + 1, s.hi());
    for (int k = s.lo(); k < s.hi(); ++k) {
        C d = s[k];
        Rational fact(1);
        for (int m = 1; k + m <= s.hi(); ++m) {
            d = deriv(d, rho);
            fact *= Rational(m);
            r.at(k + m) += scale(fact.inverse(), d);
        }
    }
    return r;
}

inline EtaSeries<RatFunc> eta_shift(const EtaSeries<RatFunc>& s, VarId rho) {
    return eta_shift(
        s, rho, [](const RatFunc& c, VarId v) { return c.derivative(v); },
        [](const Rational& q, const RatFunc& c) { return RatFunc(q) * c; });
}

inline EtaSeries<PoleSum> eta_shift(const EtaSeries<PoleSum>& s, VarId rho) {
    return eta_shift(
        s, rho, [](const PoleSum& c, VarId v) { return c.derivative(v); },
        [](const Rational& q, const PoleSum& c) { return q * c; });
}

}  // namespace ghg
