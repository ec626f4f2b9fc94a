#include "ghg/wkb.hpp"

#include "ghg/symbol.hpp"

#include <stdexcept>

namespace ghg {

template <>
Rational coeff_of<Rational>(const MultiPoly& p) {
    if (!p.is_constant()) throw std::invalid_argument("symbolic parameter in exact mode: " + p.str());
    return p.is_zero() ? Rational(0) : p.constant_value();
}

template <>
RatFunc coeff_of<RatFunc>(const MultiPoly& p) {
    return RatFunc(p);
}

template <class C>
LaurentX<C> x_poly_series(const MultiPoly& p, Point rho) {
    if (p.is_zero()) return LaurentX<C>(rho);
    auto cs = p.coeffs(x_var());
    std::vector<C> c;
    for (const auto& q : cs) c.push_back(coeff_of<C>(q));
    if (rho == Point::Zero) return LaurentX<C>::from_coeffs(rho, 0, std::move(c));
    std::reverse(c.begin(), c.end());
    return LaurentX<C>::from_coeffs(rho, -(int(cs.size()) - 1), std::move(c));
}

namespace {

template <class C>
LaurentX<C> exact_part(const LaurentX<C>& s) {
    if (s.is_zero()) return LaurentX<C>(s.point());
    return LaurentX<C>::from_coeffs(s.point(), s.valuation(), s.data());
}

template <class C>
LaurentX<C> horner(const std::vector<LaurentX<C>>& c, const LaurentX<C>& w, int prec) {
    LaurentX<C> acc = c.back();
    for (int j = int(c.size()) - 2; j >= 0; --j) acc = (acc * w + c[j]).truncated(prec);
    return acc.truncated(prec);
}

// prod (w + r) as a coefficient list in w, lowest degree first.
template <class C>
std::vector<C> poly_from_roots(const std::vector<C>& r) {
    std::vector<C> p{from_rational<C>(Rational(1))};
    for (const auto& v : r) {
        std::vector<C> o(p.size() + 1);
        for (std::size_t k = 0; k < p.size(); ++k) {
            o[k] += p[k] * v;
            o[k + 1] += p[k];
        }
        p = std::move(o);
    }
    return p;
}

template <class C>
LaurentX<C> x_monomial(Point rho) {
    return LaurentX<C>::monomial(rho, from_rational<C>(Rational(1)), rho == Point::Zero ? 1 : -1);
}

// Ri(P)(S) by eta order. Operators are divided by eta^N, so with
// Sbar = S / eta = sum_n eta^{-n} S_{n-1} and (eta^{-1} d)^k e^{int S} = K_k e^{int S}:
// K_0 = 1, K_{k+1} = Sbar K_k + eta^{-1} d K_k.
template <class C>
struct Riccati {
    Point rho;
    int N;
    std::vector<std::vector<LaurentX<C>>> q;  // q[k][e]: zeta^k eta^{-e} coefficient
    std::vector<LaurentX<C>> Sbar;
    std::vector<std::vector<LaurentX<C>>> K;

    Riccati(const ParameterSet& p, Point r, int orders) : rho(r), N(p.N) {
        const OperatorSymbol sym = total_symbol(p);
        q.assign(N + 1, std::vector<LaurentX<C>>(N + 1, LaurentX<C>(rho)));
        for (int k = 0; k <= N; ++k) {
            MultiPoly qk = sym.zeta_coeff(k);
            for (int e = 0; e <= N; ++e) q[k][e] = x_poly_series<C>(qk.coeff(t_var(), e), rho);
        }
        Sbar.assign(orders, LaurentX<C>(rho));
        K.assign(N + 1, std::vector<LaurentX<C>>(orders, LaurentX<C>(rho)));
    }

    void set_leading(const LaurentX<C>& zeta) {
        Sbar[0] = zeta;
        K[0][0] = LaurentX<C>::constant(rho, from_rational<C>(Rational(1)));
        for (int k = 1; k <= N; ++k) K[k][0] = K[k - 1][0] * zeta;
    }

    void fill_K(int n) {
        for (int k = 0; k < N; ++k) {
            LaurentX<C> acc = K[k][n - 1].derivative();
            for (int m = 0; m <= n; ++m) acc += Sbar[m] * K[k][n - m];
            K[k + 1][n] = std::move(acc);
        }
    }

    LaurentX<C> ri(int n) const {
        LaurentX<C> r(rho);
        for (int k = 0; k <= N; ++k)
            for (int e = 0; e <= std::min(n, N); ++e) r += q[k][e] * K[k][n - e];
        return r;
    }

    // d_zeta sigma_0 at S_{-1}.
    LaurentX<C> divisor() const {
        LaurentX<C> d(rho);
        for (int k = 1; k <= N; ++k) d += from_rational<C>(Rational(k)) * (q[k][0] * K[k - 1][0]);
        return d;
    }
};

}  // namespace

template <class C>
LaurentX<C> char_root_expansion(const ParameterSet& p, Point rho, int m, int M) {
    const int N = p.N;
    if (m < 1 || m > N) throw std::out_of_range("branch index out of range");
    std::vector<C> a, b;
    for (const auto& v : p.a1) a.push_back(coeff_of<C>(v));
    for (const auto& v : p.b1) b.push_back(coeff_of<C>(v));
    const auto Pa = poly_from_roots(a);
    const auto Pb = poly_from_roots(b);
    // In w = x zeta: w Pb(w) - x Pa(w) at 0, u w Pb(w) - Pa(w) at infinity (u = 1/x).
    const LaurentX<C> t = LaurentX<C>::monomial(rho, from_rational<C>(Rational(1)), 1);
    std::vector<LaurentX<C>> F(N + 1, LaurentX<C>(rho));
    for (int j = 0; j <= N; ++j) {
        LaurentX<C> hi = j >= 1 ? LaurentX<C>::constant(rho, Pb[j - 1]) : LaurentX<C>(rho);
        LaurentX<C> lo = LaurentX<C>::constant(rho, Pa[j]);
        F[j] = rho == Point::Zero ? hi - t * lo : t * hi - lo;
    }
    std::vector<LaurentX<C>> dF;
    for (int j = 1; j <= N; ++j) dF.push_back(from_rational<C>(Rational(j)) * F[j]);

    C w0{};
    if (rho == Point::Zero)
        w0 = m < N ? -b[m - 1] : C{};
    else
        w0 = -a[m - 1];
    C d0{}, pw = from_rational<C>(Rational(1));
    for (const auto& c : dF) {
        d0 += c.coeff(0) * pw;
        pw = pw * w0;
    }
    if (coeff_is_zero(d0)) throw std::domain_error("non-generic leading behavior");

    const int target = rho == Point::Zero ? M + 2 : M;
    LaurentX<C> w = LaurentX<C>::constant(rho, w0);
    for (int prec = 1; prec < target;) {
        prec = std::min(2 * prec, target);
        LaurentX<C> f = horner(F, w, prec);
        LaurentX<C> df = horner(dF, w, prec);
        w = exact_part((w - f * df.inverse(prec)).truncated(prec));
    }
    w = w.truncated(std::max(target, 1));
    return w.shifted(rho == Point::Zero ? -1 : 1).truncated(M + 1);
}

template <class C>
int WkbBranchSeries<C>::precision() const {
    int p = kExact;
    for (const auto& s : S) p = std::min(p, s.precision());
    return p;
}

template <class C>
WkbBranchSeries<C> riccati_series(const ParameterSet& p, Point rho, int m, int L, int M) {
    if (L < -1) throw std::invalid_argument("eta order must be >= -1");
    int W = M;
    for (int attempt = 0; attempt < 8; ++attempt) {
        Riccati<C> R(p, rho, L + 2);
        R.set_leading(char_root_expansion<C>(p, rho, m, W));
        const LaurentX<C> Dinv = R.divisor().inverse();
        for (int n = 1; n <= L + 1; ++n) {
            R.Sbar[n] = LaurentX<C>(rho);
            R.fill_K(n);
            R.Sbar[n] = -(R.ri(n) * Dinv);
            R.fill_K(n);
        }
        WkbBranchSeries<C> out;
        out.rho = rho;
        out.m = m;
        out.L = L;
        out.M = M;
        out.S = R.Sbar;
        int got = out.precision();
        if (got >= M + 1) {
            for (auto& s : out.S) s = s.truncated(M + 1);
            return out;
        }
        W += (M + 1 - got) + 2;
    }
    throw std::runtime_error("Riccati recursion did not reach the requested x-order");
}

template <class C>
std::vector<LaurentX<C>> riccati_residual(const ParameterSet& p, const WkbBranchSeries<C>& s) {
    Riccati<C> R(p, s.rho, s.L + 2);
    R.set_leading(s[-1]);
    for (int n = 1; n <= s.L + 1; ++n) {
        R.Sbar[n] = s[n - 1];
        R.fill_K(n);
    }
    std::vector<LaurentX<C>> out;
    for (int n = 0; n <= s.L + 1; ++n) out.push_back(R.ri(n));
    return out;
}

template <class C>
LaurentX<C> vieta_defect(const ParameterSet& p, Point rho, int M) {
    const int N = p.N;
    LaurentX<C> sum(rho);
    for (int m = 1; m <= N; ++m) sum += char_root_expansion<C>(p, rho, m, M);
    const MultiPoly s0 = principal_symbol(p);
    LaurentX<C> top = x_poly_series<C>(s0.coeff(zeta_var(), N), rho);
    LaurentX<C> next = x_poly_series<C>(s0.coeff(zeta_var(), N - 1), rho);
    LaurentX<C> ratio = -(next * top.inverse(M + 2 * N + 4));
    return (sum - ratio).truncated(M + 1);
}

template <class C>
OddEvenPair<C> odd_even_split(const WkbBranchSeries<C>& Sj, const WkbBranchSeries<C>& Sk) {
    if (Sj.rho != Sk.rho) throw std::invalid_argument("branches at different singular points");
    if (Sj.L != Sk.L || Sj.M != Sk.M || Sj.S.size() != Sk.S.size())
        throw std::invalid_argument("mismatched truncation");
    OddEvenPair<C> r;
    r.rho = Sj.rho;
    r.j = Sj.m;
    r.k = Sk.m;
    const C half = from_rational<C>(Rational(1, 2));
    for (std::size_t i = 0; i < Sj.S.size(); ++i) {
        r.odd.push_back(half * (Sj.S[i] - Sk.S[i]));
        r.even.push_back(half * (Sj.S[i] + Sk.S[i]));
    }
    return r;
}

template <class C>
C residue(const LaurentX<C>& s) {
    if (s.is_exact_zero()) return C{};
    return s.point() == Point::Zero ? s.coeff(-1) : -s.coeff(1);
}

template <class C>
ResidueReport<C> residue_check(const OddEvenPair<C>& pair) {
    ResidueReport<C> r;
    for (std::size_t i = 0; i < pair.odd.size(); ++i) {
        r.residues.push_back(residue(pair.odd[i]));
        if (int(i) - 1 >= 1 && !coeff_is_zero(r.residues.back())) r.ok = false;
    }
    return r;
}

template <class C>
EtaSeries<C> eta_rational(const std::vector<std::pair<C, C>>& num, const std::vector<std::pair<C, C>>& den, int hi) {
    const int pad = hi + 2 * int(num.size() + den.size()) + 2;
    auto lin = [pad](const std::pair<C, C>& f) {
        if (coeff_is_zero(f.second)) {
            EtaSeries<C> s(0, pad);
            s.at(0) = f.first;
            return s;
        }
        EtaSeries<C> s(-1, pad);
        s.at(-1) = f.second;
        s.at(0) = f.first;
        return s;
    };
    const C one = from_rational<C>(Rational(1));
    EtaSeries<C> n = EtaSeries<C>::constant(one, pad);
    for (const auto& f : num) n = n * lin(f);
    EtaSeries<C> d = EtaSeries<C>::constant(one, pad);
    for (const auto& f : den) d = d * lin(f);
    EtaSeries<C> r = n * d.inverse();
    if (r.hi() < hi) throw std::logic_error("eta_rational: insufficient padding");
    return r.truncated(hi);
}

namespace {

template <class C>
std::string mismatch(int l, const C& got, const C& want) {
    return "eta^" + std::to_string(-l) + ": got " + coeff_str(got) + ", expected " + coeff_str(want);
}

// Compare coefficient e of S_l with eta-expansion `want` for l = -1..L.
template <class C>
void compare_coeff(CheckReport& rep, const std::string& name, const WkbBranchSeries<C>& S, int e,
                   const EtaSeries<C>& want) {
    std::string detail;
    bool ok = true;
    for (int l = -1; l <= S.L && ok; ++l) {
        C got = S[l].is_exact_zero() ? C{} : S[l].coeff(e);
        C w = want[l];
        if (!coeff_is_zero(got - w)) {
            ok = false;
            detail = mismatch(l, got, w);
        }
    }
    rep.add(name, ok, detail);
}

template <class C>
std::pair<C, C> lin(const MultiPoly& c0, const MultiPoly& c1) {
    return {coeff_of<C>(c0), coeff_of<C>(c1)};
}

}  // namespace

template <class C>
CheckReport local_behavior_check(const ParameterSet& p, int L, int M) {
    const int N = p.N;
    const int Mx = std::max(M, 2);
    CheckReport rep;
    auto A = [&](int i) { return lin<C>(p.a0[i - 1], p.a1[i - 1]); };
    auto B = [&](int j) { return lin<C>(p.b0[j - 1], p.b1[j - 1]); };
    auto plus = [](std::pair<C, C> u, const std::pair<C, C>& v, const C& c) {
        u.first += v.first + c;
        u.second += v.second;
        return u;
    };
    auto neg = [](std::pair<C, C> u) { return std::pair<C, C>{-u.first, -u.second}; };
    const C one = from_rational<C>(Rational(1));

    for (int l = 1; l < N; ++l) {
        auto S = riccati_series<C>(p, Point::Zero, l, L, Mx);
        const std::string tag = "rho=0 branch " + std::to_string(l);
        EtaSeries<C> res(-1, L);
        res.at(-1) = -B(l).second;
        res.at(0) = one - B(l).first;
        compare_coeff(rep, tag + ": x^-1 coefficient (1 - b_l)", S, -1, res);
        std::vector<std::pair<C, C>> num, den;
        for (int m = 1; m <= N; ++m) num.push_back(plus(A(m), neg(B(l)), one));
        den.push_back(plus(B(l), {}, -from_rational<C>(Rational(2))));
        for (int m = 1; m < N; ++m)
            if (m != l) den.push_back(plus(B(l), neg(B(m)), -one));
        compare_coeff(rep, tag + ": constant term", S, 0, eta_rational(num, den, L));
    }
    {
        auto S = riccati_series<C>(p, Point::Zero, N, L, Mx);
        const std::string tag = "rho=0 branch " + std::to_string(N);
        compare_coeff(rep, tag + ": x^-1 coefficient vanishes", S, -1, EtaSeries<C>(-1, L));
        std::vector<std::pair<C, C>> num, den;
        for (int m = 1; m <= N; ++m) num.push_back(A(m));
        for (int m = 1; m < N; ++m) den.push_back(B(m));
        compare_coeff(rep, tag + ": constant term prod a / prod b", S, 0, eta_rational(num, den, L));
    }
    for (int l = 1; l <= N; ++l) {
        auto S = riccati_series<C>(p, Point::Infinity, l, L, Mx);
        const std::string tag = "rho=inf branch " + std::to_string(l);
        compare_coeff(rep, tag + ": u^0 coefficient vanishes", S, 0, EtaSeries<C>(-1, L));
        EtaSeries<C> lead(-1, L);
        lead.at(-1) = -A(l).second;
        lead.at(0) = -A(l).first;
        compare_coeff(rep, tag + ": u^1 coefficient (-a_l)", S, 1, lead);
        std::vector<std::pair<C, C>> num{neg(A(l))}, den;
        for (int m = 1; m < N; ++m) num.push_back(plus(A(l), neg(B(m)), one));
        for (int m = 1; m <= N; ++m)
            if (m != l) den.push_back(plus(A(l), neg(A(m)), one));
        compare_coeff(rep, tag + ": u^2 coefficient", S, 2, eta_rational(num, den, L));
    }
    return rep;
}

template <class C>
CheckReport ladder_check(const ParameterSet& p, Point rho, int m, ShiftParam param, int L, int M) {
    const bool isA = param.kind == ParamKind::A;
    const int n_par = isA ? p.N : p.N - 1;
    if (param.index < 1 || param.index > n_par) throw std::out_of_range("ladder parameter index out of range");
    const auto S = riccati_series<C>(p, rho, m, L, M);
    const ParameterSet ps =
        isA ? p.shift_a(param.index, 0, MultiPoly(1)) : p.shift_b(param.index, 0, MultiPoly(1));
    const auto Sh = riccati_series<C>(ps, rho, m, L, M);
    if (!Sh[-1].agrees_with(S[-1])) throw std::domain_error("branch numbering changed under the shift");

    const auto& base = isA ? S : Sh;
    const C c0 = coeff_of<C>(isA ? p.a0[param.index - 1] : p.b0[param.index - 1]);
    const C c1 = coeff_of<C>(isA ? p.a1[param.index - 1] : p.b1[param.index - 1]);
    const LaurentX<C> X = x_monomial<C>(rho);
    // x S + rho-parameter = eta T with T = x Sbar + c1 + eta^{-1} c0.
    EtaSeries<LaurentX<C>> T(0, L + 1);
    for (int n = 0; n <= L + 1; ++n) T.at(n) = X * base[n - 1];
    T.at(0) += LaurentX<C>::constant(rho, c1);
    T.at(1) += LaurentX<C>::constant(rho, c0);
    const auto dT = T.map([](const LaurentX<C>& c) { return c.derivative(); });
    const auto Tinv = T.inverse([](const LaurentX<C>& c) { return c.inverse(); },
                                LaurentX<C>::constant(rho, from_rational<C>(Rational(1))));
    auto R = dT * Tinv;
    if (!isA) R = -R;

    const int guard = (L + 1) / 2;
    CheckReport rep;
    const std::string tag = std::string("rho=") + point_name(rho) + " branch " + std::to_string(m) + " shift " +
                            param.name();
    for (int l = -1; l <= L; ++l) {
        LaurentX<C> delta = Sh[l] - S[l];
        LaurentX<C> diff = l >= 0 ? delta - R[l] : delta;
        bool ok = diff.is_zero() && diff.precision() >= M + 1 - guard;
        std::string detail = ok ? "" : (diff.is_zero() ? "precision " + std::to_string(diff.precision()) : diff.str());
        rep.add(tag + " eta^" + std::to_string(-l), ok, detail);
    }
    return rep;
}

#define GHG_WKB_INSTANTIATE(C)                                                                                   \
    template LaurentX<C> x_poly_series<C>(const MultiPoly&, Point);                                             \
    template LaurentX<C> char_root_expansion<C>(const ParameterSet&, Point, int, int);                          \
    template struct WkbBranchSeries<C>;                                                                         \
    template WkbBranchSeries<C> riccati_series<C>(const ParameterSet&, Point, int, int, int);                    \
    template std::vector<LaurentX<C>> riccati_residual<C>(const ParameterSet&, const WkbBranchSeries<C>&);      \
    template LaurentX<C> vieta_defect<C>(const ParameterSet&, Point, int);                                      \
    template OddEvenPair<C> odd_even_split<C>(const WkbBranchSeries<C>&, const WkbBranchSeries<C>&);            \
    template C residue<C>(const LaurentX<C>&);                                                                  \
    template ResidueReport<C> residue_check<C>(const OddEvenPair<C>&);                                          \
    template CheckReport local_behavior_check<C>(const ParameterSet&, int, int);                                \
    template CheckReport ladder_check<C>(const ParameterSet&, Point, int, ShiftParam, int, int);                \
    template EtaSeries<C> eta_rational<C>(const std::vector<std::pair<C, C>>&,                                  \
                                          const std::vector<std::pair<C, C>>&, int);

GHG_WKB_INSTANTIATE(Rational)
GHG_WKB_INSTANTIATE(RatFunc)

}  // namespace ghg
