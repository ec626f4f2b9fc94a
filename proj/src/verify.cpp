#include "ghg/verify.hpp"

#include <stdexcept>

namespace ghg {

namespace {

using LF = LinearForm;

std::string cell_name(Point rho, int j, int k, ShiftParam q) {
    return std::string("rho=") + point_name(rho) + " (" + std::to_string(j) + "," + std::to_string(k) + ") d/d" +
           q.name();
}

VarId param_var(ShiftParam q) { return q.kind == ParamKind::A ? a_var(q.index, 1) : b_var(q.index, 1); }

void check_param(int N, ShiftParam q) {
    int n = q.kind == ParamKind::A ? N : N - 1;
    if (q.index < 1 || q.index > n) throw std::invalid_argument("parameter " + q.name() + " out of range");
}

// Compare a and b for n = -1..L; one entry per order.
void compare(CheckReport& r, const std::string& name, const EtaSeries<PoleSum>& a, const EtaSeries<PoleSum>& b, int L) {
    for (int n = -1; n <= L; ++n) {
        PoleSum d = a[n] - b[n];
        r.add(name + " eta^" + std::to_string(-n), d.is_zero(), d.is_zero() ? "" : "difference " + d.str());
    }
}

EtaSeries<PoleSum> derivative(const EtaSeries<PoleSum>& s, VarId v) {
    EtaSeries<PoleSum> r(s.lo(), s.hi());
    for (int n = s.lo(); n <= s.hi(); ++n) r.at(n) = s[n].derivative(v);
    return r;
}

EtaSeries<PoleSum> scaled(const EtaSeries<PoleSum>& s, const Rational& c) {
    EtaSeries<PoleSum> r(s.lo(), s.hi());
    for (int n = s.lo(); n <= s.hi(); ++n) r.at(n) = c * s[n];
    return r;
}

// V through eta^{-L} needs l <= L + 1.
EtaSeries<PoleSum> voros_to_order(const ParameterSet& p, Point rho, int j, int k, int L) {
    return voros_series(p, rho, j, k, L + 1);
}

}  // namespace

DDRightHandSide f_rhs(int N, Point rho, int j, int k, ShiftParam q) {
    if (j < 1 || k < 1 || j > N || k > N || j == k) throw std::invalid_argument("invalid index pair");
    check_param(N, q);
    if (j > k) {
        DDRightHandSide f = f_rhs(N, rho, k, j, q);
        std::swap(f.j, f.k);
        for (auto& t : f.terms) t.sign = -t.sign;
        return f;
    }
    DDRightHandSide f{rho, j, k, q, {}};
    auto add = [&f](int s, const LF& u) { f.terms.push_back({s, u}); };
    const Rational one(1);
    if (rho == Point::Zero) {
        const LF bj = LF::b(j);
        if (q.kind == ParamKind::A) {
            const LF ai = LF::a(q.index);
            if (k != N) add(1, ai - LF::b(k) + one);
            else add(1, ai);
            add(-1, ai - bj + one);
            return f;
        }
        const int m = q.index;
        const LF bm = LF::b(m);
        if (k != N) {
            const LF bk = LF::b(k);
            if (m != j && m != k) {
                add(1, bm - bj + one);
                add(-1, bm - bk + one);
            } else if (m == j) {
                add(-1, bj - bk + one);
                add(-1, bj - one);
                for (int l = 1; l < N; ++l)
                    if (l != j) add(-1, bj - LF::b(l));
                for (int l = 1; l <= N; ++l) add(-1, LF::a(l) - bj);
            } else {
                add(1, bk - bj + one);
                add(1, bk - one);
                for (int l = 1; l < N; ++l)
                    if (l != k) add(1, bk - LF::b(l));
                for (int l = 1; l <= N; ++l) add(1, LF::a(l) - bk);
            }
            return f;
        }
        if (m != j) {
            add(1, bm - bj + one);
            add(-1, bm);
        } else {
            for (int l = 1; l <= N; ++l) add(1, bj - LF::a(l));
            add(-1, bj);
            add(-1, bj - one);
            for (int l = 1; l < N; ++l)
                if (l != j) add(-1, bj - LF::b(l));
        }
        return f;
    }
    const LF aj = LF::a(j), ak = LF::a(k);
    if (q.kind == ParamKind::B) {
        const LF bm = LF::b(q.index);
        add(1, bm - aj);
        add(-1, bm - ak);
        return f;
    }
    const int i = q.index;
    if (i != j && i != k) {
        add(1, LF::a(i) - ak);
        add(-1, LF::a(i) - aj);
    } else if (i == j) {
        add(-1, ak - aj);
        add(-1, aj);
        for (int l = 1; l <= N; ++l)
            if (l != j) add(1, aj - LF::a(l) + one);
        for (int l = 1; l < N; ++l) add(-1, aj - LF::b(l) + one);
    } else {
        add(1, aj - ak);
        add(1, ak);
        for (int l = 1; l <= N; ++l)
            if (l != k) add(-1, ak - LF::a(l) + one);
        for (int l = 1; l < N; ++l) add(1, ak - LF::b(l) + one);
    }
    return f;
}

DDRightHandSide f_rhs_n3_display(int j, int k, ShiftParam q) {
    if (!((j == 1 && k == 2) || (j == 1 && k == 3) || (j == 2 && k == 3)))
        throw std::invalid_argument("displayed rows exist for j < k only");
    check_param(3, q);
    DDRightHandSide f{Point::Zero, j, k, q, {}};
    auto add = [&f](int s, const LF& u) { f.terms.push_back({s, u}); };
    const Rational one(1);
    if (q.kind == ParamKind::A) {
        const LF ai = LF::a(q.index);
        if (k == 2) {
            add(-1, ai - LF::b(1) + one);
            add(1, ai - LF::b(2) + one);
        } else {
            add(1, ai - LF::b(j) + one);
            add(1, ai);
        }
        return f;
    }
    const int m = q.index;
    const LF bm = LF::b(m);
    if (k == 2) {
        const int s = m == 1 ? 1 : -1;
        const LF bl = LF::b(3 - m);
        for (int i = 1; i <= 3; ++i) add(s, bm - LF::a(i));
        add(-s, bm - one);
        add(s, bm - bl);
        add(s, bm - bl + one);
    } else if (m != j) {
        add(1, bm - LF::b(j) + one);
        add(-1, bm);
    } else {
        for (int i = 1; i <= 3; ++i) add(1, bm - LF::a(i));
        add(-1, bm - one);
        add(-1, bm);
        add(-1, bm - LF::b(3 - m));
    }
    return f;
}

ParameterSet with_free_param(const ParameterSet& p, ShiftParam q) {
    check_param(p.N, q);
    return p.with_entry(q, 1, MultiPoly::variable(param_var(q)));
}

EtaSeries<PoleSum> f_series(const DDRightHandSide& f, const ParameterSet& p0, int L) {
    const ParameterSet p = with_free_param(p0, f.param);
    EtaSeries<PoleSum> r(-1, L);
    for (const auto& t : f.terms) {
        MultiPoly k0 = t.u.kappa0(p), k1 = t.u.kappa1(p);
        if (k1.is_zero()) throw std::domain_error("non-generic parameter direction: " + t.u.str());
        // eta / (k0 + k1 eta) = sum_n (-k0)^n k1^{-n-1} eta^{-n}
        MultiPoly c = MultiPoly(Rational(t.sign, 2));
        for (int n = 0; n <= L; ++n) {
            r.at(n) += PoleSum::pole(k1, n + 1, c);
            c = c * (-k0);
        }
    }
    return r;
}

EtaSeries<PoleSum> dd_lhs(const ParameterSet& p0, Point rho, int j, int k, ShiftParam q, int L) {
    const ParameterSet p = with_free_param(p0, q);
    const VarId v = param_var(q);
    return derivative(eta_shift(voros_to_order(p, rho, j, k, L), v), v);
}

EtaSeries<PoleSum> g_n3(const ParameterSet& p0, int j, int k, ShiftParam q, GForm form, int L) {
    if (p0.N != 3) throw std::invalid_argument("explicit g is displayed for N = 3 only");
    if (!((j == 1 && k == 2) || (j == 1 && k == 3) || (j == 2 && k == 3)))
        throw std::invalid_argument("explicit g is displayed for j < k only");
    const ParameterSet p = with_free_param(p0, q);
    const bool shown = form == GForm::AsDisplayed;
    auto k0 = [&p](const LF& f) { return f.kappa0(p); };
    auto k1 = [&p](const LF& f) { return f.kappa1(p); };
    auto lg = [&](const LF& f) { return PoleSum::log(k1(f)); };
    auto pole = [&](const MultiPoly& num, const LF& f) { return PoleSum::pole(k1(f), 1, num); };
    const MultiPoly one(1);
    const Rational half(1, 2);
    PoleSum G1, G0;
    if (q.kind == ParamKind::A) {
        const LF ai = LF::a(q.index);
        if (k == 2) {
            const LF d1 = ai - LF::b(1), d2 = ai - LF::b(2);
            G1 = lg(d1) - lg(d2);
            G0 = pole((k0(d1) * MultiPoly(2) + one).scaled(half), d1) - pole((k0(d2) * MultiPoly(2) + one).scaled(half), d2);
        } else {
            const LF bj = LF::b(j), d = ai - bj;
            G1 = lg(d) - lg(ai);
            G0 = -pole(k0(bj) - one, d);
            // c b/(a (a - b)) = c/(a - b) - c/a with c = (1 - 2 a_{i,0})/2, sign flipped unless as printed
            MultiPoly c = (one - k0(ai) * MultiPoly(2)).scaled(shown ? half : -half);
            G0 += pole(c, d) - pole(c, ai);
        }
    } else {
        const int m = q.index;
        const LF bm = LF::b(m);
        if (k == 2) {
            const int s = m == 1 ? 1 : -1;
            const LF b12 = LF::b(1) - LF::b(2);
            PoleSum l1, l0;
            for (int i = 1; i <= 3; ++i) l1 -= lg(LF::a(i) - bm);
            l1 += lg(bm) + 2 * lg(b12);
            for (int i = 1; i <= 3; ++i) {
                const LF d = LF::a(i) - bm;
                l0 += pole(k0(d) * MultiPoly(2) + one, d);
            }
            l0 += pole(MultiPoly(3) - k0(bm) * MultiPoly(2), bm);
            l0 -= pole(k0(b12) * MultiPoly(4), b12);
            G1 = s * l1;
            G0 = Rational(-s, 2) * l0;
        } else if (m != j) {
            const int s = shown && m == 2 ? -1 : 1;
            const LF bj = LF::b(j), d = bj - bm;
            // log(1 - b_j/b_m) = log(b_m - b_j) - log(b_m)
            PoleSum l1 = lg(bm) - lg(bm - bj);
            PoleSum l0 = -pole(k0(bj) - one, d);
            // c b_j/(b_m (b_j - b_m)) = c/b_m + c/(b_j - b_m) with c = (2 b_{m,0} - 1)/2
            MultiPoly c = (k0(bm) * MultiPoly(2) - one).scaled(half);
            l0 += pole(c, bm) + pole(c, d);
            G1 = s * l1;
            G0 = s * l0;
        } else {
            const LF bo = LF::b(3 - m);
            PoleSum l1, l0;
            for (int i = 1; i <= 3; ++i) l1 -= lg(LF::a(i) - bm);
            l1 += 2 * lg(bm) + lg(bm - bo);
            for (int i = 1; i <= 3; ++i) {
                const LF d = LF::a(i) - bm;
                l0 += pole(k0(d) * MultiPoly(2) + one, d);
            }
            l0 += pole((one - k0(bm)) * MultiPoly(4), bm);
            l0 += pole(k0(bo - bm) * MultiPoly(2) + one, bm - bo);
            G1 = l1;
            G0 = Rational(-1, 2) * l0;
        }
    }
    EtaSeries<PoleSum> g(-1, L);
    g.at(-1) = G1;
    g.at(0) = G0;
    return g;
}

CheckReport dd_check_n3(const ParameterSet& p, ShiftParam q, int j, int k, int L, GForm form) {
    const VarId v = param_var(q);
    DDRightHandSide f = form == GForm::Corrected ? f_rhs(3, Point::Zero, j, k, q) : f_rhs_n3_display(j, k, q);
    auto lhs = scaled(dd_lhs(p, Point::Zero, j, k, q, L), Rational(2));
    auto rhs = scaled(f_series(f, p, L), Rational(2)) + eta_shift(g_n3(p, j, k, q, form, L), v);
    CheckReport r;
    compare(r, std::string(form == GForm::Corrected ? "explicit g " : "explicit g as printed ") +
                   cell_name(Point::Zero, j, k, q),
            lhs, rhs, L);
    return r;
}

CheckReport dd_check_general(const ParameterSet& p, Point rho, int j, int k, ShiftParam q, int L) {
    const VarId v = param_var(q);
    const std::string name = "reconstructed g " + cell_name(rho, j, k, q);
    auto R = dd_lhs(p, rho, j, k, q, L) - f_series(f_rhs(p.N, rho, j, k, q), p, L);
    CheckReport r;
    auto g1 = R[0].integral(v);
    auto g0 = g1 ? (R[1] - Rational(1, 2) * R[0].derivative(v)).integral(v) : std::nullopt;
    if (!g1 || !g0) {
        r.add(name, false, "g reconstruction failed");
        return r;
    }
    EtaSeries<PoleSum> g(-1, L);
    g.at(-1) = *g1;
    g.at(0) = *g0;
    compare(r, name, R, eta_shift(g, v), L);
    return r;
}

CheckReport compatibility_check(const ParameterSet& p0, Point rho, int j, int k, ShiftParam q, ShiftParam tau, int L) {
    const ParameterSet p = with_free_param(with_free_param(p0, q), tau);
    const VarId vq = param_var(q), vt = param_var(tau);
    auto V = voros_to_order(p, rho, j, k, L);
    auto dq = [&](const EtaSeries<PoleSum>& s) { return derivative(eta_shift(s, vq), vq); };
    auto dt = [&](const EtaSeries<PoleSum>& s) { return derivative(eta_shift(s, vt), vt); };
    CheckReport r;
    compare(r, std::string("compatibility ") + cell_name(rho, j, k, q) + " with " + tau.name(), dt(dq(V)), dq(dt(V)), L);
    return r;
}

CheckReport uniqueness_gauge_check(const ParameterSet& p, Point rho, int j, int k, int L, const Rational& lambda) {
    CheckReport r;
    auto V = voros_series(p, rho, j, k, L);
    const std::string name = std::string("V_") + point_name(rho) + "^(" + std::to_string(j) + "," + std::to_string(k) + ")";
    r.add(name + " eta^1 part vanishes", V[-1].is_zero(), V[-1].str());
    r.add(name + " eta^0 part vanishes", V[0].is_zero(), V[0].str());
    r.merge(homogeneity_check(p, rho, j, k, lambda, L));
    return r;
}

}  // namespace ghg
