#include "ghg/turning.hpp"

#include "ghg/combinatorics.hpp"
#include "ghg/resultant.hpp"
#include "ghg/symbol.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ghg {

namespace {

using P = MultiPoly;

// Polynomial in (x, zeta) with double coefficients, evaluated together with a
// magnitude scale sum |c||x|^i|zeta|^j used for relative residuals.
struct NumPoly2 {
    struct T {
        double c;
        int ex, ez;
    };
    std::vector<T> terms;

    explicit NumPoly2(const P& p) {
        const VarId xv = x_var(), zv = zeta_var();
        for (const auto& t : p.terms()) terms.push_back({t.c.to_double(), t.m[xv], t.m[zv]});
    }
    std::pair<cplx, double> eval(cplx x, cplx z) const {
        cplx v = 0;
        double s = 0;
        for (const auto& t : terms) {
            cplx m = std::pow(x, t.ex) * std::pow(z, t.ez);
            v += t.c * m;
            s += std::abs(t.c) * std::abs(m);
        }
        return {v, s};
    }
};

double rel(const std::pair<cplx, double>& e) { return e.second == 0 ? std::abs(e.first) : std::abs(e.first) / e.second; }

// Roots of sum c[k] z^k via the companion matrix.
std::vector<cplx> poly_roots(std::vector<cplx> c) {
    while (!c.empty() && c.back() == cplx(0)) c.pop_back();
    const int n = int(c.size()) - 1;
    if (n < 1) return {};
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) m(i, i - 1) = 1;
    for (int i = 0; i < n; ++i) m(i, n - 1) = -c[i] / c[n];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
    std::vector<cplx> r(n);
    for (int i = 0; i < n; ++i) r[i] = es.eigenvalues()[i];
    return r;
}

cplx horner(const std::vector<cplx>& c, cplx z, cplx* deriv = nullptr) {
    cplx v = 0, d = 0;
    for (int k = int(c.size()) - 1; k >= 0; --k) {
        d = d * z + v;
        v = v * z + c[k];
    }
    if (deriv) *deriv = d;
    return v;
}

double min_separation(const std::vector<cplx>& r) {
    double s = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = i + 1; j < r.size(); ++j) s = std::min(s, std::abs(r[i] - r[j]));
    return s;
}

double max_abs(const std::vector<cplx>& r) {
    double m = 0;
    for (auto z : r) m = std::max(m, std::abs(z));
    return m;
}

constexpr double kCollisionGuard = 1e-6;

struct Collision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Nearest-neighbour matching of `next` onto `cur`; empty when not injective.
std::vector<cplx> match(const std::vector<cplx>& cur, const std::vector<cplx>& next) {
    std::vector<cplx> out(cur.size());
    std::vector<bool> used(next.size(), false);
    for (std::size_t i = 0; i < cur.size(); ++i) {
        std::size_t best = 0;
        double bd = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < next.size(); ++j) {
            double d = std::abs(next[j] - cur[i]);
            if (d < bd) bd = d, best = j;
        }
        if (used[best]) return {};
        used[best] = true;
        out[i] = next[best];
    }
    return out;
}

bool finite(const std::vector<cplx>& r) {
    return std::all_of(r.begin(), r.end(), [](cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

// Roots w = x zeta of w prod(w + b) - x prod(w + a); bounded at both 0 and infinity.
std::vector<cplx> scaled_roots(const NumericParams& np, cplx x) {
    std::vector<cplx> pb{1}, pa{1};
    auto mul = [](std::vector<cplx>& c, cplx r) {
        std::vector<cplx> o(c.size() + 1, 0);
        for (std::size_t k = 0; k < c.size(); ++k) {
            o[k] += c[k] * r;
            o[k + 1] += c[k];
        }
        c = std::move(o);
    };
    for (auto b : np.b1) mul(pb, b);
    for (auto a : np.a1) mul(pa, a);
    std::vector<cplx> c(np.N + 1, 0);
    for (std::size_t k = 0; k < pb.size(); ++k) c[k + 1] += pb[k];
    for (std::size_t k = 0; k < pa.size(); ++k) c[k] -= x * pa[k];
    return poly_roots(c);
}

// Continue `cur` (scaled roots at a) along the segment [a, b].
std::vector<cplx> track_segment(const NumericParams& np, cplx a, cplx b, std::vector<cplx> cur) {
    double s = 0, h = 1.0 / 64;
    while (s < 1) {
        const double hs = std::min(h, 1 - s);
        const cplx xn = a + (b - a) * (s + hs);
        auto r = scaled_roots(np, xn);
        std::vector<cplx> m;
        if (r.size() == cur.size() && finite(r)) m = match(cur, r);
        bool ok = !m.empty();
        if (ok) {
            double disp = 0;
            for (std::size_t i = 0; i < m.size(); ++i) disp = std::max(disp, std::abs(m[i] - cur[i]));
            ok = disp < 0.3 * min_separation(cur);
        }
        if (!ok) {
            h /= 2;
            if (h < 1e-13) throw Collision("path too close to a turning point");
            continue;
        }
        s += hs;
        cur = std::move(m);
        if (min_separation(cur) < kCollisionGuard * max_abs(cur))
            throw Collision("path too close to a turning point");
        h = std::min(0.25, h * 1.5);
    }
    return cur;
}

std::vector<cplx> track_with_detours(const NumericParams& np, cplx a, cplx b, std::vector<cplx> cur, int depth) {
    try {
        return track_segment(np, a, b, cur);
    } catch (const Collision&) {
        if (depth >= 4) throw;
    }
    const cplx mid = 0.5 * (a + b);
    const cplx perp = (b - a) * cplx(0, 0.3);
    for (double sgn : {1.0, -1.0}) {
        try {
            auto r = track_with_detours(np, a, mid + sgn * perp, cur, depth + 1);
            return track_with_detours(np, mid + sgn * perp, b, r, depth + 1);
        } catch (const Collision&) {
        }
    }
    throw Collision("path too close to a turning point");
}

// Leading terms of the locally numbered scaled roots x zeta near the singular point.
std::vector<cplx> leading_roots(const NumericParams& np, cplx x, Point rho) {
    const int N = np.N;
    std::vector<cplx> r(N);
    if (rho == Point::Zero) {
        cplx pa = 1, pb = 1;
        for (auto v : np.a1) pa *= v;
        for (auto v : np.b1) pb *= v;
        for (int l = 0; l + 1 < N; ++l) r[l] = -np.b1[l];
        r[N - 1] = x * pa / pb;
    } else {
        for (int m = 0; m < N; ++m) r[m] = -np.a1[m];
    }
    return r;
}

std::string rat_str(const P& p) { return p.is_constant() ? p.constant_value().str() : p.str(); }

}  // namespace

std::pair<P, P> fg_polys(const ParameterSet& p) {
    const int N = p.N;
    const P x = P::variable(x_var()), z = P::variable(zeta_var());
    const auto &A = p.a1, &B = p.b1;
    P f, g;
    for (int k = 0; k < N; ++k) f += P(k + 1) * (elem_sym(N - k - 1, B) - elem_sym(N - k - 1, A) * x) * z.pow(k);
    for (int k = 1; k < N; ++k) g += P(N - k) * (elem_sym(N - k, B) - elem_sym(N - k, A) * x) * z.pow(k);
    g -= P(N) * elem_sym(N, A) * x;
    return {f, g};
}

FactorizationReport factorization_check(const ParameterSet& p) {
    const int N = p.N;
    const VarId zv = zeta_var();
    const P s0 = principal_symbol(p);
    FactorizationReport r;
    r.lhs = resultant(s0, s0.derivative(zv), zv);
    auto [f, g] = fg_polys(p);
    Rational pref = Rational(N % 2 ? 1 : -1) / Rational(N).pow(N - 2);
    const P x = P::variable(x_var());
    r.rhs = P(pref) * x.pow(unsigned((N - 1) * (N - 1))) * (P(1) - x) * resultant(f, g, zv);
    r.ok = r.lhs == r.rhs;
    if (!r.rhs.is_zero())
        if (auto q = r.lhs.divide_exact(r.rhs); q && q->is_constant()) r.ratio = q->constant_value();
    return r;
}

P h_poly(const ParameterSet& p) {
    const int N = p.N;
    const P z = P::variable(zeta_var());
    const auto &A = p.a1, &B = p.b1;
    P h;
    for (int k = N; k <= 2 * (N - 1); ++k) {
        P c;
        for (int j = 1; j <= 2 * N - k; ++j)
            c += P(j * (N - k - j + 1)) *
                 (elem_sym(j - 1, B) * elem_sym(2 * N - k - j, A) - elem_sym(j - 1, A) * elem_sym(2 * N - k - j, B));
        h += c * z.pow(k);
    }
    for (int k = 0; k <= N - 1; ++k) {
        P c;
        for (int j = 0; j <= k + 1; ++j)
            c += P(N * (k + j + 1)) *
                 (elem_sym(N - k + j - 1, A) * elem_sym(N - j, B) - elem_sym(N - k + j - 1, B) * elem_sym(N - j, A));
        h += c * z.pow(k);
    }
    if (h.coeff(zeta_var(), 2 * (N - 1)).is_zero()) throw std::domain_error("degenerate leading coefficient");
    return h;
}

std::vector<cplx> characteristic_roots(const NumericParams& np, cplx x) {
    auto w = scaled_roots(np, x);
    for (auto& z : w) z /= x;
    return w;
}

std::vector<TurningPoint> turning_points(const ParameterSet& p, double tol) {
    if (!p.is_exact()) throw std::invalid_argument("turning_points needs exact parameter values");
    const P h = h_poly(p);
    const VarId zv = zeta_var(), xv = x_var();
    std::vector<cplx> hc;
    for (const auto& c : h.coeffs(zv)) hc.push_back(c.is_zero() ? 0.0 : c.constant_value().to_double());
    auto zs = poly_roots(hc);
    for (auto& z : zs)
        for (int it = 0; it < 3; ++it) {
            cplx d;
            cplx v = horner(hc, z, &d);
            if (d == cplx(0)) break;
            z -= v / d;
        }
    for (std::size_t i = 0; i < zs.size(); ++i)
        for (std::size_t j = i + 1; j < zs.size(); ++j)
            if (std::abs(zs[i] - zs[j]) <= kCollisionGuard * std::max({1.0, std::abs(zs[i]), std::abs(zs[j])}))
                throw std::domain_error("non-simple or near-degenerate turning points");

    auto [f, g] = fg_polys(p);
    const P s0 = principal_symbol(p);
    const NumPoly2 f0(f.coeff(xv, 0)), f1(f.coeff(xv, 1));
    const NumPoly2 S(s0), Sz(s0.derivative(zv)), Sx(s0.derivative(xv)), Szz(s0.derivative(zv).derivative(zv));
    std::vector<TurningPoint> out;
    for (auto w : zs) {
        // f and g are written in w = x zeta.
        TurningPoint tp;
        tp.x = -f0.eval(0, w).first / f1.eval(0, w).first;
        tp.zeta = w / tp.x;
        const cplx z = tp.zeta;
        tp.res_sigma = rel(S.eval(tp.x, z));
        tp.res_dzeta = rel(Sz.eval(tp.x, z));
        if (!(tp.res_sigma < tol && tp.res_dzeta < tol))
            throw std::domain_error("non-simple or near-degenerate turning points");
        tp.mag_dx = rel(Sx.eval(tp.x, z));
        tp.mag_d2zeta = rel(Szz.eval(tp.x, z));
        tp.simple = tp.mag_dx > kCollisionGuard && tp.mag_d2zeta > kCollisionGuard;
        out.push_back(tp);
    }
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (std::max(std::abs(out[i].x - out[j].x), std::abs(out[i].zeta - out[j].zeta)) <= kCollisionGuard)
                throw std::domain_error("non-simple or near-degenerate turning points");
    return out;
}

std::vector<cplx> default_path(const TurningPoint& tp, Point rho) {
    const double r = std::abs(tp.x);
    const cplx dir = tp.x / r;
    if (rho == Point::Zero) return {dir * (1e-6 * std::min(1.0, r)), tp.x};
    return {dir * (1e6 * std::max(1.0, r)), tp.x};
}

std::pair<int, int> classify_turning_point(const ParameterSet& p, const TurningPoint& tp, Point rho,
                                           std::vector<cplx> path) {
    if (path.size() < 2) throw std::invalid_argument("path needs at least two points");
    if (std::abs(path.front() - tp.x) < std::abs(path.back() - tp.x)) std::reverse(path.begin(), path.end());
    const NumericParams np = NumericParams::from(p);
    const int N = p.N;

    auto roots = scaled_roots(np, path.front());
    auto lead = leading_roots(np, path.front(), rho);
    // Order the computed roots by the local numbering.
    std::vector<cplx> cur = match(lead, roots);
    if (cur.empty() || int(cur.size()) != N) throw std::domain_error("path start is not close enough to the singular point");

    // Stop short of x* so that the coalescing pair is still separated.
    const cplx last = path.back();
    const cplx prev = path[path.size() - 2];
    const double delta = 1e-3 * std::min({std::abs(prev - last), std::abs(last), std::abs(last - 1.0)});
    path.back() = last + (prev - last) / std::abs(prev - last) * delta;
    try {
        for (std::size_t s = 0; s + 1 < path.size(); ++s) {
            if (std::abs(path[s + 1] - path[s]) == 0) continue;
            cur = track_with_detours(np, path[s], path[s + 1], cur, 0);
        }
    } catch (const Collision& e) {
        throw std::domain_error(e.what());
    }

    const cplx wstar = tp.x * tp.zeta;
    int bj = -1, bk = -1;
    double best = std::numeric_limits<double>::infinity(), second = best;
    for (int j = 0; j < N; ++j)
        for (int k = j + 1; k < N; ++k) {
            double d = std::abs(cur[j] - wstar) + std::abs(cur[k] - wstar);
            if (d < best) {
                second = best;
                best = d, bj = j, bk = k;
            } else {
                second = std::min(second, d);
            }
        }
    if (N > 2 && !(best < 0.5 * second)) throw std::domain_error("ambiguous coalescing pair at the turning point");
    return {bj + 1, bk + 1};
}

GenericityReport genericity_report(const ParameterSet& p) {
    GenericityReport rep;
    const VarId xv = x_var(), zv = zeta_var();
    auto w = [&](const std::string& s) { rep.witnesses.push_back(s); };

    P s1a = elem_sym(1, p.a1), s1b = elem_sym(1, p.b1);
    rep.s1_differs = !(s1a == s1b);
    w("s1(a1) - s1(b1) = " + rat_str(s1a - s1b));

    auto [f, g] = fg_polys(p);
    P R = resultant(f, g, zv);
    P lead = R.is_zero() ? P() : R.coeff(xv, R.degree(xv));
    rep.lead_nonzero = !R.is_zero() && R.degree(xv) >= 1 && !lead.is_zero();
    w("leading coefficient of res_zeta(f, g) in x = " + (R.is_zero() ? std::string("0") : rat_str(lead)));

    P dis;
    if (rep.lead_nonzero) {
        dis = discriminant(R, xv);
        rep.discriminant_nonzero = !dis.is_zero();
        w("Dis_x res_zeta(f, g) = " + rat_str(dis));
    } else {
        w("Dis_x res_zeta(f, g) undefined");
    }

    if (p.N == 3 && rep.lead_nonzero) {
        P d(256);
        for (const auto& a : p.a1) d *= a;
        for (const auto& a : p.a1)
            for (const auto& b : p.b1) d *= a - b;
        if (d.is_zero()) {
            rep.cube_factorization = dis.is_zero();
        } else {
            auto q = dis.divide_exact(d);
            rep.cube_factorization = q && exact_root(*q, 3).has_value();
        }
        w(std::string("N=3 cube factorization ") + (rep.cube_factorization ? "holds" : "fails"));
    }

    rep.simple_tp = false;
    if (p.is_exact() && rep.s1_differs && rep.discriminant_nonzero) {
        try {
            auto tps = turning_points(p);
            rep.simple_tp = std::all_of(tps.begin(), tps.end(), [](const TurningPoint& t) { return t.simple; });
            std::ostringstream os;
            os << tps.size() << " turning points located";
            w(os.str());
        } catch (const std::exception& e) {
            w(std::string("turning points: ") + e.what());
        }
    } else if (!p.is_exact()) {
        w("simplicity check needs exact parameter values");
    }
    rep.ok = rep.simple_tp && rep.s1_differs && rep.lead_nonzero && rep.discriminant_nonzero && rep.cube_factorization;
    return rep;
}

DiscriminantCube discriminant_cube_n3() {
    const ParameterSet p = ParameterSet::symbolic(3);
    auto [f, g] = fg_polys(p);
    DiscriminantCube r;
    r.dis = discriminant(resultant(f, g, zeta_var()), x_var());
    P d(256);
    for (const auto& a : p.a1) d *= a;
    for (const auto& a : p.a1)
        for (const auto& b : p.b1) d *= a - b;
    auto q = r.dis.divide_exact(d);
    r.divisible = q.has_value();
    if (!q) return r;
    r.quotient = *q;
    auto c = exact_root(*q, 3);
    r.is_cube = c.has_value();
    if (!c) return r;
    r.h_prime = *c;
    std::vector<VarId> vars;
    for (int i = 1; i <= 3; ++i) vars.push_back(a_var(i, 1));
    for (int j = 1; j <= 2; ++j) vars.push_back(b_var(j, 1));
    auto hd = r.h_prime.homogeneous_degree(vars);
    r.h_degree = hd ? *hd : -1;
    return r;
}

}  // namespace ghg
