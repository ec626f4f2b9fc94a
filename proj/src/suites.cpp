#include "ghg/suites.hpp"

#include "ghg/borel.hpp"
#include "ghg/combinatorics.hpp"
#include "ghg/parallel.hpp"
#include "ghg/resultant.hpp"
#include "ghg/symbol.hpp"
#include "ghg/turning.hpp"
#include "ghg/verify.hpp"
#include "ghg/voros.hpp"
#include "ghg/wkb.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace ghg {

namespace {

using Cell = std::function<CheckReport()>;

struct NamedCell {
    std::string name;
    Cell run;
};

CheckReport run_cells(const std::vector<NamedCell>& cells) {
    auto parts = parallel_map<CheckReport>(cells.size(), [&](std::size_t i) {
        try {
            return cells[i].run();
        } catch (const std::exception& e) {
            CheckReport r;
            r.add("error", false, e.what());
            return r;
        }
    });
    CheckReport all;
    for (std::size_t i = 0; i < cells.size(); ++i) all.merge(parts[i], cells[i].name + ": ");
    return all;
}

CheckReport single(const std::string& name, bool ok, std::string detail = {}) {
    CheckReport r;
    r.add(name, ok, std::move(detail));
    return r;
}

std::vector<std::pair<int, int>> pairs(int N) {
    std::vector<std::pair<int, int>> out;
    for (int j = 1; j <= N; ++j)
        for (int k = j + 1; k <= N; ++k) out.emplace_back(j, k);
    return out;
}

std::vector<NamedCell> algebra_cells(const JobConfig& c) {
    std::vector<NamedCell> cells;
    cells.push_back({"bernoulli", [] {
                         CheckReport r;
                         const VarId t = var("t");
                         const MultiPoly T = MultiPoly::variable(t);
                         for (unsigned l = 0; l <= 12; ++l) {
                             MultiPoly B = bernoulli_poly(l, t);
                             MultiPoly refl = bernoulli_at(l, MultiPoly(1) - T) - B.scaled(Rational(l % 2 ? -1 : 1));
                             MultiPoly step = bernoulli_at(l, T + MultiPoly(1)) - B -
                                              (l ? MultiPoly(Rational(int(l))) * T.pow(l - 1) : MultiPoly());
                             r.add("B_" + std::to_string(l) + " reflection", refl.is_zero(), refl.str());
                             r.add("B_" + std::to_string(l) + " unit step", step.is_zero(), step.str());
                         }
                         return r;
                     }});
    cells.push_back({"stirling2", [] {
                         CheckReport r;
                         // x^n = sum_k S(n, k) x (x - 1) ... (x - k + 1)
                         const MultiPoly X = MultiPoly::variable(var("t"));
                         for (unsigned n = 0; n <= 8; ++n) {
                             MultiPoly s, falling(1);
                             for (unsigned k = 0; k <= n; ++k) {
                                 s += falling.scaled(Rational(stirling2(n, k)));
                                 falling = falling * (X - MultiPoly(Rational(int(k))));
                             }
                             MultiPoly d = s - X.pow(n);
                             r.add("falling factorial expansion n=" + std::to_string(n), d.is_zero(), d.str());
                         }
                         return r;
                     }});
    cells.push_back({"resultant", [&c] {
                         CheckReport r;
                         auto [f, g] = fg_polys(c.params);
                         const VarId w = zeta_var();
                         MultiPoly fg = resultant(f, g, w), gf = resultant(g, f, w);
                         const int s = (f.degree(w) * g.degree(w)) % 2 ? -1 : 1;
                         MultiPoly d = fg - gf.scaled(Rational(s));
                         r.add("res(f, g) = (-1)^{deg f deg g} res(g, f)", d.is_zero(), d.str());
                         MultiPoly dis = discriminant(fg, x_var()) - discriminant_sylvester(fg, x_var());
                         r.add("discriminant closed form = Sylvester form", dis.is_zero(), dis.str());
                         return r;
                     }});
    return cells;
}

std::vector<NamedCell> symbol_cells(const JobConfig& c) {
    const ParameterSet& p = c.params;
    std::vector<NamedCell> cells;
    cells.push_back({"principal", [&p] {
                         CheckReport r;
                         OperatorSymbol s = total_symbol(p);
                         MultiPoly d = s.sigma(0) - principal_symbol(p);
                         r.add("sigma_0 = principal symbol", d.is_zero(), d.str());
                         d = principal_symbol(p) - principal_symbol_product(p);
                         r.add("expanded = product form", d.is_zero(), d.str());
                         const MultiPoly X = MultiPoly::variable(x_var());
                         d = s.zeta_coeff(p.N) - X.pow(unsigned(p.N - 1)) * (MultiPoly(1) - X);
                         r.add("zeta^N coefficient x^{N-1}(1-x)", d.is_zero(), d.str());
                         auto norm = monic_normalize(s, p.N);
                         r.add("monic normalization", norm.at(p.N) == RatFunc(Rational(1)), norm.at(p.N).str());
                         return r;
                     }});
    for (int i = 1; i <= p.N; ++i)
        cells.push_back({"intertwine a" + std::to_string(i), [&p, i] {
                             OperatorSymbol d = intertwine_check(p, i);
                             return single("H(a_i) x P = x P^ H(a_i)", d.poly.is_zero(), d.poly.str());
                         }});
    for (int j = 1; j < p.N; ++j)
        cells.push_back({"intertwine b" + std::to_string(j), [&p, j] {
                             OperatorSymbol d = intertwine_check_b(p, j);
                             return single("P B(b_j) = B(b_j) P~", d.poly.is_zero(), d.poly.str());
                         }});
    return cells;
}

std::vector<NamedCell> turning_cells(const JobConfig& c) {
    const ParameterSet& p = c.params;
    std::vector<NamedCell> cells;
    cells.push_back({"factorization", [&p] {
                         FactorizationReport f = factorization_check(p);
                         return single("res(sigma_0, d sigma_0) = prefactor res(f, g)", f.ok,
                                       f.ratio ? "lhs/rhs = " + f.ratio->str() : "not proportional");
                     }});
    cells.push_back({"genericity", [&p] {
                         GenericityReport g = genericity_report(p);
                         CheckReport r;
                         r.add("simple turning points", g.simple_tp);
                         r.add("s_1(a_1) != s_1(b_1)", g.s1_differs);
                         r.add("leading coefficient nonzero", g.lead_nonzero);
                         r.add("discriminant nonzero", g.discriminant_nonzero);
                         if (p.N == 3) r.add("N = 3 discriminant factorization", g.cube_factorization);
                         std::string w;
                         for (const auto& s : g.witnesses) w += s + "; ";
                         r.add("overall", g.ok, w);
                         return r;
                     }});
    cells.push_back({"turning points", [&c] {
                         const ParameterSet& p = c.params;
                         CheckReport r;
                         auto tps = turning_points(p, c.tp_tol);
                         r.add("count 2(N-1)", int(tps.size()) == 2 * (p.N - 1), std::to_string(tps.size()));
                         for (std::size_t i = 0; i < tps.size(); ++i) {
                             const auto& tp = tps[i];
                             const std::string n = "tp " + std::to_string(i + 1);
                             r.add(n + " residuals", tp.res_sigma < c.tp_tol && tp.res_dzeta < c.tp_tol,
                                   std::to_string(tp.res_sigma) + ", " + std::to_string(tp.res_dzeta));
                             r.add(n + " simple", tp.simple);
                             auto t = classify_turning_point(p, tp, c.point, default_path(tp, c.point));
                             r.add(n + " type", 1 <= t.first && t.first < t.second && t.second <= p.N,
                                   "(" + std::to_string(t.first) + "," + std::to_string(t.second) + ")");
                         }
                         return r;
                     }});
    return cells;
}

std::vector<NamedCell> wkb_cells(const JobConfig& c) {
    const ParameterSet& p = c.params;
    const int L = c.eta_order, M = c.x_order;
    std::vector<NamedCell> cells;
    for (Point rho : {Point::Zero, Point::Infinity}) {
        const std::string at = std::string("rho=") + point_name(rho);
        for (int m = 1; m <= p.N; ++m)
            cells.push_back({at + " riccati m=" + std::to_string(m), [&p, rho, m, L, M] {
                                 auto S = riccati_series<Rational>(p, rho, m, L, M);
                                 auto res = riccati_residual<Rational>(p, S);
                                 CheckReport r;
                                 for (std::size_t n = 0; n < res.size(); ++n)
                                     r.add("Ri(P)(S) eta^-" + std::to_string(n), res[n].is_zero(), res[n].str());
                                 return r;
                             }});
        for (auto [j, k] : pairs(p.N))
            cells.push_back({at + " residue (" + std::to_string(j) + "," + std::to_string(k) + ")",
                             [&p, rho, j, k, L, M] {
                                 auto pr = odd_even_split(riccati_series<Rational>(p, rho, j, L, M),
                                                          riccati_series<Rational>(p, rho, k, L, M));
                                 auto rr = residue_check(pr);
                                 CheckReport r;
                                 for (int l = 1; l <= L; ++l) {
                                     const Rational& v = rr.residues.at(std::size_t(l + 1));
                                     r.add("Res S_odd," + std::to_string(l), v.is_zero(), v.str());
                                 }
                                 return r;
                             }});
        for (int m = 1; m <= p.N; ++m)
            for (ShiftParam q : p.linear_params())
                cells.push_back({at + " ladder m=" + std::to_string(m) + " " + q.name(),
                                 [&p, rho, m, q, L, M] { return ladder_check<Rational>(p, rho, m, q, L, M); }});
    }
    cells.push_back({"local behaviors", [&p, L, M] { return local_behavior_check<Rational>(p, L, M); }});
    return cells;
}

std::vector<NamedCell> voros_cells(const JobConfig& c) {
    const ParameterSet& p = c.params;
    const int L = c.eta_order;
    const int j = c.j, k = c.k;
    const Point rho = c.point;
    std::vector<NamedCell> cells;
    cells.push_back({"genericity", [&p] {
                         CheckReport r;
                         for (Point pt : {Point::Zero, Point::Infinity})
                             for (auto [a, b] : pairs(p.N)) {
                                 voros_terms(p, pt, a, b);
                                 r.add(std::string("kappa1 nonzero rho=") + point_name(pt) + " (" + std::to_string(a) +
                                           "," + std::to_string(b) + ")",
                                       true);
                             }
                         return r;
                     }});
    for (Point pt : {Point::Zero, Point::Infinity})
        cells.push_back({std::string("cocycle rho=") + point_name(pt), [&p, pt, L] {
                             CheckReport r;
                             for (int a = 1; a <= p.N; ++a)
                                 for (int b = 1; b <= p.N; ++b)
                                     for (int d = 1; d <= p.N; ++d)
                                         if (a != b && b != d && a != d) r.merge(cocycle_check(p, pt, a, b, d, L));
                             if (p.N == 2) r.merge(cocycle_check(p, pt, 1, 2, 1, L));
                             return r;
                         }});
    cells.push_back({"homogeneity", [&p, rho, j, k, L] { return homogeneity_check(p, rho, j, k, Rational(2, 3), L); }});
    if (p.N == 3) cells.push_back({"display consistency", [L] { return display_consistency_check(L); }});
    for (ShiftParam q : p.linear_params())
        cells.push_back({"differential-difference " + q.name(),
                         [&p, rho, j, k, q, L] { return dd_check_general(p, rho, j, k, q, L - 2); }});
    cells.push_back({"compatibility", [&p, rho, j, k, L] {
                         CheckReport r;
                         auto qs = p.linear_params();
                         for (std::size_t a = 0; a < qs.size(); ++a)
                             for (std::size_t b = a + 1; b < qs.size(); ++b)
                                 r.merge(compatibility_check(p, rho, j, k, qs[a], qs[b], L - 2));
                         return r;
                     }});
    cells.push_back({"uniqueness gauge", [&p, rho, j, k, L] { return uniqueness_gauge_check(p, rho, j, k, L - 2); }});
    return cells;
}

std::vector<NamedCell> borel_cells(const JobConfig& c) {
    std::vector<NamedCell> cells;
    cells.push_back({"log_gamma", [] {
                         CheckReport r;
                         r.add("log_gamma(1) = 0", std::abs(log_gamma(1.0)) < 1e-15);
                         const double half = 0.5 * std::log(std::numbers::pi);
                         r.add("log_gamma(1/2) = log sqrt(pi)", std::abs(log_gamma(0.5) - half) < 1e-14 * half);
                         std::mt19937_64 rng(17);
                         std::uniform_real_distribution<double> u(-50.0, 50.0);
                         double worst = 0.0;
                         for (int i = 0; i < 200; ++i) {
                             cplx z(u(rng), u(rng));
                             cplx d = log_gamma(z + 1.0) - log_gamma(z) - std::log(z);
                             worst = std::max(worst, std::abs(d) / std::max(1.0, std::abs(log_gamma(z + 1.0))));
                         }
                         r.add("log Gamma(z+1) - log Gamma(z) - log z", worst < 1e-12, std::to_string(worst));
                         return r;
                     }});
    cells.push_back({"branch formulas", [] {
                         CheckReport r;
                         // exp(2 (left - right)) = (-1)^{s - 1/2} pi / (2 pi sin(pi s)), principal powers
                         for (cplx kappa : {cplx(1.3, 0.4), cplx(0.7, -1.1), cplx(2.0, 0.0)})
                             for (double eta : {3.0, 11.0}) {
                                 const cplx k0(0.3, 0.2), ke = kappa * eta, s = k0 + ke;
                                 cplx lhs = std::exp(2.0 * (borel_branch(kappa, k0, eta, false) -
                                                            borel_branch(kappa, k0, eta, true)));
                                 cplx rhs = std::exp((s - 0.5) * (std::log(-ke) - std::log(ke))) /
                                            (2.0 * std::sin(std::numbers::pi * s));
                                 r.add("reflection identity", std::abs(lhs - rhs) <= 1e-9 * std::abs(rhs));
                             }
                         return r;
                     }});
    cells.push_back({"summability and asymptotics", [&c] {
                         CheckReport r;
                         const NumericParams np = NumericParams::from(c.params);
                         SummabilityVerdict v = summability_region(np, c.point, c.j, c.k, c.summability_tol);
                         std::string bad;
                         for (const auto& x : v.violated) bad += x.form.str() + "; ";
                         r.add("summable", v.summable, bad);
                         if (!v.summable) return r;
                         const int L = std::min(c.eta_order, 6);
                         for (double eta : {10.0, 20.0, 40.0, 80.0}) {
                             BorelEvaluation e = borel_sum_voros(np, c.point, c.j, c.k, eta, L, c.summability_tol);
                             r.add("eta=" + std::to_string(int(eta)) + " |value - partial| <= 2 |first omitted|",
                                   e.discrepancy <= 2.0 * e.first_omitted + 1e-15 * std::abs(e.value),
                                   std::to_string(e.discrepancy) + " vs " + std::to_string(e.first_omitted));
                             BorelEvaluation m = borel_sum_voros(np, c.point, c.k, c.j, eta, L, c.summability_tol);
                             r.add("eta=" + std::to_string(int(eta)) + " antisymmetry",
                                   std::abs(e.value + m.value) <= 1e-12 * std::max(1.0, std::abs(e.value)));
                         }
                         return r;
                     }});
    return cells;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"algebra", "symbol", "turning", "wkb", "voros", "borel"};
    return names;
}

CheckReport run_suite(const std::string& name, const JobConfig& c) {
    if (name == "algebra") return run_cells(algebra_cells(c));
    if (name == "symbol") return run_cells(symbol_cells(c));
    if (name == "turning") return run_cells(turning_cells(c));
    if (name == "wkb") return run_cells(wkb_cells(c));
    if (name == "voros") return run_cells(voros_cells(c));
    if (name == "borel") return run_cells(borel_cells(c));
    throw std::invalid_argument("unknown suite \"" + name + "\"");
}

}  // namespace ghg
