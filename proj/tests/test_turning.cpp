#include "ghg/resultant.hpp"
#include "ghg/turning.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace ghg;

namespace {

ParameterSet draw(int N, unsigned seed) {
    std::mt19937_64 rng(seed);
    return ParameterSet::random(N, rng);
}

ParameterSet generic_draw(int N, unsigned seed) {
    std::mt19937_64 rng(seed);
    for (;;) {
        ParameterSet p = ParameterSet::random(N, rng);
        if (genericity_report(p).ok) return p;
    }
}

using Pairs = std::vector<std::pair<Rational, Rational>>;

}  // namespace

TEST_CASE("f and g for N = 2") {
    register_variables(2);
    const ParameterSet p = ParameterSet::symbolic(2);
    const MultiPoly x = MultiPoly::variable(x_var()), w = MultiPoly::variable(zeta_var()), one(1);
    const MultiPoly a1 = p.a1[0], a2 = p.a1[1], b1 = p.b1[0];
    auto [f, g] = fg_polys(p);
    CHECK(f == (one - x) * w.scaled(Rational(2)) + b1 - (a1 + a2) * x);
    CHECK(g == (b1 - (a1 + a2) * x) * w - (a1 * a2 * x).scaled(Rational(2)));
    for (int N = 2; N <= 5; ++N) {
        auto [fN, gN] = fg_polys(draw(N, unsigned(N)));
        CHECK(fN.degree(x_var()) <= 1);
        CHECK(gN.degree(x_var()) <= 1);
    }
}

TEST_CASE("resultant factorization") {
    for (unsigned s = 0; s < 3; ++s) {
        FactorizationReport r3 = factorization_check(draw(3, 100 + s));
        CHECK(r3.ok);
        CHECK(r3.lhs == r3.rhs);
    }
    // the prefactor as stated is off by (-1)^{N-1} for even N
    for (int N : {2, 4}) {
        FactorizationReport r = factorization_check(draw(N, 200 + unsigned(N)));
        CHECK_FALSE(r.ok);
        REQUIRE(r.ratio.has_value());
        CHECK(*r.ratio == Rational(-1));
    }
}

TEST_CASE("eliminant h") {
    for (int N = 2; N <= 5; ++N) {
        const ParameterSet p = draw(N, 300 + unsigned(N));
        const MultiPoly h = h_poly(p);
        CHECK(h.degree(zeta_var()) == 2 * (N - 1));
        auto [f, g] = fg_polys(p);
        const MultiPoly r = resultant(f, g, x_var());
        CHECK(r.degree(zeta_var()) == h.degree(zeta_var()));
        const Rational c = r.coeff(zeta_var(), r.degree(zeta_var())).constant_value() /
                           h.coeff(zeta_var(), h.degree(zeta_var())).constant_value();
        CHECK(r == h.scaled(c));
    }
    register_variables(3);
    const ParameterSet s = ParameterSet::symbolic(3);
    const MultiPoly h = h_poly(s);
    std::vector<VarId> vars;
    for (const auto& v : s.a1) vars.push_back(*v.variables().begin());
    for (const auto& v : s.b1) vars.push_back(*v.variables().begin());
    for (int k = 0; k <= 4; ++k) {
        const MultiPoly c = h.coeff(zeta_var(), k);
        if (c.is_zero()) continue;
        CHECK(c.homogeneous_degree(vars) == 2 * 3 - k - 1);
    }
    const ParameterSet degenerate =
        ParameterSet::exact(2, Pairs{{Rational(0), Rational(1)}, {Rational(0), Rational(2)}}, Pairs{{Rational(0), Rational(3)}});
    CHECK_THROWS_WITH(h_poly(degenerate), doctest::Contains("degenerate leading coefficient"));
}

TEST_CASE("turning point count and residuals") {
    for (int N = 2; N <= 5; ++N)
        for (unsigned s = 0; s < 3; ++s) {
            const ParameterSet p = generic_draw(N, 400 + 10 * unsigned(N) + s);
            auto tps = turning_points(p);
            CHECK(int(tps.size()) == 2 * (N - 1));
            for (const auto& tp : tps) {
                CHECK(tp.res_sigma < 1e-10);
                CHECK(tp.res_dzeta < 1e-10);
                CHECK(tp.simple);
                CHECK(std::abs(tp.x) > 1e-8);
                CHECK(std::abs(tp.x - 1.0) > 1e-8);
            }
            auto loose = turning_points(p, 1e-9);
            REQUIRE(loose.size() == tps.size());
            for (const auto& tp : tps) {
                double best = 1e300;
                for (const auto& u : loose) best = std::min(best, std::abs(u.x - tp.x) + std::abs(u.zeta - tp.zeta));
                CHECK(best < 1e-9);
            }
        }
}

TEST_CASE("turning point classification") {
    const ParameterSet p2 = generic_draw(2, 500);
    for (Point rho : {Point::Zero, Point::Infinity})
        for (const auto& tp : turning_points(p2))
            CHECK(classify_turning_point(p2, tp, rho, default_path(tp, rho)) == std::pair{1, 2});

    const ParameterSet p3 = generic_draw(3, 501);
    const NumericParams np = NumericParams::from(p3);
    for (const auto& tp : turning_points(p3)) {
        auto roots = characteristic_roots(np, tp.x);
        REQUIRE(roots.size() == 3);
        int close = 0;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j)
                if (std::abs(roots[i] - roots[j]) < 1e-4 * (1 + std::abs(tp.zeta))) ++close;
        CHECK(close == 1);
        for (Point rho : {Point::Zero, Point::Infinity}) {
            auto t = classify_turning_point(p3, tp, rho, default_path(tp, rho));
            CHECK(1 <= t.first);
            CHECK(t.first < t.second);
            CHECK(t.second <= 3);
            // a path with a detour reaches the same label
            auto path = default_path(tp, rho);
            const cplx mid = 0.5 * (path.front() + path.back());
            const cplx off = cplx(0, 0.05) * (path.back() - path.front());
            std::vector<cplx> bent{path.front(), mid + off, path.back()};
            bool ok = true;
            std::pair<int, int> t2;
            try {
                t2 = classify_turning_point(p3, tp, rho, bent);
            } catch (const std::exception&) {
                ok = false;
            }
            if (ok) CHECK(t2 == t);
        }
    }
}

TEST_CASE("genericity report") {
    CHECK(genericity_report(draw(3, 600)).ok);
    const ParameterSet same_b = ParameterSet::exact(
        3, Pairs{{Rational(1, 3), Rational(2)}, {Rational(1, 2), Rational(3)}, {Rational(-1, 4), Rational(5)}},
        Pairs{{Rational(1, 5), Rational(7)}, {Rational(2, 7), Rational(7)}});
    CHECK_FALSE(genericity_report(same_b).ok);
    const ParameterSet zero_a = ParameterSet::exact(
        3, Pairs{{Rational(1, 3), Rational(0)}, {Rational(1, 2), Rational(3)}, {Rational(-1, 4), Rational(5)}},
        Pairs{{Rational(1, 5), Rational(7)}, {Rational(2, 7), Rational(11, 2)}});
    auto g = genericity_report(zero_a);
    CHECK_FALSE(g.discriminant_nonzero);
    CHECK_FALSE(g.ok);
}

TEST_CASE("discriminant factorization for N = 3") {
    DiscriminantCube d = discriminant_cube_n3();
    CHECK(d.divisible);
    CHECK(d.is_cube);
    CHECK(d.h_degree >= 0);
}
