#include "ghg/config.hpp"
#include "ghg/turning.hpp"
#include "ghg/voros.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace ghg;

namespace {

using LF = LinearForm;
using Pairs = std::vector<std::pair<Rational, Rational>>;

ParameterSet generic_draw(int N, unsigned seed) {
    std::mt19937_64 rng(seed);
    for (;;) {
        ParameterSet p = ParameterSet::random(N, rng);
        if (genericity_report(p).ok) return p;
    }
}

int count(const VorosClosedForm& v, int sign, const LF& f) {
    return int(std::count_if(v.terms.begin(), v.terms.end(),
                             [&](const VorosTerm& t) { return t.sign == sign && t.form == f; }));
}

}  // namespace

TEST_CASE("term lists for N = 3") {
    const Rational one(1);
    auto v12 = voros_terms_n3_display(Point::Zero, 1, 2);
    const LF d = LF::b(1) - LF::b(2);
    CHECK(count(v12, 1, d + one) == 1);
    CHECK(count(v12, 1, d) == 1);
    auto g12 = voros_terms(3, Point::Zero, 1, 2);
    CHECK(count(g12, 1, d) == 1);
    CHECK(count(g12, -1, LF::b(2) - LF::b(1)) == 1);
    auto v13 = voros_terms(3, Point::Zero, 1, 3);
    CHECK(count(v13, 1, LF::b(1)) == 1);
    CHECK(count(v13, 1, LF::b(1) - one) == 1);
    for (int i = 1; i <= 3; ++i) CHECK(count(v13, -1, LF::a(i)) == 1);
    CHECK(display_consistency_check(6).ok);
}

TEST_CASE("term counts") {
    for (int N = 2; N <= 5; ++N) {
        for (int j = 1; j <= N; ++j)
            for (int k = j + 1; k <= N; ++k) {
                auto v0 = voros_terms(N, Point::Zero, j, k);
                auto vi = voros_terms(N, Point::Infinity, j, k);
                if (k != N) CHECK(v0.terms.size() == std::size_t(2 + 2 * N + 2 * (N - 2)));
                CHECK(!vi.terms.empty());
                auto back = voros_terms(N, Point::Zero, k, j);
                REQUIRE(back.terms.size() == v0.terms.size());
                for (std::size_t i = 0; i < v0.terms.size(); ++i) {
                    CHECK(back.terms[i].sign == -v0.terms[i].sign);
                    CHECK(back.terms[i].form == v0.terms[i].form);
                }
            }
    }
}

TEST_CASE("non-generic directions are rejected") {
    const ParameterSet p = ParameterSet::exact(
        3, Pairs{{Rational(1, 3), Rational(2)}, {Rational(1, 2), Rational(2)}, {Rational(-1, 4), Rational(5)}},
        Pairs{{Rational(1, 5), Rational(7)}, {Rational(2, 7), Rational(11, 2)}});
    CHECK_THROWS_WITH(voros_terms(p, Point::Infinity, 1, 2), doctest::Contains("non-generic parameter direction"));
    CHECK_THROWS_AS(voros_terms(3, Point::Zero, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(voros_terms(3, Point::Zero, 1, 4), std::invalid_argument);
}

TEST_CASE("series shape and homogeneity") {
    const ParameterSet p = default_config().params;
    for (Point rho : {Point::Zero, Point::Infinity}) {
        auto V = voros_series(p, rho, 1, 3, 8);
        CHECK(V[-1].is_zero());
        CHECK(V[0].is_zero());
        CHECK_FALSE(V[1].is_zero());
        for (const Rational lambda : {Rational(2, 3), Rational(-5, 2), Rational(7)}) {
            auto W = voros_series(p.scale_linear(lambda), rho, 1, 3, 8);
            for (int n = 1; n <= 7; ++n) CHECK(W[n] == lambda.pow(-n) * V[n]);
            CHECK(homogeneity_check(p, rho, 2, 3, lambda, 8).ok);
        }
    }
}

TEST_CASE("weights") {
    CHECK(voros_weight(2) == Rational(-1, 4));
    CHECK(voros_weight(3) == Rational(1, 12));
    CHECK(voros_weight(4) == Rational(-1, 24));
}

TEST_CASE("numeric and exact series agree") {
    const ParameterSet p = default_config().params;
    const NumericParams np = NumericParams::from(p);
    auto V = voros_series(p, Point::Zero, 1, 2, 8);
    auto Vn = voros_series(np, Point::Zero, 1, 2, 8);
    for (int n = 1; n <= 7; ++n) {
        const PoleSum& e = V[n];
        REQUIRE(e.polynomial_part().is_constant());
        const double x = e.polynomial_part().constant_value().to_double();
        CHECK(std::abs(Vn[n] - x) <= 1e-12 * std::max(1.0, std::abs(x)));
    }
}

TEST_CASE("cocycle and antisymmetry") {
    for (int N : {3, 4}) {
        const ParameterSet p = generic_draw(N, 90 + unsigned(N));
        for (Point rho : {Point::Zero, Point::Infinity})
            for (int j = 1; j <= N; ++j)
                for (int k = 1; k <= N; ++k)
                    for (int m = 1; m <= N; ++m)
                        if (j != k && k != m && j != m) CHECK(cocycle_check(p, rho, j, k, m, 8).ok);
    }
}

TEST_CASE("summability forms") {
    for (int N = 2; N <= 4; ++N)
        for (int k = 2; k <= N; ++k) {
            auto f0 = summability_forms(N, Point::Zero, 1, k);
            auto fi = summability_forms(N, Point::Infinity, 1, k);
            CHECK(!f0.empty());
            for (const auto& f : fi) {
                bool only_b = true;
                for (const auto& [q, c] : f.coef) only_b = only_b && q.kind == ParamKind::B;
                CHECK_FALSE(only_b);
            }
        }
}
