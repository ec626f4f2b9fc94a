#include "ghg/combinatorics.hpp"
#include "ghg/multipoly.hpp"
#include "ghg/polesum.hpp"
#include "ghg/rational.hpp"
#include "ghg/resultant.hpp"
#include "ghg/series.hpp"

#include <doctest.h>

#include <random>

using namespace ghg;

namespace {

MultiPoly X(const char* n) { return MultiPoly::variable(n); }

MultiPoly random_poly(std::mt19937_64& rng, const std::vector<MultiPoly>& vars, int terms) {
    std::uniform_int_distribution<int> c(-9, 9), e(0, 3);
    MultiPoly p;
    for (int i = 0; i < terms; ++i) {
        MultiPoly m(Rational(c(rng), 1 + e(rng)));
        for (const auto& v : vars) m *= v.pow(unsigned(e(rng)));
        p += m;
    }
    return p;
}

}  // namespace

TEST_CASE("rational canonical form") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(0, 7).den() == 1);
    CHECK(Rational::parse(" -12/8 ").str() == "-3/2");
    CHECK(Rational::parse("5").str() == "5");
    CHECK_THROWS_AS(Rational::parse("1//2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("3/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 3) / Rational(0), std::domain_error);
}

TEST_CASE("rational arithmetic across the machine-word boundary") {
    const Rational big = Rational::parse("9223372036854775807");
    Rational s = big + Rational(1);
    CHECK(s.str() == "9223372036854775808");
    CHECK((s - Rational(1)) == big);
    Rational q = Rational::parse("123456789012345678901234567890/7");
    CHECK((q * Rational(7)).str() == "123456789012345678901234567890");
    CHECK((q / q).is_one());
    CHECK((q - q).is_zero());
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(q > big);
    CHECK(Rational(-2, 3).pow(-3) == Rational(-27, 8));
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<long> d(-(1L << 40), 1L << 40);
    for (int i = 0; i < 200; ++i) {
        Rational a(d(rng), std::max(1L, std::labs(d(rng)))), b(d(rng), std::max(1L, std::labs(d(rng))));
        mpq_class ref = a.to_mpq() * b.to_mpq() + a.to_mpq();
        CHECK((a * b + a).to_mpq() == ref);
    }
}

TEST_CASE("stirling2") {
    CHECK(stirling2(1, 1) == 1);
    CHECK(stirling2(2, 3) == 0);
    CHECK(stirling2(3, 2) == 3);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(5, 0) == 0);
}

TEST_CASE("stirling2 reconstructs powers of the Euler operator") {
    // theta^j = sum_k S(j, k) x^k d^k, checked on x^s: s^j = sum_k S(j, k) s(s-1)...(s-k+1).
    const MultiPoly s = X("s");
    for (unsigned j = 0; j <= 6; ++j) {
        MultiPoly sum, falling(1);
        for (unsigned k = 0; k <= j; ++k) {
            sum += falling.scaled(Rational(stirling2(j, k)));
            falling *= s - MultiPoly(int(k));
        }
        CHECK(sum == s.pow(j));
    }
}

TEST_CASE("elementary symmetric polynomials") {
    const MultiPoly p = X("p"), q = X("q");
    CHECK(elem_sym(0, std::vector<MultiPoly>{p, q}) == MultiPoly(1));
    CHECK(elem_sym(2, std::vector<MultiPoly>{p, q}) == p * q);
    CHECK(elem_sym(3, std::vector<MultiPoly>{p, q}).is_zero());
    CHECK(elem_sym(-1, std::vector<MultiPoly>{p, q}).is_zero());
    CHECK(elem_sym(1, std::vector<Rational>{Rational(2), Rational(5)}) == Rational(7));
}

TEST_CASE("bernoulli polynomials") {
    const VarId t = var("t");
    const MultiPoly T = MultiPoly::variable(t);
    CHECK(bernoulli_poly(0, t) == MultiPoly(1));
    CHECK(bernoulli_poly(1, t) == T - MultiPoly(Rational(1, 2)));
    CHECK(bernoulli_poly(2, t) == T * T - T + MultiPoly(Rational(1, 6)));
    auto B = bernoulli_numbers(12);
    CHECK(B[1] == Rational(-1, 2));
    CHECK(B[12] == Rational(-691, 2730));
    for (unsigned l = 0; l <= 12; ++l) {
        const MultiPoly b = bernoulli_poly(l, t);
        CHECK(bernoulli_at(l, MultiPoly(1) - T) == b.scaled(Rational(l % 2 ? -1 : 1)));
        MultiPoly step = bernoulli_at(l, T + MultiPoly(1)) - b;
        CHECK(step == (l ? (T.pow(l - 1)).scaled(Rational(int(l))) : MultiPoly()));
        if (l % 2 == 1) CHECK(bernoulli_at(l, Rational(1, 2)).is_zero());
    }
    CHECK(std::abs(bernoulli_at(3, std::complex<double>(0.25, 0.0)) - 0.046875) < 1e-15);
}

TEST_CASE("multivariate polynomial ring axioms") {
    std::mt19937_64 rng(2);
    const std::vector<MultiPoly> v = {X("u"), X("v"), X("w")};
    for (int i = 0; i < 20; ++i) {
        MultiPoly p = random_poly(rng, v, 4), q = random_poly(rng, v, 4), r = random_poly(rng, v, 3);
        CHECK((p + q) * r == p * r + q * r);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p - p == MultiPoly());
        if (!q.is_zero()) {
            auto d = (p * q).divide_exact(q);
            REQUIRE(d.has_value());
            CHECK(*d == p);
        }
    }
    const MultiPoly u = X("u");
    CHECK((u + MultiPoly(1)).pow(3).derivative(var("u")) == (u + MultiPoly(1)).pow(2).scaled(Rational(3)));
    CHECK(!(u * u + MultiPoly(1)).divide_exact(u + MultiPoly(1)).has_value());
}

TEST_CASE("resultant") {
    const VarId x = var("x");
    const MultiPoly xv = MultiPoly::variable(x), a = X("a"), b = X("b");
    CHECK(resultant(xv - a, xv - b, x) == a - b);
    CHECK(resultant(xv * xv - MultiPoly(1), xv - MultiPoly(1), x).is_zero());
    CHECK(resultant(MultiPoly(3), xv * xv + MultiPoly(1), x) == MultiPoly(9));
    CHECK_THROWS(resultant(MultiPoly(), MultiPoly(), x));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 10; ++i) {
        MultiPoly p = random_poly(rng, {xv, a}, 4), q = random_poly(rng, {xv, b}, 4);
        const int dp = p.degree(x), dq = q.degree(x);
        if (dp < 1 || dq < 1) continue;
        CHECK(resultant(p, q, x) == resultant(q, p, x).scaled(Rational((dp * dq) % 2 ? -1 : 1)));
    }
}

TEST_CASE("discriminant") {
    const VarId x = var("x");
    const MultiPoly xv = MultiPoly::variable(x), c = X("c"), p = X("p"), q = X("q");
    CHECK(discriminant(xv * xv - c, x) == c.scaled(Rational(4)));
    CHECK(discriminant((xv - MultiPoly(1)).pow(2), x).is_zero());
    CHECK(discriminant(xv * xv + p * xv + q, x) == p * p - q.scaled(Rational(4)));
    const MultiPoly cubic = xv.pow(3) + p * xv + q;
    CHECK(discriminant(cubic, x) == (p.pow(3).scaled(Rational(-4)) - (q * q).scaled(Rational(27))));
    const MultiPoly quartic = xv.pow(4) + p * xv.pow(2) + q * xv + c;
    CHECK(discriminant(quartic, x) == discriminant_sylvester(quartic, x));
    CHECK_THROWS(discriminant(MultiPoly(5), x));
}

TEST_CASE("exact roots") {
    const MultiPoly u = X("u"), v = X("v");
    const MultiPoly h = u * u - v.scaled(Rational(3, 2)) + MultiPoly(1);
    auto r = exact_root(h.pow(3), 3);
    REQUIRE(r.has_value());
    CHECK((*r == h || *r == -h));
    CHECK(!exact_root(h.pow(3) + MultiPoly(1), 3).has_value());
}

TEST_CASE("laurent series arithmetic and inverse") {
    using S = LaurentX<Rational>;
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int i = 0; i < 20; ++i) {
        std::vector<Rational> a(6), b(6), d(6);
        for (auto* v : {&a, &b, &d})
            for (auto& x : *v) x = Rational(c(rng));
        a[0] = Rational(c(rng) == 0 ? 1 : 3);
        S p = S::from_coeffs(Point::Zero, -1, a, 5), q = S::from_coeffs(Point::Zero, 0, b, 6),
          r = S::from_coeffs(Point::Zero, 1, d, 7);
        CHECK(((p + q) * r).agrees_with(p * r + q * r));
        S one = p * p.inverse();
        CHECK(one.agrees_with(S::constant(Point::Zero, Rational(1))));
        CHECK(one.precision() == p.precision() - p.valuation());
    }
    CHECK_THROWS_AS(S().inverse(4), std::domain_error);
    S e = S::from_coeffs(Point::Zero, 2, {Rational(1)});
    CHECK(e.derivative().lead() == Rational(2));
    S inf = S::from_coeffs(Point::Infinity, 1, {Rational(1)});  // 1/x at infinity
    CHECK(inf.derivative().valuation() == 2);
    CHECK(inf.derivative().lead() == Rational(-1));
}

TEST_CASE("eta series ring and eta shift") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> c(-5, 5);
    auto rnd = [&](int lo, int hi) {
        EtaSeries<Rational> s(lo, hi);
        for (int k = lo; k <= hi; ++k) s.at(k) = Rational(c(rng));
        return s;
    };
    for (int i = 0; i < 10; ++i) {
        auto p = rnd(-1, 6), q = rnd(0, 6), r = rnd(0, 6);
        auto lhs = (p + q) * r, rhs = p * r + q * r;
        for (int k = lhs.lo(); k <= std::min(lhs.hi(), rhs.hi()); ++k) CHECK(lhs[k] == rhs[k]);
    }
    const VarId rho = var("rho");
    const MultiPoly R = MultiPoly::variable(rho);
    EtaSeries<RatFunc> s(0, 5);
    s.at(0) = RatFunc(MultiPoly(7));
    auto d = eta_shift(s, rho);
    for (int k = d.lo(); k <= d.hi(); ++k) CHECK(d[k].is_zero());
    // 1/kappa with d kappa / d rho = 1
    s.at(0) = RatFunc(R).inverse();
    d = eta_shift(s, rho);
    for (int m = 1; m <= 5; ++m) {
        RatFunc expect = RatFunc(R.pow(unsigned(m + 1))).inverse() * RatFunc(Rational(m % 2 ? -1 : 1));
        CHECK(d[m] == expect);
    }
    // eta * kappa shifts to exactly 1
    EtaSeries<RatFunc> lin(-1, 5);
    lin.at(-1) = RatFunc(R);
    d = eta_shift(lin, rho);
    CHECK(d[0] == RatFunc(Rational(1)));
    for (int k = 1; k <= 5; ++k) CHECK(d[k].is_zero());
}

TEST_CASE("pole sums with formal logarithms") {
    const VarId r = var("r");
    const MultiPoly R = MultiPoly::variable(r), s = X("s");
    PoleSum f = PoleSum::pole(R - s, 2, MultiPoly(3)) + PoleSum::log(R.scaled(Rational(2)) + s);
    PoleSum df = f.derivative(r);
    CHECK(df == PoleSum::pole(R - s, 3, MultiPoly(-6)) + PoleSum::pole(R + s.scaled(Rational(1, 2)), 1));
    auto back = PoleSum::pole(R - s, 3, MultiPoly(-6)).integral(r);
    REQUIRE(back.has_value());
    CHECK(*back == PoleSum::pole(R - s, 2, MultiPoly(3)));
    auto lg = PoleSum::pole(R - s, 1).integral(r);
    REQUIRE(lg.has_value());
    CHECK((*lg - PoleSum::log(R - s)).derivative(r).is_zero());
    CHECK((*lg - PoleSum::log(R - s)).derivative(var("s")).is_zero());
    CHECK(!PoleSum::log(R).integral(r).has_value());
    CHECK_THROWS_AS(PoleSum::pole(MultiPoly(), 1), std::domain_error);
    CHECK(PoleSum::pole(MultiPoly(4), 2) == PoleSum(Rational(1, 16)));
    CHECK((f - f).is_zero());
}
