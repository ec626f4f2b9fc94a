#include "ghg/symbol.hpp"

#include "ghg/combinatorics.hpp"

#include <stdexcept>

namespace ghg {

MultiPoly OperatorSymbol::sigma(int k) const { return poly.coeff(t_var(), k); }
MultiPoly OperatorSymbol::zeta_coeff(int k) const { return poly.coeff(zeta_var(), k); }
int OperatorSymbol::zeta_degree() const { return poly.degree(zeta_var()); }
int OperatorSymbol::eta_degree() const { return poly.degree(t_var()); }

OperatorSymbol total_symbol(const ParameterSet& p) {
    const int N = p.N;
    const MultiPoly x = MultiPoly::variable(x_var());
    const MultiPoly z = MultiPoly::variable(zeta_var());
    const MultiPoly t = MultiPoly::variable(t_var());
    auto a = p.a_scaled_all();
    auto b = p.b_scaled_all();
    MultiPoly s = -elem_sym(N, a);
    for (int k = 1; k <= N; ++k) {
        MultiPoly c;
        for (int j = k; j <= N; ++j) {
            MultiPoly tp = t.pow(unsigned(j - k));
            c += tp * (MultiPoly(Rational(stirling2(j - 1, k - 1))) * elem_sym(N - j, b) -
                       MultiPoly(Rational(stirling2(j, k))) * elem_sym(N - j, a) * x);
        }
        s += c * x.pow(unsigned(k - 1)) * z.pow(unsigned(k));
    }
    return {s};
}

MultiPoly principal_symbol(const ParameterSet& p) {
    const int N = p.N;
    const MultiPoly x = MultiPoly::variable(x_var());
    const MultiPoly z = MultiPoly::variable(zeta_var());
    MultiPoly s = -elem_sym(N, p.a1);
    for (int k = 1; k <= N; ++k)
        s += (elem_sym(N - k, p.b1) - elem_sym(N - k, p.a1) * x) * x.pow(unsigned(k - 1)) * z.pow(unsigned(k));
    return s;
}

MultiPoly principal_symbol_product(const ParameterSet& p) {
    const MultiPoly x = MultiPoly::variable(x_var());
    const MultiPoly z = MultiPoly::variable(zeta_var());
    MultiPoly pb = z, pa(1);
    for (const auto& b : p.b1) pb *= x * z + b;
    for (const auto& a : p.a1) pa *= x * z + a;
    return pb - pa;
}

std::map<int, RatFunc> monic_normalize(const OperatorSymbol& s, int N) {
    const MultiPoly x = MultiPoly::variable(x_var());
    MultiPoly d = x.pow(unsigned(N - 1)) * (MultiPoly(1) - x);
    std::map<int, RatFunc> r;
    auto cs = s.poly.coeffs(zeta_var());
    for (int k = 0; k < int(cs.size()); ++k) {
        if (cs[k].is_zero()) continue;
        r.emplace(k, RatFunc::fraction(cs[k], d));
    }
    return r;
}

Rational evaluate_normalized(const RatFunc& c, const Rational& x, const std::map<VarId, Rational>& rest) {
    if (x.is_zero() || x.is_one()) throw std::domain_error("singular point");
    auto vals = rest;
    vals[x_var()] = x;
    return c.evaluate(vals);
}

OperatorSymbol compose_symbols(const OperatorSymbol& A, const OperatorSymbol& B) {
    const MultiPoly t = MultiPoly::variable(t_var());
    MultiPoly da = A.poly, db = B.poly, r;
    Rational fact(1);
    for (int k = 0; !da.is_zero() && !db.is_zero(); ++k) {
        if (k > 0) fact *= Rational(k);
        r += (t.pow(unsigned(k)) * da * db).scaled(fact.inverse());
        da = da.derivative(zeta_var());
        db = db.derivative(x_var());
    }
    return {r};
}

namespace {

// theta + c, divided by eta: x zeta + c / eta.
OperatorSymbol euler_plus(const MultiPoly& c_scaled) {
    return {MultiPoly::variable(x_var()) * MultiPoly::variable(zeta_var()) + c_scaled};
}

}  // namespace

OperatorSymbol intertwine_check(const ParameterSet& p, int i) {
    if (i < 1 || i > p.N) throw std::out_of_range("a-index out of range");
    OperatorSymbol X{MultiPoly::variable(x_var())};
    OperatorSymbol H = euler_plus(p.a_scaled(i));
    OperatorSymbol P = total_symbol(p);
    OperatorSymbol Ph = total_symbol(p.shift_a(i, 1, MultiPoly::variable(t_var())));
    auto lhs = compose_symbols(H, compose_symbols(X, P));
    auto rhs = compose_symbols(X, compose_symbols(Ph, H));
    return {lhs.poly - rhs.poly};
}

OperatorSymbol intertwine_check_b(const ParameterSet& p, int j) {
    if (j < 1 || j >= p.N) throw std::out_of_range("b-index out of range");
    OperatorSymbol B = euler_plus(p.b_scaled(j));
    OperatorSymbol P = total_symbol(p);
    OperatorSymbol Pt = total_symbol(p.shift_b(j, 1, MultiPoly::variable(t_var())));
    return {compose_symbols(P, B).poly - compose_symbols(B, Pt).poly};
}

}  // namespace ghg
