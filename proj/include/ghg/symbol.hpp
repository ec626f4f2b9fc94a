#pragma once

#include "ghg/params.hpp"
#include "ghg/ratfunc.hpp"

#include <map>
#include <vector>

namespace ghg {

// Total symbol of an operator as a polynomial in x, zeta and t = eta^{-1}.
// Operators are taken divided by eta^N so that every symbol met here is
// polynomial in t; the derivative d/dx has symbol zeta / t.
struct OperatorSymbol {
    MultiPoly poly;

    // sigma_k: coefficient of eta^{-k}, a polynomial in (x, zeta).
    MultiPoly sigma(int k) const;
    // q_k(x, t): coefficient of zeta^k.
    MultiPoly zeta_coeff(int k) const;
    int zeta_degree() const;
    int eta_degree() const;

    friend bool operator==(const OperatorSymbol& a, const OperatorSymbol& b) { return a.poly == b.poly; }
};

OperatorSymbol total_symbol(const ParameterSet& p);
MultiPoly principal_symbol(const ParameterSet& p);
// zeta prod(x zeta + b_{j,1}) - prod(x zeta + a_{i,1}).
MultiPoly principal_symbol_product(const ParameterSet& p);

// Symbol divided by x^{N-1}(1-x): zeta-degree -> coefficient as a rational
// function of x (and t, parameters). The zeta^N entry is exactly 1.
std::map<int, RatFunc> monic_normalize(const OperatorSymbol& s, int N);
// Evaluate a normalized coefficient; x in {0, 1} is a singular point.
Rational evaluate_normalized(const RatFunc& c, const Rational& x, const std::map<VarId, Rational>& rest = {});

// sigma(A B) = sum_k t^k / k! d_zeta^k sigma(A) d_x^k sigma(B).
OperatorSymbol compose_symbols(const OperatorSymbol& A, const OperatorSymbol& B);

// H(a_i) x P - x P^ H(a_i), with P^ = P at a_{i,1} -> a_{i,1} + t.
OperatorSymbol intertwine_check(const ParameterSet& p, int i);
// P B(b_j) - B(b_j) P~, with P~ = P at b_{j,1} -> b_{j,1} + t.
OperatorSymbol intertwine_check_b(const ParameterSet& p, int j);

}  // namespace ghg
