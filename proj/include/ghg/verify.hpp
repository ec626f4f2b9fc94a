#pragma once

#include "ghg/params.hpp"
#include "ghg/polesum.hpp"
#include "ghg/report.hpp"
#include "ghg/series.hpp"
#include "ghg/voros.hpp"

#include <vector>

namespace ghg {

// sign * eta / u with u an eta-linear form; the right-hand side f of the
// differential-difference equation is half the sum of the terms.
struct DDTerm {
    int sign = 1;
    LinearForm u;
};

struct DDRightHandSide {
    Point rho = Point::Zero;
    int j = 1, k = 2;
    ShiftParam param;
    std::vector<DDTerm> terms;
};

// Row of the differential-difference system for d_rho Delta_rho V^{(j,k)}.
// j > k gives the negated row of (k, j).
DDRightHandSide f_rhs(int N, Point rho, int j, int k, ShiftParam q);
// The rows displayed for N = 3 at the origin, transcribed as printed.
DDRightHandSide f_rhs_n3_display(int j, int k, ShiftParam q);

// f as an eta-series, eta^{-n} for n = -1..L, with the rho entry of p made symbolic.
EtaSeries<PoleSum> f_series(const DDRightHandSide& f, const ParameterSet& p, int L);

// p with the eta-linear part of q replaced by its symbol.
ParameterSet with_free_param(const ParameterSet& p, ShiftParam q);

// d_rho Delta_rho V^{(j,k)}_rho through eta^{-L}.
EtaSeries<PoleSum> dd_lhs(const ParameterSet& p, Point rho, int j, int k, ShiftParam q, int L);

enum class GForm { Corrected, AsDisplayed };

// The explicit g of the N = 3 display at the origin, returned as 2g = eta*G1 + G0
// (index -1 and 0). AsDisplayed keeps the printed signs.
EtaSeries<PoleSum> g_n3(const ParameterSet& p, int j, int k, ShiftParam q, GForm form, int L);

// 2 d_rho Delta_rho V = 2f + Delta_rho(2g) order by order through eta^{-L}
// (N = 3, origin). Corrected pairs the generic rows with the corrected g;
// AsDisplayed pairs the printed rows with the printed g.
CheckReport dd_check_n3(const ParameterSet& p, ShiftParam q, int j, int k, int L, GForm form = GForm::Corrected);

// Any N: reconstructs g = eta g1 + g0 from the two lowest orders of
// R = d_rho Delta_rho V - f by integration in rho and verifies R = Delta_rho g
// through eta^{-L}.
CheckReport dd_check_general(const ParameterSet& p, Point rho, int j, int k, ShiftParam q, int L);

// d_tau Delta_tau d_rho Delta_rho V = d_rho Delta_rho d_tau Delta_tau V.
CheckReport compatibility_check(const ParameterSet& p, Point rho, int j, int k, ShiftParam q, ShiftParam tau, int L);

// Hypotheses of the uniqueness lemma: eta^1 and eta^0 parts vanish and the
// eta^{-n} coefficient is homogeneous of degree -n, n = 1..L-1, under lambda.
CheckReport uniqueness_gauge_check(const ParameterSet& p, Point rho, int j, int k, int L,
                                   const Rational& lambda = Rational(2, 3));

}  // namespace ghg
