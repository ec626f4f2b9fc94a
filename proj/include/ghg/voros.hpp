#pragma once

#include "ghg/params.hpp"
#include "ghg/polesum.hpp"
#include "ghg/report.hpp"
#include "ghg/series.hpp"

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace ghg {

// An eta-linear form constant + sum c_q q over the parameters q = a_i, b_j.
// Its eta^0 part kappa0 = constant + sum c_q q_{.,0} and its eta^1 part
// kappa1 = sum c_q q_{.,1}.
struct LinearForm {
    Rational constant;
    std::vector<std::pair<ShiftParam, int>> coef;  // nonzero, no repeated parameter

    static LinearForm of(ShiftParam q);
    static LinearForm a(int i) { return of({ParamKind::A, i}); }
    static LinearForm b(int j) { return of({ParamKind::B, j}); }

    LinearForm operator+(const LinearForm& o) const;
    LinearForm operator-(const LinearForm& o) const;
    LinearForm operator+(const Rational& c) const;
    LinearForm operator-(const Rational& c) const { return *this + (-c); }
    LinearForm operator-() const;
    friend bool operator==(const LinearForm&, const LinearForm&) = default;

    int coefficient(ShiftParam q) const;
    MultiPoly kappa0(const ParameterSet& p) const;
    MultiPoly kappa1(const ParameterSet& p) const;
    std::complex<double> kappa0(const NumericParams& p) const;
    std::complex<double> kappa1(const NumericParams& p) const;
    std::string str() const;
};

struct VorosTerm {
    int sign = 1;
    LinearForm form;  // contributes sign * B_l(kappa0) / kappa1^{l-1}
};

struct VorosClosedForm {
    Point rho = Point::Zero;
    int j = 1, k = 2;
    std::vector<VorosTerm> terms;
};

// Term list of V^{(j,k)}_{rho,l} for the generic N closed form. j > k is the
// negated list of (k, j). At infinity the inner sums run over i != j (resp.
// i != k), i = 1..N. Throws "non-generic parameter direction" when some kappa1
// vanishes identically for p.
VorosClosedForm voros_terms(const ParameterSet& p, Point rho, int j, int k);
// Structural list only, without the genericity test.
VorosClosedForm voros_terms(int N, Point rho, int j, int k);

// Term lists exactly as displayed for N = 3 (the three pairs at 0, any pair at infinity).
VorosClosedForm voros_terms_n3_display(Point rho, int j, int k);

// V_l = sum sign * B_l(kappa0) / kappa1^{l-1}, l >= 2.
PoleSum voros_bernoulli_sum(const VorosClosedForm& v, const ParameterSet& p, int l);
std::complex<double> voros_bernoulli_sum(const VorosClosedForm& v, const NumericParams& p, int l);

// (1/2) (-1)^{l+1} / (l (l-1)): the weight of V_l in the coefficient of eta^{1-l}.
Rational voros_weight(int l);

// sum_{l=2}^{L} (1/2) (-1)^{l+1} eta^{1-l} V_l / (l (l-1)), stored from eta^1
// (index -1) to eta^{1-L} (index L-1); the eta^1 and eta^0 slots are zero.
EtaSeries<PoleSum> voros_series(const ParameterSet& p, Point rho, int j, int k, int L);
EtaSeries<std::complex<double>> voros_series(const NumericParams& p, Point rho, int j, int k, int L);

// V^{(j,k)} + V^{(k,m)} = V^{(j,m)} and V^{(j,k)} + V^{(k,j)} = 0 through eta^{1-L}.
CheckReport cocycle_check(const ParameterSet& p, Point rho, int j, int k, int m, int L);

// Coefficient of eta^{-n} scales by lambda^{-n} when every a_{i,1}, b_{j,1}
// is multiplied by lambda.
CheckReport homogeneity_check(const ParameterSet& p, Point rho, int j, int k, const Rational& lambda, int L);

// The generic term list specialized to N = 3 against the displayed N = 3
// lists, compared as exact functions of symbolic parameters for l = 2..lmax.
CheckReport display_consistency_check(int lmax);

// Linear forms whose real parts must be nonzero for Borel summability.
std::vector<LinearForm> summability_forms(int N, Point rho, int j, int k);

}  // namespace ghg
