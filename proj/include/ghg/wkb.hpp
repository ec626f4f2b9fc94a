#pragma once

#include "ghg/params.hpp"
#include "ghg/report.hpp"
#include "ghg/series.hpp"

#include <string>
#include <vector>

namespace ghg {

// Coefficient domains for the exact WKB layer: Rational (exact parameter
// values) or RatFunc (symbolic parameters).
template <class C>
C coeff_of(const MultiPoly& p);

// Polynomial in x with parameter coefficients as a series at the point.
template <class C>
LaurentX<C> x_poly_series(const MultiPoly& p, Point rho);

// Characteristic root zeta_m at rho with the local numbering: at 0, m < N
// behaves like -b_{m,1}/x and m = N like prod a_{i,1} / prod b_{j,1}; at
// infinity zeta_m ~ -a_{m,1}/x. Coefficients of t^e are exact for e <= M.
template <class C>
LaurentX<C> char_root_expansion(const ParameterSet& p, Point rho, int m, int M);

template <class C>
struct WkbBranchSeries {
    Point rho = Point::Zero;
    int m = 1;
    int L = 0, M = 0;
    std::vector<LaurentX<C>> S;  // S[l + 1] = S_l for l = -1..L

    const LaurentX<C>& operator[](int l) const { return S.at(static_cast<std::size_t>(l + 1)); }
    // Lowest precision over all S_l.
    int precision() const;
};

// S_{-1}..S_L of the Riccati equation on the branch; each S_l is known for
// exponents <= M of the local variable.
template <class C>
WkbBranchSeries<C> riccati_series(const ParameterSet& p, Point rho, int m, int L, int M);

// Ri(P)(S) sliced by eta order: entries n = 0..L+1 (coefficient of eta^{-n}
// after dividing the operator by eta^N). Each must be zero up to its precision.
template <class C>
std::vector<LaurentX<C>> riccati_residual(const ParameterSet& p, const WkbBranchSeries<C>& s);

// Sum over the N branches of S_{-1} minus the root sum read off sigma_0.
template <class C>
LaurentX<C> vieta_defect(const ParameterSet& p, Point rho, int M);

template <class C>
struct OddEvenPair {
    Point rho = Point::Zero;
    int j = 1, k = 2;
    std::vector<LaurentX<C>> odd, even;  // index l + 1

    const LaurentX<C>& odd_at(int l) const { return odd.at(static_cast<std::size_t>(l + 1)); }
    const LaurentX<C>& even_at(int l) const { return even.at(static_cast<std::size_t>(l + 1)); }
};

template <class C>
OddEvenPair<C> odd_even_split(const WkbBranchSeries<C>& Sj, const WkbBranchSeries<C>& Sk);

// Res_{x=rho} of a series times dx: the x^{-1} coefficient at 0, minus the
// u^1 coefficient at infinity.
template <class C>
C residue(const LaurentX<C>& s);

template <class C>
struct ResidueReport {
    bool ok = true;
    std::vector<C> residues;  // index l + 1, l = -1..L
};

// Residues of S_odd,l vanish for l >= 1.
template <class C>
ResidueReport<C> residue_check(const OddEvenPair<C>& pair);

// Leading coefficients of every branch at 0 and infinity against the closed
// forms of the local behaviors, order by order in eta up to L.
template <class C>
CheckReport local_behavior_check(const ParameterSet& p, int L, int M);

// Delta_rho S = d/dx log(x S + a_i) for rho = a_{i,1} and
// Delta_rho S = -d/dx log(x S^ + b_j) for rho = b_{j,1}, S^ = S(b_{j,1} + eta^{-1}).
// The shifted series is the branch recomputed with a_{i,0} (resp. b_{j,0})
// raised by one, which is the same formal series as the eta-re-expansion.
template <class C>
CheckReport ladder_check(const ParameterSet& p, Point rho, int m, ShiftParam param, int L, int M);

// Eta series of prod(num) / prod(den) for eta-linear forms c0 + c1 eta, given
// as pairs (c0, c1); coefficients of eta^{-l} for l up to hi.
template <class C>
EtaSeries<C> eta_rational(const std::vector<std::pair<C, C>>& num, const std::vector<std::pair<C, C>>& den, int hi);

}  // namespace ghg
