#pragma once

#include "ghg/params.hpp"
#include "ghg/series.hpp"

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ghg {

using cplx = std::complex<double>;

// f, g of the resultant factorization; both linear in x. Their second variable
// is w = x zeta (the zeta variable slot holds w).
std::pair<MultiPoly, MultiPoly> fg_polys(const ParameterSet& p);

struct FactorizationReport {
    bool ok = false;
    MultiPoly lhs;  // res_zeta(sigma_0, d_zeta sigma_0)
    MultiPoly rhs;  // (-1)^{N-1}/N^{N-2} x^{(N-1)^2}(1-x) res_zeta(f, g)
    std::optional<Rational> ratio;  // lhs / rhs when it is a constant
};
FactorizationReport factorization_check(const ParameterSet& p);

// Eliminant of x from f = g = 0 by the two-sum formula; throws
// "degenerate leading coefficient" when the zeta^{2(N-1)} coefficient vanishes.
MultiPoly h_poly(const ParameterSet& p);

struct TurningPoint {
    cplx x, zeta;
    std::pair<int, int> type{0, 0};  // filled by classification
    bool simple = false;
    double res_sigma = 0, res_dzeta = 0;  // relative residuals of sigma_0 and d_zeta sigma_0
    double mag_dx = 0, mag_d2zeta = 0;    // relative sizes of the simplicity partials
};

std::vector<TurningPoint> turning_points(const ParameterSet& p, double tol = 1e-10);

// Roots of sigma_0(x, .) at a fixed x.
std::vector<cplx> characteristic_roots(const NumericParams& p, cplx x);

// Straight path from near the singular point to x*.
std::vector<cplx> default_path(const TurningPoint& tp, Point rho);
// Continue the locally numbered characteristic roots along the path and return
// the 1-based pair (j, k), j < k, that coalesces at x*.
std::pair<int, int> classify_turning_point(const ParameterSet& p, const TurningPoint& tp, Point rho,
                                           std::vector<cplx> path);

struct GenericityReport {
    bool ok = false;
    bool simple_tp = false;           // (i)
    bool s1_differs = false;          // (ii)
    bool lead_nonzero = false;        // (iii)
    bool discriminant_nonzero = false;  // (iv)
    bool cube_factorization = true;   // N = 3 only
    std::vector<std::string> witnesses;
};
GenericityReport genericity_report(const ParameterSet& p);

// Symbolic N = 3 discriminant identity.
struct DiscriminantCube {
    MultiPoly dis;       // Dis_x res_zeta(f, g)
    MultiPoly quotient;  // dis / (256 prod a_{i,1} prod (a_{i,1} - b_{j,1}))
    MultiPoly h_prime;   // cube root of the quotient, if any
    bool divisible = false;
    bool is_cube = false;
    int h_degree = -1;  // homogeneous degree of h', -1 if not homogeneous
};
DiscriminantCube discriminant_cube_n3();

}  // namespace ghg
