#pragma once

#include "ghg/params.hpp"
#include "ghg/series.hpp"
#include "ghg/voros.hpp"

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace ghg {

using cplx = std::complex<double>;

struct Violation {
    LinearForm form;
    double real_part = 0.0;
};

struct SummabilityVerdict {
    Point rho = Point::Zero;
    int j = 1, k = 2;
    bool summable = true;
    std::vector<Violation> violated;
};

struct BorelEvaluation {
    double eta = 0.0;
    cplx value;
    std::vector<cplx> partials;  // partials[i] sums l = 2..i+2
    double discrepancy = 0.0;    // |value - partials.back()|
    double first_omitted = 0.0;  // |term l = L+1|
    SummabilityVerdict verdict;
};

class NotSummable : public std::domain_error {
public:
    explicit NotSummable(SummabilityVerdict v);
    const SummabilityVerdict& verdict() const { return verdict_; }

private:
    SummabilityVerdict verdict_;
};

// Re(kappa) != 0 for every form of the intersection attached to (rho, j, k).
// A form counts as violated when |Re kappa| <= tol. (j, k) may come in either order.
SummabilityVerdict summability_region(const NumericParams& p, Point rho, int j, int k, double tol = 0.0);

// Principal branch of log Gamma on C minus (-inf, 0]; on the cut the limit from above.
// Throws std::domain_error at the poles.
cplx log_gamma(cplx z);

// The two half-plane formulas for the Borel sum of
// V~(kappa, kappa0) = (1/2) sum_{l>=2} (-1)^{l+1} eta^{1-l} B_l(kappa0) / (l (l-1) kappa^{l-1}),
// written with principal logarithms term by term. right selects the Re kappa > 0 formula.
cplx borel_branch(cplx kappa, cplx kappa0, double eta, bool right);

// Throws "on a Stokes line in parameter space" when Re kappa = 0.
cplx borel_sum_v_tilde(cplx kappa, cplx kappa0, double eta);

// Sum of sign * borel_sum_v_tilde(kappa1, kappa0, eta) over the closed-form term
// list, with partial sums of the formal series through eta^{1-L}.
// Throws NotSummable when the verdict fails.
BorelEvaluation borel_sum_voros(const NumericParams& p, Point rho, int j, int k, double eta, int L = 8,
                                double tol = 0.0);

}  // namespace ghg
