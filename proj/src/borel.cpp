#include "ghg/borel.hpp"

#include "ghg/combinatorics.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace ghg {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = 0.57721566490153286061;
constexpr double kHalfLog2Pi = 0.91893853320467274178;
constexpr double kStirlingMin = 15.0;
constexpr double kTaylorRadius = 0.2;

// zeta(k) - 1 for k = 2..25.
constexpr std::array<double, 24> kZetaMinusOne = {
    6.44934066848226406e-01, 2.02056903159594292e-01, 8.23232337111381857e-02, 3.69277551433699266e-02,
    1.73430619844491402e-02, 8.34927738192282713e-03, 4.07735619794433960e-03, 2.00839282608221426e-03,
    9.94575127818085256e-04, 4.94188604119464529e-04, 2.46086553308048320e-04, 1.22713347578489145e-04,
    6.12481350587048277e-05, 3.05882363070204933e-05, 1.52822594086518710e-05, 7.63719763789976257e-06,
    3.81729326499984022e-06, 1.90821271655393897e-06, 9.53962033872796212e-07, 4.76932986787806447e-07,
    2.38450502727733004e-07, 1.19219925965311064e-07, 5.96081890512594801e-08, 2.98035035146522793e-08,
};

// B_{2k} / (2k (2k-1)), k = 1..12.
const std::vector<double>& stirling_coefficients() {
    static const std::vector<double> c = [] {
        auto B = bernoulli_numbers(24);
        std::vector<double> r;
        for (int k = 1; k <= 12; ++k) r.push_back((B[2 * k] * Rational(1, 2 * k * (2 * k - 1))).to_double());
        return r;
    }();
    return c;
}

// log Gamma(z) - ((z - 1/2) log z - z + log sqrt(2 pi)) for |z| >= kStirlingMin, Re z > 0.
cplx stirling_tail(cplx z) {
    const auto& c = stirling_coefficients();
    const cplx w = 1.0 / z, w2 = w * w;
    cplx s = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * w2 + *it;
    return s * w;
}

cplx stirling(cplx z) { return (z - 0.5) * std::log(z) - z + kHalfLog2Pi + stirling_tail(z); }

cplx log1p(cplx w) {
    const double u = w.real(), v = w.imag();
    return {0.5 * std::log1p(2.0 * u + u * u + v * v), std::atan2(v, 1.0 + u)};
}

// e^w - 1
cplx expm1(cplx w) {
    const double a = std::expm1(w.real()), sb = std::sin(0.5 * w.imag());
    return {a * std::cos(w.imag()) - 2.0 * sb * sb, (a + 1.0) * std::sin(w.imag())};
}

// log Gamma(1 + w) with sum over zeta(k), or log Gamma(2 + w) with zeta(k) - 1.
cplx taylor(cplx w, bool at_two) {
    cplx s = 0.0;
    for (int k = int(kZetaMinusOne.size()) + 1; k >= 2; --k) {
        double zk = kZetaMinusOne[std::size_t(k - 2)] + (at_two ? 0.0 : 1.0);
        s = s * w + (k % 2 ? -zk : zk) / double(k);
    }
    return w * (s * w + (at_two ? 1.0 - kEulerGamma : -kEulerGamma));
}

// Principal log Gamma for Re z >= 1/2.
cplx log_gamma_right(cplx z) {
    if (std::abs(z - 1.0) <= kTaylorRadius) return taylor(z - 1.0, false);
    if (std::abs(z - 2.0) <= kTaylorRadius) return taylor(z - 2.0, true);
    cplx shift = 0.0;
    while (std::abs(z) < kStirlingMin) {
        shift += std::log(z);
        z += 1.0;
    }
    return stirling(z) - shift;
}

// Branch of log sin(pi z) continuous on Im z >= 0 and real on (0, 1).
cplx log_sin_pi_upper(cplx z) {
    const double xr = z.real() - std::round(z.real());
    const cplx em1 = expm1(cplx(-2.0 * kPi * z.imag(), 2.0 * kPi * xr));
    return cplx(0.0, -kPi) * z + cplx(-std::log(2.0), kPi / 2) + std::log(-em1);
}

}  // namespace

NotSummable::NotSummable(SummabilityVerdict v)
    : std::domain_error([&v] {
          std::string s = "not Borel summable: Re vanishes for";
          for (const auto& x : v.violated) s += " " + x.form.str() + ";";
          return s;
      }()),
      verdict_(std::move(v)) {}

SummabilityVerdict summability_region(const NumericParams& p, Point rho, int j, int k, double tol) {
    SummabilityVerdict v{rho, std::min(j, k), std::max(j, k), true, {}};
    for (const auto& f : summability_forms(p.N, rho, j, k)) {
        double re = f.kappa1(p).real();
        if (std::abs(re) <= tol) v.violated.push_back({f, re});
    }
    v.summable = v.violated.empty();
    return v;
}

cplx log_gamma(cplx z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw std::domain_error("log_gamma of a non-finite argument");
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw std::domain_error("log_gamma pole at a nonpositive integer");
    if (z.real() >= 0.5) return log_gamma_right(z);
    if (z.imag() < 0.0) return std::conj(log_gamma(std::conj(z)));
    return std::log(kPi) - log_sin_pi_upper(z) - log_gamma_right(1.0 - z);
}

namespace {

// log(1 + u) - u for |u| <= 1/2.
cplx log1p_minus_id(cplx u) {
    cplx sum = 0.0, p = u;
    for (int n = 2; n < 80; ++n) {
        p *= -u;
        const cplx t = p / double(n);
        sum += t;
        if (std::abs(t) <= 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

}  // namespace

cplx borel_branch(cplx kappa, cplx kappa0, double eta, bool right) {
    const cplx ke = kappa * eta, s = kappa0 + ke;
    // Same formula regrouped around Stirling's expansion at s (or 1 - s) to avoid cancellation.
    const cplx K = right ? ke : -ke, c = right ? kappa0 : 1.0 - kappa0, z = K + c;
    if (K.real() > 0.0 && z.real() > 0.0 && std::abs(z) >= kStirlingMin && std::abs(c) <= 0.5 * std::abs(K)) {
        const cplx u = c / K;
        const cplx h = (c - 0.5) * log1p(u) + K * log1p_minus_id(u) + stirling_tail(z);
        return right ? -0.5 * h : 0.5 * h;
    }
    if (right) return 0.5 * (kHalfLog2Pi + (s - 0.5) * std::log(ke) - ke - log_gamma(s));
    return 0.5 * ((s - 0.5) * std::log(-ke) + log_gamma(1.0 - s) - kHalfLog2Pi - ke);
}

cplx borel_sum_v_tilde(cplx kappa, cplx kappa0, double eta) {
    if (!(eta > 0.0)) throw std::invalid_argument("eta must be positive");
    if (kappa.real() == 0.0) throw std::domain_error("on a Stokes line in parameter space");
    return borel_branch(kappa, kappa0, eta, kappa.real() > 0.0);
}

BorelEvaluation borel_sum_voros(const NumericParams& p, Point rho, int j, int k, double eta, int L, double tol) {
    if (L < 2) throw std::invalid_argument("truncation order must be at least 2");
    BorelEvaluation r;
    r.eta = eta;
    r.verdict = summability_region(p, rho, j, k, tol);
    if (!r.verdict.summable) throw NotSummable(r.verdict);
    const VorosClosedForm v = voros_terms(p.N, rho, j, k);
    for (const auto& t : v.terms) r.value += double(t.sign) * borel_sum_v_tilde(t.form.kappa1(p), t.form.kappa0(p), eta);
    const auto series = voros_series(p, rho, j, k, L + 1);
    cplx partial = 0.0;
    for (int l = 2; l <= L + 1; ++l) {
        cplx term = series[l - 1] * std::pow(eta, double(1 - l));
        if (l == L + 1) {
            r.first_omitted = std::abs(term);
            break;
        }
        partial += term;
        r.partials.push_back(partial);
    }
    r.discrepancy = std::abs(r.value - partial);
    return r;
}

}  // namespace ghg
