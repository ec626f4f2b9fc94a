#include "ghg/resultant.hpp"

#include "ghg/combinatorics.hpp"

#include <stdexcept>

namespace ghg {

MultiPoly bareiss_det(PolyMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return MultiPoly(1);
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    int sign = 1;
    MultiPoly prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return MultiPoly{};
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MultiPoly t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                auto q = t.divide_exact(prev);
                if (!q) throw std::logic_error("Bareiss step: inexact division");
                m[i][j] = std::move(*q);
            }
            m[i][k] = MultiPoly{};
        }
        prev = m[k][k];
    }
    MultiPoly d = m[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

PolyMatrix sylvester_matrix(const MultiPoly& p, const MultiPoly& q, VarId v) {
    auto pc = p.coeffs(v);
    auto qc = q.coeffs(v);
    const int dp = static_cast<int>(pc.size()) - 1;
    const int dq = static_cast<int>(qc.size()) - 1;
    const int n = dp + dq;
    PolyMatrix s(n, std::vector<MultiPoly>(n));
    for (int r = 0; r < dq; ++r)
        for (int k = 0; k <= dp; ++k) s[r][r + k] = pc[dp - k];
    for (int r = 0; r < dp; ++r)
        for (int k = 0; k <= dq; ++k) s[dq + r][r + k] = qc[dq - k];
    return s;
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, VarId v) {
    if (p.is_zero() && q.is_zero()) throw std::domain_error("undefined resultant");
    if (p.is_zero() || q.is_zero()) return MultiPoly{};
    const int dp = p.degree(v);
    const int dq = q.degree(v);
    if (dp == 0) return p.pow(dq);
    if (dq == 0) return q.pow(dp);
    return bareiss_det(sylvester_matrix(p, q, v));
}

namespace {

// Closed forms for degree <= 4; c[k] is the coefficient of v^k.
MultiPoly small_discriminant(const std::vector<MultiPoly>& c) {
    using P = MultiPoly;
    switch (c.size() - 1) {
    case 1:
        return P(1);
    case 2:
        return c[1] * c[1] - P(4) * c[2] * c[0];
    case 3: {
        const P &a = c[3], &b = c[2], &cc = c[1], &d = c[0];
        return b * b * cc * cc - P(4) * a * cc * cc * cc - P(4) * b * b * b * d - P(27) * a * a * d * d +
               P(18) * a * b * cc * d;
    }
    default: {
        const P &a = c[4], &b = c[3], &cc = c[2], &d = c[1], &e = c[0];
        P a2 = a * a, b2 = b * b, c2 = cc * cc, d2 = d * d, e2 = e * e;
        P ae = a * e, bd = b * d;
        return P(256) * a2 * e2 * ae - P(192) * a2 * bd * e2 - P(128) * a2 * c2 * e2 +
               P(144) * a * cc * d2 * ae - P(27) * a2 * d2 * d2 + P(144) * b2 * cc * e2 * a -
               P(6) * b2 * d2 * ae - P(80) * bd * c2 * ae + P(18) * bd * cc * d2 * a +
               P(16) * c2 * c2 * ae - P(4) * a * c2 * cc * d2 - P(27) * b2 * b2 * e2 +
               P(18) * b2 * bd * cc * e - P(4) * b2 * bd * d2 - P(4) * b2 * c2 * cc * e + b2 * c2 * d2;
    }
    }
}

}  // namespace

MultiPoly discriminant_sylvester(const MultiPoly& p, VarId v) {
    if (p.is_zero()) throw std::domain_error("discriminant of zero polynomial");
    const int n = p.degree(v);
    if (n < 1) throw std::domain_error("discriminant needs positive degree");
    MultiPoly r = resultant(p, p.derivative(v), v);
    auto q = r.divide_exact(p.coeff(v, n));
    if (!q) throw std::logic_error("discriminant: resultant not divisible by leading coefficient");
    return (n * (n - 1) / 2) % 2 ? -*q : *q;
}

MultiPoly discriminant(const MultiPoly& p, VarId v) {
    if (p.is_zero()) throw std::domain_error("discriminant of zero polynomial");
    const int n = p.degree(v);
    if (n < 1) throw std::domain_error("discriminant needs positive degree");
    if (n <= 4) return small_discriminant(p.coeffs(v));
    return discriminant_sylvester(p, v);
}

std::optional<MultiPoly> exact_root(const MultiPoly& p, unsigned n) {
    if (n == 0) throw std::invalid_argument("zeroth root");
    if (p.is_zero() || n == 1) return p;
    const auto& lt = p.lead();
    Monomial m0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        if (lt.m.e[i] % n) return std::nullopt;
        m0.e[i] = static_cast<std::uint8_t>(lt.m.e[i] / n);
    }
    auto int_root = [n](const mpz_class& z) -> std::optional<mpz_class> {
        if (z < 0 && n % 2 == 0) return std::nullopt;
        mpz_class a = abs(z), r;
        if (!mpz_root(r.get_mpz_t(), a.get_mpz_t(), n)) return std::nullopt;
        return z < 0 ? mpz_class(-r) : r;
    };
    auto rn = int_root(lt.c.num());
    auto rd = int_root(lt.c.den());
    if (!rn || !rd) return std::nullopt;
    MultiPoly q = MultiPoly::term(m0, Rational(mpq_class(*rn, *rd)));
    // pw[j] = q^j for j < n.
    std::vector<MultiPoly> pw(n);
    pw[0] = MultiPoly(1);
    for (unsigned j = 1; j < n; ++j) pw[j] = pw[j - 1] * q;
    MultiPoly rem = p - pw[n - 1] * q;
    const MultiPoly denom = MultiPoly(Rational(long(n))) * pw[n - 1];
    while (!rem.is_zero()) {
        auto t = MultiPoly::term(rem.lead().m, rem.lead().c).divide_exact(MultiPoly::term(denom.lead().m, denom.lead().c));
        if (!t) return std::nullopt;
        // Terms of q are generated in decreasing order; a candidate that is not
        // below the last one means p is not a perfect power.
        if (!(t->lead().m < q.terms().back().m)) return std::nullopt;
        // (q+t)^j = sum_k C(j,k) q^{j-k} t^k, updated from the top power down.
        std::vector<MultiPoly> tp(n + 1);
        tp[0] = MultiPoly(1);
        for (unsigned k = 1; k <= n; ++k) tp[k] = tp[k - 1] * *t;
        MultiPoly inc;
        for (unsigned k = 1; k <= n; ++k) inc += MultiPoly(Rational(binomial(n, k))) * pw[n - k] * tp[k];
        rem -= inc;
        for (unsigned j = n - 1; j >= 1; --j) {
            MultiPoly nj;
            for (unsigned k = 0; k <= j; ++k) nj += MultiPoly(Rational(binomial(j, k))) * pw[j - k] * tp[k];
            pw[j] = std::move(nj);
        }
        q += *t;
    }
    return q;
}

}  // namespace ghg
