#include "ghg/combinatorics.hpp"

namespace ghg {

mpz_class stirling2(unsigned j, unsigned k) {
    if (k > j) return 0;
    // Row-by-row recurrence {n,k} = k{n-1,k} + {n-1,k-1}.
    std::vector<mpz_class> row(k + 1, 0);
    row[0] = 1;
    for (unsigned n = 1; n <= j; ++n) {
        for (unsigned m = std::min(n, k); m >= 1; --m) row[m] = m * row[m] + row[m - 1];
        row[0] = 0;
    }
    return row[k];
}

std::vector<Rational> bernoulli_numbers(unsigned n) {
    std::vector<Rational> b(n + 1);
    b[0] = Rational(1);
    for (unsigned m = 1; m <= n; ++m) {
        Rational s;
        for (unsigned k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * b[k];
        b[m] = -s / Rational(long(m) + 1);
    }
    return b;
}

namespace {

template <class T>
T horner(const std::vector<Rational>& b, unsigned l, const T& arg, T one) {
    // B_l(t) = sum_k C(l,k) B_k t^{l-k}; evaluate with powers of t ascending.
    T r = T(0);
    T pw = one;
    for (unsigned p = 0; p <= l; ++p) {
        unsigned k = l - p;
        if (!b[k].is_zero()) r = r + pw * T(Rational(binomial(l, k)) * b[k]);
        if (p < l) pw = pw * arg;
    }
    return r;
}

}  // namespace

MultiPoly bernoulli_poly(unsigned l, VarId t) { return bernoulli_at(l, MultiPoly::variable(t)); }

MultiPoly bernoulli_at(unsigned l, const MultiPoly& arg) {
    return horner<MultiPoly>(bernoulli_numbers(l), l, arg, MultiPoly(1));
}

Rational bernoulli_at(unsigned l, const Rational& arg) {
    return horner<Rational>(bernoulli_numbers(l), l, arg, Rational(1));
}

std::complex<double> bernoulli_at(unsigned l, std::complex<double> arg) {
    auto b = bernoulli_numbers(l);
    std::complex<double> r = 0, pw = 1;
    for (unsigned p = 0; p <= l; ++p) {
        unsigned k = l - p;
        if (!b[k].is_zero()) r += pw * (Rational(binomial(l, k)) * b[k]).to_double();
        pw *= arg;
    }
    return r;
}

}  // namespace ghg
