#pragma once

#include "ghg/multipoly.hpp"
#include "ghg/rational.hpp"

#include <complex>
#include <vector>

namespace ghg {

// Stirling number of the second kind {j over k}.
mpz_class stirling2(unsigned j, unsigned k);

// Elementary symmetric polynomial of degree l in c; 0 for l < 0 or l > |c|.
template <class T>
T elem_sym(int l, const std::vector<T>& c) {
    if (l < 0 || l > static_cast<int>(c.size())) return T(0);
    std::vector<T> e(static_cast<std::size_t>(l) + 1, T(0));
    e[0] = T(1);
    for (std::size_t i = 0; i < c.size(); ++i)
        for (int k = std::min<int>(l, static_cast<int>(i) + 1); k >= 1; --k) e[k] = e[k] + e[k - 1] * c[i];
    return e[l];
}

// Bernoulli numbers B_0..B_n with B_1 = -1/2.
std::vector<Rational> bernoulli_numbers(unsigned n);

// B_l(t) as a polynomial in the variable t.
MultiPoly bernoulli_poly(unsigned l, VarId t);

// B_l evaluated at a polynomial argument, a rational, or a complex number.
MultiPoly bernoulli_at(unsigned l, const MultiPoly& arg);
Rational bernoulli_at(unsigned l, const Rational& arg);
std::complex<double> bernoulli_at(unsigned l, std::complex<double> arg);

}  // namespace ghg
