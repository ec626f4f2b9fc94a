#pragma once

#include "ghg/multipoly.hpp"

#include <complex>
#include <string>
#include <random>
#include <utility>
#include <vector>

namespace ghg {

// Variables shared by the symbolic layers.
VarId x_var();
VarId zeta_var();
// eta^{-1}
VarId t_var();
// a_{i,k}, b_{j,k} with 1-based i, j and k in {0, 1}.
VarId a_var(int i, int k);
VarId b_var(int j, int k);
// Registers x, zeta, eta^{-1} and every a_{i,k}, b_{j,k} up to N in a fixed
// order, so that printed term order does not depend on first use.
void register_variables(int N);

enum class ParamKind { A, B };

// One of the eta-linear parts a_{i,1}, b_{j,1}; index is 1-based.
struct ShiftParam {
    ParamKind kind = ParamKind::A;
    int index = 1;
    std::string name() const;
    friend bool operator==(const ShiftParam&, const ShiftParam&) = default;
};

// Parameters a_i = a_{i,0} + a_{i,1} eta, b_j = b_{j,0} + b_{j,1} eta. Entries
// are polynomials: constants in exact mode, variables in symbolic mode.
struct ParameterSet {
    int N = 2;
    std::vector<MultiPoly> a0, a1;  // size N
    std::vector<MultiPoly> b0, b1;  // size N-1

    static ParameterSet symbolic(int N);
    static ParameterSet exact(int N, const std::vector<std::pair<Rational, Rational>>& a,
                              const std::vector<std::pair<Rational, Rational>>& b);
    // Nonzero rationals num/den with |num| <= range, 1 <= den <= 9.
    static ParameterSet random(int N, std::mt19937_64& rng, int range = 40);

    void validate() const;
    bool is_exact() const;
    // a_{i,1} + t a_{i,0} = a_i / eta, as a polynomial in t (1-based index).
    MultiPoly a_scaled(int i) const;
    MultiPoly b_scaled(int j) const;
    std::vector<MultiPoly> a_scaled_all() const;
    std::vector<MultiPoly> b_scaled_all() const;

    // Copies with one entry moved by delta (1-based index, k in {0, 1}).
    ParameterSet shift_a(int i, int k, const MultiPoly& delta) const;
    ParameterSet shift_b(int j, int k, const MultiPoly& delta) const;
    // Every entry multiplied by lambda on the eta-linear parts only.
    ParameterSet scale_linear(const Rational& lambda) const;

    Rational value_a(int i, int k) const;

    // Entry a_{i,k} or b_{j,k} named by q, and a copy with that entry replaced.
    const MultiPoly& entry(ShiftParam q, int k) const;
    ParameterSet with_entry(ShiftParam q, int k, const MultiPoly& v) const;
    // Every a_{i,1}, b_{j,1} in order.
    std::vector<ShiftParam> linear_params() const;
    Rational value_b(int j, int k) const;
};

// Complex-double parameters for the numeric layer.
struct NumericParams {
    int N = 2;
    std::vector<std::complex<double>> a0, a1, b0, b1;

    static NumericParams from(const ParameterSet& p);
};

}  // namespace ghg
