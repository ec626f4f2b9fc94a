#pragma once

#include "ghg/rational.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <cstring>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ghg {

using VarId = std::uint8_t;
inline constexpr std::size_t kMaxVars = 48;

// Process-wide variable registry. Lower ids rank higher in the lex order.
VarId var(std::string_view name);
const std::string& var_name(VarId v);
std::optional<VarId> find_var(std::string_view name);

struct Monomial {
    std::array<std::uint8_t, kMaxVars> e{};

    int operator[](VarId v) const { return e[v]; }
    int total_degree() const;
    bool is_one() const;
    bool divides(const Monomial& o) const;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return std::memcmp(a.e.data(), b.e.data(), kMaxVars) == 0;
    }
    // Lex comparison on big-endian 64-bit words.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < kMaxVars; i += 8) {
            std::uint64_t x, y;
            std::memcpy(&x, a.e.data() + i, 8);
            std::memcpy(&y, b.e.data() + i, 8);
            if (x != y) return __builtin_bswap64(x) < __builtin_bswap64(y);
        }
        return false;
    }
    friend bool operator>(const Monomial& a, const Monomial& b) { return b < a; }
};

Monomial operator*(const Monomial& a, const Monomial& b);
Monomial operator/(const Monomial& a, const Monomial& b);

// Sparse multivariate polynomial over Q. Terms are kept sorted in strictly
// decreasing lex order with no zero coefficients.
class MultiPoly {
public:
    struct Term {
        Monomial m;
        Rational c;
    };

    MultiPoly() = default;
    MultiPoly(const Rational& c);
    MultiPoly(long c) : MultiPoly(Rational(c)) {}
    MultiPoly(int c) : MultiPoly(Rational(c)) {}

    static MultiPoly variable(VarId v, int power = 1);
    static MultiPoly variable(std::string_view name, int power = 1) { return variable(var(name), power); }
    static MultiPoly term(const Monomial& m, const Rational& c);
    static MultiPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return t_; }
    std::size_t size() const { return t_.size(); }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
    Rational constant_value() const;
    Rational constant_term() const;
    const Term& lead() const { return t_.front(); }

    int degree(VarId v) const;
    int total_degree() const;
    std::vector<VarId> variables() const;
    bool depends_on(VarId v) const { return degree(v) > 0; }

    MultiPoly coeff(VarId v, int k) const;
    std::vector<MultiPoly> coeffs(VarId v) const;
    MultiPoly derivative(VarId v) const;
    MultiPoly substitute(VarId v, const MultiPoly& s) const;
    MultiPoly substitute(const std::map<VarId, MultiPoly>& s) const;
    Rational evaluate(const std::map<VarId, Rational>& vals) const;
    std::complex<double> evaluate(const std::map<VarId, std::complex<double>>& vals) const;

    MultiPoly pow(unsigned e) const;
    MultiPoly scaled(const Rational& c) const;
    MultiPoly monic() const;
    std::optional<MultiPoly> divide_exact(const MultiPoly& d) const;
    // Homogeneous in `vars` (all other variables treated as constants)?
    std::optional<int> homogeneous_degree(const std::vector<VarId>& vars) const;

    std::string str() const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator-() const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    // Total order used for map keys (not an algebraic order).
    friend bool operator<(const MultiPoly& a, const MultiPoly& b);

private:
    std::vector<Term> t_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

}  // namespace ghg
