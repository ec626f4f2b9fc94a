#pragma once

#include "ghg/multipoly.hpp"

#include <map>
#include <string>

namespace ghg {

// Rational function num / prod(atom_k^e_k). Atoms are monic polynomials held
// in a process-wide registry; they are created on demand when a polynomial
// that does not factor over the known atoms ends up in a denominator.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(const Rational& c) : num_(c) {}
    RatFunc(long c) : num_(c) {}
    RatFunc(int c) : num_(c) {}
    RatFunc(const MultiPoly& p) : num_(p) {}
    // Throws std::domain_error when q is zero.
    static RatFunc fraction(const MultiPoly& p, const MultiPoly& q);

    // Register p (made monic) as an atom and return its id.
    static int atom(const MultiPoly& p);
    static const MultiPoly& atom_poly(int id);

    const MultiPoly& numerator() const { return num_; }
    const std::map<int, int>& denominator_atoms() const { return den_; }
    MultiPoly denominator() const;

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }
    bool is_constant() const { return den_.empty() && num_.is_constant(); }
    Rational constant_value() const;

    RatFunc inverse() const;
    RatFunc derivative(VarId v) const;
    RatFunc substitute(const std::map<VarId, MultiPoly>& s) const;
    Rational evaluate(const std::map<VarId, Rational>& vals) const;
    std::complex<double> evaluate(const std::map<VarId, std::complex<double>>& vals) const;
    std::string str() const;

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o) { return *this *= o.inverse(); }

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    RatFunc operator-() const;

    // Cross-multiplied comparison; independent of how the atoms were chosen.
    friend bool operator==(const RatFunc& a, const RatFunc& b);

private:
    void cancel();

    MultiPoly num_;
    std::map<int, int> den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& r);

}  // namespace ghg
