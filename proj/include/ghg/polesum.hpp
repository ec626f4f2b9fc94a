#pragma once

#include "ghg/multipoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace ghg {

// Elements of the form
//   P + sum c_{k,j} k^{-j} + sum d_k log(k) + sum e_s log(s)
// with k monic polynomials of total degree one, s nonzero rationals and
// P, c, d, e polynomials. When the coefficients c, d are free of the variables
// occurring in the forms k the representation is unique, so equality is
// structural. Logarithms of distinct rationals are kept as separate atoms.
class PoleSum {
public:
    PoleSum() = default;
    PoleSum(const Rational& c) : poly_(c) {}
    PoleSum(long c) : poly_(c) {}
    PoleSum(int c) : poly_(c) {}
    PoleSum(const MultiPoly& p) : poly_(p) {}

    // c * form^{-k}, k >= 1. A constant form folds into the polynomial part.
    static PoleSum pole(const MultiPoly& form, int k, const MultiPoly& c = MultiPoly(1));
    // d * log(form); the leading coefficient of form splits off as a constant log.
    static PoleSum log(const MultiPoly& form, const MultiPoly& d = MultiPoly(1));

    bool is_zero() const { return poly_.is_zero() && poles_.empty() && logs_.empty() && const_logs_.empty(); }
    bool has_logs() const { return !logs_.empty() || !const_logs_.empty(); }
    const MultiPoly& polynomial_part() const { return poly_; }
    const std::map<std::pair<MultiPoly, int>, MultiPoly>& poles() const { return poles_; }
    const std::map<MultiPoly, MultiPoly>& logs() const { return logs_; }

    PoleSum derivative(VarId v) const;
    // Antiderivative in v, or nullopt when some term has none of this shape.
    std::optional<PoleSum> integral(VarId v) const;
    PoleSum scaled(const MultiPoly& c) const;
    std::string str() const;

    PoleSum& operator+=(const PoleSum& o);
    PoleSum& operator-=(const PoleSum& o);
    friend PoleSum operator+(PoleSum a, const PoleSum& b) { return a += b; }
    friend PoleSum operator-(PoleSum a, const PoleSum& b) { return a -= b; }
    PoleSum operator-() const { return scaled(MultiPoly(-1)); }
    friend PoleSum operator*(const Rational& q, const PoleSum& s) { return s.scaled(MultiPoly(q)); }

    friend bool operator==(const PoleSum& a, const PoleSum& b) {
        return a.poly_ == b.poly_ && a.poles_ == b.poles_ && a.logs_ == b.logs_ && a.const_logs_ == b.const_logs_;
    }

private:
    void add_pole(const MultiPoly& monic_form, int k, const MultiPoly& c);
    void add_log(const MultiPoly& monic_form, const MultiPoly& d);
    void add_const_log(const Rational& s, const MultiPoly& e);

    MultiPoly poly_;
    std::map<std::pair<MultiPoly, int>, MultiPoly> poles_;
    std::map<MultiPoly, MultiPoly> logs_;
    std::map<Rational, MultiPoly> const_logs_;
};

std::ostream& operator<<(std::ostream& os, const PoleSum& s);

}  // namespace ghg
