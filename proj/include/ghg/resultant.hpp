#pragma once

#include "ghg/multipoly.hpp"

#include <optional>
#include <vector>

namespace ghg {

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

// Fraction-free (Bareiss) determinant; all divisions are exact.
MultiPoly bareiss_det(PolyMatrix m);

PolyMatrix sylvester_matrix(const MultiPoly& p, const MultiPoly& q, VarId v);

// Sylvester resultant eliminating v.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, VarId v);

// (-1)^{n(n-1)/2} res(P, P') / lead(P), n = deg_v P. Degrees up to 4 use the
// closed-form expressions in the coefficients.
MultiPoly discriminant(const MultiPoly& p, VarId v);
// Same quantity, always through the Sylvester determinant.
MultiPoly discriminant_sylvester(const MultiPoly& p, VarId v);

// q with q^n = p, if p is an exact n-th power over Q.
std::optional<MultiPoly> exact_root(const MultiPoly& p, unsigned n);

}  // namespace ghg
