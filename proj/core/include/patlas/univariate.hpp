#pragma once

#include <vector>

#include "patlas/polynomial.hpp"

namespace patlas {

/// Index of the only variable appearing in p, or -1 when p is constant.
int sole_variable(const SparsePolynomial& p);

/// Divides a univariate polynomial by its leading coefficient.
SparsePolynomial monic(const SparsePolynomial& p);

/// Monic gcd over Q of two univariate polynomials in the same variable.
/// gcd(p, 0) = monic(p); gcd(0, 0) = 0. Multivariate input is rejected.
SparsePolynomial gcd_univariate(const SparsePolynomial& a, const SparsePolynomial& b);

/// p / gcd(p, p'), made monic. Univariate, nonzero input.
SparsePolynomial squarefree_part(const SparsePolynomial& p);

/// Determinant of a square matrix of polynomials, by subset dynamic
/// programming over row choices (exact, no division).
SparsePolynomial poly_determinant(const std::vector<std::vector<SparsePolynomial>>& m);

/// Sylvester resultant of a and b with respect to variable `var`; the result
/// no longer involves `var`. Zero input is rejected.
SparsePolynomial resultant_wrt(const SparsePolynomial& a, const SparsePolynomial& b, int var);

/// Resultant with respect to y for polynomials in the two-variable ring {x, y}.
SparsePolynomial resultant_y(const SparsePolynomial& a, const SparsePolynomial& b);

/// Coefficients of p seen as a polynomial in `var`, index = power of `var`.
/// Entry k is a polynomial in the same ring with var-degree zero.
std::vector<SparsePolynomial> coefficients_in(const SparsePolynomial& p, int var);

/// Rebuilds a polynomial from coefficients_in output.
SparsePolynomial from_coefficients_in(const std::vector<SparsePolynomial>& coeffs, int var, int arity);

/// Gcd of p and q viewed as univariate in `var` over the polynomial ring in
/// the remaining variables (primitive PRS). Result is primitive in that view.
SparsePolynomial gcd_in_variable(const SparsePolynomial& p, const SparsePolynomial& q, int var);

/// p / gcd(p, dp/dvar) in the same view, primitive.
SparsePolynomial squarefree_in_variable(const SparsePolynomial& p, int var);

}  // namespace patlas
