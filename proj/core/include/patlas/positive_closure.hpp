#pragma once

#include <optional>

#include "patlas/polynomial.hpp"

namespace patlas {

/// An element of the algebraic closure of Q(x), presented by a minimal
/// polynomial m(y) = r_k(x) y^k + ... + r_0(x) over Q[x]. Stored primitive
/// (unit content) with positive leading coefficient; irreducibility is the
/// caller's responsibility and only checked probabilistically.
class AlgebraicElement {
public:
    /// `minpoly` lives in the two-variable ring {x, y} (x = variable 0).
    explicit AlgebraicElement(SparsePolynomial minpoly);

    const SparsePolynomial& minpoly() const { return m_; }
    int degree() const;  // degree in y, >= 1

    /// Specializes x at a few integers and looks for rational roots in y.
    /// Returns false when every specialization splits off a rational root
    /// (strong evidence of a linear factor); complete for degree <= 3.
    bool probably_irreducible() const;

private:
    SparsePolynomial m_;
};

struct PcVerdict {
    bool positively_closed = false;
    SparsePolynomial tail_gcd;       // g = gcd(r_k, ..., r_1)
    SparsePolynomial squarefree_gcd; // squarefree part of g
    /// When not positively closed: an irreducible divisor d of g with
    /// d not dividing r_0 (the defining equation of a missed divisor).
    std::optional<SparsePolynomial> witness;
    PcVerdict() : tail_gcd(2), squarefree_gcd(2) {}
};

/// Membership in the positive closure of Q[x]: with m = r_k y^k + ... + r_0,
/// compute g = gcd(r_k, ..., r_1); the element is positively closed iff the
/// squarefree part of g divides r_0 (over a one-dimensional base the image
/// of Spec Q[x][s] -> Spec Q[x] must miss no point at all).
PcVerdict is_positively_closed(const AlgebraicElement& s);

/// Which pair of roots "a + b" means when the presentations coincide.
enum class SumKind {
    same_root,            // s + s = 2s, exact substitution
    distinct_conjugates,  // two distinct roots of one minimal polynomial
    first_roots,          // first root of each under the (re, im) order
};

/// Minimal polynomial (in variables {x, z}) of the selected sum of roots:
/// the resultant Res_y(m_a(y), m_b(z - y)) is made squarefree in z, the
/// intended root branch is followed numerically across integer nodes, and
/// the minimal exactly-dividing factor through that branch is reconstructed
/// and verified by exact division. Throws "ambiguous_factor" when no subset
/// of branches yields a verified factor.
AlgebraicElement minpoly_of_sum(const AlgebraicElement& a, const AlgebraicElement& b, SumKind kind);

/// Some irreducible factor of a nonzero univariate polynomial over Q,
/// primitive with positive leading coefficient. Rational roots are split off
/// first; the rest is desk-scale Kronecker interpolation.
SparsePolynomial some_irreducible_factor(const SparsePolynomial& p);

}  // namespace patlas
