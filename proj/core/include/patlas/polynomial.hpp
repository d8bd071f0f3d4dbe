#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "patlas/monomial.hpp"
#include "patlas/rational.hpp"

namespace patlas {

/// Sparse multivariate polynomial over the rationals. Terms are kept in a
/// map ordered by ascending graded-lex, with no zero coefficients stored, so
/// equal polynomials compare equal structurally and iteration order is
/// deterministic.
class SparsePolynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    explicit SparsePolynomial(int arity);
    static SparsePolynomial zero(int arity) { return SparsePolynomial(arity); }
    static SparsePolynomial constant(int arity, const Rational& c);
    static SparsePolynomial variable(int arity, int var, int exponent = 1,
                                     const Rational& coeff = Rational(1));

    int arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    int total_degree() const;  // -1 for the zero polynomial
    int degree_in(int var) const;
    bool is_constant() const;
    Rational constant_value() const;  // coefficient of the unit monomial

    /// Accumulates c * m into the polynomial, dropping the term if it cancels.
    void add_term(const Monomial& m, const Rational& c);
    Rational coefficient(const Monomial& m) const;

    SparsePolynomial operator-() const;
    SparsePolynomial& operator+=(const SparsePolynomial& o);
    SparsePolynomial& operator-=(const SparsePolynomial& o);
    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
    SparsePolynomial scaled(const Rational& c) const;
    SparsePolynomial pow(unsigned e) const;

    friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SparsePolynomial& a, const SparsePolynomial& b) { return !(a == b); }

    /// Leading term under grlex (the map's last entry). Polynomial must be nonzero.
    const std::pair<const Monomial, Rational>& leading_term() const;

    /// Term-by-term evaluation in declared (ascending grlex) order.
    std::complex<double> eval(const std::vector<std::complex<double>>& point) const;
    Rational eval_rational(const std::vector<Rational>& point) const;

    SparsePolynomial derivative(int var) const;

    /// Substitutes variable i by images[i]; all images share one target ring.
    SparsePolynomial substitute(const std::vector<SparsePolynomial>& images) const;

    /// Exact division; nullopt when the divisor does not divide exactly.
    std::optional<SparsePolynomial> divide_exact(const SparsePolynomial& divisor) const;

    /// Positive rational c such that (*this)/c has coprime integer
    /// coefficients. Zero polynomial has content 0 by convention.
    Rational content() const;
    SparsePolynomial primitive_part() const;  // division by content, sign kept

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    int arity_;
    TermMap terms_;
};

}  // namespace patlas
