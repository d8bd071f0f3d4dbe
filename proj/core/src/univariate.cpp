#include "patlas/univariate.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "patlas/error.hpp"

namespace patlas {

namespace {

std::vector<int> used_variables(const SparsePolynomial& p) {
    std::vector<bool> used(static_cast<size_t>(p.arity()), false);
    for (const auto& [m, c] : p.terms())
        for (int v = 0; v < p.arity(); ++v)
            if (m[v] > 0) used[static_cast<size_t>(v)] = true;
    std::vector<int> out;
    for (int v = 0; v < p.arity(); ++v)
        if (used[static_cast<size_t>(v)]) out.push_back(v);
    return out;
}

int require_univariate(const SparsePolynomial& p, const char* who) {
    auto vars = used_variables(p);
    if (vars.size() > 1)
        throw domain_error("multivariate_input", std::string(who) + " requires univariate input");
    return vars.empty() ? -1 : vars[0];
}

// Coefficient of var^k, holding everything else.
Rational uni_coeff(const SparsePolynomial& p, int var, int k) {
    for (const auto& [m, c] : p.terms())
        if (m[var] == k && m.total_degree() == k) return c;
    return Rational(0);
}

// Remainder of univariate division over Q in variable `var`.
SparsePolynomial uni_rem(SparsePolynomial r, const SparsePolynomial& d, int var) {
    int dd = d.degree_in(var);
    Rational dl = uni_coeff(d, var, dd);
    while (!r.is_zero() && r.degree_in(var) >= dd) {
        int dr = r.degree_in(var);
        Rational rl = uni_coeff(r, var, dr);
        SparsePolynomial shift =
            SparsePolynomial::variable(r.arity(), var, dr - dd, rl / dl);
        r -= shift * d;
    }
    return r;
}

}  // namespace

int sole_variable(const SparsePolynomial& p) { return require_univariate(p, "sole_variable"); }

SparsePolynomial monic(const SparsePolynomial& p) {
    int var = require_univariate(p, "monic");
    if (p.is_zero()) return p;
    if (var < 0) return SparsePolynomial::constant(p.arity(), Rational(1));
    return p.scaled(uni_coeff(p, var, p.degree_in(var)).inverse());
}

SparsePolynomial gcd_univariate(const SparsePolynomial& a, const SparsePolynomial& b) {
    if (a.arity() != b.arity())
        throw domain_error("arity_mismatch", "gcd of polynomials from different rings");
    int va = require_univariate(a, "gcd_univariate");
    int vb = require_univariate(b, "gcd_univariate");
    if (va >= 0 && vb >= 0 && va != vb)
        throw domain_error("multivariate_input", "gcd_univariate requires a common variable");
    if (a.is_zero() && b.is_zero()) return a;
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    int var = va >= 0 ? va : vb;
    if (var < 0) return SparsePolynomial::constant(a.arity(), Rational(1));

    SparsePolynomial r0 = a, r1 = b;
    if (r0.degree_in(var) < r1.degree_in(var)) std::swap(r0, r1);
    while (!r1.is_zero()) {
        SparsePolynomial r2 = uni_rem(r0, r1, var);
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return monic(r0);
}

SparsePolynomial squarefree_part(const SparsePolynomial& p) {
    if (p.is_zero()) throw domain_error("zero_polynomial", "squarefree part of zero polynomial");
    int var = require_univariate(p, "squarefree_part");
    if (var < 0) return SparsePolynomial::constant(p.arity(), Rational(1));
    SparsePolynomial g = gcd_univariate(p, p.derivative(var));
    auto q = p.divide_exact(g);
    if (!q) throw internal_error("division_failed", "gcd does not divide its argument");
    return monic(*q);
}

SparsePolynomial poly_determinant(const std::vector<std::vector<SparsePolynomial>>& m) {
    size_t n = m.size();
    if (n == 0) throw domain_error("empty_matrix", "determinant of empty matrix");
    if (n > 20) throw domain_error("matrix_too_large", "polynomial determinant capped at 20x20");
    for (const auto& row : m)
        if (row.size() != n) throw domain_error("not_square", "determinant needs a square matrix");
    int arity = m[0][0].arity();

    // g[mask] = det of the submatrix on columns 0..popcount(mask)-1, rows in mask.
    std::vector<SparsePolynomial> g(size_t(1) << n, SparsePolynomial(arity));
    g[0] = SparsePolynomial::constant(arity, Rational(1));
    for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask) {
        int k = std::popcount(mask);
        SparsePolynomial acc(arity);
        int rank = 0;
        for (uint32_t r = 0; r < n; ++r) {
            if (!(mask & (uint32_t(1) << r))) continue;
            const SparsePolynomial& entry = m[r][static_cast<size_t>(k - 1)];
            if (!entry.is_zero()) {
                SparsePolynomial sub = g[mask & ~(uint32_t(1) << r)] * entry;
                if ((rank + (k - 1)) % 2 == 0)
                    acc += sub;
                else
                    acc -= sub;
            }
            ++rank;
        }
        g[mask] = std::move(acc);
    }
    return g[(size_t(1) << n) - 1];
}

std::vector<SparsePolynomial> coefficients_in(const SparsePolynomial& p, int var) {
    int d = std::max(p.degree_in(var), 0);
    std::vector<SparsePolynomial> out(static_cast<size_t>(d) + 1, SparsePolynomial(p.arity()));
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> e = m.exponents();
        int k = e[static_cast<size_t>(var)];
        e[static_cast<size_t>(var)] = 0;
        out[static_cast<size_t>(k)].add_term(Monomial(std::move(e)), c);
    }
    return out;
}

SparsePolynomial from_coefficients_in(const std::vector<SparsePolynomial>& coeffs, int var, int arity) {
    SparsePolynomial p(arity);
    for (size_t k = 0; k < coeffs.size(); ++k)
        p += coeffs[k] * SparsePolynomial::variable(arity, var, static_cast<int>(k));
    return p;
}

SparsePolynomial resultant_wrt(const SparsePolynomial& a, const SparsePolynomial& b, int var) {
    if (a.arity() != b.arity())
        throw domain_error("arity_mismatch", "resultant of polynomials from different rings");
    if (a.is_zero() || b.is_zero())
        throw domain_error("zero_polynomial", "resultant of the zero polynomial");
    auto ca = coefficients_in(a, var);
    auto cb = coefficients_in(b, var);
    int da = static_cast<int>(ca.size()) - 1;
    int db = static_cast<int>(cb.size()) - 1;
    int arity = a.arity();
    if (da == 0 && db == 0) return SparsePolynomial::constant(arity, Rational(1));
    if (da == 0) return a.pow(static_cast<unsigned>(db));
    if (db == 0) return b.pow(static_cast<unsigned>(da));

    size_t n = static_cast<size_t>(da + db);
    std::vector<std::vector<SparsePolynomial>> syl(n, std::vector<SparsePolynomial>(n, SparsePolynomial(arity)));
    for (int r = 0; r < db; ++r)
        for (int k = 0; k <= da; ++k)
            syl[static_cast<size_t>(r)][static_cast<size_t>(r + k)] = ca[static_cast<size_t>(da - k)];
    for (int r = 0; r < da; ++r)
        for (int k = 0; k <= db; ++k)
            syl[static_cast<size_t>(db + r)][static_cast<size_t>(r + k)] = cb[static_cast<size_t>(db - k)];
    return poly_determinant(syl);
}

SparsePolynomial resultant_y(const SparsePolynomial& a, const SparsePolynomial& b) {
    if (a.arity() != 2 || b.arity() != 2)
        throw domain_error("arity_mismatch", "resultant_y expects the two-variable ring {x, y}");
    return resultant_wrt(a, b, 1);
}

namespace {

// Content of p in the univariate-in-var view: gcd of its coefficients,
// which must themselves be univariate (or constant) for this to be exact.
SparsePolynomial content_in(const SparsePolynomial& p, int var) {
    auto coeffs = coefficients_in(p, var);
    SparsePolynomial g(p.arity());
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        g = gcd_univariate(g, c);
    }
    return g;
}

SparsePolynomial primitive_in(const SparsePolynomial& p, int var) {
    if (p.is_zero()) return p;
    SparsePolynomial c = content_in(p, var);
    auto q = p.divide_exact(c);
    if (!q) throw internal_error("division_failed", "content does not divide its polynomial");
    return *q;
}

// Pseudo-remainder of p by q in var: lc(q)^k * p reduced below deg(q).
SparsePolynomial pseudo_rem(SparsePolynomial p, const SparsePolynomial& q, int var) {
    int dq = q.degree_in(var);
    auto cq = coefficients_in(q, var);
    const SparsePolynomial& lq = cq[static_cast<size_t>(dq)];
    while (!p.is_zero() && p.degree_in(var) >= dq) {
        int dp = p.degree_in(var);
        auto cp = coefficients_in(p, var);
        const SparsePolynomial& lp = cp[static_cast<size_t>(dp)];
        SparsePolynomial shift = SparsePolynomial::variable(p.arity(), var, dp - dq);
        p = p * lq - q * (lp * shift);
    }
    return p;
}

}  // namespace

SparsePolynomial gcd_in_variable(const SparsePolynomial& p, const SparsePolynomial& q, int var) {
    if (p.is_zero()) return primitive_in(q, var);
    if (q.is_zero()) return primitive_in(p, var);
    SparsePolynomial a = primitive_in(p, var);
    SparsePolynomial b = primitive_in(q, var);
    if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
    while (!b.is_zero()) {
        SparsePolynomial r = pseudo_rem(a, b, var);
        a = std::move(b);
        b = r.is_zero() ? r : primitive_in(r, var);
    }
    return primitive_in(a, var);
}

SparsePolynomial squarefree_in_variable(const SparsePolynomial& p, int var) {
    if (p.is_zero()) throw domain_error("zero_polynomial", "squarefree part of zero polynomial");
    SparsePolynomial g = gcd_in_variable(p, p.derivative(var), var);
    auto q = p.divide_exact(g);
    if (!q) {
        // The gcd is primitive; adjust by the content of p before giving up.
        auto q2 = p.primitive_part().divide_exact(g);
        if (!q2) throw internal_error("division_failed", "squarefree gcd does not divide");
        return *q2;
    }
    return *q;
}

}  // namespace patlas
