#include <doctest.h>

#include <complex>

#include "patlas/error.hpp"
#include "patlas/polynomial.hpp"
#include "patlas/rng.hpp"
#include "patlas/sparse_matrix.hpp"
#include "patlas/univariate.hpp"

using namespace patlas;

namespace {

SparsePolynomial var_x(int arity = 1) { return SparsePolynomial::variable(arity, 0); }
SparsePolynomial constant(const Rational& c, int arity = 1) {
    return SparsePolynomial::constant(arity, c);
}

SparsePolynomial random_poly(Rng& rng, int arity, int max_deg, int max_terms) {
    SparsePolynomial p(arity);
    int terms = 1 + static_cast<int>(rng.uniform() * max_terms);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(static_cast<size_t>(arity));
        for (auto& v : e) v = static_cast<int>(rng.uniform() * (max_deg + 1));
        long num = static_cast<long>(rng.uniform(-9, 10));
        long den = 1 + static_cast<long>(rng.uniform() * 4);
        if (num != 0) p.add_term(Monomial(e), Rational(num, den));
    }
    return p;
}

// Test-only dense determinant by Laplace recursion, independent of the
// subset-DP implementation in the library.
SparsePolynomial laplace_det(const std::vector<std::vector<SparsePolynomial>>& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    SparsePolynomial acc(m[0][0].arity());
    for (size_t r = 0; r < n; ++r) {
        std::vector<std::vector<SparsePolynomial>> minor_m;
        for (size_t rr = 0; rr < n; ++rr) {
            if (rr == r) continue;
            std::vector<SparsePolynomial> row(m[rr].begin() + 1, m[rr].end());
            minor_m.push_back(std::move(row));
        }
        SparsePolynomial term = m[r][0] * laplace_det(minor_m);
        if (r % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

}  // namespace

TEST_CASE("rational arithmetic canonicalizes") {
    Rational a(2, 4);
    CHECK(a.numerator_string() == "1");
    CHECK(a.denominator_string() == "2");
    Rational b(-3, -6);
    CHECK(b == Rational(1, 2));
    CHECK((a - b).is_zero());
    CHECK(Rational(0).denominator_string() == "1");
    CHECK(Rational::gcd(Rational(4, 3), Rational(2, 9)) == Rational(2, 9));
    CHECK_THROWS_AS(Rational(1, 0), Error);
    CHECK(Rational::from_string("-7/21") == Rational(-1, 3));
}

TEST_CASE("polynomial product and cancellation") {
    SparsePolynomial x = var_x();
    SparsePolynomial one = constant(1);

    SparsePolynomial diff = (x + one) * (x - one);
    SparsePolynomial expect(1);
    expect.add_term(Monomial({2}), Rational(1));
    expect.add_term(Monomial({0}), Rational(-1));
    CHECK(diff == expect);

    Rng rng(1);
    SparsePolynomial p = random_poly(rng, 1, 4, 5);
    CHECK(p + SparsePolynomial::zero(1) == p);

    // (x+1)^2 y - (x^2+2x+1) y cancels identically.
    SparsePolynomial x2 = SparsePolynomial::variable(2, 0);
    SparsePolynomial y2 = SparsePolynomial::variable(2, 1);
    SparsePolynomial one2 = SparsePolynomial::constant(2, Rational(1));
    SparsePolynomial lhs = (x2 + one2) * (x2 + one2) * y2;
    SparsePolynomial rhs = (x2 * x2 + x2.scaled(Rational(2)) + one2) * y2;
    CHECK((lhs - rhs).is_zero());
}

TEST_CASE("arity mismatch is a structured error") {
    SparsePolynomial a(1), b(2);
    CHECK_THROWS_WITH_AS(a + b, doctest::Contains("different rings"), Error);
}

TEST_CASE("poly_eval spec points") {
    SparsePolynomial x = var_x();
    SparsePolynomial one = constant(1);
    SparsePolynomial p = x * x - one;
    CHECK(p.eval({{2.0, 0.0}}) == std::complex<double>(3.0, 0.0));

    SparsePolynomial s = x * x - x + one;  // lambda^2 - lambda + 1
    CHECK(s.eval({{2.0, 0.0}}).real() == doctest::Approx(3.0));

    SparsePolynomial t(1);  // 2l^3 - 3l^2 - 3l + 2
    t.add_term(Monomial({3}), Rational(2));
    t.add_term(Monomial({2}), Rational(-3));
    t.add_term(Monomial({1}), Rational(-3));
    t.add_term(Monomial({0}), Rational(2));
    CHECK(std::abs(t.eval({{-1.0, 0.0}})) == doctest::Approx(0.0));
}

TEST_CASE("ring axioms on random triples") {
    Rng rng(42);
    for (int it = 0; it < 40; ++it) {
        SparsePolynomial a = random_poly(rng, 2, 3, 4);
        SparsePolynomial b = random_poly(rng, 2, 3, 4);
        SparsePolynomial c = random_poly(rng, 2, 3, 4);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("eval is multiplicative within 1e-12 at modest points") {
    Rng rng(43);
    for (int it = 0; it < 25; ++it) {
        SparsePolynomial a = random_poly(rng, 2, 3, 4);
        SparsePolynomial b = random_poly(rng, 2, 3, 4);
        std::vector<std::complex<double>> pt = {rng.complex_in_disk(2.0), rng.complex_in_disk(2.0)};
        auto lhs = (a * b).eval(pt);
        auto rhs = a.eval(pt) * b.eval(pt);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("kernel_basis spec examples") {
    SparseMatrixQ id(3, 3);
    for (int i = 0; i < 3; ++i) id.add(i, i, Rational(1));
    CHECK(kernel_basis(id).empty());

    SparseMatrixQ row(1, 2);
    row.add(0, 0, Rational(1));
    row.add(0, 1, Rational(-1));
    auto basis = kernel_basis(row);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0][0] == Rational(1));
    CHECK(basis[0][1] == Rational(1));
}

TEST_CASE("kernel vectors are exact kernel elements and independent") {
    Rng rng(44);
    for (int it = 0; it < 20; ++it) {
        int rows = 3 + static_cast<int>(rng.uniform() * 4);
        int cols = 4 + static_cast<int>(rng.uniform() * 4);
        SparseMatrixQ m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                long v = static_cast<long>(rng.uniform(-3, 4));
                if (v != 0 && rng.uniform() < 0.6) m.add(r, c, Rational(v));
            }
        m.finalize();
        auto basis = kernel_basis(m);
        for (const auto& v : basis)
            for (const auto& y : m.apply(v)) CHECK(y.is_zero());
        // Each basis vector owns a free coordinate where the others vanish,
        // so independence reduces to checking those markers.
        for (size_t i = 0; i < basis.size(); ++i) {
            int marker = -1;
            for (int c = 0; c < cols; ++c) {
                if (basis[i][static_cast<size_t>(c)] == Rational(1)) {
                    bool others_zero = true;
                    for (size_t j = 0; j < basis.size(); ++j)
                        if (j != i && !basis[j][static_cast<size_t>(c)].is_zero()) others_zero = false;
                    if (others_zero) {
                        marker = c;
                        break;
                    }
                }
            }
            CHECK(marker >= 0);
        }
    }
}

TEST_CASE("gcd_univariate spec examples") {
    SparsePolynomial x = var_x();
    SparsePolynomial one = constant(1);
    CHECK(gcd_univariate(x + one, x) == one);
    CHECK(gcd_univariate(x * x - one, x - one) == x - one);

    SparsePolynomial p = (x + one) * (x - one.scaled(Rational(3)));
    CHECK(gcd_univariate(p, SparsePolynomial::zero(1)) == monic(p));

    SparsePolynomial y_of_two = SparsePolynomial::variable(2, 1);
    SparsePolynomial xy = SparsePolynomial::variable(2, 0) * y_of_two;
    CHECK_THROWS_AS(gcd_univariate(xy, xy), Error);
}

TEST_CASE("gcd divides both inputs exactly") {
    Rng rng(45);
    for (int it = 0; it < 30; ++it) {
        SparsePolynomial a = random_poly(rng, 1, 5, 4);
        SparsePolynomial b = random_poly(rng, 1, 5, 4);
        if (a.is_zero() || b.is_zero()) continue;
        SparsePolynomial g = gcd_univariate(a, b);
        if (g.is_zero()) continue;
        CHECK(a.divide_exact(g).has_value());
        CHECK(b.divide_exact(g).has_value());
    }
}

TEST_CASE("squarefree_part spec examples") {
    SparsePolynomial x = var_x();
    SparsePolynomial one = constant(1);
    SparsePolynomial p = (x - one) * (x - one) * (x + one.scaled(Rational(2)));
    CHECK(squarefree_part(p) == (x - one) * (x + one.scaled(Rational(2))));
    CHECK(squarefree_part(x) == x);
    SparsePolynomial sq = x * x + x.scaled(Rational(2)) + one;
    CHECK(squarefree_part(sq) == x + one);
    CHECK_THROWS_AS(squarefree_part(SparsePolynomial::zero(1)), Error);
    // squarefree part divides its argument
    CHECK(p.divide_exact(squarefree_part(p)).has_value());
}

TEST_CASE("resultant_y basics") {
    SparsePolynomial x = SparsePolynomial::variable(2, 0);
    SparsePolynomial y = SparsePolynomial::variable(2, 1);
    SparsePolynomial one = SparsePolynomial::constant(2, Rational(1));

    SparsePolynomial r = resultant_y(y - x, y - one);
    CHECK((r == x - one || r == one - x));

    CHECK(resultant_y(y * y - x, y * y - x).is_zero());
    CHECK_THROWS_AS(resultant_y(SparsePolynomial::zero(2), y), Error);
}

TEST_CASE("resultant for the conjugate-sum construction, against Laplace") {
    // m(y) = (x+1) y^2 - x y + 1; the sum of its two roots is x/(x+1).
    SparsePolynomial x3 = SparsePolynomial::variable(3, 0);
    SparsePolynomial y3 = SparsePolynomial::variable(3, 1);
    SparsePolynomial z3 = SparsePolynomial::variable(3, 2);
    SparsePolynomial one3 = SparsePolynomial::constant(3, Rational(1));
    SparsePolynomial m_y = (x3 + one3) * y3 * y3 - x3 * y3 + one3;
    SparsePolynomial zy = z3 - y3;
    SparsePolynomial m_zy = (x3 + one3) * zy * zy - x3 * zy + one3;

    SparsePolynomial res = resultant_wrt(m_y, m_zy, 1);

    // Independent oracle: the dense Sylvester determinant by Laplace.
    auto ca = coefficients_in(m_y, 1);
    auto cb = coefficients_in(m_zy, 1);
    std::vector<std::vector<SparsePolynomial>> syl(4, std::vector<SparsePolynomial>(4, SparsePolynomial(3)));
    for (int r = 0; r < 2; ++r)
        for (int k = 0; k <= 2; ++k) syl[static_cast<size_t>(r)][static_cast<size_t>(r + k)] = ca[static_cast<size_t>(2 - k)];
    for (int r = 0; r < 2; ++r)
        for (int k = 0; k <= 2; ++k) syl[static_cast<size_t>(2 + r)][static_cast<size_t>(r + k)] = cb[static_cast<size_t>(2 - k)];
    CHECK(res == laplace_det(syl));

    // (x+1) z - x divides the resultant (Vieta: the conjugate sum).
    SparsePolynomial factor = (x3 + one3) * z3 - x3;
    CHECK(res.divide_exact(factor).has_value());
}

TEST_CASE("substitute composes exactly") {
    SparsePolynomial x = SparsePolynomial::variable(2, 0);
    SparsePolynomial y = SparsePolynomial::variable(2, 1);
    SparsePolynomial p = x * x * y - y.scaled(Rational(3));
    // x -> t, y -> t + 1 in a 1-variable ring
    SparsePolynomial t = SparsePolynomial::variable(1, 0);
    SparsePolynomial img = p.substitute({t, t + SparsePolynomial::constant(1, Rational(1))});
    SparsePolynomial expect = t * t * (t + SparsePolynomial::constant(1, Rational(1))) -
                              (t + SparsePolynomial::constant(1, Rational(1))).scaled(Rational(3));
    CHECK(img == expect);
}
