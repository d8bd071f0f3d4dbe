#include <doctest.h>

#include "patlas/error.hpp"
#include "patlas/positive_closure.hpp"
#include "patlas/univariate.hpp"

using namespace patlas;

namespace {

SparsePolynomial X() { return SparsePolynomial::variable(2, 0); }
SparsePolynomial Y() { return SparsePolynomial::variable(2, 1); }
SparsePolynomial One() { return SparsePolynomial::constant(2, Rational(1)); }

}  // namespace

TEST_CASE("membership fixtures over Q[x]") {
    // roots of (x+1) y^2 - x y + 1
    PcVerdict v1 = is_positively_closed(AlgebraicElement((X() + One()) * Y() * Y() - X() * Y() + One()));
    CHECK(v1.positively_closed);
    CHECK(!v1.witness.has_value());
    CHECK(v1.tail_gcd.is_constant());  // gcd(x+1, -x) = 1

    // x/(x+1), presented by (x+1) y - x
    PcVerdict v2 = is_positively_closed(AlgebraicElement((X() + One()) * Y() - X()));
    CHECK(!v2.positively_closed);
    REQUIRE(v2.witness.has_value());
    CHECK(*v2.witness == X() + One());

    // sqrt(x): unit leading coefficient forces membership
    PcVerdict v3 = is_positively_closed(AlgebraicElement(Y() * Y() - X()));
    CHECK(v3.positively_closed);
}

TEST_CASE("verdict is stable under rescaling the presentation") {
    SparsePolynomial m = (X() + One()) * Y() - X();
    PcVerdict a = is_positively_closed(AlgebraicElement(m));
    PcVerdict b = is_positively_closed(AlgebraicElement(m.scaled(Rational(-7, 3))));
    CHECK(a.positively_closed == b.positively_closed);
    REQUIRE(b.witness.has_value());
    CHECK(*a.witness == *b.witness);
}

TEST_CASE("minimal polynomial normalization rejects bad input") {
    CHECK_THROWS_AS(AlgebraicElement(SparsePolynomial::zero(2)), Error);
    CHECK_THROWS_AS(AlgebraicElement(X() + One()), Error);            // no y
    CHECK_THROWS_AS(AlgebraicElement(SparsePolynomial::zero(3)), Error);  // wrong ring
}

TEST_CASE("minpoly_of_sum fixtures") {
    AlgebraicElement quad((X() + One()) * Y() * Y() - X() * Y() + One());
    AlgebraicElement conj_sum = minpoly_of_sum(quad, quad, SumKind::distinct_conjugates);
    CHECK(conj_sum.minpoly() == (X() + One()) * Y() - X());

    AlgebraicElement one_elt(Y() - One());
    AlgebraicElement x_elt(Y() - X());
    AlgebraicElement plain = minpoly_of_sum(one_elt, x_elt, SumKind::first_roots);
    CHECK(plain.minpoly() == Y() - X() - One());

    AlgebraicElement root(Y() * Y() - X());
    AlgebraicElement twice = minpoly_of_sum(root, root, SumKind::same_root);
    CHECK(twice.minpoly() == Y() * Y() - X().scaled(Rational(4)));
}

TEST_CASE("the counterexample chain: membership is not closed under sums") {
    AlgebraicElement quad((X() + One()) * Y() * Y() - X() * Y() + One());
    CHECK(is_positively_closed(quad).positively_closed);
    AlgebraicElement sum = minpoly_of_sum(quad, quad, SumKind::distinct_conjugates);
    PcVerdict v = is_positively_closed(sum);
    CHECK(!v.positively_closed);
    REQUIRE(v.witness.has_value());
    CHECK(*v.witness == X() + One());
}

TEST_CASE("sum of two distinct square roots") {
    // sqrt(x) + sqrt(x) with independent presentations has minimal
    // polynomial z^4 - 4 x z^2 (squarefree part z (z^2 - 4x)); the first_roots
    // pairing picks matching embeddings, giving 2 sqrt(x).
    AlgebraicElement root(Y() * Y() - X());
    AlgebraicElement s = minpoly_of_sum(root, root, SumKind::first_roots);
    // first roots coincide, so the sum is 2 sqrt(x) again
    CHECK(s.minpoly() == Y() * Y() - X().scaled(Rational(4)));
}

TEST_CASE("probabilistic irreducibility flags visible factorizations") {
    AlgebraicElement good((X() + One()) * Y() * Y() - X() * Y() + One());
    CHECK(good.probably_irreducible());
    // (y - x)(y + x) = y^2 - x^2 splits everywhere.
    AlgebraicElement bad(Y() * Y() - X() * X());
    CHECK(!bad.probably_irreducible());
}

TEST_CASE("irreducible factor extraction") {
    SparsePolynomial x = SparsePolynomial::variable(1, 0);
    SparsePolynomial one = SparsePolynomial::constant(1, Rational(1));

    // linear factor via rational roots
    SparsePolynomial p = (x - one.scaled(Rational(3))) * (x * x + one);
    SparsePolynomial f = some_irreducible_factor(p);
    CHECK((f == x - one.scaled(Rational(3)) || f == x * x + one));

    // x^4 + 4 = (x^2 + 2x + 2)(x^2 - 2x + 2), no rational roots
    SparsePolynomial q = x.pow(4) + one.scaled(Rational(4));
    SparsePolynomial g = some_irreducible_factor(q);
    CHECK(g.degree_in(0) == 2);
    CHECK(q.divide_exact(g).has_value());

    // irreducible input comes back unchanged (up to normalization)
    SparsePolynomial irr = x * x + one;
    CHECK(some_irreducible_factor(irr) == irr);
}
