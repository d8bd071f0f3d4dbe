#include <doctest.h>

#include "patlas/error.hpp"
#include "patlas/jsonio.hpp"
#include "patlas/poly_json.hpp"
#include "patlas/rng.hpp"

using namespace patlas;

TEST_CASE("polynomial JSON round trip preserves terms and order") {
    Rng rng(61);
    for (int it = 0; it < 30; ++it) {
        SparsePolynomial p(3);
        int terms = 1 + static_cast<int>(rng.uniform() * 8);
        for (int t = 0; t < terms; ++t) {
            std::vector<int> e = {static_cast<int>(rng.uniform() * 4),
                                  static_cast<int>(rng.uniform() * 4),
                                  static_cast<int>(rng.uniform() * 4)};
            long num = static_cast<long>(rng.uniform(-20, 21));
            if (num != 0) p.add_term(Monomial(e), Rational(num, 7));
        }
        SparsePolynomial q = polynomial_from_json(polynomial_to_json(p), 3);
        CHECK(p == q);
    }
}

TEST_CASE("serialized terms are in ascending graded-lex order") {
    SparsePolynomial p(2);
    p.add_term(Monomial({2, 0}), Rational(1));
    p.add_term(Monomial({0, 0}), Rational(5));
    p.add_term(Monomial({0, 1}), Rational(-2));
    std::string text = polynomial_to_json(p);
    // constant first, then y, then x^2
    CHECK(text == R"([[[0,0],"5","1"],[[0,1],"-2","1"],[[2,0],"1","1"]])");
}

TEST_CASE("zero polynomial needs an explicit arity") {
    CHECK_THROWS_AS(polynomial_from_json("[]"), Error);
    CHECK(polynomial_from_json("[]", 4).is_zero());
}

TEST_CASE("matrix and cubic documents round trip") {
    ParameterMatrix z(2, {cplx(1, 0), cplx(0, 2), cplx(1, 0), cplx(1, -1),
                          cplx(0, 0), cplx(1, 0), cplx(1, 0), cplx(0.5, 0.25)});
    ParameterMatrix back = parameter_matrix_from_json(parameter_matrix_to_json(z));
    CHECK(back.n() == 2);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 4; ++c) CHECK(back.at(r, c) == z.at(r, c));

    TernaryCubic cub = TernaryCubic::legendre(cplx(0.3, -0.2));
    TernaryCubic cb = ternary_cubic_from_json(ternary_cubic_to_json(cub));
    for (size_t k = 0; k < 10; ++k) CHECK(cb.z[k] == cub.z[k]);
}

TEST_CASE("polynomial documents accept the wrapped form") {
    std::string wrapped = R"({"variables": ["x", "y"], "terms": [[[1,0],"1","1"],[[0,1],"1","1"]]})";
    SparsePolynomial p = polynomial_document_from_json(wrapped);
    CHECK(p.arity() == 2);
    CHECK(p.term_count() == 2);

    std::string bare = R"([[[1,0],"1","1"]])";
    CHECK(polynomial_document_from_json(bare).arity() == 2);
}

TEST_CASE("malformed documents raise domain errors") {
    CHECK_THROWS_AS(parameter_matrix_from_json("{"), Error);
    CHECK_THROWS_AS(parameter_matrix_from_json(R"({"n": 2, "entries": [[1]]})"), Error);
    CHECK_THROWS_AS(ternary_cubic_from_json(R"({"coefficients": [[1,0]]})"), Error);
    CHECK_THROWS_AS(polynomial_from_json(R"([[[1,0],"1"]])", 2), Error);
}
