#include <doctest.h>

#include <cmath>

#include "patlas/error.hpp"
#include "patlas/hyperseries.hpp"
#include "patlas/oracles.hpp"
#include "patlas/rng.hpp"

using namespace patlas;

TEST_CASE("pochhammer values") {
    CHECK(pochhammer(Rational(1, 2), 0) == Rational(1));
    CHECK(pochhammer(Rational(1, 2), 2) == Rational(3, 4));
    CHECK(pochhammer(Rational(3, 2), 3) == Rational(105, 8));  // (3/2)(5/2)(7/2)
}

TEST_CASE("coefficient_A fixtures") {
    CHECK(coefficient_A(MultiIndex(2, {0})) == Rational(1));
    CHECK(coefficient_A(MultiIndex(2, {1})) == Rational(1, 4));
    // n = 3, single unit entry: (1/2,1)^2 * (1/2,0)^2 / ((3/2,1) (1,1)) = 1/6.
    CHECK(coefficient_A(MultiIndex(3, {1, 0, 0, 0})) == Rational(1, 6));
}

TEST_CASE("n=2 closed form [(1/2,m)/(1,m)]^2 up to m = 50") {
    for (int m = 0; m <= 50; ++m) {
        Rational expect = pochhammer(Rational(1, 2), m) / pochhammer(Rational(1), m);
        expect *= expect;
        CHECK(coefficient_A(MultiIndex(2, {m})) == expect);
    }
}

TEST_CASE("coefficient_A is symmetric under row and column swaps") {
    Rng rng(21);
    for (int it = 0; it < 50; ++it) {
        int a = static_cast<int>(rng.uniform() * 5), b = static_cast<int>(rng.uniform() * 5);
        int c = static_cast<int>(rng.uniform() * 5), d = static_cast<int>(rng.uniform() * 5);
        // grid rows (a b / c d): swap rows, swap columns
        Rational base = coefficient_A(MultiIndex(3, {a, b, c, d}));
        CHECK(base == coefficient_A(MultiIndex(3, {c, d, a, b})));
        CHECK(base == coefficient_A(MultiIndex(3, {b, a, d, c})));
    }
}

TEST_CASE("series at the origin is exactly one") {
    SeriesConfig cfg;
    SeriesResult r = series_phi(CrossRatioGrid(3, {0.0, 0.0, 0.0, 0.0}), cfg);
    CHECK(r.value == cplx(1.0, 0.0));
    CHECK(r.tail_bound == 0.0);
}

TEST_CASE("n=2 series matches the arithmetic-geometric mean at 0.25") {
    SeriesConfig cfg;
    cfg.max_total_degree = 40;
    SeriesResult r = series_phi(CrossRatioGrid(2, {cplx(0.25, 0.0)}), cfg);
    cplx oracle = 1.0 / agm(cplx(1.0, 0.0), std::sqrt(cplx(0.75, 0.0)));
    CHECK(std::abs(r.value - oracle) <= 1e-12 * std::abs(oracle));
}

TEST_CASE("n=3 partial sums of degrees 10 and 12 agree at a small point") {
    CrossRatioGrid x(3, {cplx(0.05, 0.0), cplx(0.05, 0.0), cplx(0.05, 0.0), cplx(0.05, 0.0)});
    SeriesConfig c10, c12;
    c10.max_total_degree = 10;
    c12.max_total_degree = 12;
    cplx v10 = series_phi(x, c10).value;
    cplx v12 = series_phi(x, c12).value;
    CHECK(std::abs(v10 - v12) <= 1e-10 * std::abs(v12));
}

TEST_CASE("shell norms decay geometrically inside the domain") {
    // Evaluate through increasing truncation degrees; successive partial
    // sums must approach the limit monotonically in magnitude of update.
    CrossRatioGrid x(2, {cplx(0.3, 0.1)});
    SeriesConfig base;
    base.max_total_degree = 30;
    cplx limit = series_phi(x, base).value;
    double prev_err = 1e300;
    for (int d = 5; d <= 25; d += 5) {
        SeriesConfig cfg;
        cfg.max_total_degree = d;
        double err = std::abs(series_phi(x, cfg).value - limit);
        CHECK(err < prev_err);
        prev_err = err;
    }
}

TEST_CASE("tail bound is honest at interior points") {
    CrossRatioGrid x(2, {cplx(0.2, 0.0)});
    SeriesConfig coarse, fine;
    coarse.max_total_degree = 15;
    fine.max_total_degree = 60;
    SeriesResult lo = series_phi(x, coarse);
    SeriesResult hi = series_phi(x, fine);
    CHECK(std::abs(lo.value - hi.value) <= 3.0 * lo.tail_bound);
}

TEST_CASE("domain violation is a structured error") {
    SeriesConfig cfg;  // radius 0.5
    CHECK_THROWS_WITH_AS(series_phi(CrossRatioGrid(2, {cplx(0.6, 0.0)}), cfg),
                         doctest::Contains("convergence"), Error);
}

TEST_CASE("series evaluation is reproducible bit for bit") {
    CrossRatioGrid x(3, {cplx(0.11, 0.07), cplx(-0.2, 0.01), cplx(0.03, -0.18), cplx(0.09, 0.0)});
    SeriesConfig cfg;
    cfg.max_total_degree = 24;
    SeriesResult a = series_phi(x, cfg);
    SeriesResult b = series_phi(x, cfg);
    CHECK(a.value.real() == b.value.real());
    CHECK(a.value.imag() == b.value.imag());
    CHECK(a.tail_bound == b.tail_bound);
}
