#include <doctest.h>

#include <cmath>

#include "patlas/error.hpp"
#include "patlas/grassmann.hpp"
#include "patlas/rng.hpp"

using namespace patlas;

namespace {

ParameterMatrix legendre_matrix(cplx lambda) {
    return ParameterMatrix(2, {1.0, 0.0, 1.0, 1.0, 0.0, 1.0, 1.0, lambda});
}

std::vector<cplx> random_det1(Rng& rng, int n) {
    for (;;) {
        std::vector<cplx> g(static_cast<size_t>(n * n));
        for (auto& e : g) e = rng.complex_in_disk(1.0);
        // det by cofactor for n <= 3
        cplx d;
        if (n == 2) {
            d = g[0] * g[3] - g[1] * g[2];
        } else {
            d = g[0] * (g[4] * g[8] - g[5] * g[7]) - g[1] * (g[3] * g[8] - g[5] * g[6]) +
                g[2] * (g[3] * g[7] - g[4] * g[6]);
        }
        if (std::abs(d) < 0.1) continue;
        cplx root = std::exp(std::log(d) / static_cast<double>(n));
        for (auto& e : g) e /= root;
        return g;
    }
}

}  // namespace

TEST_CASE("minor of identity block") {
    ParameterMatrix z(3, {1, 0, 0, 5, 2, 7,  //
                          0, 1, 0, 3, 1, 4,  //
                          0, 0, 1, 9, 8, 6});
    CHECK(minor(z, {1, 2, 3}) == cplx(1.0, 0.0));
}

TEST_CASE("n=2 fixture minor and malformed sets") {
    ParameterMatrix z = legendre_matrix(cplx(0.7, 0.0));
    CHECK(minor(z, {2, 4}) == cplx(-1.0, 0.0));
    CHECK_THROWS_AS(minor(z, {4, 2}), Error);
    CHECK_THROWS_AS(minor(z, {1, 1}), Error);
    CHECK_THROWS_AS(minor(z, {1, 5}), Error);
}

TEST_CASE("column swap inside the matrix negates the minor") {
    Rng rng(11);
    for (int n : {2, 3}) {
        std::vector<cplx> entries(static_cast<size_t>(n * 2 * n));
        for (auto& e : entries) e = rng.complex_in_disk(1.0);
        ParameterMatrix z(n, entries);
        ParameterMatrix swapped = z;
        for (int r = 0; r < n; ++r) std::swap(swapped.at(r, 0), swapped.at(r, 1));
        std::vector<int> cols;
        for (int c = 1; c <= n; ++c) cols.push_back(c);
        CHECK(std::abs(minor(swapped, cols) + minor(z, cols)) <= 1e-12 * (1.0 + std::abs(minor(z, cols))));
    }
}

TEST_CASE("cross ratio of the Legendre matrix is lambda") {
    cplx lam(0.37, 0.11);
    CrossRatioGrid f = cross_ratios(legendre_matrix(lam));
    CHECK(std::abs(f.at(2, 4) - lam) <= 1e-14);
}

TEST_CASE("cross ratios restrict to the grid on canonical matrices") {
    Rng rng(12);
    for (int n : {2, 3}) {
        std::vector<cplx> grid;
        for (int k = 0; k < (n - 1) * (n - 1); ++k) grid.push_back(rng.complex_in_disk(0.8) + cplx(1.5, 0));
        ParameterMatrix z = ParameterMatrix::canonical(n, grid);
        CrossRatioGrid f = cross_ratios(z);
        int k = 0;
        for (int i = 2; i <= n; ++i)
            for (int j = n + 2; j <= 2 * n; ++j, ++k)
                CHECK(std::abs(f.at(i, j) - grid[static_cast<size_t>(k)]) <= 1e-12);
    }
}

TEST_CASE("cross ratios are invariant under the group action") {
    Rng rng(13);
    for (int n : {2, 3}) {
        std::vector<cplx> entries(static_cast<size_t>(n * 2 * n));
        for (auto& e : entries) e = rng.complex_in_disk(1.0) + cplx(0.3, 0.0);
        ParameterMatrix z(n, entries);
        if (!is_generic(z)) continue;
        CrossRatioGrid base = cross_ratios(z);

        ParameterMatrix moved = z.left_multiplied(random_det1(rng, n));
        for (int j = 0; j < 2 * n; ++j) moved = moved.with_scaled_column(j, rng.complex_in_disk(0.5) + cplx(1.0, 0.2));
        CrossRatioGrid after = cross_ratios(moved);
        for (size_t k = 0; k < base.values().size(); ++k)
            CHECK(std::abs(after.values()[k] - base.values()[k]) <=
                  1e-10 * (1.0 + std::abs(base.values()[k])));
    }
}

TEST_CASE("gauge fixing examples and idempotence") {
    cplx lam(0.4, 0.0);
    ParameterMatrix scaled(2, {2.0, 0.0, 2.0, 2.0, 0.0, 1.0, 1.0, lam});
    ParameterMatrix fixed = gauge_fix(scaled);
    ParameterMatrix expect = legendre_matrix(lam);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 4; ++c) CHECK(std::abs(fixed.at(r, c) - expect.at(r, c)) <= 1e-12);

    // idempotence
    ParameterMatrix twice = gauge_fix(fixed);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 4; ++c) CHECK(std::abs(twice.at(r, c) - fixed.at(r, c)) <= 1e-12);
}

TEST_CASE("gauge fixing preserves cross ratios on random generic matrices") {
    Rng rng(14);
    int done = 0;
    while (done < 10) {
        std::vector<cplx> entries(3 * 6);
        for (auto& e : entries) e = rng.complex_in_disk(1.0) + cplx(0.4, -0.1);
        ParameterMatrix z(3, entries);
        if (!is_generic(z)) continue;
        CrossRatioGrid before = cross_ratios(z);
        CrossRatioGrid after = cross_ratios(gauge_fix(z));
        for (size_t k = 0; k < before.values().size(); ++k)
            CHECK(std::abs(after.values()[k] - before.values()[k]) <=
                  1e-12 * (1.0 + std::abs(before.values()[k])));
        ++done;
    }
}

TEST_CASE("non-generic matrices are reported with the offending columns") {
    // Column 4 equals column 2, so the denominator minor {2,4} vanishes.
    ParameterMatrix z(2, {1.0, 0.0, 1.0, 0.0, 0.0, 1.0, 1.0, 1.0});
    std::vector<int> bad;
    CHECK(!is_generic(z, &bad));
    CHECK(bad == std::vector<int>{2, 4});
    CHECK_THROWS_WITH_AS(cross_ratios(z), doctest::Contains("non-generic"), Error);

    // A vanishing non-denominator minor still fails genericity, while the
    // cross-ratio grid itself stays finite.
    ParameterMatrix w(2, {1.0, 0.0, 1.0, 1.0, 0.0, 1.0, 1.0, 1.0});
    CHECK(!is_generic(w, &bad));
    CHECK(bad == std::vector<int>{3, 4});
    CHECK_NOTHROW(cross_ratios(w));
}
