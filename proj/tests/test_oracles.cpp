#include <doctest.h>

#include <cmath>

#include "patlas/error.hpp"
#include "patlas/grassmann.hpp"
#include "patlas/oracles.hpp"

using namespace patlas;

TEST_CASE("agm fixpoints and Gauss's constant") {
    CHECK(agm(cplx(1.0, 0.0), cplx(1.0, 0.0)) == cplx(1.0, 0.0));
    cplx a(0.7, 0.3);
    CHECK(std::abs(agm(a, a) - a) <= 1e-15 * std::abs(a));
    // agm(sqrt(2), 1) = 1.19814023473559220743992249228...
    cplx g = agm(cplx(std::sqrt(2.0), 0.0), cplx(1.0, 0.0));
    CHECK(std::abs(g - cplx(1.1981402347355922, 0.0)) <= 1e-14);
    CHECK_THROWS_AS(agm(cplx(0.0, 0.0), cplx(1.0, 0.0)), Error);
}

TEST_CASE("tanh-sinh integrates an inverse-square-root singularity exactly") {
    // integral over (0,1) of dx / sqrt(x(1-x)) = pi.
    auto g = [](double, double da, double db) { return 1.0 / std::sqrt(da * db); };
    QuadratureResult r = tanh_sinh(g, 0.0, 1.0);
    CHECK(std::abs(r.value.real() - M_PI) <= 1e-12);
    CHECK(r.error_estimate <= 1e-10);
}

TEST_CASE("legendre quadrature self-consistency and domain") {
    QuadratureResult a = legendre_period_quadrature(0.3);
    CHECK(a.error_estimate <= 1e-9 * std::abs(a.value));
    CHECK_THROWS_AS(legendre_period_quadrature(0.0), Error);
    CHECK_THROWS_AS(legendre_period_quadrature(1.0), Error);

    // Against the classical closed form: the value is 2 K(sqrt(lambda)),
    // and K comes from the independent AGM.
    for (double lam : {0.1, 0.3, 0.5}) {
        cplx K = M_PI / 2.0 / agm(cplx(1.0, 0.0), std::sqrt(cplx(1.0 - lam, 0.0)));
        QuadratureResult q = legendre_period_quadrature(lam);
        CHECK(std::abs(q.value - 2.0 * K) <= 1e-9 * std::abs(K));
    }
}

TEST_CASE("euler operator does not annihilate constants") {
    ParameterMatrix z(2, {1.0, 0.0, 1.0, 1.0, 0.0, 1.0, 1.0, 0.3});
    auto reports = check_annihilators([](const ParameterMatrix&) { return cplx(2.0, 0.0); }, z);
    for (const auto& rep : reports) {
        REQUIRE(rep.error.empty());
        if (rep.operator_id.rfind("euler", 0) == 0) {
            CHECK(rep.residual == doctest::Approx(1.0).epsilon(1e-9));  // |c|/2
        } else if (rep.operator_id.rfind("gkz", 0) == 0) {
            CHECK(rep.relative <= 1e-8);  // constants are killed by second-order operators
        }
    }
}

TEST_CASE("exact polynomial fixtures for the second-order stencil") {
    ParameterMatrix z(2, {0.9, -0.2, 1.1, 0.7, 0.4, 1.3, -0.6, 0.8});

    // (z11 + z12)(z21 + z22): d11 d22 f = 1 and d12 d21 f = 1, so the
    // commuting difference vanishes identically.
    MatrixFunction annihilated = [](const ParameterMatrix& m) {
        return (m.at(0, 0) + m.at(0, 1)) * (m.at(1, 0) + m.at(1, 1));
    };
    // z11 z22 - z12 z21: the same operator returns the constant 2.
    MatrixFunction determinant = [](const ParameterMatrix& m) {
        return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    };

    for (const auto& rep : check_annihilators(annihilated, z)) {
        if (rep.operator_id.rfind("gkz", 0) == 0) {
            REQUIRE(rep.error.empty());
            CHECK(rep.residual <= 1e-10 * std::max(1.0, rep.scale));
        }
    }
    for (const auto& rep : check_annihilators(determinant, z)) {
        if (rep.operator_id == "gkz(1,2;1,2)") {
            REQUIRE(rep.error.empty());
            CHECK(rep.residual == doctest::Approx(2.0).epsilon(1e-6));
        }
    }
}

TEST_CASE("a bare prefactor is not annihilated by the full system") {
    ParameterMatrix z(2, {1.0, 0.0, 1.0, 1.0, 0.0, 1.0, 1.0, 0.21});
    MatrixFunction pre = [](const ParameterMatrix& m) {
        return 1.0 / std::sqrt(minor(m, {1, 3}) * minor(m, {2, 4}));
    };
    double worst_gkz = 0.0;
    for (const auto& rep : check_annihilators(pre, z)) {
        REQUIRE(rep.error.empty());
        if (rep.operator_id.rfind("gkz", 0) == 0) worst_gkz = std::max(worst_gkz, rep.relative);
    }
    CHECK(worst_gkz > 1e-3);  // generically nonzero
}

TEST_CASE("cross ratio probes: exact invariant, exponent zero") {
    ParameterMatrix z(2, {1.0, 0.0, 1.0, 1.0, 0.0, 1.0, 1.0, 0.29});
    MatrixFunction f24 = [](const ParameterMatrix& m) { return cross_ratios(m).at(2, 4); };
    ProbeOptions opts;
    opts.tolerance = 1e-10;
    GroupProbeReport ball = random_group_probe(f24, z, ProbeKind::sl_n_ball, 91, opts);
    CHECK(ball.invariance_defect <= 1e-10);
    opts.column = 3;
    GroupProbeReport col = random_group_probe(f24, z, ProbeKind::column_scale, 92, opts);
    CHECK(std::abs(col.exponent) <= 1e-10);
}

TEST_CASE("a minor scales linearly in its own column") {
    ParameterMatrix z(2, {1.0, 0.0, 1.0, 1.0, 0.0, 1.0, 1.0, 0.33});
    MatrixFunction d13 = [](const ParameterMatrix& m) { return minor(m, {1, 3}); };
    ProbeOptions opts;
    opts.column = 3;
    GroupProbeReport rep = random_group_probe(d13, z, ProbeKind::column_scale, 93, opts);
    CHECK(rep.exponent == doctest::Approx(1.0).epsilon(1e-9));
    opts.column = 2;  // column 2 does not appear in minor(1,3)
    GroupProbeReport rep2 = random_group_probe(d13, z, ProbeKind::column_scale, 94, opts);
    CHECK(std::abs(rep2.exponent) <= 1e-12);
}
