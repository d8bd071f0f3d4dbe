#pragma once

#include <functional>
#include <string>
#include <vector>

#include "patlas/grassmann.hpp"

namespace patlas {

/// Arithmetic-geometric mean with principal square roots, iterated to a
/// 1e-15 relative fixpoint. Inputs must keep the iteration away from the
/// branch cut (right-half-plane compatible); non-convergence in 64 steps is
/// an error.
cplx agm(cplx a, cplx b);

struct QuadratureResult {
    cplx value;
    double error_estimate = 0.0;
    int node_count = 0;
};

/// Tanh-sinh value of integral over (0, lambda) of dx / sqrt(x (1-x)
/// (lambda-x)) for real lambda in (0, 1), positive branch of the root.
/// The error estimate comes from level doubling. This shares no code with
/// the series pipeline it is used to check.
QuadratureResult legendre_period_quadrature(double lambda);

/// Generic tanh-sinh on (a, b). The integrand receives the node and its
/// exactly-computed distances to both endpoints, so inverse-square-root
/// endpoint singularities stay accurate.
QuadratureResult tanh_sinh(const std::function<double(double x, double dist_a, double dist_b)>& g,
                           double a, double b, int max_level = 11, double target = 1e-12);

struct OperatorResidualReport {
    std::string operator_id;
    std::string test_point;
    double residual = 0.0;
    double scale = 0.0;
    double relative = 0.0;
    std::string error;  // non-empty when an evaluation inside the stencil failed
};

using MatrixFunction = std::function<cplx(const ParameterMatrix&)>;

/// Central finite-difference residuals of the tautological-system operators
/// at z: second-order d_ip d_jq - d_iq d_jp for i<j, p<q; first-order
/// invariance sum_j z_ij d_mj + delta_im and Euler sum_i z_ij d_ij + 1/2.
/// Steps: 1e-5 for first order, 1e-4 for second.
std::vector<OperatorResidualReport> check_annihilators(const MatrixFunction& f,
                                                       const ParameterMatrix& z,
                                                       double first_order_h = 1e-5,
                                                       double second_order_h = 1e-4);

enum class ProbeKind { sl_n_ball, column_scale };

struct GroupProbeReport {
    ProbeKind kind;
    int samples = 0;
    int discarded = 0;          // branch jumps
    double invariance_defect = 0.0;  // sl_n_ball: max relative deviation
    double exponent = 0.0;           // column_scale: fitted homogeneity exponent
    double exponent_stderr = 0.0;
};

struct ProbeOptions {
    int samples = 32;
    int column = 1;           // 1-based, column_scale only
    double ball_radius = 0.05;
    double scale_spread = 0.1;  // c in [1 - spread, 1 + spread]
    double tolerance = 1e-7;    // discontinuities above 10x this are branch jumps
};

/// Measures the invariance defect under random SL_n elements near the
/// identity, or fits the homogeneity exponent under scalings of one column.
GroupProbeReport random_group_probe(const MatrixFunction& f, const ParameterMatrix& z,
                                    ProbeKind kind, uint64_t seed,
                                    const ProbeOptions& opts = {});

}  // namespace patlas
