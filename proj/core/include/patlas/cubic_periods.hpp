#pragma once

#include <vector>

#include "patlas/double_cover.hpp"
#include "patlas/ternary_cubic.hpp"

namespace patlas {

/// One determination of the Legendre parameter of a cubic with a given
/// j-type invariant: which discriminant sign, which cube-root branch and
/// which quadratic sign produced it.
struct LambdaBranch {
    cplx lambda{};
    int discriminant_sign = 0;  // +-1, sign in front of sqrt(q^2/4 + p^3/27)
    int cube_branch = 0;        // 0, 1, 2
    int quadratic_sign = 0;     // +-1, sign in (1 +- sqrt(1 + 4 alpha))/2
};

struct LambdaBranchSet {
    std::vector<LambdaBranch> branches;  // deduplicated, deterministic order
};

/// All Legendre parameters with invariant J: the cubic in alpha = lambda
/// (lambda - 1) defined by J = (alpha+1)^3 / (-27 alpha^2) is solved by the
/// cubic formula over all cube branches, then lambda = (1 +- sqrt(1+4
/// alpha))/2. Every candidate is polished by Newton steps on the sextic
///   l^6 - 3l^5 + (27J+6)l^4 + (-54J-7)l^3 + (27J+6)l^2 - 3l + 1
/// and kept only when the residual is small. Generically six values; at the
/// collision points J = 0 and 4J+1 = 0 the set degenerates to three.
/// Near- (but not at-) collision inputs are rejected as unstable.
LambdaBranchSet lambda_branches(cplx J, double collision_tol = 1e-8);

/// Sextic residual at lambda for the given J, relative to the term scale.
double sextic_residual(cplx lambda, cplx J);

/// Prefactor determinations for a cubic with invariants (S, T). The quartic
/// power P^4 = (lambda*^2 - lambda* + 1)/S, where lambda* is the branch of
/// smallest modulus (the one inside the series domain), satisfies
///   (T^2-4S^3) P^12 + 27 S^2 P^8 - 54 S P^4 + 27 = 0;
/// the four quartic roots of that value are returned, each re-verified
/// against the degree-12 relation.
std::vector<BranchedValue> prefactor_branches(cplx S, cplx T);

/// Residual of the degree-12 prefactor relation at P, relative to term scale.
double prefactor_relation_residual(cplx P, cplx S, cplx T);

struct CubicPeriodBranch {
    BranchedValue value;
    cplx lambda{};
    cplx prefactor{};
    double tail_bound = 0.0;
};

/// Period determinations of a nonsingular plane cubic: one value per
/// (lambda branch inside the series domain) x (prefactor quartic root),
/// each P * 2F1(1/2,1/2;1;lambda) with full branch provenance.
std::vector<CubicPeriodBranch> cubic_period(const TernaryCubic& c, const SeriesConfig& cfg);

/// 2F1(1/2, 1/2; 1; lambda) via the n = 2 series (shared by the pipelines).
SeriesResult gauss_2f1_series(cplx lambda, const SeriesConfig& cfg);

}  // namespace patlas
