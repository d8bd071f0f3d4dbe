#include "patlas/cubic_periods.hpp"

#include <algorithm>
#include <cmath>

#include "patlas/aronhold.hpp"
#include "patlas/error.hpp"

namespace patlas {

namespace {

cplx cube_root_principal(cplx v) {
    if (v == cplx(0.0)) return 0.0;
    return std::exp(std::log(v) / 3.0);
}

const cplx kOmega = std::polar(1.0, 2.0 * M_PI / 3.0);

cplx sextic_value(cplx l, cplx J) {
    cplx c4 = 27.0 * J + 6.0;
    cplx c3 = -54.0 * J - 7.0;
    // Horner in l.
    return ((((((l - 3.0) * l + c4) * l + c3) * l + c4) * l - 3.0) * l + 1.0);
}

double sextic_scale(cplx l, cplx J) {
    double al = std::abs(l);
    double c4 = std::abs(27.0 * J + 6.0);
    double c3 = std::abs(54.0 * J + 7.0);
    double p = 1.0, scale = 0.0;
    const double coeffs[7] = {1.0, 3.0, c4, c3, c4, 3.0, 1.0};
    for (int k = 0; k <= 6; ++k) {
        scale += coeffs[6 - k] * p;
        p *= al;
    }
    return std::max(scale, 1.0);
}

cplx sextic_derivative(cplx l, cplx J) {
    cplx c4 = 27.0 * J + 6.0;
    cplx c3 = -54.0 * J - 7.0;
    return ((((6.0 * l - 15.0) * l + 4.0 * c4) * l + 3.0 * c3) * l + 2.0 * c4) * l - 3.0;
}

cplx polish_on_sextic(cplx l, cplx J) {
    for (int it = 0; it < 4; ++it) {
        cplx f = sextic_value(l, J);
        cplx fp = sextic_derivative(l, J);
        if (std::abs(fp) < 1e-12 * std::max(1.0, std::abs(f))) break;
        cplx step = f / fp;
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
        l -= step;
    }
    return l;
}

}  // namespace

double sextic_residual(cplx lambda, cplx J) {
    return std::abs(sextic_value(lambda, J)) / sextic_scale(lambda, J);
}

LambdaBranchSet lambda_branches(cplx J, double collision_tol) {
    if (!std::isfinite(J.real()) || !std::isfinite(J.imag()))
        throw domain_error("bad_argument", "J must be finite");
    double aj = std::abs(J);
    double acoll = std::abs(4.0 * J + 1.0);
    // Exactly at a collision the radicals still evaluate (the branch set just
    // degenerates); in a small punctured neighborhood they are ill
    // conditioned, so those inputs are refused.
    if ((aj > 0.0 && aj < collision_tol) || (acoll > 0.0 && acoll < collision_tol))
        throw domain_error("branch_collision",
                           "J is too close to a branch-collision value (0 or -1/4)");

    // alpha^3 + (3 + 27 J) alpha^2 + 3 alpha + 1 = 0, from
    // (alpha + 1)^3 = -27 J alpha^2.
    const cplx b = 3.0 + 27.0 * J;
    const cplx p = (3.0 * 3.0 - b * b) / 3.0;                    // a = 1, c = 3
    const cplx q = (2.0 * b * b * b - 9.0 * b * 3.0 + 27.0) / 27.0;  // d = 1
    const cplx s = std::sqrt(q * q / 4.0 + p * p * p / 27.0);

    LambdaBranchSet out;
    auto push_candidate = [&](cplx lambda, int dsign, int k, int qsign) {
        lambda = polish_on_sextic(lambda, J);
        if (sextic_residual(lambda, J) > 1e-9) return;
        for (const auto& have : out.branches)
            if (std::abs(have.lambda - lambda) <= 1e-10 * std::max(1.0, std::abs(lambda))) return;
        out.branches.push_back({lambda, dsign, k, qsign});
    };

    for (int dsign : {+1, -1}) {
        cplx u3 = -q / 2.0 + static_cast<double>(dsign) * s;
        cplx u0 = cube_root_principal(u3);
        for (int k = 0; k < 3; ++k) {
            cplx u = u0;
            for (int t = 0; t < k; ++t) u *= kOmega;
            cplx v;
            if (std::abs(u) > 1e-150) {
                v = -p / (3.0 * u);
            } else {
                v = cube_root_principal(-q / 2.0 - static_cast<double>(dsign) * s);
            }
            cplx alpha = u + v - b / 3.0;
            cplx root = std::sqrt(1.0 + 4.0 * alpha);
            for (int qsign : {+1, -1})
                push_candidate((1.0 + static_cast<double>(qsign) * root) / 2.0, dsign, k, qsign);
        }
    }

    if (out.branches.empty())
        throw internal_error("lambda_branch_failure", "no radical candidate satisfied the sextic");
    return out;
}

double prefactor_relation_residual(cplx P, cplx S, cplx T) {
    cplx p4 = P * P * P * P;
    cplx p8 = p4 * p4;
    cplx p12 = p8 * p4;
    cplx D = T * T - 4.0 * S * S * S;
    cplx val = D * p12 + 27.0 * S * S * p8 - 54.0 * S * p4 + 27.0;
    double scale = std::abs(D) * std::abs(p12) + 27.0 * std::abs(S) * std::abs(S) * std::abs(p8) +
                   54.0 * std::abs(S) * std::abs(p4) + 27.0;
    return std::abs(val) / std::max(scale, 1e-300);
}

std::vector<BranchedValue> prefactor_branches(cplx S, cplx T) {
    cplx s3 = S * S * S;
    cplx D = T * T - 4.0 * s3;
    double dscale = std::abs(T) * std::abs(T) + 4.0 * std::abs(s3);
    if (std::abs(D) <= 1e-12 * std::max(dscale, 1e-300))
        throw domain_error("degenerate_discriminant",
                           "T^2 - 4S^3 vanishes; prefactor is undefined for singular cubics");
    if (std::abs(S) == 0.0)
        throw domain_error("branch_collision", "S = 0 pins J = 0, a branch-collision point");

    cplx J = s3 / D;
    LambdaBranchSet lset = lambda_branches(J);
    // The distinguished branch is the one the series evaluation uses: the
    // Legendre parameter of smallest modulus.
    const LambdaBranch* best = &lset.branches.front();
    for (const auto& br : lset.branches)
        if (std::abs(br.lambda) < std::abs(best->lambda) - 1e-15) best = &br;

    cplx w = (best->lambda * best->lambda - best->lambda + 1.0) / S;
    cplx P0 = std::exp(std::log(w) / 4.0);

    std::vector<BranchedValue> out;
    const cplx i_unit(0.0, 1.0);
    for (int k = 0; k < 4; ++k) {
        cplx P = P0;
        for (int t = 0; t < k; ++t) P *= i_unit;
        if (prefactor_relation_residual(P, S, T) > 1e-8) continue;
        BranchedValue bv;
        bv.value = P;
        bv.branch_log.emplace_back("lambda_discriminant_sign", best->discriminant_sign);
        bv.branch_log.emplace_back("lambda_cube_branch", best->cube_branch);
        bv.branch_log.emplace_back("lambda_quadratic_sign", best->quadratic_sign);
        bv.branch_log.emplace_back("quartic_root", k);
        out.push_back(std::move(bv));
    }
    if (out.empty())
        throw internal_error("prefactor_radical_inconsistency",
                             "no prefactor candidate satisfies the degree-12 relation");
    return out;
}

SeriesResult gauss_2f1_series(cplx lambda, const SeriesConfig& cfg) {
    return series_phi(CrossRatioGrid(2, {lambda}), cfg);
}

std::vector<CubicPeriodBranch> cubic_period(const TernaryCubic& c, const SeriesConfig& cfg) {
    if (c.all_zero()) throw domain_error("zero_cubic", "all cubic coefficients vanish");
    STJ stj = eval_stj(c);
    LambdaBranchSet lset = lambda_branches(stj.J);
    std::vector<BranchedValue> prefs = prefactor_branches(stj.S, stj.T);

    std::vector<CubicPeriodBranch> out;
    for (const auto& lb : lset.branches) {
        if (std::abs(lb.lambda) >= cfg.domain_radius) continue;
        SeriesResult phi = gauss_2f1_series(lb.lambda, cfg);
        for (const auto& pv : prefs) {
            CubicPeriodBranch br;
            br.value.value = pv.value * phi.value;
            br.value.branch_log = pv.branch_log;
            br.value.branch_log.emplace_back("series_lambda_discriminant_sign", lb.discriminant_sign);
            br.value.branch_log.emplace_back("series_lambda_cube_branch", lb.cube_branch);
            br.value.branch_log.emplace_back("series_lambda_quadratic_sign", lb.quadratic_sign);
            br.lambda = lb.lambda;
            br.prefactor = pv.value;
            br.tail_bound = std::abs(pv.value) * phi.tail_bound;
            out.push_back(std::move(br));
        }
    }
    if (out.empty())
        throw domain_error("all_branches_outside_domain",
                           "no Legendre branch lies inside the configured series polydisk");
    return out;
}

}  // namespace patlas
