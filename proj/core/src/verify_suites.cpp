#include "patlas/verify_suites.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "patlas/aronhold.hpp"
#include "patlas/cubic_periods.hpp"
#include "patlas/double_cover.hpp"
#include "patlas/error.hpp"
#include "patlas/hyperseries.hpp"
#include "patlas/oracles.hpp"
#include "patlas/positive_closure.hpp"
#include "patlas/rng.hpp"
#include "patlas/univariate.hpp"

namespace patlas {

namespace {

CheckResult make_check(const std::string& name, bool pass, double measured, double bound,
                       const std::string& detail = "") {
    return {name, pass, measured, bound, detail};
}

cplx legendre_j(cplx lam) {
    cplx s = lam * lam - lam + 1.0;
    return s * s * s / (-27.0 * lam * lam * (lam - 1.0) * (lam - 1.0));
}

// Random lambda in the 0.8 disk, away from 0 and 1 and from the
// branch-collision loci, so every draw is a stable test point.
cplx draw_lambda(Rng& rng) {
    for (;;) {
        cplx lam = rng.complex_in_disk(0.8);
        if (std::abs(lam) < 0.1 || std::abs(lam - 1.0) < 0.1) continue;
        cplx J = legendre_j(lam);
        if (std::abs(J) < 1e-6 || std::abs(4.0 * J + 1.0) < 1e-6) continue;
        return lam;
    }
}

std::vector<cplx> random_sl(Rng& rng, int n, double radius) {
    std::vector<cplx> g(static_cast<size_t>(n * n), 0.0);
    for (int i = 0; i < n; ++i) g[static_cast<size_t>(i * n + i)] = 1.0;
    for (auto& e : g) e += rng.complex_in_disk(radius / n);
    // det via small LU
    std::vector<cplx> lu = g;
    cplx det = 1.0;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int r = k + 1; r < n; ++r)
            if (std::abs(lu[static_cast<size_t>(r * n + k)]) > std::abs(lu[static_cast<size_t>(piv * n + k)])) piv = r;
        if (piv != k) {
            for (int c = 0; c < n; ++c) std::swap(lu[static_cast<size_t>(k * n + c)], lu[static_cast<size_t>(piv * n + c)]);
            det = -det;
        }
        det *= lu[static_cast<size_t>(k * n + k)];
        for (int r = k + 1; r < n; ++r) {
            cplx f = lu[static_cast<size_t>(r * n + k)] / lu[static_cast<size_t>(k * n + k)];
            for (int c = k; c < n; ++c) lu[static_cast<size_t>(r * n + c)] -= f * lu[static_cast<size_t>(k * n + c)];
        }
    }
    cplx root = std::exp(std::log(det) / static_cast<double>(n));
    for (auto& e : g) e /= root;
    return g;
}

Mat3 random_sl3(Rng& rng, double radius) {
    auto flat = random_sl(rng, 3, radius);
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = flat[static_cast<size_t>(i * 3 + j)];
    return m;
}

// Generic test point: a canonical matrix with small random grid, moved off
// the slice by a random SL_n element and column scalings (cross-ratios stay
// inside the polydisk by invariance).
ParameterMatrix random_generic_point(Rng& rng, int n, double grid_radius) {
    for (;;) {
        std::vector<cplx> grid;
        for (int k = 0; k < (n - 1) * (n - 1); ++k) grid.push_back(rng.complex_in_disk(grid_radius));
        ParameterMatrix z = ParameterMatrix::canonical(n, grid);
        z = z.left_multiplied(random_sl(rng, n, 0.25));
        for (int j = 0; j < 2 * n; ++j)
            z = z.with_scaled_column(j, cplx(rng.uniform(0.85, 1.15), rng.uniform(-0.1, 0.1)));
        if (is_generic(z)) return z;
    }
}

TernaryCubic random_nonsingular_cubic(Rng& rng) {
    for (;;) {
        TernaryCubic c;
        for (auto& v : c.z) v = rng.complex_in_disk(1.0);
        try {
            STJ stj = eval_stj(c);
            if (std::abs(stj.J) < 1e-6 || std::abs(4.0 * stj.J + 1.0) < 1e-6) continue;
            return c;
        } catch (const Error&) {
            continue;
        }
    }
}

}  // namespace

std::vector<CheckResult> aronhold_checks() {
    std::vector<CheckResult> out;
    InvariantPair inv = derive_aronhold_invariants();  // throws unless both kernels are 1-dim

    out.push_back(make_check("aronhold.kernel_dimensions", true, 1.0, 1.0,
                             "degree-4 and degree-6 kernels are one-dimensional"));

    SparsePolynomial targetS(1), targetT(1);
    targetS.add_term(Monomial({2}), Rational(1));
    targetS.add_term(Monomial({1}), Rational(-1));
    targetS.add_term(Monomial({0}), Rational(1));
    targetT.add_term(Monomial({3}), Rational(2));
    targetT.add_term(Monomial({2}), Rational(-3));
    targetT.add_term(Monomial({1}), Rational(-3));
    targetT.add_term(Monomial({0}), Rational(2));
    bool restr_s = legendre_restriction(inv.S) == targetS;
    bool restr_t = legendre_restriction(inv.T) == targetT;
    out.push_back(make_check("aronhold.legendre_restrictions", restr_s && restr_t, 0.0, 0.0,
                             "S -> l^2-l+1 and T -> 2l^3-3l^2-3l+2, exact"));

    // (T^2 - 4 S^3) + 27 S^2 - 54 S + 27 restricts to the zero polynomial.
    SparsePolynomial rS = legendre_restriction(inv.S);
    SparsePolynomial rT = legendre_restriction(inv.T);
    SparsePolynomial one = SparsePolynomial::constant(1, Rational(1));
    SparsePolynomial relation = rT * rT - rS.pow(3).scaled(Rational(4)) +
                                rS.pow(2).scaled(Rational(27)) - rS.scaled(Rational(54)) +
                                one.scaled(Rational(27));
    out.push_back(make_check("aronhold.locus_relation", relation.is_zero(), 0.0, 0.0,
                             "(T^2-4S^3)+27S^2-54S+27 vanishes identically on the Legendre locus"));
    return out;
}

std::vector<CheckResult> sextic_checks(const RunConfig& cfg) {
    Rng rng(cfg.seed);
    double tol = cfg.tol("sextic");
    double worst_res = 0.0, worst_rec = 0.0;
    bool pass = true;
    for (int t = 0; t < 50; ++t) {
        cplx lam = draw_lambda(rng);
        cplx J = legendre_j(lam);
        worst_res = std::max(worst_res, sextic_residual(lam, J));
        LambdaBranchSet set = lambda_branches(J);
        double best = 1e300;
        for (const auto& br : set.branches) best = std::min(best, std::abs(br.lambda - lam));
        worst_rec = std::max(worst_rec, best);
        pass = pass && sextic_residual(lam, J) <= tol && best <= 1e-9;
    }
    return {make_check("sextic.residual", worst_res <= tol, worst_res, tol,
                       "50 random lambda in the 0.8 disk"),
            make_check("sextic.branch_recovery", worst_rec <= 1e-9 && pass, worst_rec, 1e-9,
                       "lambda is recovered among lambda_branches(J)")};
}

std::vector<CheckResult> prefactor_checks(const RunConfig& cfg) {
    Rng rng(cfg.seed + 1);
    double tol = cfg.tol("prefactor");
    double worst_rel = 0.0;
    for (int t = 0; t < 50; ++t) {
        TernaryCubic c = random_nonsingular_cubic(rng);
        STJ stj = eval_stj(c);
        for (const auto& bv : prefactor_branches(stj.S, stj.T))
            worst_rel = std::max(worst_rel, prefactor_relation_residual(bv.value, stj.S, stj.T));
    }
    double worst_p4 = 0.0;
    for (int t = 0; t < 10; ++t) {
        cplx lam(rng.uniform(0.1, 0.4), 0.0);
        STJ stj = eval_stj(TernaryCubic::legendre(lam));
        for (const auto& bv : prefactor_branches(stj.S, stj.T)) {
            cplx p4 = bv.value * bv.value * bv.value * bv.value;
            worst_p4 = std::max(worst_p4, std::abs(p4 - 1.0));
        }
    }
    return {make_check("prefactor.relation_residual", worst_rel <= tol, worst_rel, tol,
                       "all branches at 50 random nonsingular cubics"),
            make_check("prefactor.legendre_quartic_unit", worst_p4 <= tol, worst_p4, tol,
                       "P^4 = 1 on 10 Legendre cubics")};
}

std::vector<CheckResult> legendre_oracle_checks(const RunConfig& cfg) {
    SeriesConfig scfg;
    scfg.max_total_degree = std::max(cfg.max_degree, 60);
    scfg.domain_radius = 0.75;

    std::vector<double> lambdas = {0.1, 0.2, 0.3, 0.4, 0.5};
    std::vector<double> ratios;
    double worst_agm = 0.0;
    for (double lam : lambdas) {
        cplx series = gauss_2f1_series(cplx(lam, 0.0), scfg).value;
        cplx viaAgm = 1.0 / agm(cplx(1.0, 0.0), std::sqrt(cplx(1.0 - lam, 0.0)));
        worst_agm = std::max(worst_agm, std::abs(series - viaAgm) / std::abs(viaAgm));
        QuadratureResult q = legendre_period_quadrature(lam);
        ratios.push_back(std::abs(q.value / series));
    }
    double lo = *std::min_element(ratios.begin(), ratios.end());
    double hi = *std::max_element(ratios.begin(), ratios.end());
    double spread = (hi - lo) / lo;
    double rtol = cfg.tol("legendre_ratio");
    double atol = cfg.tol("agm_match");
    std::ostringstream detail;
    detail << "ratio quadrature/series at lambda in {0.1..0.5}, mean ~" << (lo + hi) / 2;
    return {make_check("legendre.ratio_constancy", spread <= rtol, spread, rtol, detail.str()),
            make_check("legendre.agm_match", worst_agm <= atol, worst_agm, atol,
                       "series vs 1/AGM(1, sqrt(1-lambda))")};
}

std::vector<CheckResult> annihilator_checks(const RunConfig& cfg) {
    Rng rng(cfg.seed + 2);
    double tol1 = cfg.tol("first_order");
    double tol2 = cfg.tol("second_order");
    double worst1 = 0.0, worst2 = 0.0;
    int failures = 0;
    for (int n : {2, 3}) {
        SeriesConfig scfg;
        scfg.max_total_degree = n == 2 ? 48 : 26;
        scfg.domain_radius = 0.5;
        MatrixFunction f = [&scfg](const ParameterMatrix& z) {
            return period(z, scfg).value.value;
        };
        for (int t = 0; t < 10; ++t) {
            ParameterMatrix z = random_generic_point(rng, n, 0.18);
            for (const auto& rep : check_annihilators(f, z)) {
                if (!rep.error.empty()) {
                    ++failures;
                    continue;
                }
                if (rep.operator_id.rfind("gkz", 0) == 0)
                    worst2 = std::max(worst2, rep.relative);
                else
                    worst1 = std::max(worst1, rep.relative);
            }
        }
    }
    return {make_check("operators.first_order", worst1 <= tol1 && failures == 0, worst1, tol1,
                       "invariance and Euler residuals at 20 generic points (n = 2, 3)"),
            make_check("operators.second_order", worst2 <= tol2 && failures == 0, worst2, tol2,
                       "Aomoto-Gelfand residuals at the same points")};
}

std::vector<CheckResult> invariance_checks(const RunConfig& cfg) {
    Rng rng(cfg.seed + 3);
    double tol_exp = cfg.tol("column_exponent");
    double tol_ball = cfg.tol("sl_ball");
    double tol_cr = cfg.tol("cross_ratio");

    double worst_exp = 0.0, worst_ball = 0.0, worst_cr = 0.0;
    for (int n : {2, 3}) {
        SeriesConfig scfg;
        scfg.max_total_degree = n == 2 ? 48 : 26;
        MatrixFunction f = [&scfg](const ParameterMatrix& z) {
            return period(z, scfg).value.value;
        };
        ParameterMatrix z = random_generic_point(rng, n, 0.15);

        ProbeOptions copt;
        copt.column = 2 * n;  // scale the last column
        GroupProbeReport cs = random_group_probe(f, z, ProbeKind::column_scale, cfg.seed + 11, copt);
        worst_exp = std::max(worst_exp, std::abs(cs.exponent - (-0.5)));

        ProbeOptions bopt;
        bopt.tolerance = tol_ball;
        GroupProbeReport ball = random_group_probe(f, z, ProbeKind::sl_n_ball, cfg.seed + 12, bopt);
        worst_ball = std::max(worst_ball, ball.invariance_defect);

        MatrixFunction cr = [n](const ParameterMatrix& zz) {
            return cross_ratios(zz).at(2, n + 2);
        };
        ProbeOptions cropt;
        cropt.tolerance = tol_cr;
        GroupProbeReport crball = random_group_probe(cr, z, ProbeKind::sl_n_ball, cfg.seed + 13, cropt);
        GroupProbeReport crcol = random_group_probe(cr, z, ProbeKind::column_scale, cfg.seed + 14, cropt);
        worst_cr = std::max({worst_cr, crball.invariance_defect, std::abs(crcol.exponent)});
    }
    return {make_check("invariance.column_exponent", worst_exp <= tol_exp, worst_exp, tol_exp,
                       "fitted homogeneity exponent vs -1/2"),
            make_check("invariance.sl_ball_defect", worst_ball <= tol_ball, worst_ball, tol_ball,
                       "period under SL_n elements within 0.05 of the identity"),
            make_check("invariance.cross_ratio_defect", worst_cr <= tol_cr, worst_cr, tol_cr,
                       "cross-ratios under both group factors")};
}

std::vector<CheckResult> k3_coefficient_checks() {
    // Independent evaluation of the closed Gamma-quotient form, using only
    // its own rising-product recurrences.
    auto gamma_form = [](const MultiIndex& l) {
        auto rise = [](const Rational& a, int k) {
            Rational acc(1), term = a;
            for (int t = 0; t < k; ++t) {
                acc *= term;
                term += Rational(1);
            }
            return acc;
        };
        auto factorial = [](int k) {
            Rational acc(1);
            for (int t = 2; t <= k; ++t) acc *= Rational(t);
            return acc;
        };
        const Rational half(1, 2), three_half(3, 2);
        Rational num = rise(half, l.at(2, 5) + l.at(3, 5)) * rise(half, l.at(2, 6) + l.at(3, 6)) *
                       rise(half, l.at(2, 5) + l.at(2, 6)) * rise(half, l.at(3, 5) + l.at(3, 6));
        Rational den = rise(three_half, l.total_degree()) * factorial(l.at(2, 5)) *
                       factorial(l.at(3, 5)) * factorial(l.at(2, 6)) * factorial(l.at(3, 6));
        return num / den;
    };

    int count = 0, mismatches = 0;
    for (int d = 0; d <= 4; ++d)
        for (const auto& l : multi_indices_of_degree(3, d)) {
            ++count;
            if (coefficient_A(l) != gamma_form(l)) ++mismatches;
        }
    std::ostringstream detail;
    detail << count << " multi-indices of total degree <= 4, exact rational comparison";
    return {make_check("k3.coefficient_gamma_form", mismatches == 0,
                       static_cast<double>(mismatches), 0.0, detail.str())};
}

std::vector<CheckResult> cubic_pipeline_checks(const RunConfig& cfg) {
    Rng rng(cfg.seed + 4);
    SeriesConfig scfg;
    scfg.max_total_degree = std::max(cfg.max_degree, 48);

    double worst_match = 0.0;
    for (int t = 0; t < 10; ++t) {
        double lam0 = rng.uniform(0.1, 0.4);
        TernaryCubic c = TernaryCubic::legendre(cplx(lam0, 0.0));
        Mat3 g = random_sl3(rng, 0.5);
        TernaryCubic moved = substitute_linear(c, inverse3(g));
        cplx ref = 1.0 / agm(cplx(1.0, 0.0), std::sqrt(cplx(1.0 - lam0, 0.0)));
        double best = 1e300;
        for (const auto& br : cubic_period(moved, scfg)) {
            cplx zeta = br.value.value / ref;
            cplx z4 = zeta * zeta * zeta * zeta;
            double dist = std::abs(z4 - 1.0);
            best = std::min(best, dist);
        }
        worst_match = std::max(worst_match, best);
    }

    // Coefficient scaling by c multiplies every branch value by 1/c.
    double worst_scale = 0.0;
    {
        TernaryCubic c = TernaryCubic::legendre(cplx(0.23, 0.0));
        double factor = 1.1;
        auto base = cubic_period(c, scfg);
        auto scaled = cubic_period(c.scaled(factor), scfg);
        for (const auto& sb : scaled) {
            double best = 1e300;
            for (const auto& bb : base)
                best = std::min(best,
                                std::abs(sb.value.value - bb.value.value / factor) /
                                    std::abs(bb.value.value / factor));
            worst_scale = std::max(worst_scale, best);
        }
    }
    return {make_check("cubic.branch_matches_2f1", worst_match <= 1e-7, worst_match, 1e-7,
                       "10 SL3-moved Legendre cubics: some branch is a 4th root of unity times "
                       "2F1(1/2,1/2;1;lambda0)"),
            make_check("cubic.homogeneity", worst_scale <= 1e-9, worst_scale, 1e-9,
                       "coefficient scaling by 1.1 divides every branch value by 1.1")};
}

std::vector<CheckResult> positive_closure_checks(const RunConfig& cfg) {
    std::vector<CheckResult> out;

    // The three fixtures over Q[x].
    SparsePolynomial x = SparsePolynomial::variable(2, 0);
    SparsePolynomial y = SparsePolynomial::variable(2, 1);
    SparsePolynomial one = SparsePolynomial::constant(2, Rational(1));

    AlgebraicElement quad((x + one) * y * y - x * y + one);
    AlgebraicElement sum((x + one) * y - x);
    AlgebraicElement sqrt_x(y * y - x);

    PcVerdict v1 = is_positively_closed(quad);
    PcVerdict v2 = is_positively_closed(sum);
    PcVerdict v3 = is_positively_closed(sqrt_x);
    bool fixture_pass = v1.positively_closed && !v2.positively_closed && v3.positively_closed;
    std::string cert = v2.witness ? v2.witness->to_string({"x", "y"}) : "(none)";
    bool cert_pass = v2.witness && *v2.witness == (x + one);
    out.push_back(make_check("pc.fixtures", fixture_pass && cert_pass,
                             fixture_pass && cert_pass ? 0.0 : 1.0, 0.0,
                             "quadratic roots in, linear sum out with certificate " + cert +
                                 ", unit leading coefficient in"));

    // Randomized consistency between the geometric verdict and the
    // polynomial divisibility criterion on consequences q * m.
    Rng rng(cfg.seed + 5);
    auto random_poly = [&rng](int dx, int dy, int lo, int hi) {
        SparsePolynomial p(2);
        for (int i = 0; i <= dx; ++i)
            for (int j = 0; j <= dy; ++j) {
                long c = static_cast<long>(std::floor(rng.uniform(lo, hi + 1)));
                if (c != 0) p.add_term(Monomial({i, j}), Rational(c));
            }
        return p;
    };

    int instances = 0, disagreements = 0;
    while (instances < 200) {
        SparsePolynomial m = random_poly(3, 3, -4, 4);
        if (m.is_zero() || m.degree_in(1) < 1) continue;
        AlgebraicElement elem(m);
        if (!elem.probably_irreducible()) continue;
        ++instances;
        PcVerdict geo = is_positively_closed(elem);

        bool brute = true;
        for (int s = 0; s < 30 && brute; ++s) {
            SparsePolynomial q = s == 0 ? SparsePolynomial::constant(2, Rational(1))
                                        : random_poly(2, 2, -3, 3);
            if (q.is_zero()) continue;
            SparsePolynomial f = q * elem.minpoly();
            auto coeffs = coefficients_in(f, 1);
            SparsePolynomial g(2);
            for (size_t k = 1; k < coeffs.size(); ++k) {
                if (coeffs[k].is_zero()) continue;
                g = gcd_univariate(g, coeffs[k]);
            }
            if (g.is_zero() || g.is_constant()) continue;
            const SparsePolynomial& r0 = coeffs[0];
            if (!(r0.is_zero() || r0.divide_exact(g))) brute = false;
        }
        if (brute != geo.positively_closed) ++disagreements;
    }
    out.push_back(make_check("pc.lemma_crosscheck", disagreements == 0,
                             static_cast<double>(disagreements), 0.0,
                             "200 random minimal polynomials, 30 consequences each"));

    // The counterexample chain: two positively closed conjugates whose sum
    // is rejected, with the expected minimal polynomial.
    AlgebraicElement chain = minpoly_of_sum(quad, quad, SumKind::distinct_conjugates);
    PcVerdict vc = is_positively_closed(chain);
    bool chain_pass = chain.minpoly() == ((x + one) * y - x) && !vc.positively_closed;
    out.push_back(make_check("pc.sum_chain", chain_pass, chain_pass ? 0.0 : 1.0, 0.0,
                             "minpoly of the conjugate sum is (x+1)y - x and fails membership"));
    return out;
}

std::vector<std::string> available_suites() {
    return {"legendre", "k3", "cubic", "operators", "aronhold", "pc", "all"};
}

SuiteReport run_suite(const std::string& name, const RunConfig& cfg) {
    SuiteReport rep;
    rep.suite = name;
    auto extend = [&rep](std::vector<CheckResult> more) {
        for (auto& c : more) rep.checks.push_back(std::move(c));
    };
    if (name == "legendre") {
        extend(legendre_oracle_checks(cfg));
    } else if (name == "k3") {
        extend(k3_coefficient_checks());
    } else if (name == "cubic") {
        extend(sextic_checks(cfg));
        extend(prefactor_checks(cfg));
        extend(cubic_pipeline_checks(cfg));
    } else if (name == "operators") {
        extend(annihilator_checks(cfg));
        extend(invariance_checks(cfg));
    } else if (name == "aronhold") {
        extend(aronhold_checks());
    } else if (name == "pc") {
        extend(positive_closure_checks(cfg));
    } else if (name == "all") {
        extend(aronhold_checks());
        extend(sextic_checks(cfg));
        extend(prefactor_checks(cfg));
        extend(legendre_oracle_checks(cfg));
        extend(annihilator_checks(cfg));
        extend(invariance_checks(cfg));
        extend(k3_coefficient_checks());
        extend(cubic_pipeline_checks(cfg));
        extend(positive_closure_checks(cfg));
    } else {
        throw domain_error("unknown_suite", "unknown verification suite '" + name + "'");
    }
    rep.pass = true;
    for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
    return rep;
}

}  // namespace patlas
