#include "patlas/oracles.hpp"

#include <cmath>
#include <sstream>

#include "patlas/error.hpp"
#include "patlas/rng.hpp"

namespace patlas {

cplx agm(cplx a, cplx b) {
    if (a == cplx(0.0) || b == cplx(0.0))
        throw domain_error("bad_argument", "agm needs nonzero arguments");
    for (int it = 0; it < 64; ++it) {
        cplx am = (a + b) / 2.0;
        cplx gm = std::sqrt(a * b);
        a = am;
        b = gm;
        if (std::abs(a - b) <= 1e-15 * std::abs(a)) return (a + b) / 2.0;
    }
    throw domain_error("agm_no_convergence", "agm did not reach its fixpoint in 64 iterations");
}

QuadratureResult tanh_sinh(const std::function<double(double, double, double)>& g, double a,
                           double b, int max_level, double target) {
    const double half = (b - a) / 2.0;
    const double pi_half = M_PI / 2.0;

    auto level_sum = [&](double h, int& nodes) {
        // Node k contributes w(kh) g(x(kh)); delta is the distance to the
        // nearer endpoint computed without cancellation.
        double sum = 0.0;
        nodes = 0;
        for (int k = 0;; ++k) {
            double t = k * h;
            double u = pi_half * std::sinh(t);
            double cosh_u = std::cosh(u);
            double w = pi_half * std::cosh(t) / (cosh_u * cosh_u);
            if (w < 1e-280 && k > 2) break;
            double delta = 1.0 / (std::exp(2.0 * u) + 1.0);  // (1 - tanh u)/2
            double dist_b = (b - a) * delta;
            double dist_a = (b - a) - dist_b;
            double contrib = w * g(a + dist_a, dist_a, dist_b);
            if (k > 0) {
                // mirror node -t
                double dist_a2 = dist_b;
                double dist_b2 = dist_a;
                contrib += w * g(a + dist_a2, dist_a2, dist_b2);
            }
            sum += contrib;
            nodes += k == 0 ? 1 : 2;
            if (t > 6.5) break;
        }
        return half * h * sum;
    };

    QuadratureResult out;
    double prev = 0.0;
    int total_nodes = 0;
    for (int level = 2; level <= max_level; ++level) {
        double h = std::pow(2.0, 1 - level);
        int nodes = 0;
        double cur = level_sum(h, nodes);
        total_nodes += nodes;
        if (level > 2) {
            out.error_estimate = std::abs(cur - prev);
            if (out.error_estimate <= target * std::max(1.0, std::abs(cur))) {
                out.value = cur;
                out.node_count = total_nodes;
                return out;
            }
        }
        prev = cur;
        out.value = cur;
    }
    out.node_count = total_nodes;
    return out;
}

QuadratureResult legendre_period_quadrature(double lambda) {
    if (!(lambda > 0.0 && lambda < 1.0))
        throw domain_error("bad_argument", "legendre_period_quadrature needs lambda in (0, 1)");
    // Integrand on (0, lambda): x(x-1)(x-lambda) = x (1-x) (lambda-x) > 0.
    auto g = [lambda](double x, double dist0, double dist_lam) {
        return 1.0 / std::sqrt(dist0 * (1.0 - x) * dist_lam);
    };
    return tanh_sinh(g, 0.0, lambda);
}

namespace {

std::string serialize_point(const ParameterMatrix& z) {
    std::ostringstream os;
    os.precision(17);
    os << "{\"n\":" << z.n() << ",\"entries\":[";
    for (size_t k = 0; k < z.entries().size(); ++k) {
        if (k) os << ",";
        os << "[" << z.entries()[k].real() << "," << z.entries()[k].imag() << "]";
    }
    os << "]}";
    return os.str();
}

ParameterMatrix perturbed(const ParameterMatrix& z, int r, int c, double h) {
    ParameterMatrix out = z;
    out.at(r, c) += h;
    return out;
}

ParameterMatrix perturbed2(const ParameterMatrix& z, int r1, int c1, double h1, int r2, int c2,
                           double h2) {
    ParameterMatrix out = z;
    out.at(r1, c1) += h1;
    out.at(r2, c2) += h2;
    return out;
}

}  // namespace

std::vector<OperatorResidualReport> check_annihilators(const MatrixFunction& f,
                                                       const ParameterMatrix& z,
                                                       double first_order_h, double second_order_h) {
    const int n = z.n();
    const int cols = 2 * n;
    const std::string point = serialize_point(z);
    std::vector<OperatorResidualReport> reports;

    cplx f0;
    try {
        f0 = f(z);
    } catch (const std::exception& e) {
        OperatorResidualReport rep;
        rep.operator_id = "base_point";
        rep.test_point = point;
        rep.error = e.what();
        return {rep};
    }
    const double scale = std::abs(f0);

    auto first_derivative = [&](int r, int c) {
        cplx fp = f(perturbed(z, r, c, first_order_h));
        cplx fm = f(perturbed(z, r, c, -first_order_h));
        return (fp - fm) / (2.0 * first_order_h);
    };
    auto mixed_derivative = [&](int r1, int c1, int r2, int c2) {
        const double h = second_order_h;
        cplx fpp = f(perturbed2(z, r1, c1, h, r2, c2, h));
        cplx fpm = f(perturbed2(z, r1, c1, h, r2, c2, -h));
        cplx fmp = f(perturbed2(z, r1, c1, -h, r2, c2, h));
        cplx fmm = f(perturbed2(z, r1, c1, -h, r2, c2, -h));
        return (fpp - fpm - fmp + fmm) / (4.0 * h * h);
    };

    auto emit = [&](const std::string& id, const std::function<cplx()>& op) {
        OperatorResidualReport rep;
        rep.operator_id = id;
        rep.test_point = point;
        rep.scale = scale;
        try {
            rep.residual = std::abs(op());
            rep.relative = rep.residual / std::max(scale, 1e-300);
        } catch (const std::exception& e) {
            rep.error = e.what();
        }
        reports.push_back(std::move(rep));
    };

    // Cache of first derivatives, filled on demand.
    std::vector<cplx> d1(static_cast<size_t>(n * cols));
    std::vector<bool> d1_ok(static_cast<size_t>(n * cols), false);
    auto d1_at = [&](int r, int c) {
        size_t k = static_cast<size_t>(r * cols + c);
        if (!d1_ok[k]) {
            d1[k] = first_derivative(r, c);
            d1_ok[k] = true;
        }
        return d1[k];
    };

    // Second-order operators d_ip d_jq - d_iq d_jp, 0-based rows i<j, cols p<q.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int p = 0; p < cols; ++p)
                for (int q = p + 1; q < cols; ++q) {
                    std::ostringstream id;
                    id << "gkz(" << i + 1 << "," << j + 1 << ";" << p + 1 << "," << q + 1 << ")";
                    emit(id.str(), [&] {
                        return mixed_derivative(i, p, j, q) - mixed_derivative(i, q, j, p);
                    });
                }

    // First-order invariance operators sum_j z_ij d_mj + delta_im.
    for (int i = 0; i < n; ++i)
        for (int m = 0; m < n; ++m) {
            std::ostringstream id;
            id << "invariance(" << i + 1 << "," << m + 1 << ")";
            emit(id.str(), [&] {
                cplx acc = i == m ? f0 : cplx(0.0);
                for (int j = 0; j < cols; ++j) acc += z.at(i, j) * d1_at(m, j);
                return acc;
            });
        }

    // Euler operators sum_i z_ij d_ij + 1/2 per column.
    for (int j = 0; j < cols; ++j) {
        std::ostringstream id;
        id << "euler(" << j + 1 << ")";
        emit(id.str(), [&] {
            cplx acc = 0.5 * f0;
            for (int i = 0; i < n; ++i) acc += z.at(i, j) * d1_at(i, j);
            return acc;
        });
    }

    return reports;
}

GroupProbeReport random_group_probe(const MatrixFunction& f, const ParameterMatrix& z,
                                    ProbeKind kind, uint64_t seed, const ProbeOptions& opts) {
    Rng rng(seed);
    GroupProbeReport rep;
    rep.kind = kind;
    const int n = z.n();
    cplx f0 = f(z);
    double af0 = std::abs(f0);
    if (af0 == 0.0) throw domain_error("bad_argument", "probe needs f(z) != 0");

    if (kind == ProbeKind::sl_n_ball) {
        double worst = 0.0;
        for (int s = 0; s < opts.samples; ++s) {
            // g = (I + E) / det^{1/n}, E small: det renormalized to one.
            std::vector<cplx> g(static_cast<size_t>(n * n), 0.0);
            for (int i = 0; i < n; ++i) g[static_cast<size_t>(i * n + i)] = 1.0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    g[static_cast<size_t>(i * n + j)] += rng.complex_in_disk(opts.ball_radius / n);
            // determinant by LU on a copy
            std::vector<cplx> lu = g;
            cplx det = 1.0;
            for (int k = 0; k < n; ++k) {
                int piv = k;
                for (int r = k + 1; r < n; ++r)
                    if (std::abs(lu[static_cast<size_t>(r * n + k)]) > std::abs(lu[static_cast<size_t>(piv * n + k)])) piv = r;
                if (piv != k) {
                    for (int c2 = 0; c2 < n; ++c2) std::swap(lu[static_cast<size_t>(k * n + c2)], lu[static_cast<size_t>(piv * n + c2)]);
                    det = -det;
                }
                det *= lu[static_cast<size_t>(k * n + k)];
                for (int r = k + 1; r < n; ++r) {
                    cplx fac = lu[static_cast<size_t>(r * n + k)] / lu[static_cast<size_t>(k * n + k)];
                    for (int c2 = k; c2 < n; ++c2) lu[static_cast<size_t>(r * n + c2)] -= fac * lu[static_cast<size_t>(k * n + c2)];
                }
            }
            cplx root = std::exp(std::log(det) / static_cast<double>(n));
            for (auto& e : g) e /= root;

            double diff = std::abs(f(z.left_multiplied(g)) - f0) / af0;
            if (diff > 10.0 * opts.tolerance) {
                ++rep.discarded;
                continue;
            }
            worst = std::max(worst, diff);
            ++rep.samples;
        }
        rep.invariance_defect = worst;
        return rep;
    }

    // column_scale: fit log|f| against log c through the origin.
    double sxx = 0.0, sxy = 0.0;
    std::vector<std::pair<double, double>> pts;
    for (int s = 0; s < opts.samples; ++s) {
        double c = 1.0 + opts.scale_spread * (2.0 * rng.uniform() - 1.0);
        cplx fc = f(z.with_scaled_column(opts.column - 1, c));
        double x = std::log(c);
        double y = std::log(std::abs(fc) / af0);
        // A jump shows up as a wildly inconsistent local exponent.
        if (std::abs(x) > 1e-12 && std::abs(y / x) > 1e3) {
            ++rep.discarded;
            continue;
        }
        pts.emplace_back(x, y);
        sxx += x * x;
        sxy += x * y;
        ++rep.samples;
    }
    if (sxx == 0.0) throw domain_error("bad_argument", "column_scale probe collected no samples");
    rep.exponent = sxy / sxx;
    double ss = 0.0;
    for (auto [x, y] : pts) {
        double r = y - rep.exponent * x;
        ss += r * r;
    }
    if (rep.samples > 1) rep.exponent_stderr = std::sqrt(ss / (rep.samples - 1) / sxx);
    return rep;
}

}  // namespace patlas
