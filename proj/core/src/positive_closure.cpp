#include "patlas/positive_closure.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>

#include "patlas/error.hpp"
#include "patlas/univariate.hpp"

namespace patlas {

namespace {

constexpr int kX = 0;
constexpr int kY = 1;

SparsePolynomial normalize_minpoly(SparsePolynomial m) {
    if (m.arity() != 2)
        throw domain_error("unsupported_base_ring",
                           "algebraic elements are presented over Q[x], ring {x, y}");
    if (m.is_zero() || m.degree_in(kY) < 1)
        throw domain_error("bad_minpoly", "minimal polynomial must have positive degree in y");
    m = m.primitive_part();
    // Positive leading coefficient in the y-view pins the presentation.
    auto coeffs = coefficients_in(m, kY);
    const SparsePolynomial& lead = coeffs.back();
    if (lead.leading_term().second.sign() < 0) m = -m;
    return m;
}

// --- small exact helpers over Q ------------------------------------------

std::vector<long> divisors_of(const Rational& r) {
    // r is a nonzero integer in disguise; trial division, desk scale only.
    if (r.denominator_string() != "1")
        throw internal_error("not_integer", "divisor enumeration needs an integer");
    double approx = std::abs(r.to_double());
    if (approx > 1e12)
        throw domain_error("factorization_too_large", "integer too large for trial division");
    long v = std::llabs(std::stol(r.numerator_string()));
    std::vector<long> out;
    for (long d = 1; d * d <= v; ++d)
        if (v % d == 0) {
            out.push_back(d);
            if (d != v / d) out.push_back(v / d);
        }
    std::sort(out.begin(), out.end());
    return out;
}

// Rational roots of a nonzero univariate integer polynomial (any single
// variable of its ring). Returns the roots, each exactly verified.
std::vector<Rational> rational_roots(const SparsePolynomial& p) {
    int var = sole_variable(p);
    std::vector<Rational> roots;
    if (var < 0) return roots;
    SparsePolynomial q = p.primitive_part();
    auto coeffs = coefficients_in(q, var);
    // Strip powers of the variable itself.
    size_t low = 0;
    while (low < coeffs.size() && coeffs[low].is_zero()) ++low;
    if (low > 0) roots.push_back(Rational(0));
    Rational a0 = coeffs[low].constant_value();
    Rational an = coeffs.back().constant_value();
    for (long u : divisors_of(a0))
        for (long v : divisors_of(an))
            for (int sign : {+1, -1}) {
                Rational cand(sign * u, v);
                bool seen = false;
                for (const auto& r : roots) seen = seen || r == cand;
                if (seen) continue;
                std::vector<Rational> point(2, Rational(0));
                point[static_cast<size_t>(var)] = cand;
                point.resize(static_cast<size_t>(p.arity()), Rational(0));
                if (q.eval_rational(point).is_zero()) roots.push_back(cand);
            }
    return roots;
}

// Lagrange interpolation through integer nodes with rational values, in the
// given variable of an arity-`arity` ring.
SparsePolynomial lagrange(const std::vector<long>& nodes, const std::vector<Rational>& values,
                          int var, int arity) {
    SparsePolynomial acc(arity);
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (values[i].is_zero()) continue;
        SparsePolynomial term = SparsePolynomial::constant(arity, values[i]);
        for (size_t j = 0; j < nodes.size(); ++j) {
            if (j == i) continue;
            SparsePolynomial lin = SparsePolynomial::variable(arity, var);
            lin += SparsePolynomial::constant(arity, Rational(-nodes[j]));
            term = term * lin.scaled(Rational(1, nodes[i] - nodes[j]));
        }
        acc += term;
    }
    return acc;
}

// --- numeric root machinery ----------------------------------------------

using cd = std::complex<double>;

// Durand-Kerner, warm-startable. Coefficients ascending by degree.
std::vector<cd> all_roots(const std::vector<cd>& coeffs, const std::vector<cd>* warm = nullptr) {
    int deg = static_cast<int>(coeffs.size()) - 1;
    while (deg > 0 && std::abs(coeffs[static_cast<size_t>(deg)]) == 0.0) --deg;
    if (deg <= 0) return {};
    if (deg == 1) return {-coeffs[0] / coeffs[1]};
    std::vector<cd> monic(coeffs.begin(), coeffs.begin() + deg + 1);
    for (auto& c : monic) c /= monic[static_cast<size_t>(deg)];
    double radius = 1.0;
    for (int k = 0; k < deg; ++k) radius = std::max(radius, std::abs(monic[static_cast<size_t>(k)]));
    std::vector<cd> r(static_cast<size_t>(deg));
    if (warm && static_cast<int>(warm->size()) == deg) {
        r = *warm;
    } else {
        cd seed(0.4, 0.9);
        cd acc = 1.0;
        for (int k = 0; k < deg; ++k) {
            acc *= seed;
            r[static_cast<size_t>(k)] = acc * (1.0 + radius);
        }
    }
    auto eval = [&](cd x) {
        cd v = 0.0;
        for (int k = deg; k >= 0; --k) v = v * x + monic[static_cast<size_t>(k)];
        return v;
    };
    for (int it = 0; it < 400; ++it) {
        double worst = 0.0;
        for (int i = 0; i < deg; ++i) {
            cd denom = 1.0;
            for (int j = 0; j < deg; ++j)
                if (j != i) denom *= r[static_cast<size_t>(i)] - r[static_cast<size_t>(j)];
            cd step = eval(r[static_cast<size_t>(i)]) / denom;
            r[static_cast<size_t>(i)] -= step;
            worst = std::max(worst, std::abs(step));
        }
        if (worst < 1e-13) break;
    }
    return r;
}

// Exact specialization x -> node of an arity-2 polynomial, ascending
// z-coefficients (kY view), both exact and as doubles.
std::vector<Rational> specialize_x(const SparsePolynomial& p, int mainvar, const Rational& node) {
    auto coeffs = coefficients_in(p, mainvar);
    std::vector<Rational> out;
    out.reserve(coeffs.size());
    std::vector<Rational> pt(static_cast<size_t>(p.arity()), Rational(0));
    pt[kX] = node;
    for (const auto& c : coeffs) out.push_back(c.eval_rational(pt));
    return out;
}

std::vector<cd> to_cd(const std::vector<Rational>& v) {
    std::vector<cd> out;
    out.reserve(v.size());
    for (const auto& r : v) out.push_back(r.to_double());
    return out;
}

double min_gap(const std::vector<cd>& roots) {
    double g = 1e300;
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j) g = std::min(g, std::abs(roots[i] - roots[j]));
    return g;
}

}  // namespace

AlgebraicElement::AlgebraicElement(SparsePolynomial minpoly) : m_(normalize_minpoly(std::move(minpoly))) {}

int AlgebraicElement::degree() const { return m_.degree_in(kY); }

bool AlgebraicElement::probably_irreducible() const {
    auto lead = coefficients_in(m_, kY).back();
    int clean_specializations = 0;
    for (long c : {2L, 3L, 5L, 7L, 11L}) {
        std::vector<Rational> pt = {Rational(c), Rational(0)};
        if (lead.eval_rational(pt).is_zero()) continue;
        auto coeffs = specialize_x(m_, kY, Rational(c));
        SparsePolynomial uni(1);
        for (size_t k = 0; k < coeffs.size(); ++k)
            uni.add_term(Monomial({static_cast<int>(k)}), coeffs[k]);
        if (rational_roots(uni.primitive_part()).empty()) return true;
        ++clean_specializations;
        if (clean_specializations >= 3) break;
    }
    return false;
}

PcVerdict is_positively_closed(const AlgebraicElement& s) {
    auto coeffs = coefficients_in(s.minpoly(), kY);
    PcVerdict v;
    SparsePolynomial g(2);
    for (size_t k = 1; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        g = gcd_univariate(g, coeffs[k]);
    }
    v.tail_gcd = g;
    v.squarefree_gcd = g.is_constant() ? SparsePolynomial::constant(2, Rational(1)) : squarefree_part(g);
    const SparsePolynomial& r0 = coeffs[0];
    if (r0.is_zero() || v.squarefree_gcd.is_constant() || r0.divide_exact(v.squarefree_gcd)) {
        v.positively_closed = true;
        return v;
    }
    // Witness: an irreducible divisor of g missing from r0.
    SparsePolynomial missed = v.squarefree_gcd;
    SparsePolynomial shared = gcd_univariate(v.squarefree_gcd, r0);
    if (!shared.is_constant()) {
        auto q = v.squarefree_gcd.divide_exact(shared);
        if (q) missed = *q;
    }
    v.witness = some_irreducible_factor(missed);
    v.positively_closed = false;
    return v;
}

SparsePolynomial some_irreducible_factor(const SparsePolynomial& p) {
    if (p.is_zero()) throw domain_error("zero_polynomial", "factor of the zero polynomial");
    int var = sole_variable(p);
    if (var < 0) throw domain_error("bad_argument", "constant polynomial has no irreducible factor");
    SparsePolynomial cur = p.primitive_part();
    if (cur.leading_term().second.sign() < 0) cur = -cur;

    for (;;) {
        int deg = cur.degree_in(var);
        if (deg == 1) return cur;
        auto roots = rational_roots(cur);
        if (!roots.empty()) {
            // (v x - u) for the first root u/v.
            const Rational& r = roots.front();
            SparsePolynomial lin =
                SparsePolynomial::variable(cur.arity(), var, 1,
                                           Rational::from_string(r.denominator_string()));
            lin += SparsePolynomial::constant(cur.arity(), -Rational::from_string(r.numerator_string()));
            return lin.primitive_part();
        }
        if (deg <= 3) return cur;  // no rational root and degree <= 3: irreducible

        // Kronecker: interpolate candidate divisors of degree d from integer
        // divisor tuples of values at 0, 1, -1, 2, -2, ...
        bool split = false;
        for (int d = 2; d <= deg / 2 && !split; ++d) {
            std::vector<long> nodes;
            for (long t = 0; static_cast<int>(nodes.size()) < d + 1; ++t) {
                long cand = t == 0 ? 0 : (t % 2 ? (t + 1) / 2 : -(t / 2));
                std::vector<Rational> pt(static_cast<size_t>(cur.arity()), Rational(0));
                pt[static_cast<size_t>(var)] = Rational(cand);
                if (!cur.eval_rational(pt).is_zero()) nodes.push_back(cand);
                if (t > 50) throw internal_error("kronecker_nodes", "could not collect Kronecker nodes");
            }
            std::vector<std::vector<long>> value_divisors;
            uint64_t combos = 1;
            for (long nd : nodes) {
                std::vector<Rational> pt(static_cast<size_t>(cur.arity()), Rational(0));
                pt[static_cast<size_t>(var)] = Rational(nd);
                auto divs = divisors_of(cur.eval_rational(pt));
                std::vector<long> signed_divs;
                for (long dv : divs) {
                    signed_divs.push_back(dv);
                    signed_divs.push_back(-dv);
                }
                combos *= signed_divs.size();
                if (combos > 2000000)
                    throw domain_error("factorization_too_large",
                                       "Kronecker divisor enumeration exceeds the desk-scale cap");
                value_divisors.push_back(std::move(signed_divs));
            }
            std::vector<size_t> idx(nodes.size(), 0);
            for (;;) {
                std::vector<Rational> vals;
                for (size_t i = 0; i < nodes.size(); ++i)
                    vals.push_back(Rational(value_divisors[i][idx[i]]));
                SparsePolynomial cand = lagrange(nodes, vals, var, cur.arity());
                if (cand.degree_in(var) == d) {
                    cand = cand.primitive_part();
                    if (auto q = cur.divide_exact(cand)) {
                        cur = cand;
                        if (cur.leading_term().second.sign() < 0) cur = -cur;
                        split = true;
                        break;
                    }
                }
                size_t pos = 0;
                while (pos < idx.size() && ++idx[pos] == value_divisors[pos].size()) {
                    idx[pos] = 0;
                    ++pos;
                }
                if (pos == idx.size()) break;
            }
        }
        if (!split) return cur;  // no divisor up to half degree: irreducible
    }
}

namespace {

struct TrackedRoots {
    std::vector<long> nodes;                 // integer interpolation nodes
    std::vector<std::vector<cd>> roots;      // per node, label-consistent
    int target_index = -1;                   // branch of the intended sum
};

// Follows the roots of squarefree R(x, z) in z along the real x-segment
// through the chosen nodes, keeping labels consistent by warm-started
// iteration, and locates the branch through sigma_base at the first node.
TrackedRoots track_roots(const SparsePolynomial& rt, cd sigma_base, int zvar) {
    int degx = rt.degree_in(kX);
    int need = degx + 1;
    TrackedRoots tr;
    // Candidate nodes 2, 3, 4, ...; a node is usable when the z-leading
    // coefficient survives and the specialized roots stay separated.
    auto lead = coefficients_in(rt, zvar).back();
    for (long node = 2; static_cast<int>(tr.nodes.size()) < need; ++node) {
        if (node > 200) throw internal_error("node_scan", "could not collect interpolation nodes");
        std::vector<Rational> pt = {Rational(node), Rational(0)};
        pt.resize(static_cast<size_t>(rt.arity()), Rational(0));
        if (lead.eval_rational(pt).is_zero()) continue;
        auto spec = to_cd(specialize_x(rt, zvar, Rational(node)));
        auto roots = all_roots(spec);
        if (roots.size() > 1 && min_gap(roots) < 1e-7) continue;
        tr.nodes.push_back(node);
        tr.roots.push_back(std::move(roots));
    }

    // Locate the intended branch at the first node.
    {
        const auto& base = tr.roots.front();
        double best = 1e300;
        for (size_t i = 0; i < base.size(); ++i) {
            double d = std::abs(base[i] - sigma_base);
            if (d < best) {
                best = d;
                tr.target_index = static_cast<int>(i);
            }
        }
        double gap = base.size() > 1 ? min_gap(base) : 1.0;
        if (best > std::max(1e-6, 0.25 * gap))
            throw domain_error("ambiguous_factor",
                               "intended sum does not match any branch of the resultant");
    }

    // Re-label roots at the remaining nodes by walking x continuously.
    for (size_t k = 1; k < tr.nodes.size(); ++k) {
        std::vector<cd> cur = tr.roots[k - 1];
        const int steps = 16;
        double x0 = static_cast<double>(tr.nodes[k - 1]);
        double x1 = static_cast<double>(tr.nodes[k]);
        for (int s = 1; s <= steps; ++s) {
            double x = x0 + (x1 - x0) * s / steps;
            // double-precision specialization is fine mid-path
            auto coeffs = coefficients_in(rt, zvar);
            std::vector<cd> spec;
            spec.reserve(coeffs.size());
            for (const auto& c : coeffs) spec.push_back(c.eval({cd(x, 0.0), cd(0.0, 0.0)}));
            cur = all_roots(spec, &cur);
        }
        // Match the exact end-node roots to the walked labels.
        std::vector<cd> relabeled(tr.roots[k].size());
        std::vector<bool> used(tr.roots[k].size(), false);
        for (size_t i = 0; i < cur.size(); ++i) {
            size_t bestj = 0;
            double best = 1e300;
            for (size_t j = 0; j < tr.roots[k].size(); ++j) {
                if (used[j]) continue;
                double d = std::abs(tr.roots[k][j] - cur[i]);
                if (d < best) {
                    best = d;
                    bestj = j;
                }
            }
            used[bestj] = true;
            relabeled[i] = tr.roots[k][bestj];
        }
        tr.roots[k] = std::move(relabeled);
    }
    return tr;
}

std::optional<SparsePolynomial> reconstruct_factor(const SparsePolynomial& rt,
                                                   const TrackedRoots& tr,
                                                   const std::vector<int>& subset, int zvar) {
    const size_t nn = tr.nodes.size();
    auto lead = coefficients_in(rt, zvar).back();
    size_t d = subset.size();
    // Coefficient values of lead(x) * prod(z - root) at every node.
    std::vector<std::vector<Rational>> values(d + 1, std::vector<Rational>(nn));
    for (size_t k = 0; k < nn; ++k) {
        std::vector<Rational> pt = {Rational(tr.nodes[k]), Rational(0)};
        pt.resize(static_cast<size_t>(rt.arity()), Rational(0));
        double lv = lead.eval_rational(pt).to_double();
        std::vector<cd> poly = {1.0};
        for (int idx : subset) {
            const cd r = tr.roots[k][static_cast<size_t>(idx)];
            std::vector<cd> next(poly.size() + 1, 0.0);
            for (size_t t = 0; t < poly.size(); ++t) {
                next[t + 1] += poly[t];
                next[t] -= poly[t] * r;
            }
            poly = std::move(next);
        }
        for (size_t t = 0; t <= d; ++t) {
            cd v = poly[t] * lv;
            if (std::abs(v.imag()) > 1e-6 * std::max(1.0, std::abs(v))) return std::nullopt;
            double re = v.real();
            if (std::abs(re) > 1e12) return std::nullopt;
            double rounded = std::round(re);
            if (std::abs(re - rounded) > 1e-4 * std::max(1.0, std::abs(re))) return std::nullopt;
            values[t][k] = Rational(static_cast<long>(rounded));
        }
    }
    SparsePolynomial cand(rt.arity());
    for (size_t t = 0; t <= d; ++t) {
        SparsePolynomial cx = lagrange(tr.nodes, values[t], kX, rt.arity());
        cand += cx * SparsePolynomial::variable(rt.arity(), zvar, static_cast<int>(t));
    }
    if (cand.is_zero() || cand.degree_in(zvar) != static_cast<int>(d)) return std::nullopt;
    cand = cand.primitive_part();
    // The integrality trick multiplies by the full z-leading coefficient, so
    // the candidate may carry a parasitic polynomial content in x; strip it.
    SparsePolynomial xcontent(rt.arity());
    for (const auto& c : coefficients_in(cand, zvar))
        if (!c.is_zero()) xcontent = gcd_univariate(xcontent, c);
    if (!xcontent.is_constant()) {
        if (auto q = cand.divide_exact(xcontent)) cand = q->primitive_part();
    }
    if (!rt.divide_exact(cand)) return std::nullopt;
    return cand;
}

}  // namespace

AlgebraicElement minpoly_of_sum(const AlgebraicElement& a, const AlgebraicElement& b, SumKind kind) {
    const SparsePolynomial& ma = a.minpoly();
    const SparsePolynomial& mb = b.minpoly();

    if (kind == SumKind::same_root) {
        if (ma != mb)
            throw domain_error("bad_argument", "same_root needs identical presentations");
        // 2s satisfies m(z/2); substitute and clear denominators.
        SparsePolynomial half_z = SparsePolynomial::variable(2, kY, 1, Rational(1, 2));
        SparsePolynomial x = SparsePolynomial::variable(2, kX);
        return AlgebraicElement(ma.substitute({x, half_z}));
    }
    if (kind == SumKind::distinct_conjugates) {
        if (ma != mb)
            throw domain_error("bad_argument", "distinct_conjugates needs identical presentations");
        if (a.degree() < 2)
            throw domain_error("bad_argument", "distinct_conjugates needs degree >= 2");
    }

    // Res_y(m_a(y), m_b(z - y)) in the three-variable ring {x, y, z}.
    SparsePolynomial x3 = SparsePolynomial::variable(3, 0);
    SparsePolynomial y3 = SparsePolynomial::variable(3, 1);
    SparsePolynomial z3 = SparsePolynomial::variable(3, 2);
    SparsePolynomial a3 = ma.substitute({x3, y3});
    SparsePolynomial b3 = mb.substitute({x3, z3 - y3});
    SparsePolynomial res3 = resultant_wrt(a3, b3, 1);

    // Drop the dead y slot: {x, y, z} -> {x, z}.
    SparsePolynomial res(2);
    for (const auto& [m, c] : res3.terms()) {
        if (m[1] != 0) throw internal_error("resultant_shape", "resultant still involves y");
        res.add_term(Monomial({m[0], m[2]}), c);
    }
    if (res.is_zero())
        throw domain_error("ambiguous_factor",
                           "resultant vanishes identically; presentations share a factor");

    SparsePolynomial rt = squarefree_in_variable(res, kY).primitive_part();
    int m_deg = rt.degree_in(kY);

    // Numeric value of the intended sum at the first usable node.
    auto roots_at = [&](const SparsePolynomial& m, const Rational& node) {
        return all_roots(to_cd(specialize_x(m, kY, node)));
    };
    auto sorted = [](std::vector<cd> v) {
        std::sort(v.begin(), v.end(), [](cd p, cd q) {
            if (p.real() != q.real()) return p.real() < q.real();
            return p.imag() < q.imag();
        });
        return v;
    };

    // The tracker picks its own nodes; mirror its scan for the base sigma.
    TrackedRoots tr = [&] {
        for (long node = 2; node <= 200; ++node) {
            std::vector<Rational> pt = {Rational(node), Rational(0)};
            auto la = coefficients_in(ma, kY).back();
            auto lb = coefficients_in(mb, kY).back();
            if (la.eval_rational(pt).is_zero() || lb.eval_rational(pt).is_zero()) continue;
            auto ra = sorted(roots_at(ma, Rational(node)));
            auto rb = sorted(roots_at(mb, Rational(node)));
            if (ra.empty() || rb.empty()) continue;
            cd sigma;
            if (kind == SumKind::distinct_conjugates) {
                if (ra.size() < 2 || std::abs(ra[0] - ra[1]) < 1e-9) continue;
                sigma = ra[0] + ra[1];
            } else {
                sigma = ra[0] + rb[0];
            }
            try {
                TrackedRoots t = track_roots(rt, sigma, kY);
                if (t.nodes.front() >= node) return t;
                // tracker started earlier than our sigma node; rescan there
                auto ra2 = sorted(roots_at(ma, Rational(t.nodes.front())));
                auto rb2 = sorted(roots_at(mb, Rational(t.nodes.front())));
                cd sig2 = kind == SumKind::distinct_conjugates ? ra2[0] + ra2[1] : ra2[0] + rb2[0];
                return track_roots(rt, sig2, kY);
            } catch (const Error&) {
                continue;
            }
        }
        throw domain_error("ambiguous_factor", "no usable interpolation node for branch matching");
    }();

    // Try subsets through the tracked branch, smallest first.
    std::vector<int> others;
    for (int i = 0; i < m_deg; ++i)
        if (i != tr.target_index) others.push_back(i);
    for (int size = 1; size <= m_deg; ++size) {
        std::vector<int> pick;
        auto choose = [&](auto&& self, int start, int need) -> std::optional<SparsePolynomial> {
            if (need == 0) {
                std::vector<int> subset = {tr.target_index};
                subset.insert(subset.end(), pick.begin(), pick.end());
                std::sort(subset.begin(), subset.end());
                return reconstruct_factor(rt, tr, subset, kY);
            }
            for (int i = start; i < static_cast<int>(others.size()); ++i) {
                pick.push_back(others[static_cast<size_t>(i)]);
                if (auto got = self(self, i + 1, need - 1)) return got;
                pick.pop_back();
            }
            return std::nullopt;
        };
        if (auto got = choose(choose, 0, size - 1)) return AlgebraicElement(std::move(*got));
    }
    throw domain_error("ambiguous_factor",
                       "no verified factor through the intended branch (resultant degree " +
                           std::to_string(m_deg) + ")");
}

}  // namespace patlas
