#include "patlas/aronhold.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "patlas/error.hpp"
#include "patlas/poly_json.hpp"

namespace patlas {

namespace {

using json = nlohmann::ordered_json;

// One sl3 basis element acting on the ten cubic coefficients: variable
// alpha feeds c * z_alpha into the coefficient slot beta.
struct CoeffFlow {
    int alpha;
    int beta;
    long c;
};

int slot_of(const std::array<int, 3>& e) {
    const auto& table = cubic_exponents();
    for (int k = 0; k < 10; ++k)
        if (table[static_cast<size_t>(k)] == e) return k;
    throw internal_error("bad_exponent", "exponent triple is not a cubic slot");
}

// Flows of -x_b d/dx_a on sigma: z_alpha contributes -alpha_a to the slot
// alpha - e_a + e_b.
std::vector<CoeffFlow> offdiag_flows(int a, int b) {
    std::vector<CoeffFlow> flows;
    const auto& table = cubic_exponents();
    for (int al = 0; al < 10; ++al) {
        const auto& e = table[static_cast<size_t>(al)];
        if (e[static_cast<size_t>(a)] == 0) continue;
        std::array<int, 3> img = e;
        img[static_cast<size_t>(a)] -= 1;
        img[static_cast<size_t>(b)] += 1;
        flows.push_back({al, slot_of(img), -static_cast<long>(e[static_cast<size_t>(a)])});
    }
    return flows;
}

// Diagonal diag(h) acts on z_alpha by -(h . alpha).
std::vector<CoeffFlow> diag_flows(const std::array<int, 3>& h) {
    std::vector<CoeffFlow> flows;
    const auto& table = cubic_exponents();
    for (int al = 0; al < 10; ++al) {
        long w = 0;
        for (int i = 0; i < 3; ++i) w += h[static_cast<size_t>(i)] * table[static_cast<size_t>(al)][static_cast<size_t>(i)];
        if (w != 0) flows.push_back({al, al, -w});
    }
    return flows;
}

std::vector<std::vector<CoeffFlow>> sl3_flows_offdiag_first() {
    std::vector<std::vector<CoeffFlow>> out;
    for (auto [a, b] : {std::pair{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}})
        out.push_back(offdiag_flows(a, b));
    out.push_back(diag_flows({1, -1, 0}));
    out.push_back(diag_flows({0, 1, -1}));
    return out;
}

// Lifts a coefficient-space flow to the derivation matrix on degree-d
// monomials: D(z^g) = sum over beta with g_beta > 0 of g_beta * c * z^{g - e_beta + e_alpha}.
SparseMatrixQ derivation_matrix(const std::vector<CoeffFlow>& flows, int degree,
                                const std::vector<Monomial>& basis,
                                const std::map<Monomial, int, GrlexLess>& index) {
    (void)degree;
    int dim = static_cast<int>(basis.size());
    SparseMatrixQ m(dim, dim);
    // Group flows by the slot they read.
    std::array<std::vector<std::pair<int, long>>, 10> by_beta;
    for (const auto& f : flows) by_beta[static_cast<size_t>(f.beta)].emplace_back(f.alpha, f.c);
    for (int gi = 0; gi < dim; ++gi) {
        const Monomial& g = basis[static_cast<size_t>(gi)];
        for (int beta = 0; beta < 10; ++beta) {
            if (g[beta] == 0) continue;
            for (auto [alpha, c] : by_beta[static_cast<size_t>(beta)]) {
                std::vector<int> e = g.exponents();
                e[static_cast<size_t>(beta)] -= 1;
                e[static_cast<size_t>(alpha)] += 1;
                auto it = index.find(Monomial(std::move(e)));
                if (it == index.end())
                    throw internal_error("basis_closure", "derivation image left the degree basis");
                m.add(it->second, gi, Rational(g[beta] * c));
            }
        }
    }
    m.finalize();
    return m;
}

struct DegreeBasis {
    std::vector<Monomial> basis;
    std::map<Monomial, int, GrlexLess> index;
};

DegreeBasis degree_basis(int degree) {
    DegreeBasis b;
    b.basis = monomials_of_degree(10, degree);
    for (int i = 0; i < static_cast<int>(b.basis.size()); ++i) b.index.emplace(b.basis[static_cast<size_t>(i)], i);
    return b;
}

std::vector<SparseMatrixQ> derivation_matrices_stack_order(int degree, const DegreeBasis& b) {
    // Diagonals first: their rows are singletons, so elimination clears every
    // monomial of nonzero weight before the coupled block is touched.
    auto flows = sl3_flows_offdiag_first();
    std::vector<SparseMatrixQ> ms;
    ms.push_back(derivation_matrix(flows[6], degree, b.basis, b.index));
    ms.push_back(derivation_matrix(flows[7], degree, b.basis, b.index));
    for (int i = 0; i < 6; ++i) ms.push_back(derivation_matrix(flows[static_cast<size_t>(i)], degree, b.basis, b.index));
    return ms;
}

SparsePolynomial kernel_invariant(int degree) {
    DegreeBasis b = degree_basis(degree);
    auto ms = derivation_matrices_stack_order(degree, b);
    SparseMatrixQ stacked = SparseMatrixQ::vstack(ms);
    auto basis_vecs = kernel_basis(stacked);
    if (basis_vecs.size() != 1)
        throw internal_error("aronhold_kernel_dimension",
                             "invariant kernel at degree " + std::to_string(degree) + " has dimension " +
                                 std::to_string(basis_vecs.size()) + ", expected 1");
    SparsePolynomial p(10);
    const auto& v = basis_vecs[0];
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) p.add_term(b.basis[i], v[i]);
    return p;
}

SparsePolynomial lambda_target_S() {
    SparsePolynomial t(1);
    t.add_term(Monomial({2}), Rational(1));
    t.add_term(Monomial({1}), Rational(-1));
    t.add_term(Monomial({0}), Rational(1));
    return t;
}

SparsePolynomial lambda_target_T() {
    SparsePolynomial t(1);
    t.add_term(Monomial({3}), Rational(2));
    t.add_term(Monomial({2}), Rational(-3));
    t.add_term(Monomial({1}), Rational(-3));
    t.add_term(Monomial({0}), Rational(2));
    return t;
}

SparsePolynomial normalize_by_restriction(const SparsePolynomial& p, const SparsePolynomial& target,
                                          const char* name) {
    SparsePolynomial r = legendre_restriction(p);
    if (r.is_zero())
        throw internal_error("aronhold_normalization",
                             std::string(name) + ": kernel vector restricts to zero on the Legendre family");
    const auto& [tm, tc] = target.leading_term();
    Rational ratio = r.coefficient(tm) / tc;
    if (ratio.is_zero() || r != target.scaled(ratio))
        throw internal_error("aronhold_normalization",
                             std::string(name) + ": restriction is not proportional to its Legendre target");
    return p.scaled(ratio.inverse());
}

void verify_annihilation(const SparsePolynomial& p, int degree, const char* name) {
    DegreeBasis b = degree_basis(degree);
    std::vector<Rational> coeffs(b.basis.size(), Rational(0));
    for (const auto& [m, c] : p.terms()) coeffs[static_cast<size_t>(b.index.at(m))] = c;
    for (const auto& m : sl3_derivation_matrices(degree)) {
        for (const auto& r : m.apply(coeffs))
            if (!r.is_zero())
                throw internal_error("aronhold_annihilation",
                                     std::string(name) + " is not annihilated by an sl3 derivation");
    }
}

std::string hash_hex(uint64_t h) {
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

json cache_document(const SparsePolynomial& p, const char* name, int degree) {
    json doc;
    doc["kind"] = "aronhold-invariant";
    doc["name"] = name;
    doc["degree"] = degree;
    doc["derivation_hash"] = hash_hex(derivation_content_hash());
    doc["terms"] = json::parse(polynomial_to_json(p));
    return doc;
}

std::optional<SparsePolynomial> read_cache_file(const std::filesystem::path& path, const char* name,
                                                int degree) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    json doc;
    try {
        in >> doc;
        if (doc.value("kind", "") != "aronhold-invariant") return std::nullopt;
        if (doc.value("name", "") != name || doc.value("degree", -1) != degree) return std::nullopt;
        if (doc.value("derivation_hash", "") != hash_hex(derivation_content_hash())) return std::nullopt;
        return polynomial_from_json(doc["terms"].dump(), 10);
    } catch (...) {
        return std::nullopt;
    }
}

}  // namespace

std::vector<SparseMatrixQ> sl3_derivation_matrices(int degree) {
    if (degree < 0) throw domain_error("bad_degree", "derivation degree must be >= 0");
    DegreeBasis b = degree_basis(degree);
    auto flows = sl3_flows_offdiag_first();
    std::vector<SparseMatrixQ> ms;
    ms.reserve(flows.size());
    for (const auto& f : flows) ms.push_back(derivation_matrix(f, degree, b.basis, b.index));
    return ms;
}

uint64_t derivation_content_hash() {
    static const uint64_t h = [] {
        uint64_t acc = 1469598103934665603ull;
        for (int degree : {4, 6})
            for (const auto& m : sl3_derivation_matrices(degree)) {
                uint64_t mh = m.content_hash();
                for (int i = 0; i < 8; ++i) {
                    acc ^= (mh >> (8 * i)) & 0xffu;
                    acc *= 1099511628211ull;
                }
            }
        return acc;
    }();
    return h;
}

SparsePolynomial legendre_restriction(const SparsePolynomial& p) {
    if (p.arity() != 10)
        throw domain_error("arity_mismatch", "legendre_restriction expects the 10-variable cubic ring");
    std::vector<SparsePolynomial> images;
    SparsePolynomial zero(1);
    SparsePolynomial one = SparsePolynomial::constant(1, Rational(1));
    SparsePolynomial lam = SparsePolynomial::variable(1, 0);
    SparsePolynomial minus_lam_minus_1 = -(lam + one);
    images.push_back(one);                 // z111
    images.push_back(zero);                // z112
    images.push_back(minus_lam_minus_1);   // z113
    images.push_back(zero);                // z122
    images.push_back(zero);                // z123
    images.push_back(lam);                 // z133
    images.push_back(zero);                // z222
    images.push_back(-one);                // z223
    images.push_back(zero);                // z233
    images.push_back(zero);                // z333
    return p.substitute(images);
}

InvariantPair derive_aronhold_invariants() {
    InvariantPair inv;
    inv.S = normalize_by_restriction(kernel_invariant(4), lambda_target_S(), "S");
    inv.T = normalize_by_restriction(kernel_invariant(6), lambda_target_T(), "T");
    verify_annihilation(inv.S, 4, "S");
    verify_annihilation(inv.T, 6, "T");
    return inv;
}

std::string default_cache_dir() {
    if (const char* env = std::getenv("PERIOD_ATLAS_CACHE"); env && *env) return env;
    return "data";
}

void write_aronhold_cache(const InvariantPair& inv, const std::string& dir) {
    std::filesystem::create_directories(dir);
    {
        std::ofstream out(std::filesystem::path(dir) / "aronhold_S.json");
        out << cache_document(inv.S, "S", 4).dump(2) << "\n";
    }
    {
        std::ofstream out(std::filesystem::path(dir) / "aronhold_T.json");
        out << cache_document(inv.T, "T", 6).dump(2) << "\n";
    }
}

std::optional<InvariantPair> load_aronhold_cache(const std::string& dir) {
    auto s = read_cache_file(std::filesystem::path(dir) / "aronhold_S.json", "S", 4);
    auto t = read_cache_file(std::filesystem::path(dir) / "aronhold_T.json", "T", 6);
    if (!s || !t) return std::nullopt;
    // A cache is only trusted when the exact Legendre restrictions hold.
    if (legendre_restriction(*s) != lambda_target_S()) return std::nullopt;
    if (legendre_restriction(*t) != lambda_target_T()) return std::nullopt;
    InvariantPair inv;
    inv.S = std::move(*s);
    inv.T = std::move(*t);
    return inv;
}

const InvariantPair& aronhold_invariants(const std::string& cache_dir) {
    static std::mutex mu;
    static std::map<std::string, InvariantPair> shared;
    std::string dir = cache_dir.empty() ? default_cache_dir() : cache_dir;
    std::lock_guard<std::mutex> lock(mu);
    auto it = shared.find(dir);
    if (it != shared.end()) return it->second;
    if (auto cached = load_aronhold_cache(dir)) return shared.emplace(dir, std::move(*cached)).first->second;
    InvariantPair inv = derive_aronhold_invariants();
    try {
        write_aronhold_cache(inv, dir);
    } catch (...) {
        // A read-only cache directory is fine; keep the in-memory pair.
    }
    return shared.emplace(dir, std::move(inv)).first->second;
}

STJ eval_stj(const TernaryCubic& c, double degeneracy_tol) {
    const InvariantPair& inv = aronhold_invariants();
    std::vector<cplx> point(c.z.begin(), c.z.end());
    STJ out;
    out.S = inv.S.eval(point);
    out.T = inv.T.eval(point);
    cplx s3 = out.S * out.S * out.S;
    cplx denom = out.T * out.T - 4.0 * s3;
    double scale = std::abs(out.T) * std::abs(out.T) + 4.0 * std::abs(s3);
    if (std::abs(denom) <= degeneracy_tol * std::max(scale, 1e-300))
        throw domain_error("degenerate_discriminant",
                           "discriminant-type denominator T^2 - 4S^3 vanishes; the cubic is singular "
                           "or on the boundary");
    out.J = s3 / denom;
    return out;
}

}  // namespace patlas
