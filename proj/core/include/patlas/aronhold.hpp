#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "patlas/polynomial.hpp"
#include "patlas/sparse_matrix.hpp"
#include "patlas/ternary_cubic.hpp"

namespace patlas {

/// The degree-4 and degree-6 generators of the ring of SL3 invariants of
/// ternary cubics, normalized so that their restrictions to the Legendre
/// family are exactly lambda^2 - lambda + 1 and
/// 2 lambda^3 - 3 lambda^2 - 3 lambda + 2.
struct InvariantPair {
    SparsePolynomial S;
    SparsePolynomial T;
    InvariantPair() : S(10), T(10) {}
};

/// The matrices of the eight sl3 basis derivations acting on the space of
/// degree-d polynomials in the ten cubic coefficients, in the ascending
/// graded-lex monomial basis. Order: the six elementary off-diagonal
/// elements E12, E13, E21, E23, E31, E32, then the traceless diagonals
/// diag(1,-1,0) and diag(0,1,-1).
std::vector<SparseMatrixQ> sl3_derivation_matrices(int degree);

/// Hash of the derivation construction at degrees 4 and 6; cache files carry
/// it so stale caches are detected and rebuilt.
uint64_t derivation_content_hash();

/// Derives S and T as the one-dimensional kernels of the stacked derivation
/// matrices, then rescales by the Legendre restrictions. Throws when either
/// kernel is not one-dimensional or a restriction is not proportional to its
/// target (both indicate a construction bug).
InvariantPair derive_aronhold_invariants();

/// Exact substitution z111=1, z113=-lambda-1, z133=lambda, z223=-1, rest 0;
/// result lives in the one-variable ring of lambda.
SparsePolynomial legendre_restriction(const SparsePolynomial& p);

/// PERIOD_ATLAS_CACHE when set, "data" otherwise.
std::string default_cache_dir();

void write_aronhold_cache(const InvariantPair& inv, const std::string& dir);
std::optional<InvariantPair> load_aronhold_cache(const std::string& dir);

/// Shared process-wide pair: loads a valid cache from `cache_dir` (default
/// default_cache_dir()) or derives once and best-effort persists. Safe to
/// call concurrently; all callers share one computation.
const InvariantPair& aronhold_invariants(const std::string& cache_dir = std::string());

struct STJ {
    cplx S;
    cplx T;
    cplx J;
};

/// Numeric S, T and J = S^3/(T^2 - 4 S^3) of a cubic. Throws a domain error
/// when the discriminant-type denominator vanishes within tolerance
/// (relative to the magnitude of its two terms).
STJ eval_stj(const TernaryCubic& c, double degeneracy_tol = 1e-12);

}  // namespace patlas
