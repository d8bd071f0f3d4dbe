#pragma once

#include <string>

#include "patlas/polynomial.hpp"

namespace patlas {

/// On-disk polynomial format: a JSON array of
///   [[e_1, ..., e_k], "numerator", "denominator"]
/// triples in ascending graded-lex order. Numerator and denominator are
/// decimal strings; the denominator is positive.
std::string polynomial_to_json(const SparsePolynomial& p);

/// Parses the triple-array format. `arity` must match the exponent vectors;
/// pass -1 to infer it from the first triple (zero polynomial then needs an
/// explicit arity).
SparsePolynomial polynomial_from_json(const std::string& text, int arity = -1);

}  // namespace patlas
