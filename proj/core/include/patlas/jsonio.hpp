#pragma once

#include <string>

#include "patlas/grassmann.hpp"
#include "patlas/polynomial.hpp"
#include "patlas/ternary_cubic.hpp"

namespace patlas {

/// {"n": int, "entries": [[re, im], ...]} row major, n x 2n entries.
ParameterMatrix parameter_matrix_from_json(const std::string& text);
std::string parameter_matrix_to_json(const ParameterMatrix& z);

/// {"coefficients": [[re, im] x 10]} in the fixed z_ijk slot order.
TernaryCubic ternary_cubic_from_json(const std::string& text);
std::string ternary_cubic_to_json(const TernaryCubic& c);

/// Polynomial document: either a bare triple array (see poly_json.hpp) or
/// {"variables": [...], "terms": [...]} with arity from the name list.
SparsePolynomial polynomial_document_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace patlas
