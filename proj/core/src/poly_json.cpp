#include "patlas/poly_json.hpp"

#include <nlohmann/json.hpp>

#include "patlas/error.hpp"

namespace patlas {

using json = nlohmann::ordered_json;

std::string polynomial_to_json(const SparsePolynomial& p) {
    json arr = json::array();
    for (const auto& [m, c] : p.terms()) {
        json triple = json::array();
        triple.push_back(m.exponents());
        triple.push_back(c.numerator_string());
        triple.push_back(c.denominator_string());
        arr.push_back(std::move(triple));
    }
    return arr.dump();
}

SparsePolynomial polynomial_from_json(const std::string& text, int arity) {
    json arr;
    try {
        arr = json::parse(text);
    } catch (const json::exception& e) {
        throw domain_error("bad_json", std::string("polynomial JSON parse failure: ") + e.what());
    }
    if (!arr.is_array()) throw domain_error("bad_json", "polynomial JSON must be an array of triples");
    if (arity < 0) {
        if (arr.empty())
            throw domain_error("bad_json", "cannot infer arity of an empty polynomial document");
        arity = static_cast<int>(arr[0][0].size());
    }
    SparsePolynomial p(arity);
    for (const auto& triple : arr) {
        if (!triple.is_array() || triple.size() != 3)
            throw domain_error("bad_json", "polynomial term must be [exponents, num, den]");
        std::vector<int> e = triple[0].get<std::vector<int>>();
        if (static_cast<int>(e.size()) != arity)
            throw domain_error("bad_json", "exponent vector length disagrees with arity");
        p.add_term(Monomial(std::move(e)),
                   Rational::from_strings(triple[1].get<std::string>(), triple[2].get<std::string>()));
    }
    return p;
}

}  // namespace patlas
