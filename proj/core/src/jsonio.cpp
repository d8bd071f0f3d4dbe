#include "patlas/jsonio.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "patlas/error.hpp"
#include "patlas/poly_json.hpp"

namespace patlas {

using json = nlohmann::ordered_json;

namespace {

json parse(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw domain_error("bad_json", std::string(what) + ": " + e.what());
    }
}

cplx read_complex(const json& v, const char* what) {
    if (!v.is_array() || v.size() != 2)
        throw domain_error("bad_json", std::string(what) + ": complex values are [re, im] pairs");
    return cplx(v[0].get<double>(), v[1].get<double>());
}

json write_complex(cplx v) { return json::array({v.real(), v.imag()}); }

}  // namespace

ParameterMatrix parameter_matrix_from_json(const std::string& text) {
    json doc = parse(text, "parameter matrix");
    if (!doc.contains("n") || !doc.contains("entries"))
        throw domain_error("bad_json", "parameter matrix needs fields n and entries");
    int n = doc["n"].get<int>();
    std::vector<cplx> entries;
    for (const auto& e : doc["entries"]) entries.push_back(read_complex(e, "parameter matrix"));
    return ParameterMatrix(n, std::move(entries));
}

std::string parameter_matrix_to_json(const ParameterMatrix& z) {
    json doc;
    doc["n"] = z.n();
    json entries = json::array();
    for (const auto& e : z.entries()) entries.push_back(write_complex(e));
    doc["entries"] = std::move(entries);
    return doc.dump();
}

TernaryCubic ternary_cubic_from_json(const std::string& text) {
    json doc = parse(text, "ternary cubic");
    if (!doc.contains("coefficients"))
        throw domain_error("bad_json", "ternary cubic needs a coefficients field");
    const auto& arr = doc["coefficients"];
    if (!arr.is_array() || arr.size() != 10)
        throw domain_error("bad_json", "ternary cubic needs exactly 10 coefficients");
    TernaryCubic c;
    for (size_t k = 0; k < 10; ++k) c.z[k] = read_complex(arr[k], "ternary cubic");
    return c;
}

std::string ternary_cubic_to_json(const TernaryCubic& c) {
    json doc;
    json arr = json::array();
    for (const auto& v : c.z) arr.push_back(write_complex(v));
    doc["coefficients"] = std::move(arr);
    return doc.dump();
}

SparsePolynomial polynomial_document_from_json(const std::string& text) {
    json doc = parse(text, "polynomial document");
    if (doc.is_array()) return polynomial_from_json(text);
    if (!doc.contains("terms"))
        throw domain_error("bad_json", "polynomial document needs a terms array");
    int arity = -1;
    if (doc.contains("variables")) arity = static_cast<int>(doc["variables"].size());
    return polynomial_from_json(doc["terms"].dump(), arity);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw domain_error("file_not_found", "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw domain_error("file_not_writable", "cannot write " + path);
    out << content;
}

}  // namespace patlas
