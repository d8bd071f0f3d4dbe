#include "patlas/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "patlas/error.hpp"

namespace patlas {

Monomial::Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
    for (int v : e_)
        if (v < 0) throw domain_error("negative_exponent", "monomial exponents must be >= 0");
}

Monomial Monomial::unit(int arity) { return Monomial(std::vector<int>(static_cast<size_t>(arity), 0)); }

int Monomial::total_degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

Monomial Monomial::times(const Monomial& o) const {
    Monomial r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::divide(const Monomial& o) const {
    Monomial r = o;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= e_[i];
    return r;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
    std::string s;
    for (size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += i < names.size() ? names[i] : "x" + std::to_string(i);
        if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
    }
    return s.empty() ? "1" : s;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a.exponents() < b.exponents();
}

std::vector<Monomial> monomials_of_degree(int arity, int degree) {
    std::vector<Monomial> out;
    std::vector<int> cur(static_cast<size_t>(arity), 0);
    // Recursive distribution already yields ascending lex within the degree.
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == arity - 1) {
            cur[static_cast<size_t>(var)] = left;
            out.emplace_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[static_cast<size_t>(var)] = e;
            self(self, var + 1, left - e);
        }
    };
    if (arity <= 0) return out;
    rec(rec, 0, degree);
    return out;
}

}  // namespace patlas
