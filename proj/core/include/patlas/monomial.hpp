#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace patlas {

/// Exponent vector of a power product. The length is the arity of the
/// ambient polynomial ring and is fixed for any given ring.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents);
    static Monomial unit(int arity);  // the constant monomial

    int arity() const { return static_cast<int>(e_.size()); }
    int operator[](int i) const { return e_[static_cast<size_t>(i)]; }
    int total_degree() const;
    const std::vector<int>& exponents() const { return e_; }

    Monomial times(const Monomial& o) const;
    bool divides(const Monomial& o) const;        // this | o, slotwise
    Monomial divide(const Monomial& o) const;     // o / this

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    std::vector<int> e_;
};

/// Graded-lexicographic "less": lower total degree first; within a degree,
/// lexicographic on the exponent vector from the first variable.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Enumerates all degree-d monomials in `arity` variables, ascending grlex.
std::vector<Monomial> monomials_of_degree(int arity, int degree);

}  // namespace patlas
