#include "patlas/polynomial.hpp"

#include <algorithm>

#include "patlas/error.hpp"

namespace patlas {

namespace {

void require_same_ring(const SparsePolynomial& a, const SparsePolynomial& b) {
    if (a.arity() != b.arity())
        throw domain_error("arity_mismatch",
                           "polynomials live in different rings (" + std::to_string(a.arity()) +
                               " vs " + std::to_string(b.arity()) + " variables)");
}

}  // namespace

SparsePolynomial::SparsePolynomial(int arity) : arity_(arity) {
    if (arity < 0) throw domain_error("bad_arity", "negative ring arity");
}

SparsePolynomial SparsePolynomial::constant(int arity, const Rational& c) {
    SparsePolynomial p(arity);
    p.add_term(Monomial::unit(arity), c);
    return p;
}

SparsePolynomial SparsePolynomial::variable(int arity, int var, int exponent, const Rational& coeff) {
    if (var < 0 || var >= arity) throw domain_error("bad_variable", "variable index out of range");
    std::vector<int> e(static_cast<size_t>(arity), 0);
    e[static_cast<size_t>(var)] = exponent;
    SparsePolynomial p(arity);
    p.add_term(Monomial(std::move(e)), coeff);
    return p;
}

int SparsePolynomial::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.total_degree();
}

int SparsePolynomial::degree_in(int var) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
}

bool SparsePolynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total_degree() == 0);
}

Rational SparsePolynomial::constant_value() const { return coefficient(Monomial::unit(arity_)); }

void SparsePolynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.arity() != arity_)
        throw domain_error("arity_mismatch", "monomial arity does not match ring arity");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational SparsePolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

SparsePolynomial SparsePolynomial::operator-() const {
    SparsePolynomial r(arity_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& o) {
    require_same_ring(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& o) {
    require_same_ring(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    require_same_ring(a, b);
    SparsePolynomial r(a.arity());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
    return r;
}

SparsePolynomial SparsePolynomial::scaled(const Rational& c) const {
    SparsePolynomial r(arity_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

SparsePolynomial SparsePolynomial::pow(unsigned e) const {
    SparsePolynomial acc = constant(arity_, Rational(1));
    SparsePolynomial base = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1u) acc = acc * base;
        if (e > 1) base = base * base;
    }
    return acc;
}

const std::pair<const Monomial, Rational>& SparsePolynomial::leading_term() const {
    if (terms_.empty()) throw internal_error("zero_polynomial", "leading term of zero polynomial");
    return *terms_.rbegin();
}

std::complex<double> SparsePolynomial::eval(const std::vector<std::complex<double>>& point) const {
    if (static_cast<int>(point.size()) != arity_)
        throw domain_error("arity_mismatch", "evaluation point has wrong length");
    // Power tables per variable keep the per-term cost at one product chain.
    std::vector<std::vector<std::complex<double>>> pows(static_cast<size_t>(arity_));
    for (int v = 0; v < arity_; ++v) {
        int d = degree_in(v);
        auto& tab = pows[static_cast<size_t>(v)];
        tab.resize(static_cast<size_t>(std::max(d, 0)) + 1);
        tab[0] = 1.0;
        for (int k = 1; k <= d; ++k) tab[static_cast<size_t>(k)] = tab[static_cast<size_t>(k - 1)] * point[static_cast<size_t>(v)];
    }
    std::complex<double> acc = 0.0;
    for (const auto& [m, c] : terms_) {
        std::complex<double> t = c.to_double();
        for (int v = 0; v < arity_; ++v)
            if (m[v] > 0) t *= pows[static_cast<size_t>(v)][static_cast<size_t>(m[v])];
        acc += t;
    }
    return acc;
}

Rational SparsePolynomial::eval_rational(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != arity_)
        throw domain_error("arity_mismatch", "evaluation point has wrong length");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int v = 0; v < arity_; ++v)
            if (m[v] > 0) t *= point[static_cast<size_t>(v)].pow(static_cast<unsigned>(m[v]));
        acc += t;
    }
    return acc;
}

SparsePolynomial SparsePolynomial::derivative(int var) const {
    if (var < 0 || var >= arity_) throw domain_error("bad_variable", "variable index out of range");
    SparsePolynomial r(arity_);
    for (const auto& [m, c] : terms_) {
        int e = m[var];
        if (e == 0) continue;
        std::vector<int> ex = m.exponents();
        ex[static_cast<size_t>(var)] = e - 1;
        r.add_term(Monomial(std::move(ex)), c * Rational(e));
    }
    return r;
}

SparsePolynomial SparsePolynomial::substitute(const std::vector<SparsePolynomial>& images) const {
    if (static_cast<int>(images.size()) != arity_)
        throw domain_error("arity_mismatch", "substitution needs one image per variable");
    int target = images.empty() ? 0 : images[0].arity();
    for (const auto& im : images)
        if (im.arity() != target)
            throw domain_error("arity_mismatch", "substitution images live in different rings");

    // Memoized powers of each image.
    std::vector<std::vector<SparsePolynomial>> pows(images.size());
    auto power = [&](int v, int e) -> const SparsePolynomial& {
        auto& tab = pows[static_cast<size_t>(v)];
        if (tab.empty()) tab.push_back(SparsePolynomial::constant(target, Rational(1)));
        while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * images[static_cast<size_t>(v)]);
        return tab[static_cast<size_t>(e)];
    };

    SparsePolynomial acc(target);
    for (const auto& [m, c] : terms_) {
        SparsePolynomial t = SparsePolynomial::constant(target, c);
        for (int v = 0; v < arity_; ++v)
            if (m[v] > 0) t = t * power(v, m[v]);
        acc += t;
    }
    return acc;
}

std::optional<SparsePolynomial> SparsePolynomial::divide_exact(const SparsePolynomial& divisor) const {
    require_same_ring(*this, divisor);
    if (divisor.is_zero()) return std::nullopt;
    SparsePolynomial q(arity_);
    SparsePolynomial r = *this;
    const auto& [lm, lc] = divisor.leading_term();
    while (!r.is_zero()) {
        const auto& [rm, rc] = r.leading_term();
        if (!lm.divides(rm)) return std::nullopt;
        Monomial qm = lm.divide(rm);
        Rational qc = rc / lc;
        q.add_term(qm, qc);
        SparsePolynomial t(arity_);
        t.add_term(qm, qc);
        r -= t * divisor;
    }
    return q;
}

Rational SparsePolynomial::content() const {
    Rational g(0);
    for (const auto& [m, c] : terms_) g = Rational::gcd(g, c);
    return g;
}

SparsePolynomial SparsePolynomial::primitive_part() const {
    if (is_zero()) return *this;
    return scaled(content().inverse());
}

std::string SparsePolynomial::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    // Print leading term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!s.empty()) s += " + ";
        s += it->second.to_string();
        if (it->first.total_degree() > 0) s += "*" + it->first.to_string(names);
    }
    return s;
}

}  // namespace patlas
