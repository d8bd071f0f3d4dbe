#include "patlas/rational.hpp"

#include <ostream>

#include "patlas/error.hpp"

namespace patlas {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw domain_error("zero_denominator", "rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::from_strings(const std::string& num, const std::string& den) {
    mpz_class n, d;
    if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0)
        throw domain_error("bad_rational", "unparsable rational '" + num + "/" + den + "'");
    if (sgn(d) == 0) throw domain_error("zero_denominator", "rational with zero denominator");
    mpq_class q(n);
    q /= mpq_class(d);
    return Rational(q);
}

Rational Rational::from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return from_strings(s, "1");
    return from_strings(s.substr(0, slash), s.substr(slash + 1));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw domain_error("division_by_zero", "rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw domain_error("division_by_zero", "inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(unsigned e) const {
    mpq_class acc(1), base(v_);
    for (; e > 0; e >>= 1) {
        if (e & 1u) acc *= base;
        if (e > 1) base *= base;
    }
    return Rational(acc);
}

Rational Rational::gcd(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    mpz_class gn, dl;
    mpz_gcd(gn.get_mpz_t(), a.v_.get_num().get_mpz_t(), b.v_.get_num().get_mpz_t());
    mpz_lcm(dl.get_mpz_t(), a.v_.get_den().get_mpz_t(), b.v_.get_den().get_mpz_t());
    mpq_class q(gn);
    q /= mpq_class(dl);
    return Rational(q);
}

std::string Rational::to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace patlas
