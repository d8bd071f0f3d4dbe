#pragma once

#include <array>
#include <complex>

namespace patlas {

using cplx = std::complex<double>;

/// Coefficient order of a plane cubic
///   sigma = z111 x1^3 + z112 x1^2 x2 + z113 x1^2 x3 + z122 x1 x2^2
///         + z123 x1 x2 x3 + z133 x1 x3^2 + z222 x2^3 + z223 x2^2 x3
///         + z233 x2 x3^2 + z333 x3^3.
/// cubic_exponents()[k] is the (x1, x2, x3) exponent triple of slot k.
const std::array<std::array<int, 3>, 10>& cubic_exponents();

struct TernaryCubic {
    std::array<cplx, 10> z{};

    /// x1(x1 - x3)(x1 - lambda x3) - x2^2 x3, the Legendre form.
    static TernaryCubic legendre(cplx lambda);

    TernaryCubic scaled(cplx c) const;
    bool all_zero(double tol = 0.0) const;
};

using Mat3 = std::array<std::array<cplx, 3>, 3>;

cplx det3(const Mat3& m);
Mat3 inverse3(const Mat3& m);
Mat3 matmul3(const Mat3& a, const Mat3& b);

/// Coefficients of sigma(M x): the cubic pulled back along the linear map M.
/// The group action of g on cubics is substitute_linear(c, inverse3(g)).
TernaryCubic substitute_linear(const TernaryCubic& c, const Mat3& m);

}  // namespace patlas
