#include "patlas/ternary_cubic.hpp"

#include <cmath>
#include <map>

#include "patlas/error.hpp"

namespace patlas {

const std::array<std::array<int, 3>, 10>& cubic_exponents() {
    static const std::array<std::array<int, 3>, 10> table = {{
        {3, 0, 0},  // z111
        {2, 1, 0},  // z112
        {2, 0, 1},  // z113
        {1, 2, 0},  // z122
        {1, 1, 1},  // z123
        {1, 0, 2},  // z133
        {0, 3, 0},  // z222
        {0, 2, 1},  // z223
        {0, 1, 2},  // z233
        {0, 0, 3},  // z333
    }};
    return table;
}

TernaryCubic TernaryCubic::legendre(cplx lambda) {
    TernaryCubic c;
    c.z[0] = 1.0;             // x1^3
    c.z[2] = -lambda - 1.0;   // x1^2 x3
    c.z[5] = lambda;          // x1 x3^2
    c.z[7] = -1.0;            // x2^2 x3
    return c;
}

TernaryCubic TernaryCubic::scaled(cplx c) const {
    TernaryCubic out;
    for (size_t i = 0; i < 10; ++i) out.z[i] = z[i] * c;
    return out;
}

bool TernaryCubic::all_zero(double tol) const {
    for (const auto& v : z)
        if (std::abs(v) > tol) return false;
    return true;
}

cplx det3(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 inverse3(const Mat3& m) {
    cplx d = det3(m);
    if (std::abs(d) == 0.0) throw domain_error("singular_matrix", "3x3 matrix is singular");
    Mat3 inv;
    inv[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / d;
    inv[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / d;
    inv[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / d;
    inv[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / d;
    inv[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / d;
    inv[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / d;
    inv[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / d;
    inv[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / d;
    inv[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / d;
    return inv;
}

Mat3 matmul3(const Mat3& a, const Mat3& b) {
    Mat3 c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            cplx s = 0.0;
            for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
            c[i][j] = s;
        }
    return c;
}

TernaryCubic substitute_linear(const TernaryCubic& c, const Mat3& m) {
    // Expand sigma(Mx) monomial by monomial: (Mx)_a (Mx)_b (Mx)_c.
    std::map<std::array<int, 3>, cplx> acc;
    const auto& expo = cubic_exponents();
    for (size_t slot = 0; slot < 10; ++slot) {
        if (c.z[slot] == cplx(0.0)) continue;
        // The slot's monomial as a triple of row indices (i <= j <= k).
        std::array<int, 3> idx{};
        int pos = 0;
        for (int var = 0; var < 3; ++var)
            for (int rep = 0; rep < expo[slot][var]; ++rep) idx[pos++] = var;
        for (int p = 0; p < 3; ++p)
            for (int q = 0; q < 3; ++q)
                for (int r = 0; r < 3; ++r) {
                    cplx coeff = c.z[slot] * m[idx[0]][p] * m[idx[1]][q] * m[idx[2]][r];
                    std::array<int, 3> e{};
                    e[p] += 1;
                    e[q] += 1;
                    e[r] += 1;
                    acc[e] += coeff;
                }
    }
    TernaryCubic out;
    for (size_t slot = 0; slot < 10; ++slot) {
        auto it = acc.find(expo[slot]);
        if (it != acc.end()) out.z[slot] = it->second;
    }
    return out;
}

}  // namespace patlas
