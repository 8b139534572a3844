#include "selfevoc/eig2.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace selfevoc {

namespace {

void fix_sign(std::array<double, 2>& v) {
    if (v[0] < 0.0 || (v[0] == 0.0 && v[1] < 0.0)) {
        v[0] = -v[0];
        v[1] = -v[1];
    }
}

}  // namespace

Eig2 eig2x2_symmetric(double a00, double a01, double a10, double a11) {
    if (!std::isfinite(a00) || !std::isfinite(a01) || !std::isfinite(a10) || !std::isfinite(a11))
        throw std::invalid_argument("eig2x2_symmetric: non-finite entries");

    const double scale = std::max({std::fabs(a00), std::fabs(a01), std::fabs(a10), std::fabs(a11), 1.0});
    if (std::fabs(a01 - a10) > 1e-12 * scale)
        throw std::invalid_argument("eig2x2_symmetric: matrix is not symmetric");

    const double b = 0.5 * (a01 + a10);
    const double tr = a00 + a11;
    const double disc = std::hypot(a00 - a11, 2.0 * b);

    Eig2 e;
    e.lambda_major = 0.5 * (tr + disc);
    e.lambda_minor = 0.5 * (tr - disc);

    // Isotropic within tolerance: any orthonormal pair works, pick e1/e2.
    if (std::fabs(e.lambda_major - e.lambda_minor) <= 1e-12 * std::fabs(e.lambda_major)) {
        e.v_major = {1.0, 0.0};
        e.v_minor = {0.0, 1.0};
        return e;
    }

    // (A - lambda I) v = 0; take the better-conditioned null-space candidate.
    std::array<double, 2> c1{b, e.lambda_major - a00};
    std::array<double, 2> c2{e.lambda_major - a11, b};
    const double n1 = c1[0] * c1[0] + c1[1] * c1[1];
    const double n2 = c2[0] * c2[0] + c2[1] * c2[1];
    std::array<double, 2> v = (n1 >= n2) ? c1 : c2;
    const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1]);
    v[0] /= norm;
    v[1] /= norm;
    fix_sign(v);
    e.v_major = v;

    // Exact 90-degree rotation keeps orthogonality at machine precision.
    e.v_minor = {-v[1], v[0]};
    fix_sign(e.v_minor);
    return e;
}

Eig2 eig2x2_symmetric(const Matrix& a) {
    if (a.rows() != 2 || a.cols() != 2)
        throw std::invalid_argument("eig2x2_symmetric: expected a 2x2 matrix");
    return eig2x2_symmetric(a(0, 0), a(0, 1), a(1, 0), a(1, 1));
}

}  // namespace selfevoc
