#pragma once

#include <array>

#include "selfevoc/matrix.hpp"

namespace selfevoc {

struct Eig2 {
    double lambda_major = 0.0;
    double lambda_minor = 0.0;
    std::array<double, 2> v_major{1.0, 0.0};
    std::array<double, 2> v_minor{0.0, 1.0};
};

// Closed-form spectral decomposition of a symmetric 2x2 matrix.
// lambda_major >= lambda_minor, eigenvectors unit length and orthogonal,
// sign fixed so the first nonzero component of each vector is positive.
// A near-isotropic matrix (|l1-l2| <= 1e-12*|l1|) returns the canonical
// axes e1/e2.
Eig2 eig2x2_symmetric(double a00, double a01, double a10, double a11);
Eig2 eig2x2_symmetric(const Matrix& a);

}  // namespace selfevoc
