#include "selfevoc/matrix.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace selfevoc {

namespace {

using EigenRowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ConstMap = Eigen::Map<const EigenRowMajor>;
using MutMap = Eigen::Map<EigenRowMajor>;

ConstMap map_of(const Matrix& m) {
    return ConstMap(m.data().data(), static_cast<Eigen::Index>(m.rows()),
                    static_cast<Eigen::Index>(m.cols()));
}

}  // namespace

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    Matrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
    std::size_t i = 0;
    for (const auto& r : rows) {
        if (r.size() != m.cols()) throw std::invalid_argument("Matrix::from_rows: ragged rows");
        std::size_t j = 0;
        for (double v : r) m(i, j++) = v;
        ++i;
    }
    return m;
}

bool Matrix::all_finite() const {
    for (double v : data_)
        if (!std::isfinite(v)) return false;
    return true;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : data_) s += v * v;
    return std::sqrt(s);
}

Matrix Matrix::gather_rows(const std::vector<std::size_t>& indices) const {
    Matrix out(indices.size(), cols_);
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] >= rows_) throw std::out_of_range("gather_rows: index out of range");
        const double* src = row(indices[i]);
        double* dst = out.row(i);
        for (std::size_t j = 0; j < cols_; ++j) dst[j] = src[j];
    }
    return out;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: inner dimensions differ");
    Matrix c(a.rows(), b.cols());
    MutMap(c.data().data(), static_cast<Eigen::Index>(c.rows()),
           static_cast<Eigen::Index>(c.cols())).noalias() = map_of(a) * map_of(b);
    return c;
}

Matrix matmul_nt(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("matmul_nt: inner dimensions differ");
    Matrix c(a.rows(), b.rows());
    MutMap(c.data().data(), static_cast<Eigen::Index>(c.rows()),
           static_cast<Eigen::Index>(c.cols())).noalias() = map_of(a) * map_of(b).transpose();
    return c;
}

Matrix matmul_tn(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("matmul_tn: inner dimensions differ");
    Matrix c(a.cols(), b.cols());
    MutMap(c.data().data(), static_cast<Eigen::Index>(c.rows()),
           static_cast<Eigen::Index>(c.cols())).noalias() = map_of(a).transpose() * map_of(b);
    return c;
}

double squared_distance(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

}  // namespace selfevoc
