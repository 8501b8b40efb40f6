#include "convexo/random.hpp"

#include <cmath>
#include <numbers>

namespace convexo {

Complex Rng::gaussian() {
    const double re = normal_(engine_);
    const double im = normal_(engine_);
    return Complex(re, im) / std::numbers::sqrt2;
}

double Rng::uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

int Rng::integer(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

Complex Rng::unimodular() {
    return std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi));
}

Matrix Rng::gaussian_matrix(Index rows, Index cols) {
    Matrix m(rows, cols);
    // Fill column-major explicitly so the draw order is fixed.
    for (Index j = 0; j < cols; ++j) {
        for (Index i = 0; i < rows; ++i) m(i, j) = gaussian();
    }
    return m;
}

Vector Rng::gaussian_vector(Index n) {
    Vector v(n);
    for (Index i = 0; i < n; ++i) v(i) = gaussian();
    return v;
}

MatrixTuple Rng::gaussian_tuple(std::size_t g, Index n) {
    std::vector<Matrix> ms;
    ms.reserve(g);
    for (std::size_t j = 0; j < g; ++j) ms.push_back(gaussian_matrix(n, n));
    return MatrixTuple(std::move(ms));
}

MatrixTuple Rng::direction(std::size_t g, Index n) {
    MatrixTuple x = gaussian_tuple(g, n);
    return Complex(1.0 / x.norm()) * x;
}

Matrix Rng::unitary(Index n) {
    Eigen::HouseholderQR<Matrix> qr(gaussian_matrix(n, n));
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index j = 0; j < n; ++j) {
        const double a = std::abs(r(j, j));
        if (a > 0.0) q.col(j) *= r(j, j) / a;
    }
    return q;
}

} // namespace convexo
