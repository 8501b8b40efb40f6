#include "convexo/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace convexo {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::TupleLengthMismatch: return "TupleLengthMismatch";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::SingularPencil: return "SingularPencil";
    case ErrorKind::ZeroDirection: return "ZeroDirection";
    case ErrorKind::DependentInput: return "DependentInput";
    case ErrorKind::SpanViolation: return "SpanViolation";
    case ErrorKind::NotConvexotonic: return "NotConvexotonic";
    case ErrorKind::DomainBreach: return "DomainBreach";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

// ---------------------------------------------------------------------------
// MatrixTuple

MatrixTuple::MatrixTuple(std::vector<Matrix> matrices) : matrices_(std::move(matrices)) {
    validate();
}

MatrixTuple::MatrixTuple(std::initializer_list<Matrix> matrices) : matrices_(matrices) {
    validate();
}

void MatrixTuple::validate() const {
    if (matrices_.empty()) {
        throw Error(ErrorKind::ShapeMismatch, "a tuple needs at least one matrix");
    }
    const Index r = matrices_.front().rows();
    const Index c = matrices_.front().cols();
    for (const auto& m : matrices_) {
        if (m.rows() != r || m.cols() != c) {
            throw Error(ErrorKind::ShapeMismatch, "tuple entries must share one shape");
        }
        if (!m.allFinite()) {
            throw Error(ErrorKind::InvalidArgument, "tuple entries must be finite");
        }
    }
}

MatrixTuple MatrixTuple::zeros(std::size_t g, Index rows, Index cols) {
    return MatrixTuple(std::vector<Matrix>(g, Matrix::Zero(rows, cols)));
}

MatrixTuple MatrixTuple::scalars(std::span<const Complex> x) {
    std::vector<Matrix> ms;
    ms.reserve(x.size());
    for (const Complex& v : x) {
        ms.push_back(Matrix::Constant(1, 1, v));
    }
    return MatrixTuple(std::move(ms));
}

MatrixTuple MatrixTuple::scalars(std::initializer_list<Complex> x) {
    return scalars(std::span<const Complex>(x.begin(), x.size()));
}

void MatrixTuple::set(std::size_t i, Matrix m) {
    if (m.rows() != rows() || m.cols() != cols()) {
        throw Error(ErrorKind::ShapeMismatch, "replacement has the wrong shape");
    }
    matrices_.at(i) = std::move(m);
}

MatrixTuple MatrixTuple::adjoint() const {
    std::vector<Matrix> ms;
    ms.reserve(size());
    for (const auto& m : matrices_) ms.push_back(m.adjoint());
    return MatrixTuple(std::move(ms));
}

MatrixTuple MatrixTuple::similarity(const Matrix& s) const {
    Eigen::PartialPivLU<Matrix> lu(s);
    std::vector<Matrix> ms;
    ms.reserve(size());
    for (const auto& m : matrices_) ms.push_back(lu.solve(m * s));
    return MatrixTuple(std::move(ms));
}

MatrixTuple MatrixTuple::sandwich(const Matrix& left, const Matrix& right) const {
    std::vector<Matrix> ms;
    ms.reserve(size());
    for (const auto& m : matrices_) ms.push_back(left * m * right);
    return MatrixTuple(std::move(ms));
}

double MatrixTuple::norm() const {
    double s = 0.0;
    for (const auto& m : matrices_) s += m.squaredNorm();
    return std::sqrt(s);
}

double MatrixTuple::max_distance(const MatrixTuple& other) const {
    if (other.size() != size()) {
        throw Error(ErrorKind::TupleLengthMismatch, "tuples differ in length");
    }
    double d = 0.0;
    for (std::size_t i = 0; i < size(); ++i) {
        if (other[i].rows() != rows() || other[i].cols() != cols()) {
            throw Error(ErrorKind::ShapeMismatch, "tuples differ in shape");
        }
        d = std::max(d, (matrices_[i] - other[i]).norm());
    }
    return d;
}

namespace {

template <typename Op>
MatrixTuple zip(const MatrixTuple& a, const MatrixTuple& b, Op op) {
    if (a.size() != b.size()) {
        throw Error(ErrorKind::TupleLengthMismatch, "tuples differ in length");
    }
    std::vector<Matrix> ms;
    ms.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].rows() != b[i].rows() || a[i].cols() != b[i].cols()) {
            throw Error(ErrorKind::ShapeMismatch, "tuples differ in shape");
        }
        ms.push_back(op(a[i], b[i]));
    }
    return MatrixTuple(std::move(ms));
}

} // namespace

MatrixTuple operator+(const MatrixTuple& a, const MatrixTuple& b) {
    return zip(a, b, [](const Matrix& x, const Matrix& y) -> Matrix { return x + y; });
}

MatrixTuple operator-(const MatrixTuple& a, const MatrixTuple& b) {
    return zip(a, b, [](const Matrix& x, const Matrix& y) -> Matrix { return x - y; });
}

MatrixTuple operator*(Complex s, const MatrixTuple& a) {
    std::vector<Matrix> ms;
    ms.reserve(a.size());
    for (const auto& m : a) ms.push_back(s * m);
    return MatrixTuple(std::move(ms));
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    Matrix out = Matrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    out.topLeftCorner(a.rows(), a.cols()) = a;
    out.bottomRightCorner(b.rows(), b.cols()) = b;
    return out;
}

MatrixTuple direct_sum(const MatrixTuple& x, const MatrixTuple& y) {
    if (x.size() != y.size()) {
        throw Error(ErrorKind::TupleLengthMismatch, "direct sum of tuples of different length");
    }
    std::vector<Matrix> ms;
    ms.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) ms.push_back(direct_sum(x[i], y[i]));
    return MatrixTuple(std::move(ms));
}

// ---------------------------------------------------------------------------
// Kernels

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Matrix lambda_eval(const MatrixTuple& a, const MatrixTuple& x) {
    if (a.size() != x.size()) {
        throw Error(ErrorKind::TupleLengthMismatch,
                    "coefficient tuple has " + std::to_string(a.size()) + " entries, point has " +
                        std::to_string(x.size()));
    }
    const Index br = x.rows();
    const Index bc = x.cols();
    Matrix out = Matrix::Zero(a.rows() * br, a.cols() * bc);
    for (std::size_t k = 0; k < a.size(); ++k) {
        const Matrix& ak = a[k];
        for (Index i = 0; i < ak.rows(); ++i) {
            for (Index j = 0; j < ak.cols(); ++j) {
                if (ak(i, j) != Complex(0.0)) {
                    out.block(i * br, j * bc, br, bc) += ak(i, j) * x[k];
                }
            }
        }
    }
    return out;
}

Matrix hermitian_part(const Matrix& m) {
    // m(i,j) + conj(m(j,i)) is bitwise the conjugate of its mirror entry.
    return 0.5 * (m + m.adjoint());
}

Matrix hermitian_pencil(const MatrixTuple& a, const MatrixTuple& x) {
    if (!a.is_square()) throw Error(ErrorKind::NotSquare, "pencil coefficients must be square");
    if (!x.is_square()) throw Error(ErrorKind::NotSquare, "evaluation point must be square");
    const Matrix lam = lambda_eval(a, x);
    return hermitian_part(Matrix::Identity(lam.rows(), lam.cols()) + lam + lam.adjoint());
}

double operator_norm(const Matrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues()(0);
}

double min_eig_hermitian(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::NotSquare, "eigenvalues need a square matrix");
    const double scale = m.norm();
    const double skew = (m - m.adjoint()).norm();
    if (skew > tol * scale) {
        throw Error(ErrorKind::NotHermitian, "matrix is not Hermitian", skew);
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(m), Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

Matrix kernel_basis(const Matrix& m, double tol) {
    const Index n = m.cols();
    if (m.rows() == 0 || n == 0) return Matrix::Identity(n, n);
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    const double smax = s(0);
    if (smax == 0.0) return Matrix::Identity(n, n);
    Index rank = 0;
    while (rank < s.size() && s(rank) > tol * smax) ++rank;
    return svd.matrixV().rightCols(n - rank);
}

std::size_t numerical_rank(const Matrix& m, double tol) {
    if (m.size() == 0) return 0;
    Eigen::JacobiSVD<Matrix> svd(m);
    const auto& s = svd.singularValues();
    if (s(0) == 0.0) return 0;
    std::size_t rank = 0;
    for (Index i = 0; i < s.size(); ++i) {
        if (s(i) > tol * s(0)) ++rank;
    }
    return rank;
}

std::size_t numerical_rank(std::span<const Vector> vectors, double tol) {
    if (vectors.empty()) return 0;
    Matrix m(vectors.front().size(), static_cast<Index>(vectors.size()));
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != m.rows()) {
            throw Error(ErrorKind::ShapeMismatch, "vectors differ in length");
        }
        m.col(static_cast<Index>(i)) = vectors[i];
    }
    return numerical_rank(m, tol);
}

Matrix joint_kernel(const MatrixTuple& b, double tol) {
    if (!b.is_square()) throw Error(ErrorKind::NotSquare, "joint kernel needs square matrices");
    const Index d = b.rows();
    Matrix stacked(d * static_cast<Index>(b.size()), d);
    for (std::size_t j = 0; j < b.size(); ++j) {
        stacked.middleRows(static_cast<Index>(j) * d, d) = b[j];
    }
    return kernel_basis(stacked, tol);
}

bool is_nilpotent(const MatrixTuple& b, double tol) {
    if (!b.is_square()) throw Error(ErrorKind::NotSquare, "nilpotency needs square matrices");
    const Index d = b.rows();
    double scale = 0.0;
    for (const auto& m : b) scale = std::max(scale, operator_norm(m));
    if (scale == 0.0) return true;

    // Track a spanning set of all words of the current length, compressed by
    // an SVD so its size stays <= d^2. Column norms are kept (U * sigma) so
    // the threshold applies to word magnitudes, not directions.
    std::vector<Matrix> words{Matrix::Identity(d, d)};
    for (Index len = 1; len <= d; ++len) {
        Matrix cols(d * d, static_cast<Index>(words.size() * b.size()));
        Index c = 0;
        for (const auto& bj : b) {
            const Matrix scaled = bj / scale;
            for (const auto& w : words) cols.col(c++) = flatten(scaled * w);
        }
        Eigen::JacobiSVD<Matrix> svd(cols, Eigen::ComputeThinU);
        const auto& s = svd.singularValues();
        words.clear();
        for (Index i = 0; i < s.size(); ++i) {
            if (s(i) <= tol) break;
            Vector v = svd.matrixU().col(i) * s(i);
            words.push_back(Eigen::Map<const Matrix>(v.data(), d, d));
        }
        if (words.empty()) return true;
    }
    return false;
}

double reciprocal_condition(const Matrix& m) {
    if (m.size() == 0) return 1.0;
    Eigen::JacobiSVD<Matrix> svd(m);
    const auto& s = svd.singularValues();
    if (s(0) == 0.0) return 0.0;
    return s(s.size() - 1) / s(0);
}

Vector flatten(const Matrix& m) {
    return Eigen::Map<const Vector>(m.data(), m.size());
}

} // namespace convexo
