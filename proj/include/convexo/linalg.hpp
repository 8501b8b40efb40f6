#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "convexo/error.hpp"

namespace convexo {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Relative singular-value threshold for numerical rank and kernels.
inline constexpr double kRankTol = 1e-8;
/// Relative tolerance for accepting a matrix as Hermitian.
inline constexpr double kHermitianTol = 1e-10;
/// Default threshold on words of length d in the nilpotency test.
inline constexpr double kNilpotentTol = 1e-10;

/// A g-tuple (g >= 1) of complex matrices sharing one shape. Coefficient
/// tuples (A, E, F, J, Xi) and evaluation points X are both represented this way.
class MatrixTuple {
public:
    explicit MatrixTuple(std::vector<Matrix> matrices);
    MatrixTuple(std::initializer_list<Matrix> matrices);

    /// g zero matrices of shape rows x cols.
    static MatrixTuple zeros(std::size_t g, Index rows, Index cols);
    /// Level-one point x in C^g, stored as 1x1 matrices.
    static MatrixTuple scalars(std::span<const Complex> x);
    static MatrixTuple scalars(std::initializer_list<Complex> x);

    [[nodiscard]] std::size_t size() const noexcept { return matrices_.size(); }
    [[nodiscard]] Index rows() const noexcept { return matrices_.front().rows(); }
    [[nodiscard]] Index cols() const noexcept { return matrices_.front().cols(); }
    [[nodiscard]] bool is_square() const noexcept { return rows() == cols(); }

    [[nodiscard]] const Matrix& operator[](std::size_t i) const { return matrices_[i]; }
    [[nodiscard]] const std::vector<Matrix>& matrices() const noexcept { return matrices_; }
    [[nodiscard]] auto begin() const noexcept { return matrices_.begin(); }
    [[nodiscard]] auto end() const noexcept { return matrices_.end(); }

    /// Replaces slot i; the new matrix must have the tuple's shape.
    void set(std::size_t i, Matrix m);

    /// (A_1^*, ..., A_g^*)
    [[nodiscard]] MatrixTuple adjoint() const;
    /// (S^-1 X_1 S, ...) for invertible S.
    [[nodiscard]] MatrixTuple similarity(const Matrix& s) const;
    /// (L X_1 R, ...)
    [[nodiscard]] MatrixTuple sandwich(const Matrix& left, const Matrix& right) const;
    /// Square root of the summed squared Frobenius norms.
    [[nodiscard]] double norm() const;
    /// Largest slot-wise Frobenius norm of the difference.
    [[nodiscard]] double max_distance(const MatrixTuple& other) const;

    friend MatrixTuple operator+(const MatrixTuple& a, const MatrixTuple& b);
    friend MatrixTuple operator-(const MatrixTuple& a, const MatrixTuple& b);
    friend MatrixTuple operator*(Complex s, const MatrixTuple& a);

private:
    void validate() const;

    std::vector<Matrix> matrices_;
};

/// Slot-wise block diagonal X (+) Y.
MatrixTuple direct_sum(const MatrixTuple& x, const MatrixTuple& y);
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// Kronecker product; block (i,j) of the result is a(i,j) * b.
Matrix kron(const Matrix& a, const Matrix& b);

/// Lambda_A(X) = sum_j A_j (x) X_j.
Matrix lambda_eval(const MatrixTuple& a, const MatrixTuple& x);

/// L_A(X) = I + Lambda_A(X) + Lambda_A(X)^*, symmetrized so the result is
/// exactly Hermitian.
Matrix hermitian_pencil(const MatrixTuple& a, const MatrixTuple& x);

/// Largest singular value (0 for an empty matrix).
double operator_norm(const Matrix& m);

/// Smallest eigenvalue of a Hermitian matrix. Throws NotHermitian when
/// ||m - m^*||_F > tol * ||m||_F.
double min_eig_hermitian(const Matrix& m, double tol = kHermitianTol);

/// (m + m^*) / 2
Matrix hermitian_part(const Matrix& m);

/// Orthonormal basis (as columns) of the numerical kernel: right singular
/// vectors whose singular value is <= tol * sigma_max. A zero matrix yields
/// the whole space.
Matrix kernel_basis(const Matrix& m, double tol = kRankTol);

/// Number of singular values strictly above tol * sigma_max.
std::size_t numerical_rank(const Matrix& m, double tol = kRankTol);
/// Rank of the given vectors stacked as columns.
std::size_t numerical_rank(std::span<const Vector> vectors, double tol = kRankTol);

/// Orthonormal basis of the intersection of ker(B_j), from the kernel of
/// the stacked matrix [B_1; ...; B_g].
Matrix joint_kernel(const MatrixTuple& b, double tol = kRankTol);

/// True iff every word of length d (the matrix size) in B_1..B_g vanishes,
/// i.e. the algebra generated by B is nilpotent. Words are measured after
/// rescaling B so that max_j ||B_j|| = 1.
bool is_nilpotent(const MatrixTuple& b, double tol = kNilpotentTol);

/// Reciprocal 2-norm condition number sigma_min / sigma_max (0 if singular
/// or empty of rank).
double reciprocal_condition(const Matrix& m);

/// Column-major vec(m).
Vector flatten(const Matrix& m);

} // namespace convexo
