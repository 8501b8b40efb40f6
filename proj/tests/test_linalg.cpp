#include <gtest/gtest.h>

#include "convexo/linalg.hpp"
#include "convexo/random.hpp"
#include "support/oracles.hpp"

using namespace convexo;

TEST(MatrixTuple, RejectsEmptyRaggedAndNonFinite) {
    EXPECT_THROW(MatrixTuple(std::vector<Matrix>{}), Error);
    EXPECT_THROW((MatrixTuple{Matrix::Zero(2, 2), Matrix::Zero(2, 3)}), Error);
    Matrix bad = Matrix::Zero(2, 2);
    bad(0, 1) = Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
    EXPECT_THROW(MatrixTuple{bad}, Error);
}

TEST(MatrixTuple, SetChecksShape) {
    MatrixTuple t = MatrixTuple::zeros(2, 2, 2);
    EXPECT_THROW(t.set(0, Matrix::Zero(3, 3)), Error);
    t.set(1, Matrix::Identity(2, 2));
    EXPECT_EQ(t[1], Matrix::Identity(2, 2));
}

TEST(Kron, MatchesIndexFormula) {
    Rng rng(1);
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix a = rng.gaussian_matrix(rng.integer(1, 3), rng.integer(1, 3));
        const Matrix b = rng.gaussian_matrix(rng.integer(1, 4), rng.integer(1, 4));
        EXPECT_LT((kron(a, b) - oracle::kron(a, b)).norm(), 1e-14);
    }
}

TEST(LambdaEval, MatchesKronSum) {
    Rng rng(2);
    for (int trial = 0; trial < 10; ++trial) {
        const MatrixTuple a(std::vector<Matrix>{rng.gaussian_matrix(2, 3), rng.gaussian_matrix(2, 3)});
        const MatrixTuple x = rng.gaussian_tuple(2, 3);
        EXPECT_LT((lambda_eval(a, x) - oracle::lambda(a, x)).norm(), 1e-13);
    }
}

TEST(LambdaEval, LengthMismatch) {
    try {
        (void)lambda_eval(MatrixTuple::zeros(2, 2, 2), MatrixTuple::zeros(3, 1, 1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::TupleLengthMismatch);
    }
}

TEST(HermitianPencil, ExactlyHermitian) {
    Rng rng(3);
    const Matrix h = hermitian_pencil(rng.gaussian_tuple(2, 3), rng.gaussian_tuple(2, 2));
    EXPECT_EQ((h - h.adjoint()).norm(), 0.0);
}

TEST(OperatorNorm, AgreesWithGramEigenvalue) {
    Rng rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix m = rng.gaussian_matrix(rng.integer(1, 6), rng.integer(1, 6));
        EXPECT_NEAR(operator_norm(m), oracle::sigma_max(m), 1e-12);
    }
    EXPECT_EQ(operator_norm(Matrix(0, 0)), 0.0);
}

TEST(MinEig, ClosedForm2x2) {
    // [[a, b], [conj b, c]] has lambda_min = (a + c)/2 - sqrt(((a - c)/2)^2 + |b|^2).
    Matrix m(2, 2);
    m << 2.0, Complex(1.0, 1.0), Complex(1.0, -1.0), -1.0;
    const double expected = 0.5 - std::sqrt(2.25 + 2.0);
    EXPECT_NEAR(min_eig_hermitian(m), expected, 1e-14);
}

TEST(MinEig, RejectsNonHermitian) {
    Matrix m = Matrix::Identity(2, 2);
    m(0, 1) = 1.0;
    EXPECT_THROW((void)min_eig_hermitian(m), Error);
}

TEST(KernelBasis, OrthonormalAndAnnihilated) {
    Rng rng(5);
    const Matrix m = rng.gaussian_matrix(4, 2) * rng.gaussian_matrix(2, 5);
    const Matrix k = kernel_basis(m);
    ASSERT_EQ(k.cols(), 3);
    EXPECT_LT((m * k).norm(), 1e-12);
    EXPECT_LT((k.adjoint() * k - Matrix::Identity(3, 3)).norm(), 1e-12);
    EXPECT_EQ(kernel_basis(Matrix::Zero(3, 3)).cols(), 3);
}

TEST(NumericalRank, LowRankProduct) {
    Rng rng(6);
    EXPECT_EQ(numerical_rank(rng.gaussian_matrix(6, 3) * rng.gaussian_matrix(3, 6)), 3u);
    std::vector<Vector> v{rng.gaussian_vector(3), rng.gaussian_vector(3)};
    v.push_back(v[0] + Complex(2.0) * v[1]);
    EXPECT_EQ(numerical_rank(std::span<const Vector>(v)), 2u);
}

TEST(JointKernel, CommonNullVector) {
    Matrix a = Matrix::Zero(3, 3), b = Matrix::Zero(3, 3);
    a(0, 1) = 1.0;
    b(1, 2) = 1.0;
    const Matrix k = joint_kernel(MatrixTuple{a, b});
    ASSERT_EQ(k.cols(), 1);
    EXPECT_NEAR(std::abs(k(0, 0)), 1.0, 1e-12);
}

TEST(Nilpotent, AgreesWithWordEnumeration) {
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const Index d = rng.integer(2, 4);
        const bool strict = trial % 2 == 0;
        std::vector<Matrix> ms;
        for (int k = 0; k < 2; ++k) {
            Matrix m = rng.gaussian_matrix(d, d);
            if (strict) m = m.triangularView<Eigen::StrictlyUpper>();
            ms.push_back(m);
        }
        // Conjugate so triangular structure is hidden.
        const MatrixTuple b = MatrixTuple(ms).similarity(rng.gaussian_matrix(d, d));
        EXPECT_EQ(is_nilpotent(b), oracle::nilpotent_by_words(b, 1e-8)) << "trial " << trial;
        EXPECT_EQ(is_nilpotent(b), strict);
    }
}

TEST(Nilpotent, CommutingShiftsButNotTheirAdjoints) {
    Matrix s = Matrix::Zero(3, 3);
    s(0, 1) = s(1, 2) = 1.0;
    EXPECT_TRUE(is_nilpotent(MatrixTuple{s, Matrix(s * s)}));
    EXPECT_FALSE(is_nilpotent(MatrixTuple{s, Matrix(s.adjoint())}));
}

TEST(DirectSum, BlockDiagonal) {
    Rng rng(8);
    const Matrix a = rng.gaussian_matrix(2, 2), b = rng.gaussian_matrix(3, 3);
    const Matrix ds = direct_sum(a, b);
    EXPECT_EQ(ds.topLeftCorner(2, 2), a);
    EXPECT_EQ(ds.bottomRightCorner(3, 3), b);
    EXPECT_EQ(ds.topRightCorner(2, 3).norm(), 0.0);
    EXPECT_EQ(ds.bottomLeftCorner(3, 2).norm(), 0.0);
}

TEST(Flatten, ColumnMajor) {
    Matrix m(2, 2);
    m << 1.0, 2.0, 3.0, 4.0;
    const Vector v = flatten(m);
    EXPECT_EQ(v(1), Complex(3.0));
    EXPECT_EQ(v(2), Complex(2.0));
}

TEST(Rng, Deterministic) {
    Rng a(99), b(99);
    EXPECT_EQ(a.gaussian_matrix(3, 3), b.gaussian_matrix(3, 3));
    const Matrix u = Rng(3).unitary(4);
    EXPECT_LT((u.adjoint() * u - Matrix::Identity(4, 4)).norm(), 1e-12);
    EXPECT_NEAR(Rng(4).direction(3, 2).norm(), 1.0, 1e-14);
}
