#include "convexo/standard_tuples.hpp"

namespace convexo::standard {

Matrix unit(Index i, Index j, Index n) {
    Matrix m = Matrix::Zero(n, n);
    m(i, j) = 1.0;
    return m;
}

MatrixTuple tuple_e() { return MatrixTuple{Matrix::Identity(2, 2), unit(0, 1, 2)}; }

MatrixTuple tuple_f() {
    Matrix s = unit(0, 1, 3) + unit(1, 2, 3);
    Matrix s2 = s * s;
    return MatrixTuple{std::move(s), std::move(s2)};
}

MatrixTuple type_ii() { return MatrixTuple{unit(0, 0, 2), unit(0, 1, 2)}; }

MatrixTuple type_iii() { return MatrixTuple{unit(0, 0, 2), unit(1, 0, 2)}; }

Matrix swap2() { return unit(0, 1, 2) + unit(1, 0, 2); }

Matrix rotation2() { return unit(1, 0, 2) - unit(0, 1, 2); }

} // namespace convexo::standard
