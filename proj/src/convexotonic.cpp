#include "convexo/convexotonic.hpp"

#include <limits>

namespace convexo {

std::string_view to_string(MapSign sign) {
    return sign == MapSign::minus ? "minus" : "plus";
}

MapSign flip(MapSign sign) {
    return sign == MapSign::minus ? MapSign::plus : MapSign::minus;
}

namespace {

double sign_factor(MapSign sign) { return sign == MapSign::minus ? -1.0 : 1.0; }

void require_point(std::size_t g, const MatrixTuple& x) {
    if (x.size() != g) {
        throw Error(ErrorKind::TupleLengthMismatch,
                    "point has " + std::to_string(x.size()) + " entries, map has g = " +
                        std::to_string(g));
    }
    if (!x.is_square()) throw Error(ErrorKind::NotSquare, "point must be a tuple of square matrices");
}

} // namespace

ConvexotonicMap::ConvexotonicMap(MatrixTuple xi, MapSign sign, double tol)
    : xi_(std::move(xi)), sign_(sign) {
    const double r = convexotonic_residual(xi_);
    if (r > tol) throw Error(ErrorKind::NotConvexotonic, "tuple is not convexotonic", r);
}

Matrix ConvexotonicMap::pencil(const MatrixTuple& x) const {
    require_point(g(), x);
    const Matrix lam = lambda_eval(xi_, x);
    return Matrix::Identity(lam.rows(), lam.cols()) + sign_factor(sign_) * lam;
}

MatrixTuple eval_map(const ConvexotonicMap& map, const MatrixTuple& x) {
    const Matrix m = map.pencil(x);
    const Eigen::PartialPivLU<Matrix> lu(m.transpose());
    const double rcond = lu.rcond();
    if (!(rcond >= kPencilRcondLimit)) {
        throw Error(ErrorKind::DomainBreach, "point is outside the domain of the map", rcond);
    }
    const Index n = x.rows();
    const auto g = static_cast<Index>(map.g());
    Matrix row(n, g * n);
    for (Index j = 0; j < g; ++j) row.middleCols(j * n, n) = x[static_cast<std::size_t>(j)];
    // Y = row * M^-1  <=>  M^T Y^T = row^T
    const Matrix y = lu.solve(row.transpose()).transpose();
    std::vector<Matrix> out;
    out.reserve(map.g());
    for (Index i = 0; i < g; ++i) out.emplace_back(y.middleCols(i * n, n));
    return MatrixTuple(std::move(out));
}

ConvexotonicMap inverse_map(const ConvexotonicMap& map) {
    return ConvexotonicMap(map.xi(), flip(map.sign()), std::numeric_limits<double>::infinity());
}

bool map_domain_check(const ConvexotonicMap& map, const MatrixTuple& x, double tol) {
    const Eigen::PartialPivLU<Matrix> lu(map.pencil(x));
    return lu.rcond() > tol;
}

Matrix eval_realization(const Realization& r, const MatrixTuple& x) {
    const Index s = r.s.rows();
    if (!r.s.is_square() || r.b.size() != s || r.c.size() != s) {
        throw Error(ErrorKind::ShapeMismatch, "realization shapes are not conformal");
    }
    require_point(r.s.size(), x);
    const Index n = x.rows();
    const Matrix lam = lambda_eval(r.s, x);
    const Matrix m = Matrix::Identity(lam.rows(), lam.cols()) - lam;
    const Eigen::PartialPivLU<Matrix> lu(m);
    if (!(lu.rcond() >= kPencilRcondLimit)) {
        throw Error(ErrorKind::DomainBreach, "I - Lambda_S(X) is singular", lu.rcond());
    }
    const Matrix id = Matrix::Identity(n, n);
    const Matrix rhs = kron(Matrix(r.b), id);
    const Matrix lhs = kron(Matrix(r.c.adjoint()), id);
    return lhs * lu.solve(rhs);
}

double transfer_residual(const MatrixTuple& j, const MatrixTuple& xi, const MatrixTuple& x,
                         MapSign sign) {
    const ConvexotonicMap map(xi, sign, std::numeric_limits<double>::infinity());
    const MatrixTuple image = eval_map(map, x);
    const Matrix lhs = lambda_eval(j, image);
    const Matrix lam = lambda_eval(j, x);
    const Matrix m = Matrix::Identity(lam.rows(), lam.cols()) + sign_factor(sign) * lam;
    const Eigen::PartialPivLU<Matrix> lu(m);
    if (!(lu.rcond() >= kPencilRcondLimit)) {
        throw Error(ErrorKind::DomainBreach, "I +- Lambda_J(X) is singular", lu.rcond());
    }
    return (lhs - lu.solve(lam)).norm();
}

double transfer_residual(const MatrixTuple& j, const MatrixTuple& x, MapSign sign, double tol) {
    const StructureConstants sc = structure_constants(j, tol);
    return transfer_residual(j, sc.xi, x, sign);
}

} // namespace convexo
