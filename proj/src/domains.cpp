#include "convexo/domains.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "convexo/random.hpp"

namespace convexo {

std::string_view to_string(Location location) {
    switch (location) {
    case Location::interior: return "interior";
    case Location::boundary: return "boundary";
    case Location::exterior: return "exterior";
    }
    return "unknown";
}

MembershipVerdict classify(double margin, double tol) {
    if (margin > tol) return {Location::interior, margin};
    if (margin < -tol) return {Location::exterior, margin};
    return {Location::boundary, margin};
}

Spectrahedron::Spectrahedron(MatrixTuple a) : a_(std::move(a)) {
    if (!a_.is_square()) {
        throw Error(ErrorKind::NotSquare, "spectrahedron coefficients must be square");
    }
}

namespace {

void require_point(std::size_t g, const MatrixTuple& x) {
    if (x.size() != g) {
        throw Error(ErrorKind::TupleLengthMismatch,
                    "point has " + std::to_string(x.size()) + " entries, domain has g = " +
                        std::to_string(g));
    }
    if (!x.is_square()) throw Error(ErrorKind::NotSquare, "point must be a tuple of square matrices");
}

void require_direction(const MatrixTuple& x) {
    if (x.norm() == 0.0) throw Error(ErrorKind::ZeroDirection, "direction is zero");
}

} // namespace

MembershipVerdict ball_membership(const Spectraball& ball, const MatrixTuple& x, double tol) {
    require_point(ball.g(), x);
    return classify(1.0 - operator_norm(lambda_eval(ball.coefficients(), x)), tol);
}

MembershipVerdict spec_membership(const Spectrahedron& spec, const MatrixTuple& x, double tol) {
    require_point(spec.g(), x);
    return classify(min_eig_hermitian(hermitian_pencil(spec.coefficients(), x)), tol);
}

Spectrahedron ball_to_spectrahedron(const Spectraball& ball) {
    const MatrixTuple& e = ball.coefficients();
    const Index d = e.rows();
    const Index c = e.cols();
    std::vector<Matrix> ms;
    ms.reserve(e.size());
    for (const auto& ej : e) {
        Matrix a = Matrix::Zero(d + c, d + c);
        a.topRightCorner(d, c) = ej;
        ms.push_back(std::move(a));
    }
    return Spectrahedron(MatrixTuple(std::move(ms)));
}

MembershipVerdict contraction_membership(const MatrixTuple& f, const MatrixTuple& x, double tol) {
    if (!f.is_square()) throw Error(ErrorKind::NotSquare, "pencil coefficients must be square");
    require_point(f.size(), x);
    const Matrix t = lambda_eval(f, x);
    const Matrix m = Matrix::Identity(t.rows(), t.cols()) + t;
    const double rcond = reciprocal_condition(m);
    if (rcond < tol) {
        throw Error(ErrorKind::SingularPencil, "I + Lambda_F(X) is numerically singular", rcond);
    }
    const Matrix ratio = m.partialPivLu().solve(t);
    return classify(1.0 - operator_norm(ratio), tol);
}

double boundary_scale(const Spectraball& ball, const MatrixTuple& x) {
    require_point(ball.g(), x);
    require_direction(x);
    const double n = operator_norm(lambda_eval(ball.coefficients(), x));
    if (n == 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / n;
}

double boundary_scale(const Spectrahedron& spec, const MatrixTuple& x) {
    require_point(spec.g(), x);
    require_direction(x);
    // L_A(tX) = I + tH on the ray, so the first exit is at t = -1/lambda_min(H).
    const Matrix lam = lambda_eval(spec.coefficients(), x);
    const Matrix h = hermitian_part(lam + lam.adjoint());
    const double lmin = min_eig_hermitian(h);
    const double floor = 16.0 * std::numeric_limits<double>::epsilon() * h.norm();
    if (lmin >= -floor) return std::numeric_limits<double>::infinity();
    return -1.0 / lmin;
}

namespace {

std::vector<MatrixTuple> axis_directions(std::size_t g, Index n) {
    std::vector<Matrix> shapes;
    if (n >= 2) {
        Matrix rot = Matrix::Zero(n, n);
        rot(0, 1) = -1.0;
        rot(1, 0) = 1.0;
        shapes.push_back(rot);
    }
    const Complex i(0.0, 1.0);
    shapes.push_back(i * Matrix::Identity(n, n));
    shapes.push_back(-i * Matrix::Identity(n, n));
    shapes.push_back(Matrix::Identity(n, n));
    shapes.push_back(-Matrix::Identity(n, n));

    std::vector<MatrixTuple> out;
    for (const auto& s : shapes) {
        for (std::size_t j = 0; j < g; ++j) {
            MatrixTuple x = MatrixTuple::zeros(g, n, n);
            x.set(j, s / s.norm());
            out.push_back(std::move(x));
        }
    }
    return out;
}

MatrixTuple map_slots(const MatrixTuple& x, Complex w) {
    std::vector<Matrix> ms;
    ms.reserve(x.size());
    for (const auto& m : x) ms.push_back(0.5 * (m + w * m.adjoint()));
    return MatrixTuple(std::move(ms));
}

} // namespace

BoundednessReport boundedness_probe(const Spectrahedron& spec, std::span<const Index> levels,
                                    std::size_t trials, std::uint64_t seed) {
    if (trials < 1) throw Error(ErrorKind::InvalidArgument, "boundedness probe needs trials >= 1");
    BoundednessReport report;
    const std::size_t g = spec.g();

    auto probe = [&](const MatrixTuple& dir) {
        const double norm = dir.norm();
        if (norm == 0.0) return false;
        const MatrixTuple unit = Complex(1.0 / norm) * dir;
        ++report.directions;
        const double t = boundary_scale(spec, unit);
        if (std::isinf(t)) {
            report.unbounded = true;
            report.witness = unit;
            return true;
        }
        report.max_scale = std::max(report.max_scale, t);
        return false;
    };

    for (const Index n : levels) {
        for (const auto& dir : axis_directions(g, n)) {
            if (probe(dir)) return report;
        }
        Rng rng(seed + static_cast<std::uint64_t>(n));
        for (std::size_t t = 0; t < trials; ++t) {
            const MatrixTuple dir = rng.direction(g, n);
            if (probe(dir)) return report;
            if (probe(map_slots(dir, 1.0))) return report;
            if (probe(map_slots(dir, -1.0))) return report;
        }
    }
    return report;
}

} // namespace convexo
