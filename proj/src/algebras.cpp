#include "convexo/algebras.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace convexo {

Matrix flatten_tuple(const MatrixTuple& t) {
    Matrix out(t.rows() * t.cols(), static_cast<Index>(t.size()));
    for (std::size_t j = 0; j < t.size(); ++j) out.col(static_cast<Index>(j)) = flatten(t[j]);
    return out;
}

bool linear_independent(const MatrixTuple& t, double tol) {
    return numerical_rank(flatten_tuple(t), tol) == t.size();
}

namespace {

Matrix unflatten(const Vector& v, Index rows, Index cols) {
    return Eigen::Map<const Matrix>(v.data(), rows, cols);
}

// Appends v to the orthonormal column set q (two passes of Gram-Schmidt).
void extend_orthonormal(Matrix& q, Vector v) {
    for (int pass = 0; pass < 2; ++pass) v -= q * (q.adjoint() * v);
    q.conservativeResize(Eigen::NoChange, q.cols() + 1);
    q.col(q.cols() - 1) = v / v.norm();
}

double condition(const Matrix& m) {
    const double rc = reciprocal_condition(m);
    return rc == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / rc;
}

} // namespace

AlgebraClosure algebra_closure(const MatrixTuple& a, double tol) {
    if (!a.is_square()) throw Error(ErrorKind::NotSquare, "closure needs square matrices");
    if (!linear_independent(a, tol)) {
        throw Error(ErrorKind::DependentInput, "generators are linearly dependent");
    }
    const Index d = a.rows();
    std::vector<Matrix> basis(a.begin(), a.end());
    std::vector<bool> orthonormalized;

    Matrix q(d * d, 0);
    for (const auto& b : basis) extend_orthonormal(q, flatten(b));
    Matrix flat = flatten_tuple(a);

    bool grew = true;
    while (grew) {
        grew = false;
        const std::size_t m = basis.size();
        for (std::size_t k = 0; k < m; ++k) {
            for (std::size_t j = 0; j < m; ++j) {
                const Matrix p = basis[k] * basis[j];
                const double pn = p.norm();
                // Products that vanish up to roundoff carry no new direction.
                if (pn <= 1e-12 * basis[k].norm() * basis[j].norm()) continue;
                const Vector pv = flatten(p);
                Vector r = pv - q * (q.adjoint() * pv);
                if (r.norm() <= tol * pn) continue;

                Matrix trial(flat.rows(), flat.cols() + 1);
                trial << flat, pv / pn;
                const bool use_raw = condition(trial) < kClosureConditionLimit;
                const Vector rep = use_raw ? Vector(pv / pn) : Vector(r / r.norm());
                extend_orthonormal(q, rep);
                flat.conservativeResize(Eigen::NoChange, flat.cols() + 1);
                flat.col(flat.cols() - 1) = rep;
                basis.push_back(unflatten(rep, d, d));
                orthonormalized.push_back(!use_raw);
                grew = true;
            }
        }
    }

    AlgebraClosure out{MatrixTuple(std::move(basis)), orthonormalized.size(),
                       std::move(orthonormalized)};
    return out;
}

namespace {

// Shared solver: expresses product(k, j) in the flattened span of `basis`.
// scale(k, j) gives the natural magnitude that residuals are measured against.
template <typename Product, typename Scale>
StructureConstants solve_in_span(const MatrixTuple& basis, Product product, Scale scale,
                                 double tol) {
    const std::size_t g = basis.size();
    const Matrix flat = flatten_tuple(basis);
    if (numerical_rank(flat) != g) {
        throw Error(ErrorKind::DependentInput, "basis tuple is linearly dependent");
    }
    const auto gi = static_cast<Index>(g);
    Matrix rhs(flat.rows(), gi * gi);
    for (Index k = 0; k < gi; ++k) {
        for (Index j = 0; j < gi; ++j) rhs.col(k * gi + j) = flatten(product(k, j));
    }
    const Eigen::ColPivHouseholderQR<Matrix> qr(flat);
    const Matrix coef = qr.solve(rhs);
    const Matrix res = rhs - flat * coef;

    double worst = 0.0;
    std::vector<Matrix> xi(g, Matrix::Zero(gi, gi));
    for (Index k = 0; k < gi; ++k) {
        for (Index j = 0; j < gi; ++j) {
            const Index col = k * gi + j;
            const double denom = std::max(scale(k, j), 1e-12);
            worst = std::max(worst, res.col(col).norm() / denom);
            for (Index s = 0; s < gi; ++s) xi[static_cast<std::size_t>(j)](k, s) = coef(s, col);
        }
    }
    if (worst > tol) {
        throw Error(ErrorKind::SpanViolation,
                    "products leave the span of the tuple (relative residual " +
                        std::to_string(worst) + ")",
                    worst);
    }
    MatrixTuple xt(std::move(xi));
    const double conv = convexotonic_residual(xt);
    return StructureConstants{std::move(xt), worst, conv};
}

} // namespace

StructureConstants structure_constants(const MatrixTuple& j, double tol) {
    if (!j.is_square()) throw Error(ErrorKind::NotSquare, "structure constants need square matrices");
    std::vector<double> norms;
    for (const auto& m : j) norms.push_back(m.norm());
    return solve_in_span(
        j,
        [&](Index k, Index i) -> Matrix {
            return j[static_cast<std::size_t>(k)] * j[static_cast<std::size_t>(i)];
        },
        [&](Index k, Index i) {
            return norms[static_cast<std::size_t>(k)] * norms[static_cast<std::size_t>(i)];
        },
        tol);
}

StructureConstants pencil_structure_constants(const MatrixTuple& f, const Matrix& c, double tol) {
    if (c.rows() != f.cols() || c.cols() != f.rows()) {
        throw Error(ErrorKind::ShapeMismatch, "middle factor must be cols(F) x rows(F)");
    }
    std::vector<Matrix> fc;
    std::vector<double> norms;
    for (const auto& m : f) {
        fc.push_back(m * c);
        norms.push_back(m.norm());
    }
    const double cn = c.norm();
    return solve_in_span(
        f,
        [&](Index l, Index i) -> Matrix {
            return fc[static_cast<std::size_t>(l)] * f[static_cast<std::size_t>(i)];
        },
        [&](Index l, Index i) {
            return norms[static_cast<std::size_t>(l)] * cn * norms[static_cast<std::size_t>(i)];
        },
        tol);
}

double convexotonic_residual(const MatrixTuple& xi) {
    const auto g = static_cast<Index>(xi.size());
    if (xi.rows() != g || xi.cols() != g) {
        throw Error(ErrorKind::ShapeMismatch, "a convexotonic tuple is g matrices of size g x g");
    }
    double worst = 0.0;
    for (Index j = 0; j < g; ++j) {
        const Matrix& xj = xi[static_cast<std::size_t>(j)];
        for (Index k = 0; k < g; ++k) {
            Matrix diff = xi[static_cast<std::size_t>(k)] * xj;
            for (Index s = 0; s < g; ++s) diff -= xj(k, s) * xi[static_cast<std::size_t>(s)];
            worst = std::max(worst, diff.norm());
        }
    }
    return worst;
}

} // namespace convexo
