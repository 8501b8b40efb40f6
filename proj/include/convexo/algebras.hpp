#pragma once

#include <vector>

#include "convexo/linalg.hpp"

namespace convexo {

/// Relative residual above which a product is declared outside the span.
inline constexpr double kSpanTol = 1e-8;
/// Absolute residual accepted by is_convexotonic.
inline constexpr double kConvexotonicTol = 1e-8;
/// Above this condition number, closure appends orthonormalized
/// representatives instead of raw products.
inline constexpr double kClosureConditionLimit = 1e6;

/// Coefficients Xi with J_k J_j = sum_s (Xi_j)(k,s) J_s.
struct StructureConstants {
    MatrixTuple xi;
    /// Largest relative least-squares residual over all (k, j).
    double residual = 0.0;
    /// convexotonic_residual(xi).
    double convexotonic_residual = 0.0;
};

struct AlgebraClosure {
    /// The input tuple followed by the appended elements C_1..C_h.
    MatrixTuple extended;
    std::size_t appended_count = 0;
    /// For each appended element: false when it is a (unit-normalized) raw
    /// product, true when it was replaced by an orthonormalized representative.
    std::vector<bool> orthonormalized;
};

/// The (rows*cols) x g matrix whose columns are vec(T_j).
Matrix flatten_tuple(const MatrixTuple& t);

/// True iff {T_1, ..., T_g} is numerically linearly independent.
bool linear_independent(const MatrixTuple& t, double tol = kRankTol);

/// Extends A by products until the span is closed under multiplication.
/// Products are scanned in lexicographic (k, j) order over the basis as it
/// stood at the start of each round; rounds repeat to a fixed point.
/// Throws NotSquare or DependentInput.
AlgebraClosure algebra_closure(const MatrixTuple& a, double tol = kRankTol);

/// Solves J_k J_j = sum_s (Xi_j)(k,s) J_s by least squares against one
/// factorization of the flattened basis. Residuals are measured relative to
/// ||J_k|| ||J_j||. Throws SpanViolation (value = residual) above tol,
/// DependentInput or NotSquare.
StructureConstants structure_constants(const MatrixTuple& j, double tol = kSpanTol);

/// Solves F_l C F_j = sum_s (Psi_j)(l,s) F_s for F of shape d x e and C of
/// shape e x d. Throws SpanViolation, DependentInput or ShapeMismatch.
StructureConstants pencil_structure_constants(const MatrixTuple& f, const Matrix& c,
                                              double tol = kSpanTol);

/// max over (j, k) of ||Xi_k Xi_j - sum_s (Xi_j)(k,s) Xi_s||_F.
/// Throws ShapeMismatch unless Xi is a g-tuple of g x g matrices.
double convexotonic_residual(const MatrixTuple& xi);

inline bool is_convexotonic(const MatrixTuple& xi, double tol = kConvexotonicTol) {
    return convexotonic_residual(xi) <= tol;
}

} // namespace convexo
