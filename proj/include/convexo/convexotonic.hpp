#pragma once

#include "convexo/algebras.hpp"
#include "convexo/linalg.hpp"

namespace convexo {

/// Pencils with reciprocal condition below this are refused (DomainBreach).
inline constexpr double kPencilRcondLimit = 1e-12;

/// minus selects p(x) = x (I - Lambda_Xi(x))^-1, plus selects
/// q(x) = x (I + Lambda_Xi(x))^-1.
enum class MapSign { minus, plus };

std::string_view to_string(MapSign sign);
MapSign flip(MapSign sign);

/// A convexotonic tuple together with the sign choosing p or q.
class ConvexotonicMap {
public:
    /// Throws NotConvexotonic when convexotonic_residual(xi) > tol.
    ConvexotonicMap(MatrixTuple xi, MapSign sign, double tol = kConvexotonicTol);

    [[nodiscard]] const MatrixTuple& xi() const noexcept { return xi_; }
    [[nodiscard]] MapSign sign() const noexcept { return sign_; }
    [[nodiscard]] std::size_t g() const noexcept { return xi_.size(); }

    /// I - Lambda_Xi(X) for minus, I + Lambda_Xi(X) for plus.
    [[nodiscard]] Matrix pencil(const MatrixTuple& x) const;

private:
    MatrixTuple xi_;
    MapSign sign_;
};

/// Y_i = sum_j X_j [M^-1]_(j,i) with M the map's pencil at X, via one LU
/// factorization of M and a transposed solve. Throws DomainBreach when M is
/// numerically singular.
MatrixTuple eval_map(const ConvexotonicMap& map, const MatrixTuple& x);

/// Same Xi, opposite sign: p and q are mutually inverse.
ConvexotonicMap inverse_map(const ConvexotonicMap& map);

/// True iff the map's pencil at X has reciprocal condition above tol.
bool map_domain_check(const ConvexotonicMap& map, const MatrixTuple& x,
                      double tol = kPencilRcondLimit);

/// r(x) = c^* (I - Lambda_S(x))^-1 b.
struct Realization {
    MatrixTuple s;
    Vector b;
    Vector c;
};

/// (c^* (x) I_n) (I - Lambda_S(X))^-1 (b (x) I_n). Throws ShapeMismatch,
/// DomainBreach.
Matrix eval_realization(const Realization& r, const MatrixTuple& x);

/// ||Lambda_J(m(X)) - (I +- Lambda_J(X))^-1 Lambda_J(X)||_F where m is the
/// convexotonic map of the structure constants of J with the given sign.
double transfer_residual(const MatrixTuple& j, const MatrixTuple& x, MapSign sign,
                         double tol = kSpanTol);
/// Same with precomputed structure constants.
double transfer_residual(const MatrixTuple& j, const MatrixTuple& xi, const MatrixTuple& x,
                         MapSign sign);

} // namespace convexo
