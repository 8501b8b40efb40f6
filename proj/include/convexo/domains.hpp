#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "convexo/linalg.hpp"

namespace convexo {

/// Default half-width of the boundary band on membership margins.
inline constexpr double kBoundaryTol = 1e-8;

enum class Location { interior, boundary, exterior };

std::string_view to_string(Location location);

/// Where a point sits relative to a domain. For spectraballs the margin is
/// 1 - ||Lambda_E(X)||, for free spectrahedra it is lambda_min(L_A(X)).
struct MembershipVerdict {
    Location location;
    double margin;
};

/// interior iff margin > tol, boundary iff |margin| <= tol, exterior otherwise.
MembershipVerdict classify(double margin, double tol = kBoundaryTol);

/// B_E = { X : ||Lambda_E(X)|| <= 1 }. E may be rectangular.
class Spectraball {
public:
    explicit Spectraball(MatrixTuple e) : e_(std::move(e)) {}
    [[nodiscard]] const MatrixTuple& coefficients() const noexcept { return e_; }
    [[nodiscard]] std::size_t g() const noexcept { return e_.size(); }

private:
    MatrixTuple e_;
};

/// D_A = { X : I + Lambda_A(X) + Lambda_A(X)^* >= 0 }. Rejects non-square A.
class Spectrahedron {
public:
    explicit Spectrahedron(MatrixTuple a);
    [[nodiscard]] const MatrixTuple& coefficients() const noexcept { return a_; }
    [[nodiscard]] std::size_t g() const noexcept { return a_.size(); }

private:
    MatrixTuple a_;
};

MembershipVerdict ball_membership(const Spectraball& ball, const MatrixTuple& x,
                                  double tol = kBoundaryTol);

MembershipVerdict spec_membership(const Spectrahedron& spec, const MatrixTuple& x,
                                  double tol = kBoundaryTol);

/// The block-nilpotent embedding A_j = [[0, E_j], [0, 0]] with D_A = B_E.
Spectrahedron ball_to_spectrahedron(const Spectraball& ball);

/// Membership in D_F through the contraction form
/// ||(I + Lambda_F(X))^-1 Lambda_F(X)|| <= 1. Throws SingularPencil when
/// I + Lambda_F(X) has reciprocal condition below tol; such points lie
/// outside D_F.
MembershipVerdict contraction_membership(const MatrixTuple& f, const MatrixTuple& x,
                                         double tol = kBoundaryTol);

/// Largest t >= 0 with tX in the domain; +infinity when the whole ray is
/// contained. Throws ZeroDirection for X = 0.
double boundary_scale(const Spectraball& ball, const MatrixTuple& x);
double boundary_scale(const Spectrahedron& spec, const MatrixTuple& x);

struct BoundednessReport {
    bool unbounded = false;
    /// First direction found with infinite boundary scale.
    std::optional<MatrixTuple> witness;
    /// Largest finite boundary scale among sampled unit directions.
    double max_scale = 0.0;
    std::size_t directions = 0;
};

/// Heuristic boundedness evidence. At each level, probes the coordinate
/// directions (rotation generator, +-iI, +-I in one slot) and then `trials`
/// Gaussian unit directions together with their Hermitian and skew-Hermitian
/// parts. A finite report is evidence only; an unbounded report carries a
/// verified witness.
BoundednessReport boundedness_probe(const Spectrahedron& spec, std::span<const Index> levels,
                                    std::size_t trials, std::uint64_t seed);

} // namespace convexo
