#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "convexo/convexotonic.hpp"
#include "convexo/linalg.hpp"
#include "convexo/random.hpp"

namespace convexo {

/// One named check inside a report. `residual` is the worst value of the
/// quantity the check bounds; `skipped` counts samples that were not
/// applicable (e.g. directions with infinite boundary scale).
struct Check {
    std::string name;
    bool passed = false;
    double residual = 0.0;
    std::size_t samples = 0;
    std::size_t skipped = 0;
    std::string note;
};

struct VerificationReport {
    std::string name;
    std::vector<Check> checks;
    std::vector<std::string> warnings;

    [[nodiscard]] bool passed() const;
    [[nodiscard]] const Check* find(std::string_view check_name) const;
    /// Appends another report's checks and warnings with `prefix/` names.
    void absorb(const VerificationReport& other, const std::string& prefix);
};

struct VerifyOptions {
    std::size_t samples = 30;
    std::uint64_t seed = kDefaultSeed;
    double tol = 1e-9;
    /// Band accepted for images of boundary points.
    double boundary_tol = 1e-6;
};

/// Data for the conditional main-theorem check: B = M^* Z E M with Z and M
/// unitary of size d x d.
struct TheoremData {
    MatrixTuple e;
    MatrixTuple b;
    Matrix z;
    Matrix m;

    /// Throws ShapeMismatch / NotUnitary / DependentInput.
    void validate(double tol = 1e-9) const;
};

/// Checks, in order: (1) B = M^* Z E M; (2) E_k Z E_j = sum_s (Xi_j)(k,s) E_s
/// has a solution Xi; (3) B spans an algebra with the same constants;
/// (4) Xi is convexotonic and p = x (I - Lambda_Xi(x))^-1 maps sampled
/// points of B_E into D_B.
VerificationReport verify_theorem_main(const TheoremData& data, const VerifyOptions& options = {});

/// Max deviation of ||Lambda_E(X)|| from ||Lambda_B(X)|| on random X at
/// levels 1-3.
VerificationReport verify_ball_equality(const MatrixTuple& e, const MatrixTuple& b,
                                        const VerifyOptions& options = {});

/// For J spanning an algebra: q maps interior samples of D_J into the
/// interior of B_J, boundary samples onto the boundary, and p inverts q. When
/// the boundedness probe finds no unbounded direction, also checks that p
/// carries the boundary of B_J to the boundary of D_J.
VerificationReport verify_properness(const MatrixTuple& j, const VerifyOptions& options = {});

/// Closes A to an algebra basis J = (A, C) and checks the padded map
/// G(x) = (x, 0)(I + sum_{j<=g} Xi_j x_j)^-1 on D_A: interior to interior,
/// boundary to boundary, injective on samples.
VerificationReport verify_corollary(const MatrixTuple& a, const VerifyOptions& options = {});

/// The fixed catalog of two-generator examples (types I-IV, unimodular
/// rescalings, the composed type I / type IV map). Warnings describe the
/// type I sign convention and the type II range witness.
VerificationReport example_catalog(std::uint64_t seed = kDefaultSeed);

/// Experimental: scans Z = alpha I over 360 unimodular alpha (M = I) for the
/// best fit B ~ alpha E. Returns the best alpha and its residual.
struct ScalarUnitaryFit {
    Complex alpha;
    double residual;
};
ScalarUnitaryFit search_scalar_unitary(const MatrixTuple& e, const MatrixTuple& b);

/// Deterministic sample points shared by the harness and the tests.
namespace sampling {

/// Level for sample index s cycling through 1..max_level.
Index level_for(std::size_t s, Index max_level);

/// 0.5 * the boundary scale of D_J along a unit direction (capped by the
/// B_J scale when D_J contains the whole ray).
MatrixTuple spectrahedron_interior(const MatrixTuple& j, Rng& rng, Index n, double fraction = 0.5);

/// fraction * the boundary scale of B_J along a unit direction.
MatrixTuple ball_interior(const MatrixTuple& j, Rng& rng, Index n, double fraction = 0.5);

} // namespace sampling

} // namespace convexo
