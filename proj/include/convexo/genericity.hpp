#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "convexo/linalg.hpp"
#include "convexo/random.hpp"

namespace convexo {

inline constexpr double kGapTol = 1e-6;
inline constexpr double kHyperbasisTol = 1e-8;

/// Smallest over the d+1 omit-one subsets of sigma_min of the remaining d
/// columns. The columns form a hyperbasis iff the margin exceeds tol.
/// Throws ShapeMismatch unless `vectors` is d x (d+1).
double hyperbasis_check(const Matrix& vectors);

/// sigma_min of a d x d matrix of column vectors.
double basis_margin(const Matrix& vectors);

enum class Obstruction { joint_kernel, joint_cokernel, nilpotent };

std::string_view to_string(Obstruction o);

/// Cheap obstructions to sv-genericity: a common kernel of the A_j, a common
/// kernel of the A_j^*, or a nilpotent tuple.
struct NecessaryConditions {
    std::vector<Obstruction> failures;
    Matrix kernel;    ///< orthonormal basis of the joint kernel
    Matrix cokernel;  ///< orthonormal basis of the joint kernel of A^*

    [[nodiscard]] bool passed() const noexcept { return failures.empty(); }
};

NecessaryConditions necessary_conditions(const MatrixTuple& a, double tol = kRankTol);

/// A point alpha in C^g with ||Lambda_A(alpha)|| = 1 and the unit vector
/// spanning the one-dimensional kernel of its defect.
struct CertificatePoint {
    std::vector<Complex> point;
    Vector kernel;
    /// sigma_1 - sigma_2 of Lambda_A(point).
    double gap = 0.0;
};

struct GenericityCertificate {
    std::vector<CertificatePoint> alphas;  ///< d + 1 points, kernels of I - L^* L
    std::vector<CertificatePoint> betas;   ///< d points, kernels of I - L L^*
    double hyperbasis_margin = 0.0;
    double basis_margin = 0.0;
    std::size_t trials_used = 0;
    std::uint64_t seed = 0;
};

struct ProbeOptions {
    std::size_t trials = 10000;
    std::uint64_t seed = kDefaultSeed;
    double gap_tol = kGapTol;
    double margin_tol = kHyperbasisTol;
    double rank_tol = kRankTol;
};

enum class ProbeStatus { certified, inconclusive, rejected };

std::string_view to_string(ProbeStatus s);

struct ProbeOutcome {
    ProbeStatus status = ProbeStatus::inconclusive;
    std::optional<GenericityCertificate> certificate;
    NecessaryConditions conditions;
    std::size_t trials_used = 0;
};

/// Randomized search for an sv-genericity certificate. Trial t draws from a
/// generator seeded with seed + t, so results depend only on (A, options).
/// Never refutes: failure to certify within the budget is `inconclusive`;
/// `rejected` only comes from necessary_conditions.
ProbeOutcome sv_probe(const MatrixTuple& a, const ProbeOptions& options = {});

struct CertificateCheck {
    bool valid = false;
    double min_overlap = 0.0;      ///< min |<u, u'>| against recomputed kernels
    double max_scale_error = 0.0;  ///< max | ||Lambda_A(alpha)|| - 1 |
    double min_gap = 0.0;
    double hyperbasis_margin = 0.0;
    double basis_margin = 0.0;
};

/// Recomputes every kernel, norm, gap and margin of a certificate.
CertificateCheck validate_certificate(const MatrixTuple& a, const GenericityCertificate& cert,
                                      const ProbeOptions& options = {});

} // namespace convexo
