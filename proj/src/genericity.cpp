#include "convexo/genericity.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace convexo {

std::string_view to_string(Obstruction o) {
    switch (o) {
    case Obstruction::joint_kernel: return "joint-kernel";
    case Obstruction::joint_cokernel: return "joint-cokernel";
    case Obstruction::nilpotent: return "nilpotent";
    }
    return "unknown";
}

std::string_view to_string(ProbeStatus s) {
    switch (s) {
    case ProbeStatus::certified: return "certified";
    case ProbeStatus::inconclusive: return "inconclusive";
    case ProbeStatus::rejected: return "rejected";
    }
    return "unknown";
}

double basis_margin(const Matrix& vectors) {
    if (vectors.rows() != vectors.cols()) {
        throw Error(ErrorKind::ShapeMismatch, "basis check needs d vectors in C^d");
    }
    if (vectors.size() == 0) return 0.0;
    Eigen::JacobiSVD<Matrix> svd(vectors);
    return svd.singularValues()(vectors.cols() - 1);
}

double hyperbasis_check(const Matrix& vectors) {
    const Index d = vectors.rows();
    if (vectors.cols() != d + 1 || d == 0) {
        throw Error(ErrorKind::ShapeMismatch, "hyperbasis check needs d + 1 vectors in C^d");
    }
    double margin = std::numeric_limits<double>::infinity();
    for (Index omit = 0; omit <= d; ++omit) {
        Matrix sub(d, d);
        Index c = 0;
        for (Index j = 0; j <= d; ++j) {
            if (j != omit) sub.col(c++) = vectors.col(j);
        }
        margin = std::min(margin, basis_margin(sub));
    }
    return margin;
}

NecessaryConditions necessary_conditions(const MatrixTuple& a, double tol) {
    if (!a.is_square()) throw Error(ErrorKind::NotSquare, "sv-genericity needs square matrices");
    NecessaryConditions out;
    out.kernel = joint_kernel(a, tol);
    out.cokernel = joint_kernel(a.adjoint(), tol);
    if (out.kernel.cols() > 0) out.failures.push_back(Obstruction::joint_kernel);
    if (out.cokernel.cols() > 0) out.failures.push_back(Obstruction::joint_cokernel);
    if (is_nilpotent(a)) out.failures.push_back(Obstruction::nilpotent);
    return out;
}

namespace {

Matrix scalar_pencil(const MatrixTuple& a, const std::vector<Complex>& point) {
    Matrix out = Matrix::Zero(a.rows(), a.cols());
    for (std::size_t j = 0; j < a.size(); ++j) out += point[j] * a[j];
    return out;
}

Matrix columns(const std::vector<CertificatePoint>& pts, const std::vector<std::size_t>& idx) {
    Matrix m(pts.front().kernel.size(), static_cast<Index>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i) m.col(static_cast<Index>(i)) = pts[idx[i]].kernel;
    return m;
}

// Visits k-subsets of {0..m-1} that contain m-1 in lexicographic order until
// `accept` returns true. Older subsets were already rejected.
std::optional<std::vector<std::size_t>> search_with_newest(
    std::size_t m, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& accept) {
    if (k == 0 || m < k) return std::nullopt;
    const std::size_t r = k - 1;
    std::vector<std::size_t> comb(r);
    for (std::size_t i = 0; i < r; ++i) comb[i] = i;
    const std::size_t pool = m - 1;
    while (true) {
        std::vector<std::size_t> subset(comb);
        subset.push_back(m - 1);
        if (accept(subset)) return subset;
        // Advance to the next r-combination of {0..pool-1}.
        std::size_t i = r;
        while (i > 0 && comb[i - 1] == pool - r + (i - 1)) --i;
        if (i == 0) return std::nullopt;
        ++comb[i - 1];
        for (std::size_t j = i; j < r; ++j) comb[j] = comb[j - 1] + 1;
    }
}

} // namespace

ProbeOutcome sv_probe(const MatrixTuple& a, const ProbeOptions& options) {
    if (options.trials < 1) throw Error(ErrorKind::InvalidArgument, "sv probe needs trials >= 1");
    ProbeOutcome out;
    out.conditions = necessary_conditions(a, options.rank_tol);
    if (!out.conditions.passed()) {
        out.status = ProbeStatus::rejected;
        return out;
    }

    const Index d = a.rows();
    const std::size_t du = static_cast<std::size_t>(d);
    const std::size_t alpha_cap = 4 * (du + 1);
    const std::size_t beta_cap = 4 * du;
    std::vector<CertificatePoint> alphas;
    std::vector<CertificatePoint> betas;
    std::optional<std::vector<std::size_t>> hyper;
    std::optional<std::vector<std::size_t>> basis;
    double hyper_margin = 0.0;
    double basis_m = 0.0;

    for (std::size_t t = 0; t < options.trials; ++t) {
        out.trials_used = t + 1;
        Rng rng(options.seed + t);
        std::vector<Complex> gamma(a.size());
        for (auto& z : gamma) z = rng.gaussian();
        const Matrix lg = scalar_pencil(a, gamma);
        const double scale = operator_norm(lg);
        if (scale == 0.0) continue;
        for (auto& z : gamma) z /= scale;
        const Matrix l = lg / scale;

        Eigen::JacobiSVD<Matrix> svd(l);
        const auto& s = svd.singularValues();
        const double gap = s.size() > 1 ? s(0) - s(1) : s(0);
        if (gap <= options.gap_tol) continue;

        const Matrix id = Matrix::Identity(d, d);
        if (!hyper && alphas.size() < alpha_cap) {
            const Matrix ku = kernel_basis(id - l.adjoint() * l, options.rank_tol);
            if (ku.cols() == 1) {
                alphas.push_back({gamma, ku.col(0), gap});
                hyper = search_with_newest(alphas.size(), du + 1, [&](const auto& idx) {
                    hyper_margin = hyperbasis_check(columns(alphas, idx));
                    return hyper_margin > options.margin_tol;
                });
            }
        }
        if (!basis && betas.size() < beta_cap) {
            const Matrix kv = kernel_basis(id - l * l.adjoint(), options.rank_tol);
            if (kv.cols() == 1) {
                betas.push_back({gamma, kv.col(0), gap});
                basis = search_with_newest(betas.size(), du, [&](const auto& idx) {
                    basis_m = basis_margin(columns(betas, idx));
                    return basis_m > options.margin_tol;
                });
            }
        }

        if (hyper && basis) {
            GenericityCertificate cert;
            for (auto i : *hyper) cert.alphas.push_back(alphas[i]);
            for (auto i : *basis) cert.betas.push_back(betas[i]);
            cert.hyperbasis_margin = hyper_margin;
            cert.basis_margin = basis_m;
            cert.trials_used = t + 1;
            cert.seed = options.seed;
            out.status = ProbeStatus::certified;
            out.certificate = std::move(cert);
            return out;
        }
        // Both pools exhausted without a witness: further trials cannot help.
        if ((hyper || alphas.size() >= alpha_cap) && (basis || betas.size() >= beta_cap)) break;
    }
    out.status = ProbeStatus::inconclusive;
    return out;
}

CertificateCheck validate_certificate(const MatrixTuple& a, const GenericityCertificate& cert,
                                      const ProbeOptions& options) {
    CertificateCheck chk;
    const Index d = a.rows();
    if (cert.alphas.size() != static_cast<std::size_t>(d) + 1 ||
        cert.betas.size() != static_cast<std::size_t>(d)) {
        return chk;
    }
    chk.min_overlap = 1.0;
    chk.min_gap = std::numeric_limits<double>::infinity();
    bool kernels_ok = true;
    const Matrix id = Matrix::Identity(d, d);

    auto recheck = [&](const CertificatePoint& pt, bool adjoint_side) {
        const Matrix l = scalar_pencil(a, pt.point);
        Eigen::JacobiSVD<Matrix> svd(l);
        const auto& s = svd.singularValues();
        chk.max_scale_error = std::max(chk.max_scale_error, std::abs(s(0) - 1.0));
        chk.min_gap = std::min(chk.min_gap, s.size() > 1 ? s(0) - s(1) : s(0));
        const Matrix defect = adjoint_side ? Matrix(id - l * l.adjoint()) : Matrix(id - l.adjoint() * l);
        const Matrix k = kernel_basis(defect, options.rank_tol);
        if (k.cols() != 1) {
            kernels_ok = false;
            chk.min_overlap = 0.0;
            return;
        }
        chk.min_overlap = std::min(chk.min_overlap, std::abs(k.col(0).dot(pt.kernel)));
        if (min_eig_hermitian(defect) < -options.rank_tol) kernels_ok = false;
    };
    for (const auto& p : cert.alphas) recheck(p, false);
    for (const auto& p : cert.betas) recheck(p, true);

    Matrix u(d, d + 1);
    for (Index i = 0; i <= d; ++i) u.col(i) = cert.alphas[static_cast<std::size_t>(i)].kernel;
    Matrix v(d, d);
    for (Index i = 0; i < d; ++i) v.col(i) = cert.betas[static_cast<std::size_t>(i)].kernel;
    chk.hyperbasis_margin = hyperbasis_check(u);
    chk.basis_margin = basis_margin(v);

    chk.valid = kernels_ok && chk.min_overlap > 1.0 - 1e-8 && chk.max_scale_error <= 1e-10 &&
                chk.min_gap > options.gap_tol && chk.hyperbasis_margin > options.margin_tol &&
                chk.basis_margin > options.margin_tol;
    return chk;
}

} // namespace convexo
