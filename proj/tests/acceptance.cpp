// Acceptance gate: one PASS/FAIL line per criterion; exit status is the
// number of failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <numbers>
#include <string>
#include <vector>

#include "convexo/algebras.hpp"
#include "convexo/cli.hpp"
#include "convexo/convexotonic.hpp"
#include "convexo/domains.hpp"
#include "convexo/genericity.hpp"
#include "convexo/standard_tuples.hpp"
#include "convexo/verify.hpp"
#include "support/oracles.hpp"

using namespace convexo;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

const Matrix kI2 = Matrix::Identity(2, 2);

struct NamedAlgebra {
    std::string name;
    MatrixTuple j;
};

// Types I-IV plus seeded random upper-triangular algebras.
std::vector<NamedAlgebra> corpus() {
    std::vector<NamedAlgebra> out{{"type-I", standard::tuple_f()},
                                  {"type-II", standard::type_ii()},
                                  {"type-III", standard::type_iii()},
                                  {"type-IV", standard::tuple_e()}};
    Rng rng(2024);
    for (int i = 0; i < 8; ++i) out.push_back({"random-" + std::to_string(i), oracle::random_upper_algebra(rng)});
    return out;
}

Outcome c1_structure_constants() {
    const std::pair<MatrixTuple, MatrixTuple> cases[] = {
        {standard::tuple_f(), MatrixTuple{standard::unit(0, 1, 2), Matrix(Matrix::Zero(2, 2))}},
        {standard::tuple_e(), standard::tuple_e()},
        {standard::type_ii(), standard::type_ii()},
    };
    double res = 0.0, conv = 0.0, dist = 0.0;
    for (const auto& [j, expected] : cases) {
        const StructureConstants sc = structure_constants(j);
        res = std::max(res, sc.residual);
        conv = std::max(conv, sc.convexotonic_residual);
        dist = std::max(dist, sc.xi.max_distance(expected));
    }
    return {res < 1e-12 && conv < 1e-10 && dist < 1e-12,
            fmt("residual %.2e, convexotonic %.2e, |Xi - expected| %.2e", res, conv, dist)};
}

Outcome c2_pipeline() {
    Rng rng(42);
    int failures = 0;
    double worst_res = 0.0, worst_conv = 0.0;
    for (int i = 0; i < 200; ++i) {
        const MatrixTuple j = oracle::random_upper_algebra(rng);
        const StructureConstants sc = structure_constants(j);
        worst_res = std::max(worst_res, sc.residual);
        worst_conv = std::max(worst_conv, sc.convexotonic_residual);
        if (sc.residual < 1e-10 && !(sc.convexotonic_residual < 1e-9)) ++failures;
        if (!(sc.residual < 1e-10)) ++failures;
    }
    return {failures == 0, fmt("200 algebras, %.0f failures, max residual %.2e, max convexotonic %.2e",
                               failures, worst_res, worst_conv)};
}

// Points for criteria 3 and 4: half the D_J boundary scale for p o q, half the
// B_J boundary scale for q o p, 25 per level n = 1..4.
template <typename Fn>
double over_corpus(Fn&& fn, std::size_t& count) {
    double worst = 0.0;
    for (const auto& [name, j] : corpus()) {
        const MatrixTuple xi = structure_constants(j).xi;
        Rng rng(7);
        for (int s = 0; s < 100; ++s) {
            const Index n = 1 + s % 4;
            const MatrixTuple xd = sampling::spectrahedron_interior(j, rng, n);
            const MatrixTuple xb = sampling::ball_interior(j, rng, n);
            worst = std::max(worst, fn(j, xi, xd, xb));
            ++count;
        }
    }
    return worst;
}

Outcome c3_inverse_law() {
    std::size_t count = 0;
    const double worst = over_corpus(
        [](const MatrixTuple&, const MatrixTuple& xi, const MatrixTuple& xd, const MatrixTuple& xb) {
            const ConvexotonicMap q(xi, MapSign::plus);
            const ConvexotonicMap p = inverse_map(q);
            const double a = eval_map(p, eval_map(q, xd)).max_distance(xd) / std::max(1.0, xd.norm());
            const double b = eval_map(q, eval_map(p, xb)).max_distance(xb) / std::max(1.0, xb.norm());
            return std::max(a, b);
        },
        count);
    return {worst < 1e-9, fmt("%.0f points, max relative round trip %.2e", static_cast<double>(count), worst)};
}

Outcome c4_transfer() {
    std::size_t count = 0;
    const double worst = over_corpus(
        [](const MatrixTuple& j, const MatrixTuple& xi, const MatrixTuple& xd, const MatrixTuple& xb) {
            return std::max(transfer_residual(j, xi, xd, MapSign::plus),
                            transfer_residual(j, xi, xb, MapSign::minus));
        },
        count);
    return {worst < 1e-9, fmt("%.0f points, max residual %.2e", static_cast<double>(count), worst)};
}

Outcome c5_boundary_transport() {
    double worst = 0.0;
    double min_interior = INFINITY;
    std::size_t skipped = 0, total = 0;
    for (const MatrixTuple& j : {standard::tuple_f(), standard::tuple_e()}) {
        const ConvexotonicMap q(structure_constants(j).xi, MapSign::plus);
        const Spectrahedron spec(j);
        Rng rng(42);
        for (Index n = 1; n <= 3; ++n) {
            int found = 0;
            while (found < 50) {
                const MatrixTuple dir = rng.direction(j.size(), n);
                const double t = boundary_scale(spec, dir);
                if (std::isinf(t)) {
                    ++skipped;
                    continue;
                }
                ++found;
                ++total;
                const double nb = operator_norm(lambda_eval(j, eval_map(q, Complex(t) * dir)));
                const double ni = operator_norm(lambda_eval(j, eval_map(q, Complex(0.9 * t) * dir)));
                worst = std::max(worst, std::abs(nb - 1.0));
                min_interior = std::min(min_interior, 1.0 - ni);
            }
        }
    }
    return {worst <= 1e-6 && min_interior > 0.0,
            fmt("%.0f boundary points, max | ||Lambda_J(q)|| - 1 | %.2e, min interior margin %.2e",
                static_cast<double>(total), worst, min_interior) +
                fmt(", %.0f unbounded directions skipped", static_cast<double>(skipped))};
}

Outcome c6_memberships() {
    const Spectrahedron df(standard::tuple_f());
    const auto on = spec_membership(df, MatrixTuple::scalars({1.0, 1.0}), 1e-10);
    const auto off = spec_membership(df, MatrixTuple::scalars({-1.0, -1.0}), 1e-10);
    const double t = boundary_scale(df, MatrixTuple::scalars({1.0, 0.0}));
    const bool ok = on.location == Location::boundary && std::abs(on.margin) < 1e-10 &&
                    off.location == Location::exterior && std::abs(off.margin + 1.0) < 1e-10 &&
                    std::abs(t - 1.0 / std::numbers::sqrt2) < 1e-10;
    return {ok, fmt("margin(1,1) %.2e, margin(-1,-1) %.12f, t* %.12f", on.margin, off.margin, t)};
}

Outcome c7_unimodular() {
    double worst = 0.0;
    for (const Complex a : {Complex(1.0), Complex(0.0, 1.0), Complex(-1.0)}) {
        const ConvexotonicMap f(a * standard::tuple_e(), MapSign::minus);
        Rng rng(42);
        for (int s = 0; s < 50; ++s) {
            const MatrixTuple x = Complex(0.3) * rng.direction(2, 3);
            const Matrix r = (Matrix::Identity(3, 3) - a * x[0]).fullPivLu().inverse();
            const MatrixTuple closed{Matrix(x[0] * r), Matrix(r * x[1] * r)};
            worst = std::max(worst, eval_map(f, x).max_distance(closed));
        }
    }
    const ConvexotonicMap f1(standard::tuple_e(), MapSign::minus);
    const double spot = eval_map(f1, MatrixTuple::scalars({0.25, 0.125}))
                            .max_distance(MatrixTuple::scalars({1.0 / 3.0, 2.0 / 9.0}));
    return {worst < 1e-10 && spot < 1e-10, fmt("closed form %.2e, spot value %.2e", worst, spot)};
}

Outcome c8_composition() {
    double worst = 0.0;
    const Matrix e2 = standard::tuple_e()[1];
    for (const Complex a : {Complex(1.0), Complex(0.0, 1.0), Complex(-1.0)}) {
        const MatrixTuple xi{Matrix(a * kI2 + e2), Matrix(a * e2)};
        const ConvexotonicMap composed(xi, MapSign::minus);
        const ConvexotonicMap f(a * standard::tuple_e(), MapSign::minus);
        Rng rng(42);
        for (int s = 0; s < 50; ++s) {
            const MatrixTuple x = Complex(0.3) * rng.direction(2, 3);
            const MatrixTuple inner{x[0], Matrix(x[1] + x[0] * x[0])};
            worst = std::max(worst, eval_map(composed, x).max_distance(eval_map(f, inner)));
        }
    }
    return {worst < 1e-9, fmt("max |composed - f o (x1, x2 + x1^2)| %.2e", worst)};
}

Outcome c9_sv_probe() {
    ProbeOptions o;
    o.trials = 10000;
    o.seed = 42;
    const MatrixTuple e = standard::tuple_e();
    const ProbeOutcome pe = sv_probe(e, o);
    const bool certified = pe.status == ProbeStatus::certified && pe.certificate &&
                           validate_certificate(e, *pe.certificate, o).valid;
    const ProbeOutcome pf = sv_probe(standard::tuple_f(), o);
    auto has = [](const ProbeOutcome& p, Obstruction ob) {
        const auto& f = p.conditions.failures;
        return std::find(f.begin(), f.end(), ob) != f.end();
    };
    const bool f_rejected = pf.status == ProbeStatus::rejected && pf.trials_used == 0 &&
                            (has(pf, Obstruction::nilpotent) || has(pf, Obstruction::joint_kernel));
    const ProbeOutcome pb = sv_probe(ball_to_spectrahedron(Spectraball(e)).coefficients(), o);
    const bool b_rejected = pb.status == ProbeStatus::rejected && has(pb, Obstruction::nilpotent);
    return {certified && f_rejected && b_rejected,
            fmt("E certified in %.0f trials (revalidated %.0f); F rejected %.0f", static_cast<double>(pe.trials_used),
                certified, f_rejected) +
                fmt("; ball embedding rejected %.0f", b_rejected)};
}

Outcome c10_theorem() {
    const MatrixTuple e = standard::tuple_e();
    bool ok = verify_theorem_main({e, e, kI2, kI2}).passed();
    for (const Complex a : {Complex(1.0), Complex(0.0, 1.0), Complex(-1.0), Rng(42).unimodular()}) {
        ok = ok && verify_theorem_main({e, a * e, Matrix(a * kI2), kI2}).passed();
    }
    const VerificationReport swap = verify_theorem_main({e, e, standard::swap2(), kI2});
    const Check* item2 = swap.find("item2-EZE-structure-constants");
    const bool swap_ok = !swap.passed() && item2 && !item2->passed && item2->note == "SpanViolation";
    return {ok && swap_ok, fmt("rescaled data pass %.0f; swap fails with SpanViolation at item 2 %.0f (residual %.2e)",
                               ok, swap_ok, item2 ? item2->residual : NAN)};
}

Outcome c11_free_function() {
    Rng rng(42);
    double ds = 0.0, sim = 0.0;
    const auto all = corpus();
    for (int s = 0; s < 100; ++s) {
        const MatrixTuple& j = all[static_cast<std::size_t>(s) % all.size()].j;
        const ConvexotonicMap p(structure_constants(j).xi, MapSign::minus);
        const MatrixTuple x = sampling::ball_interior(j, rng, 1 + s % 3);
        const MatrixTuple y = sampling::ball_interior(j, rng, 1 + (s + 1) % 3);
        ds = std::max(ds, eval_map(p, direct_sum(x, y)).max_distance(direct_sum(eval_map(p, x), eval_map(p, y))));
        const Matrix sm = Matrix::Identity(x.rows(), x.rows()) + Complex(0.3) * rng.direction(1, x.rows())[0];
        sim = std::max(sim, eval_map(p, x.similarity(sm)).max_distance(eval_map(p, x).similarity(sm)));
    }
    // p'(0)[H] = H by central differences with one Richardson step.
    double fd = 0.0;
    for (const auto& [name, j] : all) {
        const ConvexotonicMap p(structure_constants(j).xi, MapSign::minus);
        const MatrixTuple h = rng.direction(j.size(), 3);
        auto central = [&](double step) {
            return Complex(1.0 / (2.0 * step)) * (eval_map(p, Complex(step) * h) - eval_map(p, Complex(-step) * h));
        };
        const MatrixTuple d1 = central(1e-4), d2 = central(5e-5);
        const MatrixTuple rich = Complex(4.0 / 3.0) * d2 - Complex(1.0 / 3.0) * d1;
        fd = std::max(fd, rich.max_distance(h));
    }
    return {ds < 1e-9 && sim < 1e-9 && fd < 1e-8,
            fmt("direct sum %.2e, similarity %.2e, p'(0) - I %.2e", ds, sim, fd)};
}

Outcome c12_examples() {
    const auto t0 = std::chrono::steady_clock::now();
    std::ostringstream out, err;
    const char* argv[] = {"convexo", "examples"};
    const int code = cli::run(2, argv, out, err);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const std::string text = out.str();
    const bool warning = text.find("(x1, x2 + x1^2)") != std::string::npos &&
                         text.find("(x1, x2 - x1^2)") != std::string::npos &&
                         text.find("Verified map") != std::string::npos;
    return {code == 0 && secs < 60.0 && warning,
            fmt("exit %.0f in %.2f s, sign warning present %.0f", code, secs, warning)};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"structure constants of F, E, R", c1_structure_constants},
        {"random upper-triangular pipeline", c2_pipeline},
        {"inverse law p o q = q o p = id", c3_inverse_law},
        {"transfer identity", c4_transfer},
        {"boundary transport types I and IV", c5_boundary_transport},
        {"type I memberships and boundary scale", c6_memberships},
        {"unimodular closed form", c7_unimodular},
        {"composed map", c8_composition},
        {"sv-probe", c9_sv_probe},
        {"verify-theorem", c10_theorem},
        {"free-function laws", c11_free_function},
        {"examples catalog", c12_examples},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o{false, ""};
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed;
}
