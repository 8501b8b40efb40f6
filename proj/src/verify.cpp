#include "convexo/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "convexo/algebras.hpp"
#include "convexo/domains.hpp"
#include "convexo/genericity.hpp"
#include "convexo/standard_tuples.hpp"

namespace convexo {

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* VerificationReport::find(std::string_view check_name) const {
    for (const auto& c : checks) {
        if (c.name == check_name) return &c;
    }
    return nullptr;
}

void VerificationReport::absorb(const VerificationReport& other, const std::string& prefix) {
    for (Check c : other.checks) {
        c.name = prefix + "/" + c.name;
        checks.push_back(std::move(c));
    }
    for (const auto& w : other.warnings) warnings.push_back(prefix + ": " + w);
}

void TheoremData::validate(double tol) const {
    const Index d = e.rows();
    if (!e.is_square() || !b.is_square() || b.rows() != d || b.size() != e.size()) {
        throw Error(ErrorKind::ShapeMismatch, "E and B must be g-tuples of d x d matrices");
    }
    const Matrix id = Matrix::Identity(d, d);
    if (z.rows() != d || z.cols() != d || m.rows() != d || m.cols() != d) {
        throw Error(ErrorKind::ShapeMismatch, "Z and M must be d x d");
    }
    const double zr = (z.adjoint() * z - id).norm();
    if (zr >= tol) throw Error(ErrorKind::NotUnitary, "Z is not unitary", zr);
    const double mr = (m.adjoint() * m - id).norm();
    if (mr >= tol) throw Error(ErrorKind::NotUnitary, "M is not unitary", mr);
    if (!linear_independent(e)) throw Error(ErrorKind::DependentInput, "E is linearly dependent");
}

namespace sampling {

Index level_for(std::size_t s, Index max_level) {
    return 1 + static_cast<Index>(s % static_cast<std::size_t>(max_level));
}

MatrixTuple spectrahedron_interior(const MatrixTuple& j, Rng& rng, Index n, double fraction) {
    const MatrixTuple dir = rng.direction(j.size(), n);
    double t = boundary_scale(Spectrahedron(j), dir);
    if (std::isinf(t)) t = boundary_scale(Spectraball(j), dir);
    return Complex(fraction * t) * dir;
}

MatrixTuple ball_interior(const MatrixTuple& j, Rng& rng, Index n, double fraction) {
    const MatrixTuple dir = rng.direction(j.size(), n);
    return Complex(fraction * boundary_scale(Spectraball(j), dir)) * dir;
}

} // namespace sampling

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

Matrix inverse(const Matrix& m) { return m.partialPivLu().inverse(); }

// f(x) = (x1 (1 - a x1)^-1, (1 - a x1)^-1 x2 (1 - a x1)^-1)
MatrixTuple unimodular_closed_form(Complex alpha, const MatrixTuple& x) {
    const Index n = x.rows();
    const Matrix r = inverse(Matrix::Identity(n, n) - alpha * x[0]);
    return MatrixTuple{Matrix(x[0] * r), Matrix(r * x[1] * r)};
}

// (1 - a x1)^-1 [x2 + x1^2] (1 - a x1)^-1 in the second slot.
MatrixTuple composed_closed_form(Complex alpha, const MatrixTuple& x) {
    const Index n = x.rows();
    const Matrix r = inverse(Matrix::Identity(n, n) - alpha * x[0]);
    return MatrixTuple{Matrix(x[0] * r), Matrix(r * (x[1] + x[0] * x[0]) * r)};
}

MatrixTuple type_i_candidate(const MatrixTuple& x, double sign) {
    return MatrixTuple{x[0], Matrix(x[1] + sign * x[0] * x[0])};
}

double relative_distance(const MatrixTuple& a, const MatrixTuple& b) {
    return a.max_distance(b) / std::max(1.0, b.norm());
}

// Records a DomainBreach or SpanViolation from one sample without aborting
// the whole check.
template <typename Fn>
bool guarded(Check& c, Fn&& fn) {
    try {
        fn();
        return true;
    } catch (const Error& e) {
        c.passed = false;
        if (!c.note.empty()) c.note += "; ";
        c.note += std::string(to_string(e.kind()));
        return false;
    }
}

} // namespace

// ---------------------------------------------------------------------------

VerificationReport verify_theorem_main(const TheoremData& data, const VerifyOptions& options) {
    data.validate();
    VerificationReport rep;
    rep.name = "theorem";
    const MatrixTuple& e = data.e;
    const MatrixTuple& b = data.b;

    Check item1{"item1-B-equals-MZEM"};
    {
        const MatrixTuple rhs = e.sandwich(data.m.adjoint() * data.z, data.m);
        item1.residual = b.max_distance(rhs);
        item1.passed = item1.residual < options.tol;
        item1.samples = e.size();
    }
    rep.checks.push_back(item1);

    std::optional<MatrixTuple> xi;
    Check item2{"item2-EZE-structure-constants"};
    try {
        const StructureConstants sc = pencil_structure_constants(e, data.z);
        xi = sc.xi;
        item2.residual = sc.residual;
        item2.passed = true;
    } catch (const Error& err) {
        if (err.kind() != ErrorKind::SpanViolation) throw;
        item2.residual = err.value();
        item2.note = "SpanViolation";
    }
    rep.checks.push_back(item2);

    Check item3{"item3-B-spans-algebra-same-constants"};
    try {
        const StructureConstants sb = structure_constants(b);
        if (xi) {
            item3.residual = std::max(sb.residual, sb.xi.max_distance(*xi));
            item3.passed = item3.residual < options.tol;
        } else {
            item3.residual = sb.residual;
            item3.note = "B spans an algebra but no constants from item 2 to compare";
        }
    } catch (const Error& err) {
        if (err.kind() != ErrorKind::SpanViolation) throw;
        item3.residual = err.value();
        item3.note = "SpanViolation";
    }
    rep.checks.push_back(item3);

    Check item4{"item4-convexotonic-map-into-DB"};
    if (!xi) {
        item4.note = "not attempted: item 2 produced no constants";
        rep.checks.push_back(item4);
        return rep;
    }
    const double conv = convexotonic_residual(*xi);
    item4.passed = conv <= options.tol;
    item4.residual = conv;
    if (item4.passed) {
        const ConvexotonicMap p(*xi, MapSign::minus, options.tol);
        const Spectraball ball(e);
        const Spectrahedron target(b);
        Rng rng(options.seed);
        double worst = 0.0;
        for (std::size_t s = 0; s < options.samples; ++s) {
            const Index n = sampling::level_for(s, 3);
            const MatrixTuple x = sampling::ball_interior(e, rng, n, 0.9);
            ++item4.samples;
            guarded(item4, [&] {
                const double margin = spec_membership(target, eval_map(p, x)).margin;
                worst = std::max(worst, -margin);
            });
        }
        item4.residual = std::max(conv, worst);
        item4.passed = item4.passed && worst <= options.tol;
    } else {
        item4.note = "Xi is not convexotonic";
    }
    rep.checks.push_back(item4);
    return rep;
}

VerificationReport verify_ball_equality(const MatrixTuple& e, const MatrixTuple& b,
                                        const VerifyOptions& options) {
    if (e.size() != b.size()) {
        throw Error(ErrorKind::TupleLengthMismatch, "ball equality needs tuples of equal length");
    }
    VerificationReport rep;
    rep.name = "ball-equality";
    Check c{"norm-deviation"};
    Rng rng(options.seed);
    for (std::size_t s = 0; s < options.samples; ++s) {
        const MatrixTuple x = rng.gaussian_tuple(e.size(), sampling::level_for(s, 3));
        const double dev =
            std::abs(operator_norm(lambda_eval(e, x)) - operator_norm(lambda_eval(b, x)));
        c.residual = std::max(c.residual, dev);
        ++c.samples;
    }
    c.passed = c.residual < options.tol;
    rep.checks.push_back(c);
    return rep;
}

VerificationReport verify_properness(const MatrixTuple& j, const VerifyOptions& options) {
    VerificationReport rep;
    rep.name = "properness";
    Check constants{"structure-constants"};
    std::optional<StructureConstants> sc;
    guarded(constants, [&] {
        sc = structure_constants(j);
        constants.residual = sc->residual;
        constants.passed = true;
    });
    rep.checks.push_back(constants);
    if (!sc) return rep;

    const ConvexotonicMap q(sc->xi, MapSign::plus);
    const ConvexotonicMap p = inverse_map(q);
    const Spectrahedron spec(j);
    const Spectraball ball(j);

    Check interior{"interior-to-interior", true};
    Check boundary{"boundary-to-boundary", true};
    Check round_trip{"p-inverts-q", true};
    double min_margin = std::numeric_limits<double>::infinity();

    Rng rng(options.seed);
    for (std::size_t s = 0; s < options.samples; ++s) {
        const Index n = sampling::level_for(s, 3);
        const MatrixTuple dir = rng.direction(j.size(), n);
        const double t = boundary_scale(spec, dir);
        if (std::isinf(t)) {
            ++interior.skipped;
            ++boundary.skipped;
            ++round_trip.skipped;
            continue;
        }
        const MatrixTuple xi = Complex(0.9 * t) * dir;
        const MatrixTuple xb = Complex(t) * dir;
        ++interior.samples;
        guarded(interior, [&] {
            const MatrixTuple y = eval_map(q, xi);
            const double margin = ball_membership(ball, y).margin;
            min_margin = std::min(min_margin, margin);
            if (margin <= 0.0) interior.passed = false;
            ++round_trip.samples;
            guarded(round_trip, [&] {
                const double r = relative_distance(eval_map(p, y), xi);
                round_trip.residual = std::max(round_trip.residual, r);
            });
        });
        ++boundary.samples;
        guarded(boundary, [&] {
            const double margin = ball_membership(ball, eval_map(q, xb)).margin;
            boundary.residual = std::max(boundary.residual, std::abs(margin));
        });
    }
    interior.residual = std::isinf(min_margin) ? 0.0 : min_margin;
    interior.note = "residual is the smallest image margin";
    boundary.passed = boundary.passed && boundary.residual < options.boundary_tol;
    round_trip.passed = round_trip.passed && round_trip.residual < options.tol;
    rep.checks.push_back(interior);
    rep.checks.push_back(boundary);
    rep.checks.push_back(round_trip);

    const Index levels[] = {1, 2, 3};
    const BoundednessReport bounded = boundedness_probe(spec, levels, 10, options.seed);
    Check closed{"bounded-boundary-correspondence", true};
    if (bounded.unbounded) {
        closed.note = "skipped: D_J has an unbounded direction";
        closed.skipped = 1;
    } else {
        Rng brng(options.seed + 1);
        for (std::size_t s = 0; s < options.samples; ++s) {
            const Index n = sampling::level_for(s, 3);
            const MatrixTuple x = sampling::ball_interior(j, brng, n, 1.0);
            ++closed.samples;
            guarded(closed, [&] {
                const MatrixTuple y = eval_map(p, x);
                const double margin = spec_membership(spec, y).margin;
                const double back = relative_distance(eval_map(q, y), x);
                closed.residual = std::max({closed.residual, std::abs(margin), back});
            });
        }
        closed.passed = closed.passed && closed.residual < options.boundary_tol;
    }
    rep.checks.push_back(closed);
    return rep;
}

VerificationReport verify_corollary(const MatrixTuple& a, const VerifyOptions& options) {
    VerificationReport rep;
    rep.name = "corollary";
    const AlgebraClosure closure = algebra_closure(a);
    const MatrixTuple& jt = closure.extended;
    const std::size_t g = a.size();
    const std::size_t gh = jt.size();

    Check cl{"closure", true};
    cl.residual = static_cast<double>(closure.appended_count);
    cl.note = "residual holds the appended count h";
    rep.checks.push_back(cl);

    const StructureConstants sc = structure_constants(jt);
    const ConvexotonicMap q(sc.xi, MapSign::plus);
    const Spectrahedron spec_a(a);
    const Spectraball ball_j(jt);

    auto padded = [&](const MatrixTuple& x) {
        std::vector<Matrix> ms(x.begin(), x.end());
        ms.resize(gh, Matrix::Zero(x.rows(), x.cols()));
        return MatrixTuple(std::move(ms));
    };

    Check interior{"interior-to-interior", true};
    Check boundary{"boundary-to-boundary", true};
    Check injective{"injective-on-samples", true};
    std::vector<std::vector<std::pair<MatrixTuple, MatrixTuple>>> by_level(4);
    double min_margin = std::numeric_limits<double>::infinity();

    Rng rng(options.seed);
    for (std::size_t s = 0; s < options.samples; ++s) {
        const Index n = sampling::level_for(s, 3);
        const MatrixTuple dir = rng.direction(g, n);
        const double t = boundary_scale(spec_a, dir);
        if (std::isinf(t)) {
            ++interior.skipped;
            ++boundary.skipped;
            continue;
        }
        const MatrixTuple xi = Complex(0.9 * t) * dir;
        ++interior.samples;
        guarded(interior, [&] {
            MatrixTuple y = eval_map(q, padded(xi));
            const double margin = ball_membership(ball_j, y).margin;
            min_margin = std::min(min_margin, margin);
            if (margin <= 0.0) interior.passed = false;
            by_level[static_cast<std::size_t>(n)].emplace_back(xi, std::move(y));
        });
        ++boundary.samples;
        guarded(boundary, [&] {
            const MatrixTuple y = eval_map(q, padded(Complex(t) * dir));
            boundary.residual = std::max(boundary.residual, std::abs(ball_membership(ball_j, y).margin));
        });
    }
    interior.residual = std::isinf(min_margin) ? 0.0 : min_margin;
    interior.note = "residual is the smallest image margin";
    boundary.passed = boundary.passed && boundary.residual < options.boundary_tol;

    double min_gap = std::numeric_limits<double>::infinity();
    for (const auto& level : by_level) {
        for (std::size_t i = 0; i < level.size(); ++i) {
            for (std::size_t k = i + 1; k < level.size(); ++k) {
                if (level[i].first.max_distance(level[k].first) == 0.0) continue;
                ++injective.samples;
                min_gap = std::min(min_gap, level[i].second.max_distance(level[k].second));
            }
        }
    }
    injective.residual = std::isinf(min_gap) ? 0.0 : min_gap;
    injective.passed = injective.samples == 0 || min_gap > 0.0;
    injective.note = "residual is the smallest image gap between distinct samples";

    rep.checks.push_back(interior);
    rep.checks.push_back(boundary);
    rep.checks.push_back(injective);
    return rep;
}

ScalarUnitaryFit search_scalar_unitary(const MatrixTuple& e, const MatrixTuple& b) {
    ScalarUnitaryFit best{Complex(1.0), std::numeric_limits<double>::infinity()};
    for (int k = 0; k < 360; ++k) {
        const Complex alpha = std::polar(1.0, 2.0 * std::numbers::pi * k / 360.0);
        const double r = b.max_distance(alpha * e);
        if (r < best.residual) best = {alpha, r};
    }
    return best;
}

// ---------------------------------------------------------------------------
// Example catalog

namespace {

constexpr double kClosedFormTol = 1e-10;
constexpr double kCompositionTol = 1e-9;

MatrixTuple small_point(Rng& rng, Index n, double radius = 0.3) {
    return Complex(radius) * rng.direction(2, n);
}

Check compare_maps(const std::string& name, std::size_t count, Rng& rng, double tol,
                   const std::function<MatrixTuple(const MatrixTuple&)>& lhs,
                   const std::function<MatrixTuple(const MatrixTuple&)>& rhs) {
    Check c{name, true};
    for (std::size_t s = 0; s < count; ++s) {
        const MatrixTuple x = small_point(rng, 3);
        ++c.samples;
        guarded(c, [&] { c.residual = std::max(c.residual, lhs(x).max_distance(rhs(x))); });
    }
    c.passed = c.passed && c.residual < tol;
    return c;
}

Check constants_match(const std::string& name, const MatrixTuple& j, const MatrixTuple& expected) {
    Check c{name};
    guarded(c, [&] {
        const StructureConstants sc = structure_constants(j);
        c.residual = std::max(sc.xi.max_distance(expected), sc.convexotonic_residual);
        c.passed = sc.residual < 1e-12 && c.residual < 1e-10;
    });
    return c;
}

struct TransportCount {
    std::size_t passed = 0;
    std::size_t total = 0;
};

// Boundary points of D_F mapped by `map` must land on the boundary of B_E and
// interior points inside it.
TransportCount transport(const std::function<MatrixTuple(const MatrixTuple&)>& map,
                         std::uint64_t seed, std::size_t samples) {
    const MatrixTuple f = standard::tuple_f();
    const Spectrahedron df(f);
    const Spectraball be(standard::tuple_e());
    Rng rng(seed);
    TransportCount out;
    for (std::size_t s = 0; s < samples; ++s) {
        const Index n = sampling::level_for(s, 3);
        const MatrixTuple dir = rng.direction(2, n);
        const double t = boundary_scale(df, dir);
        if (std::isinf(t)) continue;
        const double mb = ball_membership(be, map(Complex(t) * dir)).margin;
        const double mi = ball_membership(be, map(Complex(0.9 * t) * dir)).margin;
        ++out.total;
        if (std::abs(mb) < 1e-6 && mi > 0.0) ++out.passed;
    }
    return out;
}

VerificationReport catalog_type_i(std::uint64_t seed) {
    VerificationReport rep;
    const MatrixTuple f = standard::tuple_f();
    const MatrixTuple e = standard::tuple_e();
    const Spectrahedron df(f);

    rep.checks.push_back(constants_match(
        "structure-constants", f,
        MatrixTuple{standard::unit(0, 1, 2), Matrix::Zero(2, 2)}));

    {
        Check c{"(1,1)-on-boundary"};
        const auto v = spec_membership(df, MatrixTuple::scalars({1.0, 1.0}), 1e-10);
        c.residual = std::abs(v.margin);
        c.passed = v.location == Location::boundary;
        rep.checks.push_back(c);
    }
    {
        Check c{"-(1,1)-exterior"};
        const auto v = spec_membership(df, MatrixTuple::scalars({-1.0, -1.0}), 1e-10);
        c.residual = std::abs(v.margin + 1.0);
        c.passed = v.location == Location::exterior && c.residual < 1e-10;
        rep.checks.push_back(c);
    }
    {
        Check c{"boundary-scale-(1,0)"};
        const double t = boundary_scale(df, MatrixTuple::scalars({1.0, 0.0}));
        c.residual = std::abs(t - 1.0 / std::numbers::sqrt2);
        c.passed = c.residual < 1e-10;
        rep.checks.push_back(c);
    }

    VerifyOptions opts;
    opts.seed = seed;
    rep.absorb(verify_ball_equality(f, e, opts), "B_F-equals-B_E");

    const ConvexotonicMap q(structure_constants(f).xi, MapSign::plus);
    const ConvexotonicMap p = inverse_map(q);
    Rng rng(seed + 11);
    rep.checks.push_back(compare_maps(
        "q-closed-form-(x1,x2-x1^2)", 50, rng, kClosedFormTol,
        [&](const MatrixTuple& x) { return eval_map(q, x); },
        [](const MatrixTuple& x) { return type_i_candidate(x, -1.0); }));
    rep.checks.push_back(compare_maps(
        "p-closed-form-(x1,x2+x1^2)", 50, rng, kClosedFormTol,
        [&](const MatrixTuple& x) { return eval_map(p, x); },
        [](const MatrixTuple& x) { return type_i_candidate(x, 1.0); }));

    // Which candidate carries D_F onto B_E?
    constexpr std::size_t kTransportSamples = 60;
    const TransportCount minus = transport(
        [](const MatrixTuple& x) { return type_i_candidate(x, -1.0); }, seed + 12, kTransportSamples);
    const TransportCount plus = transport(
        [](const MatrixTuple& x) { return type_i_candidate(x, 1.0); }, seed + 12, kTransportSamples);
    Check tr{"convexotonic-q-transports-D_F-to-B_E"};
    tr.samples = minus.total;
    tr.residual = static_cast<double>(minus.total - minus.passed);
    tr.passed = minus.total > 0 && minus.passed == minus.total;
    tr.note = "residual counts failing samples";
    rep.checks.push_back(tr);

    std::ostringstream w;
    w << "sign convention: the map (x1, x2 + x1^2) transports the boundary of D_F to the boundary "
         "of B_E on "
      << plus.passed << "/" << plus.total << " samples; the convexotonic map (x1, x2 - x1^2) on "
      << minus.passed << "/" << minus.total
      << " samples. Verified map D_F -> B_E: q(x1, x2) = (x1, x2 - x1^2); (x1, x2 + x1^2) is its "
         "inverse p: B_E -> D_F.";
    rep.warnings.push_back(w.str());

    VerifyOptions popts;
    popts.seed = seed;
    rep.absorb(verify_properness(f, popts), "properness");
    return rep;
}

VerificationReport catalog_types_ii_iii(std::uint64_t seed) {
    VerificationReport rep;
    const MatrixTuple r2 = standard::type_ii();
    const MatrixTuple r3 = standard::type_iii();
    rep.checks.push_back(constants_match("type-II-structure-constants", r2, r2));
    rep.checks.push_back(constants_match(
        "type-III-structure-constants", r3,
        MatrixTuple{Matrix::Identity(2, 2), Matrix::Zero(2, 2)}));

    const ConvexotonicMap q2(structure_constants(r2).xi, MapSign::plus);
    const ConvexotonicMap q3(structure_constants(r3).xi, MapSign::plus);
    Rng rng(seed + 21);
    rep.checks.push_back(compare_maps(
        "type-II-q-closed-form", 50, rng, kClosedFormTol,
        [&](const MatrixTuple& x) { return eval_map(q2, x); },
        [](const MatrixTuple& x) {
            const Matrix r = inverse(Matrix::Identity(x.rows(), x.rows()) + x[0]);
            return MatrixTuple{Matrix(r * x[0]), Matrix(r * x[1])};
        }));
    rep.checks.push_back(compare_maps(
        "type-III-q-closed-form", 50, rng, kClosedFormTol,
        [&](const MatrixTuple& x) { return eval_map(q3, x); },
        [](const MatrixTuple& x) {
            const Matrix r = inverse(Matrix::Identity(x.rows(), x.rows()) + x[0]);
            return MatrixTuple{Matrix(x[0] * r), Matrix(x[1] * r)};
        }));

    const MatrixTuple witness{standard::rotation2(), Matrix::Zero(2, 2)};
    for (const auto& [label, r] : {std::pair{"type-II", r2}, std::pair{"type-III", r3}}) {
        Check c{std::string(label) + "-unbounded-witness"};
        const double t = boundary_scale(Spectrahedron(r), witness);
        const auto v = ball_membership(Spectraball(r), witness);
        c.passed = std::isinf(t) && v.location != Location::exterior;
        c.note = "rotation direction stays in D_R for all scales and lies in B_R";
        rep.checks.push_back(c);
    }

    // The rotation witness is attained by q from a boundary point of D_R;
    // (I, 0) in B_R is a point outside the range.
    {
        Check c{"type-II-range-of-q"};
        const ConvexotonicMap p2 = inverse_map(q2);
        guarded(c, [&] {
            const MatrixTuple y = eval_map(p2, witness);
            const auto v = spec_membership(Spectrahedron(r2), y);
            const double back = eval_map(q2, y).max_distance(witness);
            const MatrixTuple id{Matrix::Identity(2, 2), Matrix::Zero(2, 2)};
            const bool id_in_ball = ball_membership(Spectraball(r2), id).location != Location::exterior;
            const bool id_outside = !map_domain_check(p2, id);
            c.residual = back;
            c.passed = id_in_ball && id_outside;
            std::ostringstream w;
            w << "type II range: the rotation witness ((0,-1;1,0), 0) equals q(p(W)) with p(W) on the "
              << to_string(v.location) << " of D_R (margin " << fmt(v.margin) << ", round trip "
              << fmt(back) << "); (I, 0) lies in B_R but outside the range of q.";
            rep.warnings.push_back(w.str());
        });
        rep.checks.push_back(c);
    }
    return rep;
}

VerificationReport catalog_type_iv(std::uint64_t seed) {
    VerificationReport rep;
    const MatrixTuple e = standard::tuple_e();
    rep.checks.push_back(constants_match("structure-constants", e, e));
    const ConvexotonicMap q(structure_constants(e).xi, MapSign::plus);
    Rng rng(seed + 31);
    rep.checks.push_back(compare_maps(
        "q-closed-form", 50, rng, kClosedFormTol,
        [&](const MatrixTuple& x) { return eval_map(q, x); },
        [](const MatrixTuple& x) {
            const Matrix r = inverse(Matrix::Identity(x.rows(), x.rows()) + x[0]);
            return MatrixTuple{Matrix(x[0] * r), Matrix(r * x[1] * r)};
        }));
    VerifyOptions opts;
    opts.seed = seed;
    rep.absorb(verify_properness(e, opts), "properness");
    return rep;
}

std::vector<Complex> catalog_alphas(std::uint64_t seed) {
    Rng rng(seed + 41);
    return {Complex(1.0), Complex(0.0, 1.0), Complex(-1.0), rng.unimodular()};
}

VerificationReport catalog_unimodular(std::uint64_t seed) {
    VerificationReport rep;
    const MatrixTuple e = standard::tuple_e();
    {
        Check c{"spot-value-alpha-1-(1/4,1/8)"};
        const ConvexotonicMap f(e, MapSign::minus);
        const MatrixTuple y = eval_map(f, MatrixTuple::scalars({0.25, 0.125}));
        c.residual = y.max_distance(MatrixTuple::scalars({1.0 / 3.0, 2.0 / 9.0}));
        c.passed = c.residual < kClosedFormTol;
        rep.checks.push_back(c);
    }
    int idx = 0;
    for (const Complex alpha : catalog_alphas(seed)) {
        const std::string tag = "alpha" + std::to_string(idx++);
        const ConvexotonicMap f(alpha * e, MapSign::minus);
        Rng rng(seed + 42 + static_cast<std::uint64_t>(idx));
        rep.checks.push_back(compare_maps(
            tag + "-closed-form", 50, rng, kClosedFormTol,
            [&](const MatrixTuple& x) { return eval_map(f, x); },
            [&](const MatrixTuple& x) { return unimodular_closed_form(alpha, x); }));

        TheoremData data{e, alpha * e, alpha * Matrix::Identity(2, 2), Matrix::Identity(2, 2)};
        VerifyOptions opts;
        opts.seed = seed;
        opts.samples = 12;
        rep.absorb(verify_theorem_main(data, opts), tag + "-theorem");
    }
    return rep;
}

VerificationReport catalog_composition(std::uint64_t seed) {
    VerificationReport rep;
    const MatrixTuple e = standard::tuple_e();
    const Matrix e2 = e[1];
    const ConvexotonicMap p_f(structure_constants(standard::tuple_f()).xi, MapSign::minus);
    int idx = 0;
    for (const Complex alpha : catalog_alphas(seed)) {
        const std::string tag = "alpha" + std::to_string(idx++);
        const MatrixTuple xi{Matrix(alpha * Matrix::Identity(2, 2) + e2), Matrix(alpha * e2)};
        Check conv{tag + "-convexotonic"};
        conv.residual = convexotonic_residual(xi);
        conv.passed = conv.residual < kClosedFormTol;
        rep.checks.push_back(conv);

        const ConvexotonicMap composed(xi, MapSign::minus);
        const ConvexotonicMap f(alpha * e, MapSign::minus);
        Rng rng(seed + 51 + static_cast<std::uint64_t>(idx));
        rep.checks.push_back(compare_maps(
            tag + "-equals-f-after-(x1,x2+x1^2)", 50, rng, kCompositionTol,
            [&](const MatrixTuple& x) { return eval_map(composed, x); },
            [&](const MatrixTuple& x) { return eval_map(f, eval_map(p_f, x)); }));
        rep.checks.push_back(compare_maps(
            tag + "-composition-closed-form", 50, rng, kCompositionTol,
            [&](const MatrixTuple& x) { return eval_map(f, eval_map(p_f, x)); },
            [&](const MatrixTuple& x) { return composed_closed_form(alpha, x); }));

        Check zero{tag + "-at-origin"};
        const MatrixTuple z = MatrixTuple::zeros(2, 3, 3);
        zero.residual = std::max(eval_map(composed, z).norm(), eval_map(f, eval_map(p_f, z)).norm());
        zero.passed = zero.residual == 0.0;
        rep.checks.push_back(zero);
    }
    return rep;
}

VerificationReport catalog_genericity(std::uint64_t seed) {
    VerificationReport rep;
    ProbeOptions opts;
    opts.seed = seed;
    {
        Check c{"E-certified"};
        const ProbeOutcome out = sv_probe(standard::tuple_e(), opts);
        if (out.certificate) {
            const CertificateCheck chk = validate_certificate(standard::tuple_e(), *out.certificate, opts);
            c.passed = chk.valid;
            c.residual = 1.0 - chk.min_overlap;
            c.samples = out.trials_used;
        }
        rep.checks.push_back(c);
    }
    auto rejected = [&](const std::string& name, const MatrixTuple& a, Obstruction need) {
        Check c{name};
        const ProbeOutcome out = sv_probe(a, opts);
        c.passed = out.status == ProbeStatus::rejected &&
                   std::find(out.conditions.failures.begin(), out.conditions.failures.end(), need) !=
                       out.conditions.failures.end();
        for (auto o : out.conditions.failures) {
            if (!c.note.empty()) c.note += ",";
            c.note += std::string(to_string(o));
        }
        rep.checks.push_back(c);
    };
    rejected("F-rejected", standard::tuple_f(), Obstruction::nilpotent);
    rejected("ball-embedding-of-E-rejected",
             ball_to_spectrahedron(Spectraball(standard::tuple_e())).coefficients(),
             Obstruction::nilpotent);
    return rep;
}

VerificationReport catalog_transfer(std::uint64_t seed) {
    VerificationReport rep;
    const std::pair<const char*, MatrixTuple> corpus[] = {
        {"type-I", standard::tuple_f()},
        {"type-II", standard::type_ii()},
        {"type-III", standard::type_iii()},
        {"type-IV", standard::tuple_e()},
    };
    for (const auto& [label, j] : corpus) {
        const MatrixTuple xi = structure_constants(j).xi;
        Check c{std::string(label), true};
        Rng rng(seed + 61);
        for (std::size_t s = 0; s < 30; ++s) {
            const Index n = sampling::level_for(s, 3);
            const MatrixTuple xq = sampling::spectrahedron_interior(j, rng, n);
            const MatrixTuple xp = sampling::ball_interior(j, rng, n);
            c.samples += 2;
            guarded(c, [&] {
                c.residual = std::max({c.residual, transfer_residual(j, xi, xq, MapSign::plus),
                                       transfer_residual(j, xi, xp, MapSign::minus)});
            });
        }
        c.passed = c.passed && c.residual < kCompositionTol;
        rep.checks.push_back(c);
    }
    return rep;
}

} // namespace

VerificationReport example_catalog(std::uint64_t seed) {
    VerificationReport rep;
    rep.name = "examples";
    rep.absorb(catalog_type_i(seed), "a-type-I");
    rep.absorb(catalog_types_ii_iii(seed), "b-types-II-III");
    rep.absorb(catalog_type_iv(seed), "c-type-IV");
    rep.absorb(catalog_unimodular(seed), "d-unimodular");
    rep.absorb(catalog_composition(seed), "e-f-composition");
    rep.absorb(catalog_genericity(seed), "g-sv-genericity");
    rep.absorb(catalog_transfer(seed), "h-transfer-identity");
    return rep;
}

} // namespace convexo
