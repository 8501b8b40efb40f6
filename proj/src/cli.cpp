#include "convexo/cli.hpp"

#include <functional>
#include <string>

#include <CLI11.hpp>

#include "convexo/algebras.hpp"
#include "convexo/convexotonic.hpp"
#include "convexo/domains.hpp"
#include "convexo/genericity.hpp"
#include "convexo/json_io.hpp"
#include "convexo/verify.hpp"

namespace convexo::cli {

namespace {

using io::Json;

struct Emit {
    Json doc;
    int code = kSuccess;
};

MapSign parse_sign(const std::string& s) { return s == "plus" ? MapSign::plus : MapSign::minus; }

Emit member(const std::string& kind, const std::string& tuple, const std::string& point,
            double tol) {
    const MatrixTuple t = io::read_tuple(tuple);
    const MatrixTuple x = io::read_tuple(point);
    const MembershipVerdict v = kind == "ball" ? ball_membership(Spectraball(t), x, tol)
                                               : spec_membership(Spectrahedron(t), x, tol);
    return {io::to_json(v), v.location == Location::exterior ? kViolation : kSuccess};
}

Emit xi(const std::string& tuple, bool closure, double tol) {
    MatrixTuple j = io::read_tuple(tuple);
    Json doc;
    if (closure) {
        const AlgebraClosure c = algebra_closure(j);
        doc["closure"] = io::to_json(c);
        j = c.extended;
    }
    const Json sc = io::to_json(structure_constants(j, tol));
    for (const auto& [k, v] : sc.items()) doc[k] = v;
    return {doc};
}

Emit pencil_xi(const std::string& tuple, const std::string& middle, double tol) {
    const MatrixTuple f = io::read_tuple(tuple);
    const Matrix c = io::read_matrix(middle);
    return {io::to_json(pencil_structure_constants(f, c, tol))};
}

Emit eval(const std::string& xi_file, const std::string& sign, const std::string& point,
          double tol) {
    const ConvexotonicMap map(io::read_tuple(xi_file), parse_sign(sign), tol);
    return {io::tuple_to_json(eval_map(map, io::read_tuple(point)))};
}

Emit inverse_check(const std::string& xi_file, const std::string& point, double tol,
                   double round_trip_tol) {
    const ConvexotonicMap q(io::read_tuple(xi_file), MapSign::plus, tol);
    const ConvexotonicMap p = inverse_map(q);
    const MatrixTuple x = io::read_tuple(point);
    const double scale = std::max(1.0, x.norm());
    const double pq = eval_map(p, eval_map(q, x)).max_distance(x) / scale;
    const double qp = eval_map(q, eval_map(p, x)).max_distance(x) / scale;
    const double residual = std::max(pq, qp);
    Json doc;
    doc["p_after_q"] = io::number(pq);
    doc["q_after_p"] = io::number(qp);
    doc["residual"] = io::number(residual);
    doc["passed"] = residual < round_trip_tol;
    return {doc, residual < round_trip_tol ? kSuccess : kViolation};
}

Emit sv_probe_cmd(const std::string& tuple, const ProbeOptions& opts) {
    const MatrixTuple a = io::read_tuple(tuple);
    const ProbeOutcome o = sv_probe(a, opts);
    Json doc = io::to_json(o);
    if (o.certificate) {
        const CertificateCheck chk = validate_certificate(a, *o.certificate, opts);
        doc["revalidated"] = chk.valid;
    }
    switch (o.status) {
    case ProbeStatus::certified: return {doc, kSuccess};
    case ProbeStatus::rejected: return {doc, kViolation};
    case ProbeStatus::inconclusive: break;
    }
    return {doc, kInconclusive};
}

Emit report(const VerificationReport& r) {
    return {io::to_json(r), r.passed() ? kSuccess : kViolation};
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Free spectraball / free spectrahedron toolkit", "convexo"};
    app.set_version_flag("--version", "0.1.0");
    bool schema = false;
    app.add_flag("--schema", schema, "Print the JSON schema of tuple files and exit");
    app.require_subcommand(0, 1);

    std::function<Emit()> action;

    std::string kind = "spec", tuple, point, middle, xi_file, sign = "plus";
    std::string e_file, b_file, z_file, m_file;
    double member_tol = kBoundaryTol;
    double span_tol = kSpanTol;
    double conv_tol = kConvexotonicTol;
    double round_trip_tol = 1e-9;
    bool closure = false;
    ProbeOptions probe;
    VerifyOptions verify;
    std::uint64_t catalog_seed = kDefaultSeed;

    auto* m = app.add_subcommand("member", "Classify a point against B_E or D_A");
    m->add_option("--kind", kind, "ball or spec")->check(CLI::IsMember({"ball", "spec"}))
        ->capture_default_str();
    m->add_option("--tuple", tuple, "Coefficient tuple file")->required();
    m->add_option("--point", point, "Point tuple file")->required();
    m->add_option("--tol", member_tol, "Boundary band on the margin")->capture_default_str();
    m->callback([&] { action = [&] { return member(kind, tuple, point, member_tol); }; });

    auto* x = app.add_subcommand("xi", "Structure constants of an algebra basis");
    x->add_option("--tuple", tuple, "Basis tuple file")->required();
    x->add_flag("--closure", closure, "Close the tuple under products first");
    x->add_option("--tol", span_tol, "Relative span residual")->capture_default_str();
    x->callback([&] { action = [&] { return xi(tuple, closure, span_tol); }; });

    auto* px = app.add_subcommand("pencil-xi", "Constants of F_l C F_j in span F");
    px->add_option("--tuple", tuple, "Tuple file F")->required();
    px->add_option("--middle", middle, "Matrix file C (g = 1)")->required();
    px->add_option("--tol", span_tol, "Relative span residual")->capture_default_str();
    px->callback([&] { action = [&] { return pencil_xi(tuple, middle, span_tol); }; });

    auto* ev = app.add_subcommand("eval", "Evaluate x (I -+ Lambda_Xi(x))^-1");
    ev->add_option("--xi", xi_file, "Convexotonic tuple file")->required();
    ev->add_option("--sign", sign, "minus gives p, plus gives q")
        ->check(CLI::IsMember({"plus", "minus"}))->capture_default_str();
    ev->add_option("--point", point, "Point tuple file")->required();
    ev->add_option("--tol", conv_tol, "Convexotonic residual")->capture_default_str();
    ev->callback([&] { action = [&] { return eval(xi_file, sign, point, conv_tol); }; });

    auto* ic = app.add_subcommand("inverse-check", "Round trip p(q(X)) and q(p(X))");
    ic->add_option("--xi", xi_file, "Convexotonic tuple file")->required();
    ic->add_option("--point", point, "Point tuple file")->required();
    ic->add_option("--tol", round_trip_tol, "Relative round-trip residual")->capture_default_str();
    ic->add_option("--xi-tol", conv_tol, "Convexotonic residual")->capture_default_str();
    ic->callback([&] {
        action = [&] { return inverse_check(xi_file, point, conv_tol, round_trip_tol); };
    });

    auto* sv = app.add_subcommand("sv-probe", "Search for an sv-genericity certificate");
    sv->add_option("--tuple", tuple, "Tuple file A")->required();
    sv->add_option("--trials", probe.trials, "Trial budget")->capture_default_str()
        ->check(CLI::PositiveNumber);
    sv->add_option("--seed", probe.seed, "Seed")->capture_default_str();
    sv->add_option("--gap-tol", probe.gap_tol, "Minimum sigma_1 - sigma_2")->capture_default_str();
    sv->add_option("--margin-tol", probe.margin_tol, "Minimum basis margin")->capture_default_str();
    sv->add_option("--rank-tol", probe.rank_tol, "Kernel rank tolerance")->capture_default_str();
    sv->callback([&] { action = [&] { return sv_probe_cmd(tuple, probe); }; });

    auto* vt = app.add_subcommand("verify-theorem", "Check B = M^* Z E M and its consequences");
    vt->add_option("--e", e_file, "Tuple file E")->required();
    vt->add_option("--b", b_file, "Tuple file B")->required();
    vt->add_option("--z", z_file, "Matrix file Z (g = 1)")->required();
    vt->add_option("--m", m_file, "Matrix file M (g = 1)")->required();
    vt->add_option("--samples", verify.samples, "Sample count")->capture_default_str();
    vt->add_option("--seed", verify.seed, "Seed")->capture_default_str();
    vt->add_option("--tol", verify.tol, "Residual tolerance")->capture_default_str();
    vt->callback([&] {
        action = [&] {
            const TheoremData data{io::read_tuple(e_file), io::read_tuple(b_file),
                                   io::read_matrix(z_file), io::read_matrix(m_file)};
            return report(verify_theorem_main(data, verify));
        };
    });

    auto* ex = app.add_subcommand("examples", "Run the example catalog");
    ex->add_option("--seed", catalog_seed, "Seed")->capture_default_str();
    ex->callback([&] { action = [&] { return report(example_catalog(catalog_seed)); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, err, err);
        return code == 0 ? kSuccess : kUsage;
    }

    if (schema) {
        out << io::tuple_schema();
        if (io::tuple_schema().back() != '\n') out << '\n';
        return kSuccess;
    }
    if (!action) {
        err << app.help();
        return kUsage;
    }

    try {
        const Emit e = action();
        out << e.doc.dump(2) << '\n';
        return e.code;
    } catch (const io::FormatError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        out << io::to_json(e).dump(2) << '\n';
        err << e.what() << '\n';
        return kViolation;
    }
}

} // namespace convexo::cli
