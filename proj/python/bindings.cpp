#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "convexo/algebras.hpp"
#include "convexo/convexotonic.hpp"
#include "convexo/domains.hpp"
#include "convexo/genericity.hpp"
#include "convexo/json_io.hpp"
#include "convexo/verify.hpp"

namespace py = pybind11;
using namespace convexo;

namespace {

using List = std::vector<Matrix>;

MatrixTuple tuple(const List& ms) { return MatrixTuple(ms); }
List list(const MatrixTuple& t) { return t.matrices(); }

MapSign sign_of(const std::string& s) {
    if (s == "plus") return MapSign::plus;
    if (s == "minus") return MapSign::minus;
    throw Error(ErrorKind::InvalidArgument, "sign must be 'plus' or 'minus'");
}

py::tuple verdict(const MembershipVerdict& v) {
    return py::make_tuple(std::string(to_string(v.location)), v.margin);
}

} // namespace

PYBIND11_MODULE(_convexo, m) {
    m.doc() = "Free spectraballs, free spectrahedra and convexotonic maps";

    // Messages start with the error kind, e.g. "SpanViolation: ...".
    py::register_exception<Error>(m, "ConvexoError", PyExc_ValueError);

    m.def("lambda_eval", [](const List& a, const List& x) { return lambda_eval(tuple(a), tuple(x)); },
          py::arg("a"), py::arg("x"));
    m.def("ball_membership",
          [](const List& e, const List& x, double tol) {
              return verdict(ball_membership(Spectraball(tuple(e)), tuple(x), tol));
          },
          py::arg("e"), py::arg("x"), py::arg("tol") = kBoundaryTol);
    m.def("spec_membership",
          [](const List& a, const List& x, double tol) {
              return verdict(spec_membership(Spectrahedron(tuple(a)), tuple(x), tol));
          },
          py::arg("a"), py::arg("x"), py::arg("tol") = kBoundaryTol);
    m.def("boundary_scale",
          [](const List& a, const List& x, const std::string& kind) {
              if (kind == "ball") return boundary_scale(Spectraball(tuple(a)), tuple(x));
              return boundary_scale(Spectrahedron(tuple(a)), tuple(x));
          },
          py::arg("a"), py::arg("x"), py::arg("kind") = "spec");
    m.def("structure_constants",
          [](const List& j, double tol) {
              const StructureConstants sc = structure_constants(tuple(j), tol);
              return py::make_tuple(list(sc.xi), sc.residual, sc.convexotonic_residual);
          },
          py::arg("j"), py::arg("tol") = kSpanTol);
    m.def("algebra_closure", [](const List& a) { return list(algebra_closure(tuple(a)).extended); },
          py::arg("a"));
    m.def("convexotonic_residual", [](const List& xi) { return convexotonic_residual(tuple(xi)); },
          py::arg("xi"));
    m.def("eval_map",
          [](const List& xi, const std::string& sign, const List& x) {
              return list(eval_map(ConvexotonicMap(tuple(xi), sign_of(sign)), tuple(x)));
          },
          py::arg("xi"), py::arg("sign"), py::arg("x"));
    m.def("sv_probe",
          [](const List& a, std::size_t trials, std::uint64_t seed) {
              ProbeOptions o;
              o.trials = trials;
              o.seed = seed;
              return io::to_json(sv_probe(tuple(a), o)).dump();
          },
          py::arg("a"), py::arg("trials") = 10000, py::arg("seed") = kDefaultSeed);
    m.def("verify_theorem",
          [](const List& e, const List& b, const Matrix& z, const Matrix& mm, std::size_t samples,
             std::uint64_t seed) {
              VerifyOptions o;
              o.samples = samples;
              o.seed = seed;
              return io::to_json(verify_theorem_main({tuple(e), tuple(b), z, mm}, o)).dump();
          },
          py::arg("e"), py::arg("b"), py::arg("z"), py::arg("m"), py::arg("samples") = 30,
          py::arg("seed") = kDefaultSeed);
    m.def("example_catalog", [](std::uint64_t seed) { return io::to_json(example_catalog(seed)).dump(); },
          py::arg("seed") = kDefaultSeed);
    m.def("tuple_schema", [] { return std::string(io::tuple_schema()); });
}
