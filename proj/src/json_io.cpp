#include "convexo/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "tuple_schema.hpp"

namespace convexo::io {

std::string_view tuple_schema() { return detail::kTupleSchema; }

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t pos) {
    pos = std::min(pos, text.size());
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < pos; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

Json parse_text(std::string_view text, const std::string& source) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        // nlohmann reports the byte count read so far; the offending byte is the last one.
        const std::size_t pos = e.byte > 0 ? e.byte - 1 : 0;
        const auto [line, col] = line_col(text, pos);
        std::string what = e.what();
        if (const auto k = what.find("syntax error"); k != std::string::npos) what = what.substr(k);
        throw FormatError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                          what);
    } catch (const nlohmann::json::exception& e) {
        // e.g. number overflow; nlohmann gives no position for these.
        throw FormatError(source + ": " + e.what());
    }
}

Json read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError(path.string() + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str(), path.string());
}

namespace {

[[noreturn]] void structural(const std::string& pointer, const std::string& msg) {
    throw FormatError((pointer.empty() ? std::string("/") : pointer) + ": " + msg);
}

Index positive_int(const Json& j, const char* key) {
    const std::string ptr = std::string("/") + key;
    if (!j.contains(key)) structural("", std::string("missing field \"") + key + "\"");
    const Json& v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 1) {
        structural(ptr, "expected a positive integer");
    }
    return static_cast<Index>(v.get<long long>());
}

double finite(const Json& v, const std::string& ptr) {
    if (!v.is_number()) structural(ptr, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) structural(ptr, "number is not finite");
    return x;
}

} // namespace

MatrixTuple tuple_from_json(const Json& j) {
    if (!j.is_object()) structural("", "expected an object with g, rows, cols, matrices");
    for (const auto& [key, _] : j.items()) {
        if (key != "g" && key != "rows" && key != "cols" && key != "matrices") {
            structural("/" + key, "unknown field");
        }
    }
    const Index g = positive_int(j, "g");
    const Index rows = positive_int(j, "rows");
    const Index cols = positive_int(j, "cols");
    if (!j.contains("matrices")) structural("", "missing field \"matrices\"");
    const Json& ms = j.at("matrices");
    if (!ms.is_array()) structural("/matrices", "expected an array");
    if (static_cast<Index>(ms.size()) != g) {
        structural("/matrices", "expected " + std::to_string(g) + " matrices, found " +
                                    std::to_string(ms.size()));
    }
    std::vector<Matrix> out;
    out.reserve(static_cast<std::size_t>(g));
    for (Index k = 0; k < g; ++k) {
        const std::string pk = "/matrices/" + std::to_string(k);
        const Json& m = ms[static_cast<std::size_t>(k)];
        if (!m.is_array() || static_cast<Index>(m.size()) != rows) {
            structural(pk, "expected " + std::to_string(rows) + " rows");
        }
        Matrix mat(rows, cols);
        for (Index r = 0; r < rows; ++r) {
            const std::string pr = pk + "/" + std::to_string(r);
            const Json& row = m[static_cast<std::size_t>(r)];
            if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
                structural(pr, "expected " + std::to_string(cols) + " entries");
            }
            for (Index c = 0; c < cols; ++c) {
                const std::string pc = pr + "/" + std::to_string(c);
                const Json& z = row[static_cast<std::size_t>(c)];
                if (!z.is_array() || z.size() != 2) structural(pc, "expected [re, im]");
                mat(r, c) = Complex(finite(z[0], pc + "/0"), finite(z[1], pc + "/1"));
            }
        }
        out.push_back(std::move(mat));
    }
    return MatrixTuple(std::move(out));
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json vector_to_json(const Vector& v) {
    Json out = Json::array();
    for (Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
    return out;
}

Json tuple_to_json(const MatrixTuple& t) {
    Json ms = Json::array();
    for (const auto& m : t) ms.push_back(matrix_to_json(m));
    Json out;
    out["g"] = t.size();
    out["rows"] = t.rows();
    out["cols"] = t.cols();
    out["matrices"] = std::move(ms);
    return out;
}

MatrixTuple read_tuple(const std::filesystem::path& path) {
    const Json j = read_file(path);
    try {
        return tuple_from_json(j);
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

Matrix read_matrix(const std::filesystem::path& path) {
    const MatrixTuple t = read_tuple(path);
    if (t.size() != 1) throw FormatError(path.string() + ": /g: a matrix file needs g = 1");
    return t[0];
}

Json number(double v) {
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return "nan";
    return v > 0 ? "inf" : "-inf";
}

Json to_json(const MembershipVerdict& v) {
    Json out;
    out["location"] = std::string(to_string(v.location));
    out["margin"] = number(v.margin);
    return out;
}

Json to_json(const StructureConstants& sc) {
    Json out;
    out["xi"] = tuple_to_json(sc.xi);
    out["residual"] = number(sc.residual);
    out["convexotonic_residual"] = number(sc.convexotonic_residual);
    out["convexotonic"] = sc.convexotonic_residual <= kConvexotonicTol;
    return out;
}

Json to_json(const AlgebraClosure& c) {
    Json out;
    out["extended"] = tuple_to_json(c.extended);
    out["appended_count"] = c.appended_count;
    out["orthonormalized"] = c.orthonormalized;
    return out;
}

namespace {

Json point_to_json(const CertificatePoint& p) {
    Json pt = Json::array();
    for (const Complex z : p.point) pt.push_back(complex_to_json(z));
    Json out;
    out["point"] = std::move(pt);
    out["kernel"] = vector_to_json(p.kernel);
    out["gap"] = number(p.gap);
    return out;
}

} // namespace

Json to_json(const GenericityCertificate& c) {
    Json alphas = Json::array();
    for (const auto& p : c.alphas) alphas.push_back(point_to_json(p));
    Json betas = Json::array();
    for (const auto& p : c.betas) betas.push_back(point_to_json(p));
    Json out;
    out["alphas"] = std::move(alphas);
    out["betas"] = std::move(betas);
    out["hyperbasis_margin"] = number(c.hyperbasis_margin);
    out["basis_margin"] = number(c.basis_margin);
    out["trials_used"] = c.trials_used;
    out["seed"] = c.seed;
    return out;
}

Json to_json(const ProbeOutcome& o) {
    Json out;
    out["result"] = std::string(to_string(o.status));
    out["trials_used"] = o.trials_used;
    if (o.status == ProbeStatus::rejected) {
        Json obs = Json::array();
        for (const auto f : o.conditions.failures) obs.push_back(std::string(to_string(f)));
        out["obstructions"] = std::move(obs);
    }
    if (o.certificate) out["certificate"] = to_json(*o.certificate);
    return out;
}

Json to_json(const Check& c) {
    Json out;
    out["name"] = c.name;
    out["passed"] = c.passed;
    out["residual"] = number(c.residual);
    out["samples"] = c.samples;
    out["skipped"] = c.skipped;
    if (!c.note.empty()) out["note"] = c.note;
    return out;
}

Json to_json(const VerificationReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    Json out;
    out["name"] = r.name;
    out["passed"] = r.passed();
    out["checks"] = std::move(checks);
    out["warnings"] = r.warnings;
    return out;
}

Json to_json(const Error& e) {
    Json err;
    err["kind"] = std::string(to_string(e.kind()));
    err["message"] = e.what();
    if (e.has_value()) err["value"] = number(e.value());
    Json out;
    out["error"] = std::move(err);
    return out;
}

} // namespace convexo::io
