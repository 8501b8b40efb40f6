#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "convexo/algebras.hpp"
#include "convexo/domains.hpp"
#include "convexo/error.hpp"
#include "convexo/genericity.hpp"
#include "convexo/linalg.hpp"
#include "convexo/verify.hpp"

namespace convexo::io {

using Json = nlohmann::ordered_json;

/// Malformed input: bad JSON syntax, wrong structure, or an unreadable file.
/// The message already carries a location (line:col or a JSON pointer).
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The tuple file schema as shipped in schema/tuple.schema.json.
std::string_view tuple_schema();

/// Line and column (1-based) of byte offset `pos` in `text`.
std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t pos);

/// Parses JSON text; syntax errors become FormatError "<source>:line:col: ...".
Json parse_text(std::string_view text, const std::string& source = "<input>");
Json read_file(const std::filesystem::path& path);

/// {"g", "rows", "cols", "matrices"} with row-major [re, im] entries.
/// Rejects ragged arrays, non-finite numbers and count mismatches.
MatrixTuple tuple_from_json(const Json& j);
Json tuple_to_json(const MatrixTuple& t);

MatrixTuple read_tuple(const std::filesystem::path& path);
/// A tuple file with g = 1.
Matrix read_matrix(const std::filesystem::path& path);

Json complex_to_json(Complex z);
Json matrix_to_json(const Matrix& m);
Json vector_to_json(const Vector& v);

Json to_json(const MembershipVerdict& v);
Json to_json(const StructureConstants& sc);
Json to_json(const AlgebraClosure& c);
Json to_json(const GenericityCertificate& c);
Json to_json(const ProbeOutcome& o);
Json to_json(const Check& c);
Json to_json(const VerificationReport& r);
Json to_json(const Error& e);

/// Doubles that are not finite (e.g. an infinite boundary scale) become
/// the strings "inf", "-inf" or "nan".
Json number(double v);

} // namespace convexo::io
