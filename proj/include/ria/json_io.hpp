#pragma once

#include <json.hpp>
#include <string>

#include "ria/matrix.hpp"

namespace ria {

using json = nlohmann::json;

/// Wire format:
///   {"rows": m, "cols": n, "backend": "exact"|"float",
///    "entries": [["re","im"], ...]}   (row-major)
/// "re"/"im" are strings: exact = "p/q" or "p", float = decimal literal.
/// Exact matrices round-trip bit-exactly.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

std::string matrix_to_string(const Matrix& m);
Matrix matrix_from_string(const std::string& text);
Matrix matrix_from_file(const std::string& path);
void matrix_to_file(const Matrix& m, const std::string& path);

} // namespace ria
