#pragma once

// Repo-wide JSON matrix format:
//   {"rows": int, "cols": int, "data": [[re, im], ...]}   (row-major)
// Parsers reject wrong-length data arrays and non-finite entries.

#include <string>

#include <json.hpp>

#include "urkit/numerics.hpp"

namespace urkit {

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

// File helpers; FileNotFound / ParseError on failure.
Matrix load_matrix(const std::string& path);
void save_matrix(const std::string& path, const Matrix& m);

// A column vector stored as a rows x 1 (or 1 x cols) matrix.
Vector vector_from_json(const nlohmann::json& j);
Vector load_vector(const std::string& path);

}  // namespace urkit
