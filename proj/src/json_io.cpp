#include "urkit/json_io.hpp"

#include <cmath>
#include <fstream>

namespace urkit {

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json data = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      data.push_back({m(r, c).real(), m(r, c).imag()});
    }
  }
  return nlohmann::json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

Matrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data")) {
    throw ParseError("matrix JSON must be an object with rows, cols and data");
  }
  const auto rows = j.at("rows");
  const auto cols = j.at("cols");
  if (!rows.is_number_integer() || !cols.is_number_integer()) {
    throw ParseError("matrix rows/cols must be integers");
  }
  const long nr = rows.get<long>();
  const long nc = cols.get<long>();
  if (nr <= 0 || nc <= 0) {
    throw ParseError("matrix rows/cols must be positive");
  }
  const auto& data = j.at("data");
  if (!data.is_array() || static_cast<long>(data.size()) != nr * nc) {
    throw ParseError("matrix data length " + std::to_string(data.size()) +
                     " does not match rows*cols = " + std::to_string(nr * nc));
  }
  Matrix m(nr, nc);
  long idx = 0;
  for (long r = 0; r < nr; ++r) {
    for (long c = 0; c < nc; ++c, ++idx) {
      const auto& entry = data.at(idx);
      if (!entry.is_array() || entry.size() != 2 || !entry.at(0).is_number() ||
          !entry.at(1).is_number()) {
        throw ParseError("matrix entry " + std::to_string(idx) +
                         " must be a [re, im] number pair");
      }
      const double re = entry.at(0).get<double>();
      const double im = entry.at(1).get<double>();
      if (!std::isfinite(re) || !std::isfinite(im)) {
        throw ParseError("matrix entry " + std::to_string(idx) + " is not finite");
      }
      m(r, c) = Complex(re, im);
    }
  }
  return m;
}

namespace {

nlohmann::json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw FileNotFound("cannot open " + path);
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return j;
}

}  // namespace

Matrix load_matrix(const std::string& path) {
  return matrix_from_json(parse_file(path));
}

void save_matrix(const std::string& path, const Matrix& m) {
  std::ofstream out(path);
  if (!out) {
    throw FileNotFound("cannot write " + path);
  }
  out << matrix_to_json(m).dump(2) << "\n";
}

Vector vector_from_json(const nlohmann::json& j) {
  const Matrix m = matrix_from_json(j);
  if (m.cols() == 1) return m.col(0);
  if (m.rows() == 1) return m.row(0).transpose();
  throw ParseError("expected a vector (rows x 1 or 1 x cols matrix), got " +
                   std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

Vector load_vector(const std::string& path) {
  return vector_from_json(parse_file(path));
}

}  // namespace urkit
