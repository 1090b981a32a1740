// SPDX-License-Identifier: Apache-2.0
#include "frame_io.hpp"

#include <fstream>
#include <sstream>

#include "rhframes/errors.hpp"

namespace rhf::io {

namespace {

Field parse_field(const Json& j) {
  if (!j.is_string()) throw FormatError("field must be \"R\" or \"C\"");
  const auto s = j.get<std::string>();
  if (s == "R") return Field::Real;
  if (s == "C") return Field::Complex;
  throw FormatError("field must be \"R\" or \"C\", got \"" + s + "\"");
}

std::size_t get_size(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_unsigned())
    throw FormatError(std::string("missing or invalid \"") + key + "\"");
  return j.at(key).get<std::size_t>();
}

double get_number(const Json& j) {
  if (!j.is_number()) throw FormatError("matrix entries must be numbers");
  return j.get<double>();
}

}  // namespace

Json matrix_to_json(const Mat& m) {
  Json data = Json::array();
  for (const Complex& z : m.entries()) data.push_back({z.real(), z.imag()});
  return {{"field", std::string(to_string(m.field()))},
          {"rows", m.rows()},
          {"cols", m.cols()},
          {"data", std::move(data)}};
}

Mat matrix_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("matrix must be an object");
  if (!j.contains("field")) throw FormatError("matrix missing \"field\"");
  const Field field = parse_field(j.at("field"));
  const std::size_t rows = get_size(j, "rows");
  const std::size_t cols = get_size(j, "cols");
  if (!j.contains("data") || !j.at("data").is_array()) throw FormatError("matrix missing \"data\"");
  const Json& data = j.at("data");
  if (data.size() != rows * cols) throw FormatError("matrix data length differs from rows*cols");
  std::vector<Complex> entries;
  entries.reserve(data.size());
  for (const Json& pair : data) {
    if (!pair.is_array() || pair.size() != 2) throw FormatError("matrix entry must be [re, im]");
    entries.emplace_back(get_number(pair[0]), get_number(pair[1]));
  }
  try {
    return Mat(field, rows, cols, std::move(entries));
  } catch (const std::logic_error& e) {
    throw FormatError(e.what());
  }
}

Json frame_to_json(const FusionFrame& frame, const Json& metadata) {
  Json isos = Json::array();
  for (const Mat& m : frame.isometries()) isos.push_back(matrix_to_json(m));
  return {{"field", std::string(to_string(frame.field()))},
          {"d", frame.d()},
          {"r", frame.r()},
          {"n", frame.n()},
          {"isometries", std::move(isos)},
          {"metadata", metadata}};
}

FrameFile frame_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("frame file must be an object");
  if (!j.contains("field")) throw FormatError("frame missing \"field\"");
  const Field field = parse_field(j.at("field"));
  const std::size_t d = get_size(j, "d");
  const std::size_t r = get_size(j, "r");
  const std::size_t n = get_size(j, "n");
  if (!j.contains("isometries") || !j.at("isometries").is_array())
    throw FormatError("frame missing \"isometries\"");
  const Json& arr = j.at("isometries");
  if (arr.size() != n) throw FormatError("isometry count differs from n");
  std::vector<Mat> isos;
  isos.reserve(n);
  for (const Json& m : arr) {
    Mat mat = matrix_from_json(m);
    if (mat.rows() != d || mat.cols() != r) throw FormatError("isometry is not d x r");
    if (field == Field::Real && mat.field() == Field::Complex)
      throw FormatError("complex isometry in a real frame");
    isos.push_back(std::move(mat));
  }
  Json metadata = j.contains("metadata") ? j.at("metadata") : Json::object();
  try {
    return {FusionFrame(field, d, r, std::move(isos)), std::move(metadata)};
  } catch (const std::logic_error& e) {
    throw FormatError(e.what());
  }
}

Json certificate_to_json(const SymmetryCertificate& cert) {
  return {{"perm", cert.sigma.one_line()},
          {"upsilon", matrix_to_json(cert.upsilon)},
          {"residual", cert.residual}};
}

SymmetryCertificate certificate_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("perm") || !j.at("perm").is_string() ||
      !j.contains("upsilon"))
    throw FormatError("certificate needs \"perm\" and \"upsilon\"");
  SymmetryCertificate cert;
  try {
    cert.sigma = Permutation::parse_one_line(j.at("perm").get<std::string>());
  } catch (const std::logic_error& e) {
    throw FormatError(e.what());
  }
  cert.upsilon = matrix_from_json(j.at("upsilon"));
  if (j.contains("residual") && j.at("residual").is_number())
    cert.residual = j.at("residual").get<double>();
  return cert;
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  Json j = Json::parse(buf.str(), nullptr, false);
  if (j.is_discarded()) throw FormatError("malformed JSON in " + path.string());
  return j;
}

void write_json(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << j.dump(1) << '\n';
  if (!out) throw FormatError("write failed for " + path.string());
}

}  // namespace rhf::io
