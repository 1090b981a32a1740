// SPDX-License-Identifier: Apache-2.0
//
// JSON files for matrices, frames and symmetry certificates.
//
//   MatrixFile: {"field": "R"|"C", "rows": m, "cols": k, "data": [[re, im], ...]}
//   FrameFile:  {"field", "d", "r", "n", "isometries": [MatrixFile...],
//                "metadata": {...}}
//   CertFile:   {"perm": "2 1 3", "upsilon": MatrixFile, "residual": x}
#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "rhframes/eitff.hpp"
#include "rhframes/symmetry.hpp"

namespace rhf::io {

// Unreadable file, bad JSON or a schema violation.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;

Json matrix_to_json(const Mat& m);
Mat matrix_from_json(const Json& j);

struct FrameFile {
  FusionFrame frame;
  Json metadata = Json::object();
};

Json frame_to_json(const FusionFrame& frame, const Json& metadata = Json::object());
FrameFile frame_from_json(const Json& j);

Json certificate_to_json(const SymmetryCertificate& cert);
SymmetryCertificate certificate_from_json(const Json& j);

Json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const Json& j);

inline FrameFile read_frame(const std::filesystem::path& path) {
  return frame_from_json(read_json(path));
}

}  // namespace rhf::io
