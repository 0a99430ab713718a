#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "spectra/moebius.hpp"

namespace spectra {

// Input description of a finitely generated subgroup of PSL(2, R) with
// entries in a number field:
//
// {
//   "metadata": {"name": "...", "notes": "..."},
//   "field": {"poly": [c0, c1, ..., 1], "embedding": ["lo", "hi"]},
//   "generators": [ [[a coords], [b coords], [c coords], [d coords]], ... ]
// }
//
// poly is monic with integer coefficients, lowest degree first. embedding is
// a decimal interval isolating one real root (optional: defaults to the
// largest real root). Coordinates are rationals written as "p", "p/q" or
// decimals, in the basis 1, theta, ..., theta^(d-1); shorter vectors are
// zero-padded.
struct GroupFile {
  std::string name, notes;
  FieldPtr field;
  std::vector<MoebiusMatrix> generators;
  nlohmann::json canonical;  // normalized echo used in reports
};

class GroupFileError : public std::runtime_error {
 public:
  explicit GroupFileError(const std::string& what) : std::runtime_error(what) {}
};

GroupFile parse_group_json(const nlohmann::json& j);
GroupFile load_group_file(const std::string& path);

}  // namespace spectra
