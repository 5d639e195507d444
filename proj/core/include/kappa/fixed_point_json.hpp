#ifndef KAPPA_FIXED_POINT_JSON_HPP
#define KAPPA_FIXED_POINT_JSON_HPP

// JSON interchange for fixed-point data:
//
//   {
//     "fiber_half_dim": 2,
//     "fiber_euler_char": 4,                       (optional)
//     "components": [ { "name": "x1", "euler_char": 1, "weights": [2, 1] }, ... ],
//     "label": "...", "provenance": "...",          (optional annotations)
//     "expected": [ { "class": "p1", "coefficient": "20",
//                     "generator": "c2", "power": 1 } ]
//   }
//
// Any other key is rejected. Output keys are sorted so identical data yields
// byte-identical files.

#include "kappa/localization.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace kappa {

struct ExpectedValue {
  CharClassMonomial class_monomial;
  Rational coefficient;
  Generator generator;
  std::uint64_t power;
};

struct FixedPointFile {
  FixedPointData data;
  std::optional<std::string> label;
  std::optional<std::string> provenance;
  std::vector<ExpectedValue> expected;
};

FixedPointFile fixed_point_file_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FixedPointFile& f);
nlohmann::json to_json(const FixedPointData& d);
nlohmann::json to_json(const KappaValue& v);

FixedPointFile read_fixed_point_file(const std::filesystem::path& path);
void write_fixed_point_file(const std::filesystem::path& path, const FixedPointFile& f);

/// Rationals travel as "p/q" strings; plain JSON integers are also accepted on input.
Rational rational_from_json(const nlohmann::json& j, const std::string& key);

}  // namespace kappa

#endif  // KAPPA_FIXED_POINT_JSON_HPP
