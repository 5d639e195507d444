#include "kappa/fixed_point_json.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace kappa {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.contains(key)) throw InvalidArgument("unknown key '" + key + "' in " + where);
  }
}

const json& require(const json& obj, const std::string& key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw InvalidArgument("missing key '" + key + "' in " + where);
  return *it;
}

std::int64_t as_int64(const json& v, const std::string& key) {
  if (v.is_number_unsigned()) {
    const auto u = v.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      throw InvalidArgument("key '" + key + "' is out of range");
    }
    return static_cast<std::int64_t>(u);
  }
  if (!v.is_number_integer()) throw InvalidArgument("key '" + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::string as_string(const json& v, const std::string& key) {
  if (!v.is_string()) throw InvalidArgument("key '" + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

Rational rational_from_json(const json& j, const std::string& key) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  throw InvalidArgument("key '" + key + "' must be a rational string \"p/q\" or an integer");
}

FixedPointFile fixed_point_file_from_json(const json& j) {
  if (!j.is_object()) throw InvalidArgument("fixed-point data must be a JSON object");
  reject_unknown_keys(j, {"fiber_half_dim", "fiber_euler_char", "components", "label", "provenance", "expected"},
                      "fixed-point data");

  FixedPointFile f;
  const auto n = as_int64(require(j, "fiber_half_dim", "fixed-point data"), "fiber_half_dim");
  if (n < 1 || n > std::numeric_limits<unsigned>::max()) throw InvalidArgument("key 'fiber_half_dim' must be >= 1");
  f.data.fiber_half_dim = static_cast<unsigned>(n);
  if (const auto it = j.find("fiber_euler_char"); it != j.end()) {
    f.data.fiber_euler_char = as_int64(*it, "fiber_euler_char");
  }

  const auto& comps = require(j, "components", "fixed-point data");
  if (!comps.is_array()) throw InvalidArgument("key 'components' must be an array");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto& c = comps[i];
    const std::string where = "components[" + std::to_string(i) + "]";
    if (!c.is_object()) throw InvalidArgument(where + " must be an object");
    reject_unknown_keys(c, {"name", "euler_char", "weights"}, where);
    FixedComponent comp;
    comp.name = as_string(require(c, "name", where), "name");
    comp.euler_char = as_int64(require(c, "euler_char", where), "euler_char");
    const auto& w = require(c, "weights", where);
    if (!w.is_array()) throw InvalidArgument("key 'weights' in " + where + " must be an array");
    std::vector<std::int64_t> weights;
    for (const auto& a : w) weights.push_back(as_int64(a, "weights"));
    comp.weights = WeightVector(std::move(weights));
    f.data.components.push_back(std::move(comp));
  }

  if (const auto it = j.find("label"); it != j.end()) f.label = as_string(*it, "label");
  if (const auto it = j.find("provenance"); it != j.end()) f.provenance = as_string(*it, "provenance");
  if (const auto it = j.find("expected"); it != j.end()) {
    if (!it->is_array()) throw InvalidArgument("key 'expected' must be an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const auto& e = (*it)[i];
      const std::string where = "expected[" + std::to_string(i) + "]";
      if (!e.is_object()) throw InvalidArgument(where + " must be an object");
      reject_unknown_keys(e, {"class", "coefficient", "generator", "power"}, where);
      const auto power = as_int64(require(e, "power", where), "power");
      if (power < 0) throw InvalidArgument("key 'power' in " + where + " must be non-negative");
      f.expected.push_back(ExpectedValue{
          parse_monomial(as_string(require(e, "class", where), "class"), f.data.fiber_half_dim),
          rational_from_json(require(e, "coefficient", where), "coefficient"),
          parse_generator(as_string(require(e, "generator", where), "generator")),
          static_cast<std::uint64_t>(power),
      });
    }
  }
  return f;
}

json to_json(const FixedPointData& d) {
  json j;
  j["fiber_half_dim"] = d.fiber_half_dim;
  if (d.fiber_euler_char) j["fiber_euler_char"] = *d.fiber_euler_char;
  j["components"] = json::array();
  for (const auto& c : d.components) {
    json w = json::array();
    for (auto a : c.weights.values()) w.push_back(a);
    j["components"].push_back({{"name", c.name}, {"euler_char", c.euler_char}, {"weights", w}});
  }
  return j;
}

json to_json(const FixedPointFile& f) {
  json j = to_json(f.data);
  if (f.label) j["label"] = *f.label;
  if (f.provenance) j["provenance"] = *f.provenance;
  if (!f.expected.empty()) {
    j["expected"] = json::array();
    for (const auto& e : f.expected) {
      j["expected"].push_back({{"class", e.class_monomial.to_string()},
                               {"coefficient", to_string(e.coefficient)},
                               {"generator", to_string(e.generator)},
                               {"power", e.power}});
    }
  }
  return j;
}

json to_json(const KappaValue& v) {
  return {{"class", v.class_monomial.to_string()},
          {"coefficient", to_string(v.coefficient)},
          {"generator", to_string(v.generator)},
          {"power", v.generator_power}};
}

FixedPointFile read_fixed_point_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path.string() + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidArgument("malformed JSON in '" + path.string() + "': " + e.what());
  }
  return fixed_point_file_from_json(j);
}

void write_fixed_point_file(const std::filesystem::path& path, const FixedPointFile& f) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write '" + path.string() + "'");
  out << to_json(f).dump(2) << '\n';
}

}  // namespace kappa
