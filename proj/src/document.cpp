#include "sgclass/document.hpp"

#include <fstream>
#include <sstream>

namespace sgclass {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::kParseError, what); }

std::vector<LatticeVector> parse_vectors(const nlohmann::json& j, const char* field,
                                         std::size_t dim) {
  if (!j.is_array()) parse_fail(std::string(field) + " must be an array");
  std::vector<LatticeVector> out;
  for (const auto& row : j) {
    if (!row.is_array()) parse_fail(std::string(field) + " entries must be arrays");
    std::vector<Int> coords;
    for (const auto& c : row) {
      if (!c.is_number_integer()) parse_fail(std::string(field) + " coordinates must be integers");
      coords.push_back(c.get<Int>());
    }
    if (coords.size() != dim) {
      parse_fail(std::string(field) + " entry has length " + std::to_string(coords.size()) +
                 ", expected ambient_dim = " + std::to_string(dim));
    }
    out.emplace_back(std::move(coords));
  }
  return out;
}

}  // namespace

SemigroupDocument parse_document(const nlohmann::json& j) {
  if (!j.is_object()) parse_fail("document must be a JSON object");
  for (const char* key : {"name", "ambient_dim", "generators", "degrees"}) {
    if (!j.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  }
  SemigroupDocument doc;
  if (!j["name"].is_string()) parse_fail("name must be a string");
  doc.name = j["name"].get<std::string>();
  if (!j["ambient_dim"].is_number_integer() || j["ambient_dim"].get<Int>() < 1) {
    parse_fail("ambient_dim must be a positive integer");
  }
  doc.ambient_dim = j["ambient_dim"].get<std::size_t>();
  doc.generators = parse_vectors(j["generators"], "generators", doc.ambient_dim);
  if (!j["degrees"].is_array()) parse_fail("degrees must be an array");
  for (const auto& d : j["degrees"]) {
    if (!d.is_number_integer()) parse_fail("degrees must be integers");
    doc.degrees.push_back(d.get<Int>());
  }
  if (doc.degrees.size() != doc.generators.size()) {
    parse_fail("generators and degrees differ in length");
  }
  if (j.contains("canonical_generators") && !j["canonical_generators"].is_null()) {
    doc.canonical_generators =
        parse_vectors(j["canonical_generators"], "canonical_generators", doc.ambient_dim);
  }
  return doc;
}

nlohmann::ordered_json vectors_to_json(const std::vector<LatticeVector>& vs) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& v : vs) out.push_back(v.coords());
  return out;
}

nlohmann::ordered_json to_json(const SemigroupDocument& doc) {
  nlohmann::ordered_json j;
  j["name"] = doc.name;
  j["ambient_dim"] = doc.ambient_dim;
  j["generators"] = vectors_to_json(doc.generators);
  j["degrees"] = doc.degrees;
  if (doc.canonical_generators) j["canonical_generators"] = vectors_to_json(*doc.canonical_generators);
  return j;
}

SemigroupDocument read_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    parse_fail(path.string() + ": " + e.what());
  }
  return parse_document(j);
}

void write_document(const std::filesystem::path& path, const SemigroupDocument& doc) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kParseError, "cannot write " + path.string());
  out << to_json(doc).dump(2) << '\n';
}

AffineSemigroup to_semigroup(const SemigroupDocument& doc) {
  return AffineSemigroup::build(doc.generators, doc.degrees);
}

}  // namespace sgclass
