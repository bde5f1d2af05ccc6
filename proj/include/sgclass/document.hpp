#pragma once

// Semigroup input documents:
//   {"name": str, "ambient_dim": int, "generators": [[int]], "degrees": [int],
//    "canonical_generators": [[int]]   (optional)}

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sgclass/semigroup.hpp"

namespace sgclass {

struct SemigroupDocument {
  std::string name;
  std::size_t ambient_dim = 0;
  std::vector<LatticeVector> generators;
  std::vector<Int> degrees;
  std::optional<std::vector<LatticeVector>> canonical_generators;
};

/// Throws PARSE_ERROR on schema violations.
SemigroupDocument parse_document(const nlohmann::json& j);
nlohmann::ordered_json to_json(const SemigroupDocument& doc);

SemigroupDocument read_document(const std::filesystem::path& path);
void write_document(const std::filesystem::path& path, const SemigroupDocument& doc);

AffineSemigroup to_semigroup(const SemigroupDocument& doc);

nlohmann::ordered_json vectors_to_json(const std::vector<LatticeVector>& vs);

}  // namespace sgclass
