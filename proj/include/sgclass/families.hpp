#pragma once

// The two-parameter family S(n,k), the catalog of worked fixtures and a
// seeded random corpus of two-dimensional instances.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sgclass/document.hpp"

namespace sgclass {

/// Generators (2i, 2n-2i) in degree 1 for 0 <= i <= n and
/// (2j+2k-1, 4n-2j-2k+1) in degree 2 for 0 <= j <= n-1.
/// BAD_PARAMS unless n >= 2 and 1 <= k <= n+1.
SemigroupDocument family_document(Int n, Int k);

/// Where an expected value comes from.
enum class Source {
  kLiterature,  // stated for the worked example
  kBruteForce,  // computed by an independent search in the test suite
  kDefinition,  // immediate from the definitions
};

const char* to_string(Source s);

struct Expectation {
  std::string field;  // report key, e.g. "h_vector" or "is_level"
  nlohmann::json value;
  Source source = Source::kLiterature;
};

struct Fixture {
  std::string name;
  SemigroupDocument document;
  std::vector<Expectation> expected;
};

const std::vector<Fixture>& fixture_catalog();
const Fixture& fixture(const std::string& name);

struct CorpusBounds {
  Int max_coord = 12;
  std::size_t max_generators = 7;
  std::size_t count = 100;
  Int max_degree = 3;
};

/// Deterministic two-dimensional instances with rays (0,1) and (c,1),
/// graded by the second coordinate, that have a certified staircase and
/// are Cohen-Macaulay. Instances with equal minimal generators are dropped.
std::vector<SemigroupDocument> corpus_generate(std::uint64_t seed, const CorpusBounds& bounds = {});

}  // namespace sgclass
