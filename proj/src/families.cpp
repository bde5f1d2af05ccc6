#include "sgclass/families.hpp"

#include <random>
#include <set>

#include "sgclass/staircase.hpp"

namespace sgclass {

SemigroupDocument family_document(Int n, Int k) {
  if (n < 2 || k < 1 || k > n + 1) {
    throw Error(ErrorCode::kBadParams, "family needs n >= 2 and 1 <= k <= n+1, got n=" +
                                           std::to_string(n) + " k=" + std::to_string(k));
  }
  SemigroupDocument doc;
  doc.name = "family_n" + std::to_string(n) + "_k" + std::to_string(k);
  doc.ambient_dim = 2;
  for (Int i = 0; i <= n; ++i) {
    doc.generators.push_back({2 * i, 2 * n - 2 * i});
    doc.degrees.push_back(1);
  }
  for (Int j = 0; j <= n - 1; ++j) {
    doc.generators.push_back({2 * j + 2 * k - 1, 4 * n - 2 * j - 2 * k + 1});
    doc.degrees.push_back(2);
  }
  return doc;
}

const char* to_string(Source s) {
  switch (s) {
    case Source::kLiterature: return "literature";
    case Source::kBruteForce: return "brute_force";
    case Source::kDefinition: return "definition";
  }
  return "?";
}

namespace {

SemigroupDocument graded_by(std::string name, std::vector<LatticeVector> gens, std::size_t axis) {
  SemigroupDocument doc;
  doc.name = std::move(name);
  doc.ambient_dim = gens.front().size();
  for (const auto& g : gens) doc.degrees.push_back(g[axis]);
  doc.generators = std::move(gens);
  return doc;
}

std::vector<Fixture> build_catalog() {
  using J = nlohmann::json;
  constexpr auto lit = Source::kLiterature;
  constexpr auto def = Source::kDefinition;
  constexpr auto bf = Source::kBruteForce;
  std::vector<Fixture> out;

  {
    SemigroupDocument doc;
    doc.name = "polynomial_plane";
    doc.ambient_dim = 2;
    doc.generators = {{1, 0}, {0, 1}};
    doc.degrees = {1, 1};
    out.push_back({doc.name, doc,
                   {{"is_cohen_macaulay", true, def},
                    {"h_vector", J::array({1}), def},
                    {"cm_type", 1, def},
                    {"is_gorenstein", true, def},
                    {"is_level", true, def},
                    {"is_nearly_gorenstein", true, def},
                    {"is_almost_gorenstein", true, def}}});
  }
  {
    SemigroupDocument doc = family_document(2, 1);
    out.push_back({doc.name, doc,
                   {{"is_cohen_macaulay", true, lit},
                    {"h_vector", J::array({1, 1, 2}), lit},
                    {"cm_type", 3, lit},
                    {"is_level", false, lit},
                    {"is_nearly_gorenstein", true, lit},
                    {"is_almost_gorenstein", true, lit}}});
  }
  out.push_back({"ng_type_two_even_steps",
                 graded_by("ng_type_two_even_steps",
                           {{0, 1}, {2, 1}, {4, 1}, {6, 1}, {8, 1}, {1, 2}, {3, 2}}, 1),
                 {{"is_nearly_gorenstein", true, lit},
                  {"cm_type", 2, bf},
                  {"is_level", true, bf}}});
  out.push_back({"ng_nonlevel_triple_steps",
                 graded_by("ng_nonlevel_triple_steps",
                           {{0, 1}, {3, 1}, {6, 1}, {9, 1}, {1, 2}, {4, 2}}, 1),
                 {{"is_nearly_gorenstein", true, lit},
                  {"is_level", false, lit},
                  {"cm_type", 4, bf}}});
  out.push_back({"square_cone_ng",
                 graded_by("square_cone_ng",
                           {{0, 0, 1}, {2, 0, 1}, {0, 2, 1}, {2, 2, 1}, {1, 0, 2}, {3, 0, 2}}, 2),
                 {{"is_simplicial", false, def},
                  {"canonical_generators", "unavailable", def},
                  {"is_nearly_gorenstein", "unavailable", def}}});
  out.push_back({"level_not_ag",
                 graded_by("level_not_ag", {{1, 0}, {1, 1}, {1, 2}, {1, 6}, {2, 5}}, 0),
                 {{"h_vector", J::array({1, 2, 3}), lit},
                  {"is_level", true, lit},
                  {"is_almost_gorenstein", false, lit}}});
  out.push_back({"ag_not_ng_top_h_one",
                 graded_by("ag_not_ng_top_h_one", {{0, 1}, {1, 1}, {5, 1}, {4, 2}}, 1),
                 {{"h_top", 1, lit},
                  {"is_almost_gorenstein", true, lit},
                  {"is_nearly_gorenstein", false, lit}}});
  out.push_back({"ag_not_ng_dim3",
                 graded_by("ag_not_ng_dim3",
                           {{0, 0, 1}, {2, 0, 1}, {0, 2, 1}, {0, 4, 1}, {0, 1, 2}, {0, 3, 2}}, 2),
                 {{"h_vector", J::array({1, 1, 2}), lit},
                  {"is_almost_gorenstein", true, lit},
                  {"is_nearly_gorenstein", false, lit},
                  {"cohen_macaulay_experimental", true, def}}});
  return out;
}

}  // namespace

const std::vector<Fixture>& fixture_catalog() {
  static const std::vector<Fixture> catalog = build_catalog();
  return catalog;
}

const Fixture& fixture(const std::string& name) {
  for (const auto& f : fixture_catalog()) {
    if (f.name == name) return f;
  }
  throw Error(ErrorCode::kBadParams, "no fixture named " + name);
}

std::vector<SemigroupDocument> corpus_generate(std::uint64_t seed, const CorpusBounds& bounds) {
  std::mt19937_64 rng(seed);
  std::vector<SemigroupDocument> out;
  std::set<std::vector<LatticeVector>> seen;
  const Int max_c = std::max<Int>(1, bounds.max_coord);
  std::uniform_int_distribution<Int> slope(1, max_c);
  std::uniform_int_distribution<Int> degree(1, std::max<Int>(1, bounds.max_degree));
  const std::size_t extra_max = bounds.max_generators > 2 ? bounds.max_generators - 2 : 0;
  std::uniform_int_distribution<std::size_t> extra(1, std::max<std::size_t>(1, extra_max));

  const std::size_t max_attempts = 200 * bounds.count + 1000;
  for (std::size_t attempt = 0; out.size() < bounds.count && attempt < max_attempts; ++attempt) {
    const Int c = slope(rng);
    std::vector<LatticeVector> gens{{0, 1}, {c, 1}};
    const std::size_t m = extra_max == 0 ? 0 : extra(rng);
    for (std::size_t i = 0; i < m; ++i) {
      const Int y = degree(rng);
      const Int x_max = std::min(c * y, bounds.max_coord);
      std::uniform_int_distribution<Int> xs(0, x_max);
      gens.push_back({xs(rng), y});
    }
    std::vector<Int> degs;
    for (const auto& g : gens) degs.push_back(g[1]);
    try {
      const AffineSemigroup s = AffineSemigroup::build(gens, degs);
      if (s.dim() != 2) continue;
      const Staircase t = build_certified_staircase(
          s, 4 * (s.max_generator_degree() + 7), 3);
      if (!is_cohen_macaulay(t)) continue;
      if (!seen.insert(s.generators()).second) continue;
      SemigroupDocument doc;
      doc.name = "corpus_" + std::to_string(seed) + "_" + std::to_string(out.size());
      doc.ambient_dim = 2;
      doc.generators = s.generators();
      doc.degrees = s.degrees();
      out.push_back(std::move(doc));
    } catch (const Error&) {
      continue;
    }
  }
  return out;
}

}  // namespace sgclass
