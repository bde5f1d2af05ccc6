#pragma once

// Full classification pipeline and its report.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sgclass/canonical.hpp"
#include "sgclass/document.hpp"
#include "sgclass/invariants.hpp"
#include "sgclass/staircase.hpp"

namespace sgclass {

struct ClassifyOptions {
  /// Degree budget for Hilbert layers and staircase enumeration; defaults
  /// to 4 * (socle degree estimate + dim + 5).
  std::optional<Int> max_degree;
  Int multiple_bound = 64;
  /// Doubling retries on HORIZON_TOO_SMALL / BOX_TOO_SMALL.
  int retries = 3;
};

struct ValidatorOutcome {
  Verdict verdict = Verdict::kVacuous;
  std::string detail;
};

struct StaircaseSummary {
  std::vector<LatticeVector> rays;
  std::vector<LatticeVector> residues;
  std::vector<std::vector<RayPoint>> min_elements;
};

struct ClassificationReport {
  std::string name;
  std::size_t ambient_dim = 0;
  std::size_t dim = 0;
  std::vector<LatticeVector> generators;
  std::vector<Int> degrees;
  std::vector<LatticeVector> extremal_rays;
  std::vector<LatticeVector> extremal_generators;
  bool is_pointed = true;
  bool is_simplicial = false;
  bool standard_graded = false;
  SemiStandard is_semi_standard = SemiStandard::kUnknownWithinBound;
  bool extremal_degree_check = false;
  std::vector<Int> hilbert_prefix;

  std::optional<HVector> h_vector;
  std::optional<Int> a_invariant;
  std::optional<bool> is_cohen_macaulay;
  bool cohen_macaulay_experimental = false;
  std::optional<bool> depth_at_least_two;
  std::optional<StaircaseSummary> staircase;
  std::optional<std::vector<LatticeVector>> holes;
  Int holes_degree_bound = 0;
  std::optional<std::vector<Int>> artinian_counts;

  std::optional<CanonicalModule> canonical;
  std::string canonical_source;  // "computed" or "external"
  std::optional<bool> canonical_hilbert_check;
  std::optional<bool> is_gorenstein;
  std::optional<bool> is_level;
  std::optional<bool> is_nearly_gorenstein;
  std::optional<bool> extremal_in_trace;
  std::optional<bool> is_almost_gorenstein;
  std::optional<std::vector<bool>> stanley_inequalities;
  std::optional<CokernelData> cokernel;

  std::map<std::string, ValidatorOutcome> validators;
  /// field name -> machine-readable reason code
  std::map<std::string, std::string> unavailable;
  std::vector<std::string> provenance_notes;

  std::optional<Int> socle_degree() const {
    if (!h_vector) return std::nullopt;
    return static_cast<Int>(h_vector->socle_degree());
  }
  std::optional<Int> cm_type() const {
    if (!canonical) return std::nullopt;
    return canonical->type();
  }
};

/// Runs every stage that applies. Invalid input (INCONSISTENT_GRADING,
/// NOT_POINTED, ...) and certification failures after all retries are thrown;
/// everything else that cannot be computed is marked unavailable.
ClassificationReport classify(const SemigroupDocument& doc, const ClassifyOptions& options = {});

nlohmann::ordered_json to_json(const ClassificationReport& report);
std::string to_text(const ClassificationReport& report);

}  // namespace sgclass
