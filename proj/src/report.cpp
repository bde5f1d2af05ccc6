#include "sgclass/report.hpp"

#include <algorithm>
#include <sstream>

#include "sgclass/checks.hpp"
#include "sgclass/trace.hpp"

namespace sgclass {

namespace {

constexpr const char* kNoStaircase = "NO_STAIRCASE";
constexpr const char* kNoHVector = "NO_H_VECTOR";
constexpr const char* kNoCanonical = "NO_CANONICAL_MODULE";

void mark(ClassificationReport& r, const std::string& field, std::string_view reason) {
  r.unavailable.emplace(field, std::string(reason));
}

void mark_all(ClassificationReport& r, std::initializer_list<const char*> fields,
              std::string_view reason) {
  for (const char* f : fields) mark(r, f, reason);
}

// Stops the numerator search early rather than escalating when the
// numerator is already certainly not a polynomial with nonnegative entries.
bool has_negative(const std::vector<Int>& v) {
  return std::any_of(v.begin(), v.end(), [](Int x) { return x < 0; });
}

std::optional<HVector> compute_h(const AffineSemigroup& s, Int budget, int retries,
                                 ClassificationReport& r) {
  for (int attempt = 0;; ++attempt) {
    try {
      return h_vector(s, budget);
    } catch (const NumeratorError& e) {
      if (has_negative(e.partial()) || attempt >= retries) {
        mark(r, "h_vector", to_string(e.code()));
        return std::nullopt;
      }
      budget *= 2;
    }
  }
}

CanonicalModule compute_canonical(const Staircase& t, const AffineSemigroup& s, const HVector& h,
                                  int retries) {
  SearchBox box = default_search_box(t, h);
  for (int attempt = 0;; ++attempt) {
    try {
      return canonical_generators(t, s, h, box);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kBoxTooSmall || attempt >= retries) throw;
      for (auto& x : box.lower) x *= 2;
      for (auto& x : box.upper) x *= 2;
    }
  }
}

}  // namespace

ClassificationReport classify(const SemigroupDocument& doc, const ClassifyOptions& options) {
  const AffineSemigroup s = to_semigroup(doc);
  ClassificationReport r;
  r.name = doc.name;
  r.ambient_dim = s.ambient_dim();
  r.dim = s.dim();
  r.generators = s.generators();
  r.degrees = s.degrees();
  r.extremal_rays = s.cone().extremal_rays();
  r.extremal_generators = s.extremal_generators();
  r.is_pointed = true;  // build() rejects non-pointed input
  r.is_simplicial = r.extremal_rays.size() == r.dim;
  r.standard_graded = std::all_of(r.degrees.begin(), r.degrees.end(), [](Int d) { return d == 1; });
  r.is_semi_standard = s.is_semi_standard(options.multiple_bound);
  r.extremal_degree_check = s.extremal_degree_check();

  r.provenance_notes.push_back(
      "all verdicts are computed from the exponent semigroup and do not depend on the "
      "coefficient field");
  if (r.is_semi_standard == SemiStandard::kUnknownWithinBound) {
    r.provenance_notes.push_back("semi-standard test inconclusive up to multiple bound " +
                                 std::to_string(options.multiple_bound));
  }

  const Int base = s.max_generator_degree() + static_cast<Int>(r.dim) + 5;
  const Int h_budget = options.max_degree.value_or(4 * base);
  r.h_vector = compute_h(s, h_budget, options.retries, r);

  const Int s_est = r.h_vector ? static_cast<Int>(r.h_vector->socle_degree())
                               : s.max_generator_degree();
  r.hilbert_prefix = hilbert_function(s, s_est + static_cast<Int>(r.dim) + 2);

  // Staircase.
  std::optional<Staircase> t;
  const Int horizon = options.max_degree.value_or(4 * (s_est + static_cast<Int>(r.dim) + 5));
  try {
    t = build_certified_staircase(s, horizon, options.retries);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNotSimplicial && e.code() != ErrorCode::kRaysNotDegreeOne) throw;
    mark_all(r, {"staircase", "is_cohen_macaulay", "depth_at_least_two", "holes", "artinian_counts"},
             to_string(e.code()));
  }

  if (t) {
    r.staircase = StaircaseSummary{t->rays(), t->residues(), t->min_elements()};
    r.is_cohen_macaulay = is_cohen_macaulay(*t);
    if (r.dim >= 3) {
      r.cohen_macaulay_experimental = true;
      r.provenance_notes.push_back("Cohen-Macaulay verdict in dimension >= 3 is experimental");
    }
    if (r.dim == 2) {
      r.depth_at_least_two = depth_at_least_two(*t);
    } else {
      mark(r, "depth_at_least_two", to_string(ErrorCode::kUnsupportedDimension));
    }
    r.holes_degree_bound = s.max_generator_degree() + 1;
    r.holes = holes(*t, r.holes_degree_bound);
    r.artinian_counts = artinian_counts(*t);
  }

  // Canonical module.
  if (doc.canonical_generators) {
    r.canonical = make_canonical_module(*doc.canonical_generators, s);
    r.canonical_source = "external";
    r.provenance_notes.push_back("canonical generators supplied by the input document");
  } else if (!t) {
    mark(r, "canonical_generators", kNoStaircase);
  } else if (!*r.is_cohen_macaulay) {
    mark(r, "canonical_generators", to_string(ErrorCode::kNotCohenMacaulay));
  } else if (!r.h_vector) {
    mark(r, "canonical_generators", kNoHVector);
  } else {
    r.canonical = compute_canonical(*t, s, *r.h_vector, options.retries);
    r.canonical_source = "computed";
  }

  if (r.canonical) {
    const auto& m = *r.canonical;
    r.is_gorenstein = is_gorenstein(m);
    r.is_level = is_level(m);
    r.a_invariant = m.a_invariant;
    if (r.h_vector) {
      r.canonical_hilbert_check = canonical_hilbert_check(m, s, *r.h_vector);
    } else {
      mark(r, "canonical_hilbert_check", kNoHVector);
    }
    r.is_nearly_gorenstein = is_nearly_gorenstein(s, m.generators);
    bool all_in = true;
    for (const auto& e : r.extremal_generators) {
      all_in = all_in && trace_contains(s, m.generators, e);
    }
    r.extremal_in_trace = all_in;
  } else {
    const std::string reason = r.unavailable.count("canonical_generators")
                                   ? r.unavailable.at("canonical_generators")
                                   : kNoCanonical;
    mark_all(r, {"cm_type", "a_invariant", "is_gorenstein", "is_level", "canonical_hilbert_check",
                 "is_nearly_gorenstein", "extremal_in_trace"},
             reason);
  }

  if (r.h_vector) {
    r.stanley_inequalities = stanley_inequalities(*r.h_vector);
  } else {
    mark(r, "stanley_inequalities", kNoHVector);
  }

  if (r.canonical && r.h_vector && r.is_cohen_macaulay.value_or(false)) {
    const Int type = r.canonical->type();
    r.cokernel = cokernel_data(*r.h_vector, type);
    r.is_almost_gorenstein = is_almost_gorenstein(*r.h_vector, type);
  } else {
    const char* reason = !r.h_vector                                ? kNoHVector
                         : !r.is_cohen_macaulay                     ? kNoStaircase
                         : !*r.is_cohen_macaulay ? "NOT_CM"
                                                                    : kNoCanonical;
    mark_all(r, {"is_almost_gorenstein", "cokernel_numerator"}, reason);
  }

  for (CheckId id : {CheckId::kTraceInitialDegree, CheckId::kNearlyGorensteinTopH,
                     CheckId::kTypeTwoLevel, CheckId::kLevelSocleOne, CheckId::kSocleTwoType}) {
    r.validators.emplace(std::string(check_key(id)), run_check(id, r, s));
  }
  return r;
}

namespace {

using OJ = nlohmann::ordered_json;

std::string reason_for(const ClassificationReport& r, const std::string& field) {
  auto it = r.unavailable.find(field);
  return it == r.unavailable.end() ? std::string(kNoCanonical) : it->second;
}

template <typename T>
OJ opt(const std::optional<T>& v) {
  if (!v) return "unavailable";
  return OJ(*v);
}

}  // namespace

nlohmann::ordered_json to_json(const ClassificationReport& r) {
  OJ j;
  j["name"] = r.name;
  j["ambient_dim"] = r.ambient_dim;
  j["dim"] = r.dim;
  j["generators"] = vectors_to_json(r.generators);
  j["degrees"] = r.degrees;
  j["extremal_rays"] = vectors_to_json(r.extremal_rays);
  j["extremal_generators"] = vectors_to_json(r.extremal_generators);
  j["is_pointed"] = r.is_pointed;
  j["is_simplicial"] = r.is_simplicial;
  j["standard_graded"] = r.standard_graded;
  j["is_semi_standard"] = to_string(r.is_semi_standard);
  j["extremal_degree_check"] = r.extremal_degree_check;
  j["hilbert_prefix"] = r.hilbert_prefix;
  j["h_vector"] = r.h_vector ? OJ(r.h_vector->entries) : OJ("unavailable");
  j["socle_degree"] = opt(r.socle_degree());
  j["a_invariant"] = opt(r.a_invariant);
  j["is_cohen_macaulay"] = opt(r.is_cohen_macaulay);
  j["cohen_macaulay_experimental"] = r.cohen_macaulay_experimental;
  j["depth_at_least_two"] = opt(r.depth_at_least_two);
  if (r.staircase) {
    OJ st;
    st["rays"] = vectors_to_json(r.staircase->rays);
    OJ cosets = OJ::array();
    for (std::size_t c = 0; c < r.staircase->residues.size(); ++c) {
      OJ row;
      row["residue"] = r.staircase->residues[c].coords();
      row["min_elements"] = r.staircase->min_elements[c];
      cosets.push_back(std::move(row));
    }
    st["cosets"] = std::move(cosets);
    j["staircase"] = std::move(st);
  } else {
    j["staircase"] = "unavailable";
  }
  j["holes"] = r.holes ? vectors_to_json(*r.holes) : OJ("unavailable");
  j["holes_degree_bound"] = r.holes_degree_bound;
  j["artinian_counts"] = opt(r.artinian_counts);
  if (r.canonical) {
    j["canonical_generators"] = vectors_to_json(r.canonical->generators);
    j["canonical_degrees"] = r.canonical->degrees;
    j["canonical_source"] = r.canonical_source;
  } else {
    j["canonical_generators"] = "unavailable";
    j["canonical_degrees"] = "unavailable";
    j["canonical_source"] = "unavailable";
  }
  j["canonical_hilbert_check"] = opt(r.canonical_hilbert_check);
  j["cm_type"] = opt(r.cm_type());
  j["is_gorenstein"] = opt(r.is_gorenstein);
  j["is_level"] = opt(r.is_level);
  j["is_nearly_gorenstein"] = opt(r.is_nearly_gorenstein);
  j["extremal_in_trace"] = opt(r.extremal_in_trace);
  j["is_almost_gorenstein"] = opt(r.is_almost_gorenstein);
  j["stanley_inequalities"] = opt(r.stanley_inequalities);
  if (r.cokernel) {
    j["cokernel_numerator"] = r.cokernel->numerator;
    j["cokernel_multiplicity"] = r.cokernel->multiplicity;
  } else {
    j["cokernel_numerator"] = "unavailable";
    j["cokernel_multiplicity"] = "unavailable";
  }
  OJ v = OJ::object();
  for (const auto& [key, out] : r.validators) {
    v[key] = OJ{{"verdict", to_string(out.verdict)}, {"detail", out.detail}};
  }
  j["validator_results"] = std::move(v);
  OJ reasons = OJ::object();
  for (const auto& [field, why] : r.unavailable) reasons[field] = why;
  if (!r.canonical) {
    for (const char* f : {"canonical_degrees", "canonical_source", "cokernel_multiplicity"}) {
      reasons[f] = reason_for(r, "canonical_generators");
    }
  }
  if (!r.h_vector) reasons["socle_degree"] = reason_for(r, "h_vector");
  j["unavailable_reasons"] = std::move(reasons);
  j["provenance_notes"] = r.provenance_notes;
  return j;
}

namespace {

template <typename T>
std::string text_of(const std::optional<T>& v) {
  if (!v) return "unavailable";
  std::ostringstream os;
  if constexpr (std::is_same_v<T, bool>) {
    os << (*v ? "yes" : "no");
  } else {
    os << *v;
  }
  return os.str();
}

std::string join(const std::vector<Int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string join(const std::vector<LatticeVector>& vs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << vs[i];
  return os.str();
}

}  // namespace

std::string to_text(const ClassificationReport& r) {
  std::ostringstream os;
  os << r.name << "  (dim " << r.dim << " in Z^" << r.ambient_dim << ")\n";
  os << "  generators:        " << join(r.generators) << '\n';
  os << "  degrees:           " << join(r.degrees) << '\n';
  os << "  extremal rays:     " << join(r.extremal_rays) << '\n';
  os << "  simplicial:        " << (r.is_simplicial ? "yes" : "no") << '\n';
  os << "  standard graded:   " << (r.standard_graded ? "yes" : "no") << '\n';
  os << "  semi-standard:     " << to_string(r.is_semi_standard) << '\n';
  os << "  Hilbert prefix:    " << join(r.hilbert_prefix) << '\n';
  os << "  h-vector:          " << (r.h_vector ? join(r.h_vector->entries) : "unavailable") << '\n';
  os << "  socle degree:      " << text_of(r.socle_degree()) << '\n';
  os << "  a-invariant:       " << text_of(r.a_invariant) << '\n';
  os << "  Cohen-Macaulay:    " << text_of(r.is_cohen_macaulay)
     << (r.cohen_macaulay_experimental ? " (experimental)" : "") << '\n';
  os << "  depth >= 2:        " << text_of(r.depth_at_least_two) << '\n';
  if (r.canonical) {
    os << "  canonical (" << r.canonical_source << "): " << join(r.canonical->generators)
       << "  degrees " << join(r.canonical->degrees) << '\n';
  } else {
    os << "  canonical:         unavailable\n";
  }
  os << "  type:              " << text_of(r.cm_type()) << '\n';
  os << "  Gorenstein:        " << text_of(r.is_gorenstein) << '\n';
  os << "  level:             " << text_of(r.is_level) << '\n';
  os << "  nearly Gorenstein: " << text_of(r.is_nearly_gorenstein) << '\n';
  os << "  almost Gorenstein: " << text_of(r.is_almost_gorenstein) << '\n';
  if (!r.validators.empty()) os << "  validators:\n";
  for (const auto& [key, out] : r.validators) {
    os << "    " << key << ": " << to_string(out.verdict) << "  " << out.detail << '\n';
  }
  for (const auto& [field, why] : r.unavailable) {
    os << "  unavailable " << field << ": " << why << '\n';
  }
  for (const auto& note : r.provenance_notes) os << "  note: " << note << '\n';
  return os.str();
}

}  // namespace sgclass
