#include "sgclass/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <unordered_map>

namespace sgclass {

namespace detail {

struct SemigroupCache {
  std::mutex mu;
  std::unordered_map<LatticeVector, bool, LatticeVectorHash> memo;
  std::vector<std::vector<LatticeVector>> layers;
};

}  // namespace detail

namespace {

// Depth-first search for a decomposition of v into the given generators.
// Generators are sorted by degree and have nonnegative coordinates.
class DecompositionSearch {
 public:
  DecompositionSearch(const std::vector<LatticeVector>& gens, const std::vector<Int>& degs,
                      const Cone* cone)
      : gens_(gens), degs_(degs), cone_(cone) {}

  bool operator()(const LatticeVector& v, Int deg) {
    if (deg == 0) return v.is_zero();
    if (deg < 0) return false;
    if (auto it = memo_.find(v); it != memo_.end()) return it->second;
    bool found = false;
    for (std::size_t i = 0; i < gens_.size() && degs_[i] <= deg && !found; ++i) {
      LatticeVector rest = v - gens_[i];
      if (std::any_of(rest.begin(), rest.end(), [](Int c) { return c < 0; })) continue;
      if (cone_ != nullptr && !cone_->contains(rest)) continue;
      found = (*this)(rest, deg - degs_[i]);
    }
    memo_.emplace(v, found);
    return found;
  }

 private:
  const std::vector<LatticeVector>& gens_;
  const std::vector<Int>& degs_;
  const Cone* cone_;
  std::unordered_map<LatticeVector, bool, LatticeVectorHash> memo_;
};

}  // namespace

const char* to_string(SemiStandard s) {
  switch (s) {
    case SemiStandard::kYes: return "yes";
    case SemiStandard::kNo: return "no";
    case SemiStandard::kUnknownWithinBound: return "unknown_within_bound";
  }
  return "?";
}

Rational Grading::value(const LatticeVector& v) const {
  return Rational(BigInt(dot(numerator, v)), BigInt(denominator));
}

Int Grading::degree(const LatticeVector& v) const {
  Int n = dot(numerator, v);
  if (n % denominator != 0) {
    throw Error(ErrorCode::kNotInGroup, "non-integral degree: vector outside the group");
  }
  return n / denominator;
}

AffineSemigroup AffineSemigroup::build(std::vector<LatticeVector> raw_generators,
                                       std::vector<Int> degrees) {
  if (raw_generators.empty()) throw Error(ErrorCode::kEmptyInput, "no generators");
  if (raw_generators.size() != degrees.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "generator and degree lists differ in length");
  }
  const std::size_t d = raw_generators[0].size();
  if (d == 0) throw Error(ErrorCode::kEmptyInput, "zero ambient dimension");
  for (const auto& g : raw_generators) {
    if (g.size() != d) throw Error(ErrorCode::kDimensionMismatch, "generator lengths differ");
    if (std::any_of(g.begin(), g.end(), [](Int c) { return c < 0; })) {
      throw Error(ErrorCode::kBadParams, "generators must have nonnegative coordinates");
    }
  }
  for (Int deg : degrees) {
    if (deg < 1) throw Error(ErrorCode::kInconsistentGrading, "degrees must be positive");
  }

  // lambda . g_i = deg_i over the rationals.
  linalg::RationalMatrix a;
  std::vector<Rational> b;
  for (std::size_t i = 0; i < raw_generators.size(); ++i) {
    a.emplace_back(raw_generators[i].begin(), raw_generators[i].end());
    b.emplace_back(degrees[i]);
  }
  auto lambda = linalg::solve(a, b);
  if (!lambda) {
    throw Error(ErrorCode::kInconsistentGrading,
                "no linear functional matches the given generator degrees");
  }

  AffineSemigroup s;
  s.ambient_dim_ = d;
  {
    BigInt lcm = 1;
    for (const auto& q : *lambda) {
      BigInt den = boost::multiprecision::denominator(q);
      lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    }
    std::vector<Int> num(d);
    for (std::size_t j = 0; j < d; ++j) {
      num[j] = narrow(BigInt(boost::multiprecision::numerator((*lambda)[j]) * lcm /
                             boost::multiprecision::denominator((*lambda)[j])));
    }
    s.grading_.numerator = LatticeVector(std::move(num));
    s.grading_.denominator = narrow(lcm);
  }

  // Deduplicate, order by (degree, lex), and drop generators that decompose
  // into generators of strictly smaller degree.
  std::set<std::pair<Int, LatticeVector>> ordered;
  for (std::size_t i = 0; i < raw_generators.size(); ++i) {
    ordered.emplace(degrees[i], raw_generators[i]);
  }
  std::vector<LatticeVector> kept;
  std::vector<Int> kept_degs;
  for (const auto& [deg, g] : ordered) {
    std::vector<LatticeVector> lower;
    std::vector<Int> lower_degs;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      if (kept_degs[i] < deg) {
        lower.push_back(kept[i]);
        lower_degs.push_back(kept_degs[i]);
      }
    }
    DecompositionSearch search(lower, lower_degs, nullptr);
    if (!search(g, deg)) {
      kept.push_back(g);
      kept_degs.push_back(deg);
    }
  }
  s.generators_ = std::move(kept);
  s.grading_.degree_per_generator = std::move(kept_degs);
  s.group_ = hermite_basis(s.generators_);
  s.cone_ = std::make_shared<const Cone>(extremal_rays(s.generators_));
  s.cache_ = std::make_shared<detail::SemigroupCache>();
  return s;
}

Int AffineSemigroup::max_generator_degree() const {
  return *std::max_element(degrees().begin(), degrees().end());
}

std::optional<Int> AffineSemigroup::degree_of(const LatticeVector& v) const {
  if (!in_group(v)) return std::nullopt;
  return grading_.degree(v);
}

bool AffineSemigroup::member(const LatticeVector& v) const {
  if (v.size() != ambient_dim_) throw Error(ErrorCode::kDimensionMismatch, "member");
  if (v.is_zero()) return true;
  if (!in_group(v) || !cone_->contains(v)) return false;
  const Int deg = grading_.degree(v);
  if (deg <= 0) return false;

  const auto& gens = generators_;
  const auto& degs = degrees();
  auto& cache = *cache_;
  std::function<bool(const LatticeVector&, Int)> search = [&](const LatticeVector& x,
                                                                Int dx) -> bool {
    if (dx == 0) return x.is_zero();
    {
      std::lock_guard lock(cache.mu);
      if (auto it = cache.memo.find(x); it != cache.memo.end()) return it->second;
    }
    bool found = false;
    for (std::size_t i = 0; i < gens.size() && degs[i] <= dx && !found; ++i) {
      LatticeVector rest = x - gens[i];
      if (std::any_of(rest.begin(), rest.end(), [](Int c) { return c < 0; })) continue;
      if (!cone_->contains(rest)) continue;
      found = search(rest, dx - degs[i]);
    }
    std::lock_guard lock(cache.mu);
    cache.memo.emplace(x, found);
    return found;
  };
  return search(v, deg);
}

std::vector<LatticeVector> AffineSemigroup::elements_of_degree(Int degree) const {
  if (degree < 0) return {};
  auto& cache = *cache_;
  std::lock_guard lock(cache.mu);
  if (cache.layers.empty()) cache.layers.push_back({LatticeVector(ambient_dim_)});
  while (static_cast<Int>(cache.layers.size()) <= degree) {
    const Int j = static_cast<Int>(cache.layers.size());
    std::set<LatticeVector> layer;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      const Int dg = degrees()[i];
      if (dg > j) break;
      for (const auto& x : cache.layers[static_cast<std::size_t>(j - dg)]) {
        layer.insert(x + generators_[i]);
      }
    }
    cache.layers.emplace_back(layer.begin(), layer.end());
  }
  return cache.layers[static_cast<std::size_t>(degree)];
}

std::vector<LatticeVector> AffineSemigroup::min_degree_generators() const {
  const Int lo = *std::min_element(degrees().begin(), degrees().end());
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (degrees()[i] == lo) out.push_back(generators_[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticeVector> AffineSemigroup::extremal_generators() const {
  std::vector<LatticeVector> out;
  for (const auto& ray : cone_->extremal_rays()) {
    std::vector<LatticeVector> on_ray;
    for (const auto& g : generators_) {
      if (g.primitive() == ray) on_ray.push_back(g);
    }
    // With two minimal generators on one ray the face is not N*a.
    if (on_ray.size() == 1) out.push_back(on_ray.front());
  }
  std::sort(out.begin(), out.end());
  return out;
}

SemiStandard AffineSemigroup::is_semi_standard(Int multiple_bound) const {
  if (multiple_bound < 1) throw Error(ErrorCode::kBadParams, "multiple_bound must be >= 1");
  std::vector<LatticeVector> q;
  std::vector<LatticeVector> higher;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    (degrees()[i] == 1 ? q : higher).push_back(generators_[i]);
  }
  if (higher.empty()) return SemiStandard::kYes;
  if (q.empty()) return SemiStandard::kNo;

  // Integrality forces a rational multiple of each generator into cone(Q);
  // cone(Q) membership also puts a multiple into the group of Q.
  const Cone q_cone = extremal_rays(q);
  for (const auto& a : higher) {
    if (!q_cone.contains(a)) return SemiStandard::kNo;
  }
  const AffineSemigroup base = build(q, std::vector<Int>(q.size(), 1));
  bool unknown = false;
  for (const auto& a : higher) {
    bool found = false;
    for (Int m = 1; m <= multiple_bound && !found; ++m) found = base.member(a.scaled(m));
    if (!found) unknown = true;
  }
  return unknown ? SemiStandard::kUnknownWithinBound : SemiStandard::kYes;
}

bool AffineSemigroup::extremal_degree_check() const {
  for (const auto& e : extremal_generators()) {
    if (grading_.degree(e) != 1) return false;
  }
  return true;
}

}  // namespace sgclass
