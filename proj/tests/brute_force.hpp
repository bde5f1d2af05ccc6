#pragma once

// Naive reference implementations used as test oracles. Everything here works
// from the definitions on plain integer vectors and shares no code with the
// library. Generators must have nonnegative coordinates and be nonzero.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace bf {

using Vec = std::vector<std::int64_t>;

inline Vec add(const Vec& a, const Vec& b) {
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline Vec sub(const Vec& a, const Vec& b) {
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

inline Vec scale(const Vec& a, long long k) {
  Vec c(a);
  for (auto& x : c) x *= k;
  return c;
}

inline Vec neg(const Vec& a) { return scale(a, -1); }

class Semigroup {
 public:
  explicit Semigroup(std::vector<Vec> gens) : gens_(std::move(gens)) {}

  const std::vector<Vec>& gens() const { return gens_; }

  // v in S by peeling generators off; terminates since coordinates are >= 0.
  bool member(const Vec& v) {
    if (std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x < 0; })) return false;
    if (std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; })) return true;
    auto it = memo_.find(v);
    if (it != memo_.end()) return it->second;
    bool found = false;
    for (const auto& g : gens_) {
      if (member(sub(v, g))) {
        found = true;
        break;
      }
    }
    memo_.emplace(v, found);
    return found;
  }

  // Z S membership: deep translates of group elements along the sum of all
  // generators land in S.
  bool in_group(const Vec& v, long long depth = 40) {
    Vec rho(v.size(), 0);
    for (const auto& g : gens_) rho = add(rho, g);
    return member(add(v, scale(rho, depth)));
  }

 private:
  std::vector<Vec> gens_;
  std::map<Vec, bool> memo_;
};

// Hilbert function by layered closure: layer i = union over generators of
// degree e of (layer i-e + generator).
inline std::vector<long long> hilbert(const std::vector<Vec>& gens, const std::vector<long long>& degs,
                                      long long i_max) {
  std::vector<std::set<Vec>> layers(i_max + 1);
  layers[0].insert(Vec(gens.front().size(), 0));
  for (long long i = 1; i <= i_max; ++i) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (degs[g] > i) continue;
      for (const auto& v : layers[i - degs[g]]) layers[i].insert(add(v, gens[g]));
    }
  }
  std::vector<long long> out;
  for (const auto& l : layers) out.push_back(static_cast<long long>(l.size()));
  return out;
}

// (1 - t)^d * H(t), truncated to the prefix length.
inline std::vector<long long> numerator(std::vector<long long> h, std::size_t d) {
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t i = h.size(); i-- > 1;) h[i] -= h[i - 1];
  }
  while (!h.empty() && h.back() == 0) h.pop_back();
  return h;
}

inline void for_each_in_box(std::size_t n, long long lo, long long hi,
                            const std::function<void(const Vec&)>& f) {
  Vec v(n, lo);
  while (true) {
    f(v);
    std::size_t i = 0;
    while (i < n && v[i] == hi) v[i++] = lo;
    if (i == n) return;
    ++v[i];
  }
}

// u + (face spanned by every ray except rays[skip]) misses S, sampled with
// coefficients below m.
inline bool avoids_face(Semigroup& s, const std::vector<Vec>& rays, std::size_t skip, const Vec& u,
                        long long m) {
  std::vector<Vec> face;
  for (std::size_t j = 0; j < rays.size(); ++j) {
    if (j != skip) face.push_back(rays[j]);
  }
  bool hit = false;
  for_each_in_box(face.size(), 0, m - 1, [&](const Vec& c) {
    if (hit) return;
    Vec p = u;
    for (std::size_t j = 0; j < face.size(); ++j) p = add(p, scale(face[j], c[j]));
    if (s.member(p)) hit = true;
  });
  return !hit;
}

struct Canonical {
  std::vector<Vec> generators;  // sorted
};

// Minimal generators of W = -{u in Z S : u + F misses S for every facet F}
// inside the box |u_i| <= radius. Only candidates whose generator-translates
// stay inside the box are reported.
inline Canonical canonical(Semigroup& s, const std::vector<Vec>& rays, long long radius, long long m) {
  const std::size_t n = rays.front().size();
  std::set<Vec> w_set;
  for_each_in_box(n, -radius, radius, [&](const Vec& u) {
    if (!s.in_group(u)) return;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (!avoids_face(s, rays, i, u, m)) return;
    }
    w_set.insert(neg(u));
  });
  std::int64_t reach = 0;
  for (const auto& g : s.gens()) {
    for (std::int64_t x : g) reach = std::max(reach, x);
  }
  Canonical out;
  for (const auto& w : w_set) {
    if (std::any_of(w.begin(), w.end(), [&](std::int64_t x) { return x < -radius + reach || x > radius; })) {
      continue;
    }
    bool minimal = true;
    for (const auto& g : s.gens()) {
      if (w_set.count(sub(w, g))) minimal = false;
    }
    if (minimal) out.generators.push_back(w);
  }
  return out;
}

// x^a in tr(I) for the monomial ideal with exponents ideal: some generator v
// has a - v + v' in S for every v'.
inline bool trace_contains(Semigroup& s, const std::vector<Vec>& ideal, const Vec& a) {
  for (const auto& v : ideal) {
    const Vec u = sub(a, v);
    bool ok = true;
    for (const auto& v2 : ideal) ok = ok && s.member(add(u, v2));
    if (ok) return true;
  }
  return false;
}

inline bool nearly_gorenstein(Semigroup& s, const std::vector<Vec>& ideal) {
  for (const auto& g : s.gens()) {
    if (!trace_contains(s, ideal, g)) return false;
  }
  return true;
}

// Two-dimensional cone test for the cone spanned by r1, r2 (counterclockwise
// order not assumed).
inline bool in_cone_2d(const Vec& r1, const Vec& r2, const Vec& v) {
  auto cross = [](const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; };
  const long long o = cross(r1, r2);
  return cross(r1, v) * o >= 0 && cross(v, r2) * o >= 0;
}

}  // namespace bf
