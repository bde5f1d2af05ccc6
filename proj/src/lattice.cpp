#include "sgclass/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace sgclass {

namespace {

void require_dim(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "vectors of length " + std::to_string(a.size()) + " and " +
                    std::to_string(b.size()));
  }
}

Int gcd_abs(Int a, Int b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

}  // namespace

// --- LatticeVector ---------------------------------------------------------

bool LatticeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Int c) { return c == 0; });
}

Int LatticeVector::content() const {
  Int g = 0;
  for (Int c : coords_) g = gcd_abs(g, c);
  return g;
}

LatticeVector LatticeVector::primitive() const {
  Int g = content();
  if (g <= 1) return *this;
  LatticeVector out(*this);
  for (Int& c : out.coords_) c /= g;
  return out;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
  require_dim(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked_add(coords_[i], o.coords_[i]);
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
  require_dim(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked_sub(coords_[i], o.coords_[i]);
  return *this;
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector out(*this);
  for (Int& c : out.coords_) c = checked_sub(0, c);
  return out;
}

LatticeVector LatticeVector::scaled(Int k) const {
  LatticeVector out(*this);
  for (Int& c : out.coords_) c = checked_mul(c, k);
  return out;
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

std::size_t LatticeVectorHash::operator()(const LatticeVector& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Int c : v) {
    h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Int dot(const LatticeVector& a, const LatticeVector& b) {
  require_dim(a, b);
  __int128 acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += static_cast<__int128>(a[i]) * b[i];
  return narrow(acc);
}

// --- exact linear algebra --------------------------------------------------

namespace linalg {

namespace {

RationalMatrix to_rational(std::span<const LatticeVector> rows, std::size_t dim) {
  RationalMatrix m(rows.size(), std::vector<Rational>(dim));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < dim; ++j) m[i][j] = rows[i][j];
  }
  return m;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rational inv = Rational(1) / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(std::span<const LatticeVector> rows) {
  if (rows.empty()) return 0;
  auto m = to_rational(rows, rows[0].size());
  return rref(m, rows[0].size()).size();
}

BigInt determinant(const std::vector<std::vector<BigInt>>& input) {
  // Bareiss fraction-free elimination.
  const std::size_t n = input.size();
  if (n == 0) return 1;
  auto m = input;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t sel = k + 1;
      while (sel < n && m[sel][k] == 0) ++sel;
      if (sel == n) return 0;
      std::swap(m[k], m[sel]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<LatticeVector> integer_nullspace(std::span<const LatticeVector> rows,
                                             std::size_t dim) {
  auto m = to_rational(rows, dim);
  auto pivots = rref(m, dim);
  std::vector<LatticeVector> out;
  std::vector<bool> is_pivot(dim, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(dim, 0);
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][free];
    BigInt lcm = 1;
    for (const auto& q : x) {
      BigInt d = boost::multiprecision::denominator(q);
      lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    std::vector<Int> coords(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      coords[j] = narrow(BigInt(boost::multiprecision::numerator(x[j]) * lcm /
                                boost::multiprecision::denominator(x[j])));
    }
    out.push_back(LatticeVector(std::move(coords)).primitive());
  }
  return out;
}

RationalMatrix inverse(RationalMatrix m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    m[i].resize(2 * n, 0);
    m[i][n + i] = 1;
  }
  auto pivots = rref(m, n);
  if (pivots.size() != n) throw Error(ErrorCode::kNotSimplicial, "singular matrix");
  RationalMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  }
  return inv;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& a,
                                           const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::kDimensionMismatch, "solve: row count");
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  RationalMatrix m = a;
  for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
  auto pivots = rref(m, cols);
  for (std::size_t r = pivots.size(); r < m.size(); ++r) {
    if (m[r][cols] != 0) return std::nullopt;
  }
  std::vector<Rational> x(cols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][cols];
  return x;
}

}  // namespace linalg

// --- Hermite normal form -----------------------------------------------------

GroupLattice hermite_basis(std::span<const LatticeVector> vectors) {
  if (vectors.empty()) throw Error(ErrorCode::kEmptyInput, "hermite_basis of an empty list");
  const std::size_t d = vectors[0].size();
  for (const auto& v : vectors) require_dim(vectors[0], v);

  std::vector<std::vector<BigInt>> m;
  for (const auto& v : vectors) {
    std::vector<BigInt> row(v.begin(), v.end());
    m.push_back(std::move(row));
  }

  auto sub_multiple = [](std::vector<BigInt>& target, const std::vector<BigInt>& src,
                         const BigInt& q) {
    for (std::size_t c = 0; c < target.size(); ++c) target[c] -= q * src[c];
  };

  GroupLattice out;
  out.ambient_dim = d;
  std::size_t row = 0;
  for (std::size_t col = 0; col < d && row < m.size(); ++col) {
    while (true) {
      // Smallest nonzero entry at or below `row` becomes the pivot candidate.
      std::size_t sel = m.size();
      for (std::size_t r = row; r < m.size(); ++r) {
        if (m[r][col] == 0) continue;
        if (sel == m.size() || abs(m[r][col]) < abs(m[sel][col])) sel = r;
      }
      if (sel == m.size()) break;
      std::swap(m[row], m[sel]);
      bool done = true;
      for (std::size_t r = row + 1; r < m.size(); ++r) {
        if (m[r][col] == 0) continue;
        sub_multiple(m[r], m[row], m[r][col] / m[row][col]);
        if (m[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (row >= m.size() || m[row][col] == 0) continue;
    if (m[row][col] < 0) {
      for (auto& x : m[row]) x = -x;
    }
    for (std::size_t r = 0; r < row; ++r) {
      BigInt q = floor_of(Rational(m[r][col], m[row][col]));
      if (q != 0) sub_multiple(m[r], m[row], q);
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  for (std::size_t r = 0; r < row; ++r) {
    std::vector<Int> coords(d);
    for (std::size_t c = 0; c < d; ++c) coords[c] = narrow(m[r][c]);
    out.basis.emplace_back(std::move(coords));
  }
  return out;
}

std::optional<std::vector<Int>> lattice_coordinates(const GroupLattice& lattice,
                                                    const LatticeVector& v) {
  if (v.size() != lattice.ambient_dim) {
    throw Error(ErrorCode::kDimensionMismatch, "vector does not match lattice dimension");
  }
  LatticeVector rest = v;
  std::vector<Int> coeffs(lattice.rank(), 0);
  std::size_t next_col = 0;
  for (std::size_t k = 0; k < lattice.rank(); ++k) {
    const std::size_t p = lattice.pivot_columns[k];
    for (; next_col < p; ++next_col) {
      if (rest[next_col] != 0) return std::nullopt;
    }
    const Int pivot = lattice.basis[k][p];
    if (rest[p] % pivot != 0) return std::nullopt;
    coeffs[k] = rest[p] / pivot;
    rest -= lattice.basis[k].scaled(coeffs[k]);
    next_col = p + 1;
  }
  if (!rest.is_zero()) return std::nullopt;
  return coeffs;
}

bool group_contains(const GroupLattice& lattice, const LatticeVector& v) {
  return lattice_coordinates(lattice, v).has_value();
}

// --- cones -------------------------------------------------------------------

Cone::Cone(std::size_t ambient_dim, std::vector<LatticeVector> rays,
           std::vector<LatticeVector> facet_normals, std::vector<LatticeVector> equations)
    : ambient_dim_(ambient_dim),
      rays_(std::move(rays)),
      normals_(std::move(facet_normals)),
      equations_(std::move(equations)) {}

bool Cone::contains(const LatticeVector& v) const {
  if (v.size() != ambient_dim_) throw Error(ErrorCode::kDimensionMismatch, "cone membership");
  for (const auto& e : equations_) {
    if (dot(e, v) != 0) return false;
  }
  for (const auto& n : normals_) {
    if (dot(n, v) < 0) return false;
  }
  return true;
}

bool Cone::contains(std::span<const Rational> v) const {
  if (v.size() != ambient_dim_) throw Error(ErrorCode::kDimensionMismatch, "cone membership");
  auto rdot = [&](const LatticeVector& n) {
    Rational acc = 0;
    for (std::size_t i = 0; i < ambient_dim_; ++i) acc += v[i] * n[i];
    return acc;
  };
  for (const auto& e : equations_) {
    if (rdot(e) != 0) return false;
  }
  for (const auto& n : normals_) {
    if (rdot(n) < 0) return false;
  }
  return true;
}

bool cone_membership(const Cone& cone, const LatticeVector& v) { return cone.contains(v); }

bool cone_membership(const Cone& cone, std::span<const Rational> v) { return cone.contains(v); }

namespace {

// Vector orthogonal to the d-1 given rows of length d (cofactor expansion).
LatticeVector generalized_cross(const std::vector<LatticeVector>& rows, std::size_t d) {
  std::vector<Int> out(d);
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<std::vector<BigInt>> minor;
    for (const auto& r : rows) {
      std::vector<BigInt> mr;
      for (std::size_t c = 0; c < d; ++c) {
        if (c != k) mr.emplace_back(r[c]);
      }
      minor.push_back(std::move(mr));
    }
    BigInt det = linalg::determinant(minor);
    out[k] = narrow((k % 2 == 0) ? det : BigInt(-det));
  }
  return LatticeVector(std::move(out)).primitive();
}

template <typename F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Cone extremal_rays(std::span<const LatticeVector> generators) {
  if (generators.empty()) throw Error(ErrorCode::kEmptyInput, "cone over an empty list");
  const std::size_t d = generators[0].size();
  std::vector<LatticeVector> gens;
  for (const auto& g : generators) {
    require_dim(generators[0], g);
    if (!g.is_zero()) gens.push_back(g);
  }
  std::vector<LatticeVector> equations = linalg::integer_nullspace(gens, d);
  const std::size_t r = d - equations.size();
  if (r == 0) return Cone(d, {}, {}, std::move(equations));

  std::set<LatticeVector> normals;
  for_each_combination(gens.size(), r - 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<LatticeVector> rows;
    for (auto i : idx) rows.push_back(gens[i]);
    rows.insert(rows.end(), equations.begin(), equations.end());
    if (linalg::rank(rows) != d - 1) return;
    LatticeVector n = generalized_cross(rows, d);
    bool pos = false, neg = false;
    for (const auto& g : gens) {
      Int s = dot(n, g);
      pos |= s > 0;
      neg |= s < 0;
    }
    if (pos && neg) return;
    normals.insert(neg ? -n : n);
  });

  std::vector<LatticeVector> normal_list(normals.begin(), normals.end());
  {
    std::vector<LatticeVector> span_check = normal_list;
    span_check.insert(span_check.end(), equations.begin(), equations.end());
    if (linalg::rank(span_check) != d) {
      throw Error(ErrorCode::kNotPointed, "the cone over the generators contains a line");
    }
  }

  std::set<LatticeVector> rays;
  for (const auto& g : gens) {
    std::vector<LatticeVector> tight = equations;
    for (const auto& n : normal_list) {
      if (dot(n, g) == 0) tight.push_back(n);
    }
    if (linalg::rank(tight) == d - 1) rays.insert(g.primitive());
  }
  return Cone(d, std::vector<LatticeVector>(rays.begin(), rays.end()), std::move(normal_list),
              std::move(equations));
}

// --- cosets ------------------------------------------------------------------

std::vector<LatticeVector> coset_system(const GroupLattice& lattice,
                                        std::span<const LatticeVector> rays) {
  const std::size_t r = lattice.rank();
  if (rays.size() != r) {
    throw Error(ErrorCode::kNotSimplicial, std::to_string(rays.size()) + " rays for a rank " +
                                               std::to_string(r) + " lattice");
  }
  std::vector<LatticeVector> ray_coords;
  for (const auto& e : rays) {
    auto c = lattice_coordinates(lattice, e);
    if (!c) throw Error(ErrorCode::kRayNotInGroup, "ray outside the group lattice");
    ray_coords.emplace_back(std::move(*c));
  }
  if (linalg::rank(ray_coords) != r) {
    throw Error(ErrorCode::kNotSimplicial, "rays are linearly dependent");
  }
  if (r == 0) return {LatticeVector(lattice.ambient_dim)};

  // Complete residue system from the Hermite form of the ray sublattice.
  GroupLattice sub = hermite_basis(ray_coords);
  std::vector<Int> box(r);
  for (std::size_t i = 0; i < r; ++i) box[i] = sub.basis[i][sub.pivot_columns[i]];

  linalg::RationalMatrix m(r, std::vector<Rational>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) m[i][j] = ray_coords[i][j];
  }
  const auto inv = linalg::inverse(m);

  std::vector<LatticeVector> out;
  std::vector<Int> c(r, 0);
  while (true) {
    // lambda = c * M^{-1}; shift c into the half-open parallelepiped.
    std::vector<Int> shifted(c);
    for (std::size_t i = 0; i < r; ++i) {
      Rational lambda = 0;
      for (std::size_t k = 0; k < r; ++k) lambda += Rational(c[k]) * inv[k][i];
      Int f = narrow(floor_of(lambda));
      for (std::size_t j = 0; j < r; ++j) {
        shifted[j] = checked_sub(shifted[j], checked_mul(f, ray_coords[i][j]));
      }
    }
    LatticeVector ambient(lattice.ambient_dim);
    for (std::size_t k = 0; k < r; ++k) ambient += lattice.basis[k].scaled(shifted[k]);
    out.push_back(std::move(ambient));

    std::size_t pos = 0;
    while (pos < r && ++c[pos] == box[pos]) c[pos++] = 0;
    if (pos == r) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sgclass
