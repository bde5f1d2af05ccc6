#include "sgclass/oracle.hpp"

#include <random>

namespace sgclass {

OracleResult oracle_compare(const AffineSemigroup& s, const Staircase& t, std::size_t samples,
                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto& gens = s.generators();
  const std::size_t n = s.ambient_dim();
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> count(0, 6);
  std::uniform_int_distribution<std::size_t> axis(0, n - 1);
  std::bernoulli_distribution coin(0.5);

  OracleResult out;
  out.samples = samples;
  for (std::size_t k = 0; k < samples; ++k) {
    LatticeVector v(std::vector<Int>(n, 0));
    const int terms = count(rng);
    for (int i = 0; i < terms; ++i) v = v + gens[pick(rng)];
    if (coin(rng)) {
      std::vector<Int> c = v.coords();
      c[axis(rng)] += coin(rng) ? 1 : -1;
      v = LatticeVector(std::move(c));
    }
    const bool in_s = s.member(v);
    out.members += in_s ? 1 : 0;
    if (in_s != t.represents(v)) out.mismatches.push_back(v);
  }
  return out;
}

}  // namespace sgclass
