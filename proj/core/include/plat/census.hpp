#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "plat/canonical.hpp"
#include "plat/grid.hpp"

namespace plat {

struct CensusSpec {
  int m = 3;
  int n = 6;
  std::vector<Coefficient> coefficient_set;
  Coefficient c_min = 0;
  std::uint64_t seed = 0;
};

/// Throws InvalidCensus for an empty coefficient set or a member below c_min,
/// and the grid errors for a bad shape.
void validate_census(const CensusSpec& spec);

struct OrbitReport {
  mpz_class total_grids;
  mpz_class orbit_count;
  /// Indexed like kAllSymmetries.
  std::array<mpz_class, 4> fixed_counts;
};

/// Number of cell orbits of `s` acting on the boxes of an (m, n) plat.
int cell_cycles(int m, int n, Symmetry s);

/// Exact orbit count under the four axis rotations, by Burnside.
OrbitReport count_orbits(const CensusSpec& spec);

/// Portable uniform index in [0, bound) from a 64-bit Mersenne Twister, by
/// rejection of the biased tail.
class SampleSource {
 public:
  explicit SampleSource(std::uint64_t seed);
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// k grids whose entries are drawn independently and uniformly from the
/// (sorted, deduplicated) coefficient set, row-major, one generator per call.
std::vector<PlatGrid> sample(const CensusSpec& spec, std::size_t k);

/// ((2M + 1 - 5) / (2M + 1))^T: the chance that T uniform draws from
/// [-M, M] all avoid {-2, ..., 2}.
mpq_class genericity_ratio(int M, int T);

/// Distinct canonical forms in first-seen order.
std::vector<CanonicalForm> dedupe(const std::vector<PlatGrid>& grids);

/// Every grid of the census shape over the coefficient set, in odometer
/// order (last box varies fastest). Intended for small censuses.
std::vector<PlatGrid> enumerate_census(const CensusSpec& spec);

}  // namespace plat
