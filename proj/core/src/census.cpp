#include "plat/census.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace plat {

namespace {

std::vector<Coefficient> normalized_set(const std::vector<Coefficient>& set) {
  std::vector<Coefficient> out = set;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

void validate_census(const CensusSpec& spec) {
  require_valid(PlatGrid::filled(spec.m, spec.n, 0));
  if (spec.coefficient_set.empty()) {
    throw Error(ErrorCode::InvalidCensus, "coefficient set is empty");
  }
  if (spec.c_min > 0) {
    for (Coefficient a : spec.coefficient_set) {
      if ((a < 0 ? -a : a) < spec.c_min) {
        throw Error(ErrorCode::InvalidCensus,
                    "coefficient " + std::to_string(a) + " is below c_min " +
                        std::to_string(spec.c_min));
      }
    }
  }
}

int cell_cycles(int m, int n, Symmetry s) {
  const PlatGrid shape = PlatGrid::filled(m, n, 0);
  int cycles = 0;
  for (int row = 1; row < n; ++row) {
    for (int col = 1; col <= shape.width(row); ++col) {
      // Every element is an involution: count each 2-cycle once.
      const TwistRegionId image = map_region(shape, {row, col}, s);
      if (!(image < TwistRegionId{row, col})) ++cycles;
    }
  }
  return cycles;
}

OrbitReport count_orbits(const CensusSpec& spec) {
  validate_census(spec);
  const auto base = static_cast<unsigned long>(normalized_set(spec.coefficient_set).size());
  OrbitReport report;
  mpz_class sum = 0;
  for (std::size_t k = 0; k < kAllSymmetries.size(); ++k) {
    mpz_ui_pow_ui(report.fixed_counts[k].get_mpz_t(), base,
                  static_cast<unsigned long>(cell_cycles(spec.m, spec.n, kAllSymmetries[k])));
    sum += report.fixed_counts[k];
  }
  report.total_grids = report.fixed_counts[0];
  report.orbit_count = sum / 4;
  return report;
}

SampleSource::SampleSource(std::uint64_t seed) : engine_(seed) {}

std::uint64_t SampleSource::below(std::uint64_t bound) {
  // Largest multiple of bound representable; draws above it are rejected.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  while (true) {
    const std::uint64_t x = engine_();
    if (x < limit) return x % bound;
  }
}

std::vector<PlatGrid> sample(const CensusSpec& spec, std::size_t k) {
  validate_census(spec);
  const auto set = normalized_set(spec.coefficient_set);
  SampleSource source(spec.seed);
  std::vector<PlatGrid> out;
  out.reserve(k);
  for (std::size_t s = 0; s < k; ++s) {
    PlatGrid grid = PlatGrid::filled(spec.m, spec.n, 0);
    for (auto& row : grid.rows) {
      for (auto& a : row) a = set[source.below(set.size())];
    }
    out.push_back(std::move(grid));
  }
  return out;
}

mpq_class genericity_ratio(int M, int T) {
  if (M < 2 || T < 1) {
    throw Error(ErrorCode::InvalidCensus, "genericity ratio needs M >= 2 and T >= 1");
  }
  mpz_class num;
  mpz_class den;
  mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(2 * M - 4),
                static_cast<unsigned long>(T));
  mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(2 * M + 1),
                static_cast<unsigned long>(T));
  mpq_class ratio(num, den);
  ratio.canonicalize();
  return ratio;
}

std::vector<CanonicalForm> dedupe(const std::vector<PlatGrid>& grids) {
  auto less = [](const PlatGrid& a, const PlatGrid& b) { return grid_less(a, b); };
  std::set<PlatGrid, decltype(less)> seen(less);
  std::vector<CanonicalForm> out;
  for (const auto& grid : grids) {
    CanonicalForm form = canonicalize(grid);
    if (seen.insert(form.grid).second) out.push_back(std::move(form));
  }
  return out;
}

std::vector<PlatGrid> enumerate_census(const CensusSpec& spec) {
  validate_census(spec);
  const auto set = normalized_set(spec.coefficient_set);
  PlatGrid grid = PlatGrid::filled(spec.m, spec.n, set.front());
  std::vector<std::size_t> digits(static_cast<std::size_t>(twist_region_count(grid)), 0);
  std::vector<PlatGrid> out;
  while (true) {
    out.push_back(grid);
    std::size_t pos = digits.size();
    while (pos > 0) {
      --pos;
      if (++digits[pos] < set.size()) break;
      digits[pos] = 0;
      if (pos == 0) return out;
    }
    if (digits.empty()) return out;
    std::size_t d = 0;
    for (auto& row : grid.rows) {
      for (auto& a : row) a = set[digits[d++]];
    }
  }
}

}  // namespace plat
