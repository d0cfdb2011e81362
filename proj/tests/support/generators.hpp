#pragma once

#include <random>
#include <vector>

#include "plat/grid.hpp"

namespace plat::gen {

/// Uniform grid of the given shape with entries drawn from `values`.
inline PlatGrid grid(std::mt19937_64& rng, int m, int n, const std::vector<Coefficient>& values) {
  std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
  PlatGrid g = PlatGrid::filled(m, n, 0);
  for (auto& row : g.rows) {
    for (auto& a : row) a = values[pick(rng)];
  }
  return g;
}

inline std::vector<Coefficient> range(Coefficient lo, Coefficient hi, bool skip_zero = false) {
  std::vector<Coefficient> out;
  for (Coefficient a = lo; a <= hi; ++a) {
    if (!(skip_zero && a == 0)) out.push_back(a);
  }
  return out;
}

inline std::vector<Coefficient> twisted(Coefficient lo, Coefficient hi) {
  std::vector<Coefficient> out;
  for (Coefficient a = lo; a <= hi; ++a) {
    out.push_back(-a);
    out.push_back(a);
  }
  return out;
}

/// Random even length in [2, max_n] and width in [2, max_m].
inline std::pair<int, int> shape(std::mt19937_64& rng, int max_m, int max_n) {
  std::uniform_int_distribution<int> width(2, max_m);
  std::uniform_int_distribution<int> half(1, max_n / 2);
  return {width(rng), 2 * half(rng)};
}

inline PlatGrid figure_one() {
  PlatGrid g = PlatGrid::filled(3, 6, -4);
  g.at(1, 1) = -3;
  g.at(2, 2) = -3;
  return g;
}

}  // namespace plat::gen
