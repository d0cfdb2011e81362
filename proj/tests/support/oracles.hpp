#pragma once

// Test-only reference computations. None of these call into the library
// routine they are used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "plat/grid.hpp"

namespace plat::oracle {

/// Flattened coefficients, row-major.
inline std::vector<Coefficient> flatten(const PlatGrid& g) {
  std::vector<Coefficient> out;
  for (const auto& row : g.rows) out.insert(out.end(), row.begin(), row.end());
  return out;
}

/// Grid images under the four rotations, computed on the braid letters:
/// the vertical axis sends sigma_k to sigma_{2m-k}, the horizontal axis
/// reverses the order of the row blocks. Order: id, vertical, horizontal, both.
inline std::vector<PlatGrid> rotation_images(const PlatGrid& g) {
  auto vertical = [&](const PlatGrid& src) {
    PlatGrid out = src;
    for (int row = 1; row < src.n; ++row) {
      for (int col = 1; col <= src.width(row); ++col) {
        const int k = row % 2 == 1 ? 2 * col : 2 * col - 1;
        const int mirrored = 2 * src.m - k;
        const int new_col = row % 2 == 1 ? mirrored / 2 : (mirrored + 1) / 2;
        out.rows[row - 1][new_col - 1] = src.rows[row - 1][col - 1];
      }
    }
    return out;
  };
  auto horizontal = [&](const PlatGrid& src) {
    PlatGrid out = src;
    std::reverse(out.rows.begin(), out.rows.end());
    return out;
  };
  return {g, vertical(g), horizontal(g), vertical(horizontal(g))};
}

/// Link components by walking every crossing of every box one at a time,
/// following the strands through the caps.
inline int traced_components(const PlatGrid& g) {
  const int strands = 2 * g.m;
  // Sequence of single crossings (generator index), braid order.
  std::vector<int> letters;
  for (int row = 1; row < g.n; ++row) {
    for (int col = 1; col <= g.width(row); ++col) {
      const Coefficient a = g.rows[row - 1][col - 1];
      const int k = row % 2 == 1 ? 2 * col : 2 * col - 1;
      for (Coefficient t = 0; t < (a < 0 ? -a : a); ++t) letters.push_back(k);
    }
  }
  auto descend = [&](int pos) {
    for (int k : letters) {
      if (pos == k) pos = k + 1;
      else if (pos == k + 1) pos = k;
    }
    return pos;
  };
  auto ascend = [&](int pos) {
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      if (pos == *it) pos = *it + 1;
      else if (pos == *it + 1) pos = *it;
    }
    return pos;
  };
  auto top_cap = [](int s) { return s % 2 == 1 ? s + 1 : s - 1; };
  auto bottom_cap = [&](int s) {
    if (g.closure == Closure::StandardPlat) return top_cap(s);
    if (s == 1) return strands;
    if (s == strands) return 1;
    return s % 2 == 0 ? s + 1 : s - 1;
  };
  std::vector<bool> used(strands + 1, false);
  int components = 0;
  for (int start = 1; start <= strands; ++start) {
    if (used[start]) continue;
    ++components;
    int top = start;
    do {
      used[top] = true;
      const int bottom = bottom_cap(descend(top));
      const int back_up = ascend(bottom);
      used[back_up] = true;
      top = top_cap(back_up);
    } while (top != start);
  }
  return components;
}

/// Vertical spheres by filtering the full product of interior ranges.
inline std::vector<std::vector<int>> brute_force_vertical(int m, int n) {
  std::vector<std::vector<int>> out;
  const int levels = n - 1;
  std::vector<int> hi(levels);
  for (int i = 0; i < levels; ++i) hi[i] = (i % 2 == 0 ? m - 1 : m) - 1;
  if (std::any_of(hi.begin(), hi.end(), [](int h) { return h < 1; })) return out;
  std::vector<int> c(levels, 1);
  while (true) {
    bool ok = true;
    for (int i = 0; i + 1 < levels && ok; ++i) {
      const int p = i % 2 == 0 ? 2 * c[i] + 1 : 2 * c[i];
      const int q = (i + 1) % 2 == 0 ? 2 * c[i + 1] + 1 : 2 * c[i + 1];
      ok = (p - q == 1) || (q - p == 1);
    }
    if (ok) out.push_back(c);
    int pos = levels - 1;
    while (pos >= 0 && c[pos] == hi[pos]) c[pos--] = 1;
    if (pos < 0) break;
    ++c[pos];
  }
  return out;
}

/// Gauss's evenness condition for a closed planar curve: between the two
/// occurrences of any crossing there is an even number of symbols.
template <typename Token>
bool gauss_evenness(const std::vector<Token>& code) {
  std::map<int, std::vector<std::size_t>> where;
  for (std::size_t i = 0; i < code.size(); ++i) where[code[i].crossing].push_back(i);
  for (const auto& [crossing, positions] : where) {
    if (positions.size() != 2) return false;
    if ((positions[1] - positions[0] - 1) % 2 != 0) return false;
  }
  return true;
}

}  // namespace plat::oracle
