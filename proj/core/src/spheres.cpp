#include "plat/spheres.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace plat {

std::string_view sphere_kind_name(SphereKind kind) noexcept {
  return kind == SphereKind::Vertical ? "vertical" : "almost-vertical";
}

std::string_view region_class_name(RegionClass rc) noexcept {
  switch (rc) {
    case RegionClass::Allowable: return "allowable";
    case RegionClass::AlmostAllowable: return "almost-allowable";
    case RegionClass::Extreme: return "extreme";
  }
  return "allowable";
}

std::vector<int> arc_positions(std::span<const int> c) {
  std::vector<int> p(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    const bool odd_row = k % 2 == 0;
    p[k] = odd_row ? 2 * c[k] + 1 : 2 * c[k];
  }
  return p;
}

namespace {

// Levels (1-based rows) may be exempt from the both-sides condition only in
// these patterns: {i} or {i, i+2} with i odd, or {i-1, i, i+1} with i even.
bool exempt_levels_allowed(const std::vector<int>& levels, int n) {
  if (levels.empty()) return true;
  auto within = [&](std::initializer_list<int> pattern) {
    return std::all_of(levels.begin(), levels.end(), [&](int level) {
      return std::find(pattern.begin(), pattern.end(), level) != pattern.end();
    });
  };
  for (int i = 1; i < n; ++i) {
    if (i % 2 == 1 && within({i, i + 2})) return true;
    if (i % 2 == 0 && i + 1 < n && within({i - 1, i, i + 1})) return true;
  }
  return false;
}

struct SideSets {
  std::vector<int> left;   // rows with no box left of the arc
  std::vector<int> right;  // rows with no box right of the arc
};

SideSets boundary_levels(const PlatGrid& grid, std::span<const int> c) {
  SideSets sets;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const int row = static_cast<int>(k) + 1;
    if (c[k] == 0) sets.left.push_back(row);
    if (c[k] == grid.width(row)) sets.right.push_back(row);
  }
  return sets;
}

bool adjacent_ok(int row, int c_prev, int c_here) {
  // p on the previous row vs this row.
  const int p_prev = (row - 1) % 2 == 1 ? 2 * c_prev + 1 : 2 * c_prev;
  const int p_here = row % 2 == 1 ? 2 * c_here + 1 : 2 * c_here;
  return p_prev - p_here == 1 || p_here - p_prev == 1;
}

}  // namespace

VerticalSphereSpec check_sphere(const PlatGrid& grid, std::span<const int> c) {
  require_valid(grid);
  if (c.size() != static_cast<std::size_t>(grid.n - 1)) {
    throw Error(ErrorCode::NotASphere, "expected " + std::to_string(grid.n - 1) +
                                           " entries, got " + std::to_string(c.size()));
  }
  for (std::size_t k = 0; k < c.size(); ++k) {
    const int row = static_cast<int>(k) + 1;
    if (c[k] < 0 || c[k] > grid.width(row)) {
      throw Error(ErrorCode::NotASphere, "c_" + std::to_string(row) + " = " +
                                             std::to_string(c[k]) + " outside [0, " +
                                             std::to_string(grid.width(row)) + "]");
    }
    if (k > 0 && !adjacent_ok(row, c[k - 1], c[k])) {
      const auto p = arc_positions(c);
      throw Error(ErrorCode::NotASphere,
                  "arc jumps from p_" + std::to_string(row - 1) + " = " +
                      std::to_string(p[k - 1]) + " to p_" + std::to_string(row) + " = " +
                      std::to_string(p[k]));
    }
  }
  const SideSets sets = boundary_levels(grid, c);
  VerticalSphereSpec spec{{c.begin(), c.end()}, SphereKind::Vertical};
  if (sets.left.empty() && sets.right.empty()) return spec;
  if (!exempt_levels_allowed(sets.left, grid.n) ||
      !exempt_levels_allowed(sets.right, grid.n)) {
    throw Error(ErrorCode::NotAlmostVertical,
                "rows lacking a box on one side do not form an allowed pattern");
  }
  spec.kind = SphereKind::AlmostVertical;
  return spec;
}

namespace {

// Depth-first search over c-vectors satisfying ranges and adjacency, with
// optional pinned entries. `almost` admits boundary values, pruned by the
// exempt-level patterns. The visitor returns true to stop.
class SphereSearch {
 public:
  SphereSearch(const PlatGrid& grid, bool almost) : grid_(grid), almost_(almost) {
    const auto levels = static_cast<std::size_t>(grid.n - 1);
    lo_.resize(levels);
    hi_.resize(levels);
    for (std::size_t k = 0; k < levels; ++k) {
      const int w = grid.width(static_cast<int>(k) + 1);
      lo_[k] = almost ? 0 : 1;
      hi_[k] = almost ? w : w - 1;
    }
  }

  void pin(int row, int value) {
    lo_[row - 1] = value;
    hi_[row - 1] = value;
  }

  void run(const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<int> c(lo_.size());
    SideSets sets;
    visit_ = &visit;
    descend(0, c, sets);
  }

 private:
  bool reachable(std::size_t k, int value) const {
    // The arc moves one strand per row, so it must be able to meet every
    // pinned later level.
    const int p = (k % 2 == 0) ? 2 * value + 1 : 2 * value;
    for (std::size_t t = k + 1; t < lo_.size(); ++t) {
      if (lo_[t] != hi_[t]) continue;
      const int pt = (t % 2 == 0) ? 2 * lo_[t] + 1 : 2 * lo_[t];
      if (std::abs(pt - p) > static_cast<int>(t - k)) return false;
    }
    return true;
  }

  bool descend(std::size_t k, std::vector<int>& c, SideSets& sets) {
    if (k == c.size()) return (*visit_)(c);
    const int row = static_cast<int>(k) + 1;
    for (int value = lo_[k]; value <= hi_[k]; ++value) {
      if (k > 0 && !adjacent_ok(row, c[k - 1], value)) continue;
      if (!reachable(k, value)) continue;
      const bool left = value == 0;
      const bool right = value == grid_.width(row);
      if (left) sets.left.push_back(row);
      if (right) sets.right.push_back(row);
      const bool ok = !almost_ || (exempt_levels_allowed(sets.left, grid_.n) &&
                                   exempt_levels_allowed(sets.right, grid_.n));
      c[k] = value;
      const bool stop = ok && descend(k + 1, c, sets);
      if (left) sets.left.pop_back();
      if (right) sets.right.pop_back();
      if (stop) return true;
    }
    return false;
  }

  const PlatGrid& grid_;
  bool almost_;
  std::vector<int> lo_;
  std::vector<int> hi_;
  const std::function<bool(const std::vector<int>&)>* visit_ = nullptr;
};

}  // namespace

std::vector<VerticalSphereSpec> enumerate_vertical_spheres(const PlatGrid& grid) {
  require_valid(grid);
  std::vector<VerticalSphereSpec> out;
  if (grid.m < 3) return out;
  SphereSearch search(grid, false);
  search.run([&](const std::vector<int>& c) {
    out.push_back({c, SphereKind::Vertical});
    return false;
  });
  return out;
}

std::int64_t count_vertical_spheres(const PlatGrid& grid) {
  require_valid(grid);
  if (grid.m < 3) return 0;
  // ways[c] = number of valid prefixes ending with value c on the current row.
  std::vector<std::int64_t> ways(static_cast<std::size_t>(grid.m + 1), 0);
  for (int c = 1; c <= grid.width(1) - 1; ++c) ways[c] = 1;
  for (int row = 2; row < grid.n; ++row) {
    std::vector<std::int64_t> next(ways.size(), 0);
    for (int c = 1; c <= grid.width(row) - 1; ++c) {
      for (int prev = 1; prev <= grid.width(row - 1) - 1; ++prev) {
        if (adjacent_ok(row, prev, c)) next[c] += ways[prev];
      }
    }
    ways = std::move(next);
  }
  std::int64_t total = 0;
  for (auto w : ways) total += w;
  return total;
}

RegionClass classify_region(const PlatGrid& grid, TwistRegionId region) {
  require_valid(grid);
  if (region.row < 1 || region.row >= grid.n || region.col < 1 ||
      region.col > grid.width(region.row)) {
    throw Error(ErrorCode::IndexOutOfRange,
                "region (" + std::to_string(region.row) + "," +
                    std::to_string(region.col) + ") outside the grid");
  }
  const int i = region.row;
  const int n = grid.n;
  const bool edge = region.col == 1 || region.col == grid.width(i);
  if (!edge) return RegionClass::Allowable;
  if (i == 1 || i == 2 || i == n - 2 || i == n - 1) return RegionClass::Extreme;
  return RegionClass::AlmostAllowable;
}

IsolatingSphere isolating_sphere_for(const PlatGrid& grid, TwistRegionId region) {
  const RegionClass rc = classify_region(grid, region);
  if (rc == RegionClass::Extreme) {
    throw Error(ErrorCode::ExtremeRegion,
                "region (" + std::to_string(region.row) + "," +
                    std::to_string(region.col) +
                    ") is extreme; use the corner continued fraction");
  }
  const int row = region.row;
  const int before = region.col - 1;

  // Keep the pair with the fewest almost vertical members; an edge region
  // forces at least one, so a pair with exactly one ends the search.
  std::optional<IsolatingSphere> found;
  int found_almost = 3;
  auto attempt = [&](bool almost) {
    SphereSearch search(grid, almost);
    search.pin(row, before);
    search.run([&](const std::vector<int>& c) {
      std::vector<int> c2 = c;
      c2[row - 1] += 1;
      try {
        auto s1 = check_sphere(grid, c);
        auto s2 = check_sphere(grid, c2);
        const int count = (s1.kind == SphereKind::AlmostVertical) +
                          (s2.kind == SphereKind::AlmostVertical);
        if (!almost && count > 0) return false;
        if (count < found_almost) {
          found = IsolatingSphere{std::move(s1), std::move(s2), region};
          found_almost = count;
        }
        return found_almost <= 1;
      } catch (const Error&) {
        return false;
      }
    });
  };

  const int w = grid.width(row);
  if (before >= 1 && before + 1 <= w - 1) attempt(false);
  if (!found && rc == RegionClass::AlmostAllowable) attempt(true);
  if (!found) {
    throw Error(ErrorCode::NotASphere,
                "no isolating pair exists for region (" + std::to_string(region.row) +
                    "," + std::to_string(region.col) + ") on this shape");
  }
  return *found;
}

std::pair<TwistRegionId, TwistRegionId> corner_regions(const PlatGrid& grid, Corner corner) {
  require_valid(grid);
  const int last = grid.n - 1;
  switch (corner) {
    case Corner::TopLeft: return {{1, 1}, {2, 1}};
    case Corner::TopRight: return {{1, grid.width(1)}, {2, grid.width(2)}};
    case Corner::BottomLeft: return {{last, 1}, {last - 1, 1}};
    case Corner::BottomRight:
      return {{last, grid.width(last)}, {last - 1, grid.width(last - 1)}};
  }
  return {{1, 1}, {2, 1}};
}

mpq_class corner_fraction(const PlatGrid& grid, Corner corner) {
  require_valid(grid);
  if (grid.n < 4) {
    throw Error(ErrorCode::ShapeError, "corner pairs need at least two rows");
  }
  const auto [outer, inner] = corner_regions(grid, corner);
  const mpz_class a = static_cast<long>(grid.at(outer));
  const mpz_class b = static_cast<long>(grid.at(inner));
  if (b == 0) throw Error(ErrorCode::DegenerateFraction, "inner coefficient is zero");
  // 1/(a + 1/b) = b / (ab + 1)
  const mpz_class denominator = a * b + 1;
  if (denominator == 0) {
    throw Error(ErrorCode::DegenerateFraction, "a + 1/b vanishes");
  }
  mpq_class result(b, denominator);
  result.canonicalize();
  return result;
}

}  // namespace plat
