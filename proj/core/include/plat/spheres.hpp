#pragma once

#include <span>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "plat/grid.hpp"

namespace plat {

enum class SphereKind { Vertical, AlmostVertical };

/// S(c_1, ..., c_{n-1}): c_i twist boxes lie left of the arc in row i.
///
/// Writing p_i for the number of strands left of the arc in row i
/// (p_i = 2c_i + 1 on odd rows, 2c_i on even rows), consecutive rows satisfy
/// |p_i - p_{i+1}| = 1: the arc crosses exactly one strand between rows and
/// one bridge at each end, so the sphere meets the link in n points.
struct VerticalSphereSpec {
  std::vector<int> c;
  SphereKind kind = SphereKind::Vertical;

  friend bool operator==(const VerticalSphereSpec&, const VerticalSphereSpec&) = default;
};

/// Two spheres differing by one box in row `region.row`, enclosing `region`.
struct IsolatingSphere {
  VerticalSphereSpec s1;
  VerticalSphereSpec s2;
  TwistRegionId region;
};

enum class RegionClass { Allowable, AlmostAllowable, Extreme };

enum class Corner { TopLeft, TopRight, BottomLeft, BottomRight };

std::string_view sphere_kind_name(SphereKind kind) noexcept;
std::string_view region_class_name(RegionClass rc) noexcept;

/// Strand positions p_i of the arc, one per row.
std::vector<int> arc_positions(std::span<const int> c);

/// Classifies `c` as Vertical or AlmostVertical. Throws NotASphere on a range
/// or adjacency violation and NotAlmostVertical when boundary values occur
/// outside the permitted level patterns.
VerticalSphereSpec check_sphere(const PlatGrid& grid, std::span<const int> c);

/// Every vertical sphere, in lexicographic order of c.
std::vector<VerticalSphereSpec> enumerate_vertical_spheres(const PlatGrid& grid);

/// Number of vertical spheres, counted by dynamic programming over p.
std::int64_t count_vertical_spheres(const PlatGrid& grid);

RegionClass classify_region(const PlatGrid& grid, TwistRegionId region);

/// A pair of (almost) vertical spheres isolating `region`. Allowable regions
/// get two vertical spheres; almost allowable regions may use almost vertical
/// ones. Throws ExtremeRegion for corner regions.
IsolatingSphere isolating_sphere_for(const PlatGrid& grid, TwistRegionId region);

/// The corner pair (a, b) feeding 1/(a + 1/b): the outer corner box and the
/// box beside it in the adjacent row.
std::pair<TwistRegionId, TwistRegionId> corner_regions(const PlatGrid& grid, Corner corner);

/// 1/(a + 1/b) for the corner pair; DegenerateFraction when b = 0 or
/// a + 1/b = 0.
mpq_class corner_fraction(const PlatGrid& grid, Corner corner);

}  // namespace plat
