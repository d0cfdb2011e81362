#include <algorithm>
#include <optional>
#include <random>
#include <set>

#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"
#include "plat/spheres.hpp"

using namespace plat;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected plat::Error");
  return ErrorCode::ShapeError;
}

// Exempt levels are admissible when they span at most two rows and a span of
// exactly two starts on an odd row ({i, i+2} or {i-1, i, i+1} with i even).
bool exempt_ok(const std::vector<int>& levels) {
  if (levels.empty()) return true;
  const int span = levels.back() - levels.front();
  if (span > 2) return false;
  return span < 2 || levels.front() % 2 == 1;
}

// Independent classification of a c-vector: nullopt means "not a sphere at all".
std::optional<SphereKind> classify_vector(const PlatGrid& g, const std::vector<int>& c) {
  std::vector<int> left, right;
  for (int row = 1; row < g.n; ++row) {
    const int w = g.width(row);
    const int ci = c[row - 1];
    if (ci < 0 || ci > w) return std::nullopt;
    if (row > 1) {
      const int prev = c[row - 2];
      const int p_prev = (row - 1) % 2 == 1 ? 2 * prev + 1 : 2 * prev;
      const int p_here = row % 2 == 1 ? 2 * ci + 1 : 2 * ci;
      if (std::abs(p_prev - p_here) != 1) return std::nullopt;
    }
    if (ci == 0) left.push_back(row);
    if (ci == w) right.push_back(row);
  }
  if (left.empty() && right.empty()) return SphereKind::Vertical;
  if (exempt_ok(left) && exempt_ok(right)) return SphereKind::AlmostVertical;
  return std::nullopt;
}

}  // namespace

TEST_CASE("spec sphere examples on the 6-plat") {
  const PlatGrid g = gen::figure_one();
  const std::vector<int> leftmost{1, 1, 1, 1, 1};
  CHECK(check_sphere(g, leftmost).kind == SphereKind::Vertical);
  CHECK(arc_positions(leftmost) == std::vector<int>{3, 2, 3, 2, 3});
  const std::vector<int> bumped{1, 2, 1, 1, 1};
  CHECK(check_sphere(g, bumped).kind == SphereKind::Vertical);
  CHECK(arc_positions(bumped) == std::vector<int>{3, 4, 3, 2, 3});
  const std::vector<int> broken{1, 1, 2, 1, 1};
  CHECK(code_of([&] { check_sphere(g, broken); }) == ErrorCode::NotASphere);
  CHECK(code_of([&] { check_sphere(g, std::vector<int>{1, 1, 1}); }) == ErrorCode::NotASphere);
  CHECK(code_of([&] { check_sphere(g, std::vector<int>{1, 4, 1, 1, 1}); }) ==
        ErrorCode::NotASphere);
}

TEST_CASE("almost vertical patterns") {
  const PlatGrid g = PlatGrid::filled(3, 6, 3);
  // Row 1 exempt on the left: p = 1,2,3,2,3.
  CHECK(check_sphere(g, std::vector<int>{0, 1, 1, 1, 1}).kind == SphereKind::AlmostVertical);
  // Rows 1 and 5 exempt on the left: not one of the allowed patterns.
  CHECK(code_of([&] { check_sphere(g, std::vector<int>{0, 1, 1, 1, 0}); }) ==
        ErrorCode::NotAlmostVertical);
  // Rows 1, 2, 3 exempt on the left form the even-centred triple.
  CHECK(check_sphere(g, std::vector<int>{0, 0, 0, 1, 1}).kind == SphereKind::AlmostVertical);
}

TEST_CASE("check_sphere agrees with the independent classifier") {
  for (int m = 2; m <= 4; ++m) {
    for (int n = 2; n <= 8; n += 2) {
      const PlatGrid g = PlatGrid::filled(m, n, 3);
      std::vector<int> c(n - 1, 0);
      while (true) {
        const auto expected = classify_vector(g, c);
        if (expected) {
          CHECK(check_sphere(g, c).kind == *expected);
        } else {
          CHECK_THROWS_AS(check_sphere(g, c), Error);
        }
        int pos = n - 2;
        while (pos >= 0 && c[pos] == g.width(pos + 1)) c[pos--] = 0;
        if (pos < 0) break;
        ++c[pos];
      }
    }
  }
}

TEST_CASE("enumeration equals brute force for m <= 4, n <= 10") {
  for (int m = 2; m <= 4; ++m) {
    for (int n = 2; n <= 10; n += 2) {
      CAPTURE(m);
      CAPTURE(n);
      const PlatGrid g = PlatGrid::filled(m, n, 3);
      const auto expected = oracle::brute_force_vertical(m, n);
      std::vector<std::vector<int>> got;
      for (const auto& spec : enumerate_vertical_spheres(g)) {
        CHECK(spec.kind == SphereKind::Vertical);
        got.push_back(spec.c);
      }
      std::sort(got.begin(), got.end());
      CHECK(got == expected);
      CHECK(count_vertical_spheres(g) == static_cast<std::int64_t>(expected.size()));
    }
  }
  CHECK(enumerate_vertical_spheres(PlatGrid::filled(2, 8, 3)).empty());
}

TEST_CASE("count agrees with enumeration on larger shapes") {
  for (auto [m, n] : {std::pair{5, 10}, std::pair{3, 14}, std::pair{6, 8}}) {
    const PlatGrid g = PlatGrid::filled(m, n, 3);
    CHECK(count_vertical_spheres(g) ==
          static_cast<std::int64_t>(enumerate_vertical_spheres(g).size()));
  }
}

TEST_CASE("region classes") {
  const PlatGrid g314 = PlatGrid::filled(3, 14, -3);
  CHECK(classify_region(g314, {1, 1}) == RegionClass::Extreme);
  CHECK(classify_region(g314, {5, 1}) == RegionClass::AlmostAllowable);
  CHECK(classify_region(PlatGrid::filled(4, 14, 3), {6, 2}) == RegionClass::Allowable);
  CHECK(region_class_name(RegionClass::AlmostAllowable) == "almost-allowable");
  CHECK(code_of([&] { classify_region(g314, {14, 1}); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([&] { classify_region(g314, {1, 3}); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([&] { classify_region(g314, {0, 1}); }) == ErrorCode::IndexOutOfRange);

  for (int m = 3; m <= 6; ++m) {
    for (int n = 8; n <= 20; n += 2) {
      const PlatGrid g = PlatGrid::filled(m, n, 3);
      int extreme = 0;
      std::set<int> extreme_rows;
      for (int row = 1; row < n; ++row) {
        for (int col = 1; col <= g.width(row); ++col) {
          if (classify_region(g, {row, col}) == RegionClass::Extreme) {
            ++extreme;
            extreme_rows.insert(row);
          }
        }
      }
      CHECK(extreme == 8);
      CHECK(extreme_rows == std::set<int>{1, 2, n - 2, n - 1});
    }
  }
}

TEST_CASE("isolating spheres") {
  const PlatGrid g = PlatGrid::filled(3, 14, -3);
  const IsolatingSphere iso = isolating_sphere_for(g, {7, 2});
  CHECK(iso.s1.c[6] == 1);
  CHECK(iso.s2.c[6] == 2);
  for (std::size_t k = 0; k < iso.s1.c.size(); ++k) {
    if (k != 6) CHECK(iso.s1.c[k] == iso.s2.c[k]);
  }
  CHECK(code_of([&] { isolating_sphere_for(g, {1, 1}); }) == ErrorCode::ExtremeRegion);
  CHECK(code_of([&] { isolating_sphere_for(gen::figure_one(), {1, 1}); }) ==
        ErrorCode::ExtremeRegion);
}

TEST_CASE("every non-extreme region is isolated by a pair differing in one entry") {
  for (int m = 3; m <= 5; ++m) {
    for (int n = 8; n <= 12; n += 2) {
      const PlatGrid g = PlatGrid::filled(m, n, 3);
      for (int row = 1; row < n; ++row) {
        for (int col = 1; col <= g.width(row); ++col) {
          const RegionClass rc = classify_region(g, {row, col});
          if (rc == RegionClass::Extreme) continue;
          CAPTURE(row);
          CAPTURE(col);
          const IsolatingSphere iso = isolating_sphere_for(g, {row, col});
          int differing = 0;
          for (std::size_t k = 0; k < iso.s1.c.size(); ++k) {
            if (iso.s1.c[k] != iso.s2.c[k]) ++differing;
          }
          CHECK(differing == 1);
          CHECK(iso.s1.c[row - 1] == col - 1);
          CHECK(iso.s2.c[row - 1] == col);
          CHECK(classify_vector(g, iso.s1.c).has_value());
          CHECK(classify_vector(g, iso.s2.c).has_value());
          if (rc == RegionClass::Allowable) {
            CHECK(iso.s1.kind == SphereKind::Vertical);
            CHECK(iso.s2.kind == SphereKind::Vertical);
          } else if (row % 2 == 1) {
            // Odd rows need the exemption on one member only.
            CHECK((iso.s1.kind == SphereKind::Vertical || iso.s2.kind == SphereKind::Vertical));
          } else {
            // c_row = 0 (left edge) or c_row = w (right edge) forces both
            // neighbouring odd rows to the same edge in both members.
            CHECK(iso.s1.kind == SphereKind::AlmostVertical);
            CHECK(iso.s2.kind == SphereKind::AlmostVertical);
          }
        }
      }
    }
  }
}

TEST_CASE("corner fractions") {
  const PlatGrid fig = gen::figure_one();
  CHECK(corner_fraction(fig, Corner::TopLeft) == mpq_class(-4, 13));
  // 1/(a + 1/b) by hand for the other three corners: all -4, -4 -> -4/17.
  CHECK(corner_fraction(fig, Corner::TopRight) == mpq_class(-4, 17));
  CHECK(corner_fraction(fig, Corner::BottomLeft) == mpq_class(-4, 17));
  CHECK(corner_fraction(fig, Corner::BottomRight) == mpq_class(-4, 17));

  PlatGrid degenerate = PlatGrid::filled(3, 6, 3);
  degenerate.at(1, 1) = 1;
  degenerate.at(2, 1) = -1;
  CHECK(code_of([&] { corner_fraction(degenerate, Corner::TopLeft); }) ==
        ErrorCode::DegenerateFraction);
  degenerate.at(2, 1) = 0;
  CHECK(code_of([&] { corner_fraction(degenerate, Corner::TopLeft); }) ==
        ErrorCode::DegenerateFraction);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const PlatGrid g = gen::grid(rng, 4, 10, gen::twisted(2, 9));
    for (Corner corner : {Corner::TopLeft, Corner::TopRight, Corner::BottomLeft,
                          Corner::BottomRight}) {
      const auto [outer, inner] = corner_regions(g, corner);
      mpq_class inverse(1, g.at(inner));
      inverse.canonicalize();
      mpq_class expected = mpq_class(g.at(outer)) + inverse;
      expected = 1 / expected;
      CHECK(corner_fraction(g, corner) == expected);
    }
  }
}
