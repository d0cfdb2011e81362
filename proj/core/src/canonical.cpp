#include "plat/canonical.hpp"

#include <algorithm>

namespace plat {

std::string_view symmetry_name(Symmetry s) noexcept {
  switch (s) {
    case Symmetry::Identity: return "identity";
    case Symmetry::VerticalAxis: return "vertical";
    case Symmetry::HorizontalAxis: return "horizontal";
    case Symmetry::Both: return "both";
  }
  return "identity";
}

Symmetry compose(Symmetry a, Symmetry b) noexcept {
  // Z/2 x Z/2 with bits (vertical, horizontal).
  auto bits = [](Symmetry s) {
    switch (s) {
      case Symmetry::Identity: return 0;
      case Symmetry::VerticalAxis: return 1;
      case Symmetry::HorizontalAxis: return 2;
      case Symmetry::Both: return 3;
    }
    return 0;
  };
  switch (bits(a) ^ bits(b)) {
    case 1: return Symmetry::VerticalAxis;
    case 2: return Symmetry::HorizontalAxis;
    case 3: return Symmetry::Both;
    default: return Symmetry::Identity;
  }
}

namespace {

void require_standard(const PlatGrid& grid) {
  require_valid(grid);
  if (grid.closure != Closure::StandardPlat) {
    throw Error(ErrorCode::EvenPlatUnsupported,
                "axis rotations are only defined for standard plat closures");
  }
}

}  // namespace

TwistRegionId map_region(const PlatGrid& grid, TwistRegionId region, Symmetry s) {
  const bool flip_cols = s == Symmetry::VerticalAxis || s == Symmetry::Both;
  const bool flip_rows = s == Symmetry::HorizontalAxis || s == Symmetry::Both;
  TwistRegionId out = region;
  if (flip_rows) out.row = grid.n - region.row;
  // Rows i and n-i share parity, hence width.
  if (flip_cols) out.col = grid.width(region.row) + 1 - region.col;
  return out;
}

PlatGrid apply_symmetry(const PlatGrid& grid, Symmetry s) {
  require_standard(grid);
  PlatGrid out = grid;
  for (int row = 1; row < grid.n; ++row) {
    for (int col = 1; col <= grid.width(row); ++col) {
      const TwistRegionId image = map_region(grid, {row, col}, s);
      out.at(image.row, image.col) = grid.at(row, col);
    }
  }
  return out;
}

bool grid_less(const PlatGrid& a, const PlatGrid& b) {
  return std::lexicographical_compare(
      a.rows.begin(), a.rows.end(), b.rows.begin(), b.rows.end(),
      [](const auto& x, const auto& y) {
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
      });
}

CanonicalForm canonicalize(const PlatGrid& grid) {
  require_standard(grid);
  std::array<PlatGrid, 4> images;
  for (std::size_t k = 0; k < kAllSymmetries.size(); ++k) {
    images[k] = apply_symmetry(grid, kAllSymmetries[k]);
  }
  std::size_t best = 0;
  for (std::size_t k = 1; k < images.size(); ++k) {
    if (grid_less(images[k], images[best])) best = k;
  }
  int distinct = 0;
  for (std::size_t k = 0; k < images.size(); ++k) {
    if (std::find(images.begin(), images.begin() + static_cast<long>(k), images[k]) ==
        images.begin() + static_cast<long>(k)) {
      ++distinct;
    }
  }
  return {images[best], kAllSymmetries[best], distinct};
}

std::string_view verdict_token(Verdict v) noexcept {
  switch (v) {
    case Verdict::Equal: return "EQUAL";
    case Verdict::Distinct: return "DISTINCT";
    case Verdict::HypothesesNotMet: return "HYPOTHESES_NOT_MET";
  }
  return "HYPOTHESES_NOT_MET";
}

EquivalenceVerdict decide_equivalence(const PlatGrid& g1, const PlatGrid& g2) {
  EquivalenceVerdict result;
  result.first = hypothesis_report(g1);
  result.second = hypothesis_report(g2);
  const bool standard = g1.closure == Closure::StandardPlat &&
                        g2.closure == Closure::StandardPlat;
  if (!standard || !result.first.unique_bridge_sphere ||
      !result.second.unique_bridge_sphere) {
    result.verdict = Verdict::HypothesesNotMet;
    return result;
  }
  if (g1.m != g2.m || g1.n != g2.n) {
    result.verdict = Verdict::Distinct;
    return result;
  }
  result.verdict = canonicalize(g1).grid == canonicalize(g2).grid ? Verdict::Equal
                                                                  : Verdict::Distinct;
  return result;
}

}  // namespace plat
