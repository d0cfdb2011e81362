#pragma once

#include <array>
#include <string_view>

#include "plat/grid.hpp"

namespace plat {

/// The Klein four-group of pi-rotations about the in-plane vertical and
/// horizontal axes. Each rotation mirrors the projection and also swaps front
/// and back, so crossing signs are preserved and the action on a grid is a
/// pure permutation of coefficients.
enum class Symmetry { Identity, VerticalAxis, HorizontalAxis, Both };

inline constexpr std::array<Symmetry, 4> kAllSymmetries = {
    Symmetry::Identity, Symmetry::VerticalAxis, Symmetry::HorizontalAxis,
    Symmetry::Both};

std::string_view symmetry_name(Symmetry s) noexcept;
Symmetry compose(Symmetry a, Symmetry b) noexcept;

/// Image of the box `region` under `s`.
TwistRegionId map_region(const PlatGrid& grid, TwistRegionId region, Symmetry s);

/// VerticalAxis: a(i,j) -> a(i, w_i+1-j). HorizontalAxis: a(i,j) -> a(n-i, j).
PlatGrid apply_symmetry(const PlatGrid& grid, Symmetry s);

struct CanonicalForm {
  PlatGrid grid;
  Symmetry realized_by = Symmetry::Identity;
  int orbit_size = 1;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Row-major flattened integer-lexicographic comparison.
bool grid_less(const PlatGrid& a, const PlatGrid& b);

/// Orbit minimum under the four symmetries; ties resolve to the earliest
/// group element in Identity < VerticalAxis < HorizontalAxis < Both.
CanonicalForm canonicalize(const PlatGrid& grid);

enum class Verdict { Equal, Distinct, HypothesesNotMet };

struct EquivalenceVerdict {
  Verdict verdict = Verdict::HypothesesNotMet;
  HypothesisReport first;
  HypothesisReport second;
};

std::string_view verdict_token(Verdict v) noexcept;

/// Decides whether two plats that both satisfy m >= 3, 3-highly twisted and
/// n > 4m(m-2) present the same knot. Outside that regime (or for even plats)
/// the verdict is HypothesesNotMet.
EquivalenceVerdict decide_equivalence(const PlatGrid& g1, const PlatGrid& g2);

}  // namespace plat
