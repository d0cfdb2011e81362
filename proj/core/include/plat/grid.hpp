#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plat/error.hpp"

namespace plat {

using Coefficient = std::int64_t;

enum class Closure { StandardPlat, EvenPlat };

/// Address of a twist box: 1-based row (top to bottom) and column (left to
/// right within the row).
struct TwistRegionId {
  int row = 1;
  int col = 1;

  friend auto operator<=>(const TwistRegionId&, const TwistRegionId&) = default;
};

/// A 2m-plat in standard form: n-1 staggered rows of twist coefficients.
///
/// Odd rows hold the boxes on even generators sigma_2, sigma_4, ...,
/// sigma_{2m-2} (m-1 boxes); even rows hold the boxes on odd generators
/// sigma_1, ..., sigma_{2m-1} (m boxes). A value of this type may be
/// malformed; `validate` reports what is wrong with it and every operation
/// that needs a well-formed grid calls `require_valid` first.
struct PlatGrid {
  int m = 0;
  int n = 0;
  std::vector<std::vector<Coefficient>> rows;
  Closure closure = Closure::StandardPlat;

  /// Number of boxes in row `row` (1-based) of a width-m plat.
  static constexpr int row_width(int m, int row) noexcept {
    return row % 2 == 1 ? m - 1 : m;
  }
  int width(int row) const noexcept { return row_width(m, row); }
  int row_count() const noexcept { return n - 1; }
  int strands() const noexcept { return 2 * m; }

  Coefficient at(int row, int col) const { return rows[row - 1][col - 1]; }
  Coefficient& at(int row, int col) { return rows[row - 1][col - 1]; }
  Coefficient at(TwistRegionId r) const { return at(r.row, r.col); }

  /// Braid generator index of the box (row, col).
  static constexpr int generator(int row, int col) noexcept {
    return row % 2 == 1 ? 2 * col : 2 * col - 1;
  }

  /// Well-shaped grid with every coefficient equal to `value`.
  static PlatGrid filled(int m, int n, Coefficient value,
                         Closure closure = Closure::StandardPlat);

  friend bool operator==(const PlatGrid&, const PlatGrid&) = default;
};

struct Violation {
  ErrorCode code;
  std::string message;
};

struct ValidationResult {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

ValidationResult validate(const PlatGrid& grid);

/// Throws the first violation found by `validate`.
void require_valid(const PlatGrid& grid);

bool is_c_highly_twisted(const PlatGrid& grid, Coefficient c);

/// ceil(n / (2(m-2))). Only asserted for m >= 3 and 3-highly twisted plats;
/// throws HypothesesNotMet otherwise.
int bridge_distance(const PlatGrid& grid);

/// The same formula on a bare shape, for callers that only know (m, n).
int bridge_distance_formula(int m, int n);

struct HypothesisReport {
  bool width_ok = false;
  bool twist_ok = false;
  bool length_ok = false;
  std::optional<int> distance;
  bool unique_bridge_sphere = false;
};

HypothesisReport hypothesis_report(const PlatGrid& grid);

/// Number of twist boxes, n*m - n/2 - m for a standard plat.
std::int64_t twist_region_count(const PlatGrid& grid);
std::int64_t twist_region_count(int m, int n);

/// Partner strand (1-based) of `strand` under the top bridges.
int top_partner(int m, int strand);
/// Partner strand (1-based) of `strand` under the bottom caps.
int bottom_partner(int m, int strand, Closure closure);

/// Link components of the closure, from the braid permutation and the caps.
int component_count(const PlatGrid& grid);

/// Plat text format: a `plat m=<int> n=<int> closure=<standard|even>` header
/// followed by one line of coefficients per row; `#` starts a comment.
PlatGrid parse_plat(std::string_view text);
std::string format_plat(const PlatGrid& grid);

std::string_view closure_name(Closure closure) noexcept;

}  // namespace plat
