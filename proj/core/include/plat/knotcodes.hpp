#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "plat/grid.hpp"
#include "plat/spheres.hpp"

namespace plat {

/// Planar diagram code. Each tuple lists edge labels counterclockwise,
/// starting from the incoming under-edge. Edges are numbered along the
/// traversal that starts at the top of strand 1 heading down, then at the
/// leftmost untouched top bridge for each further component.
struct PDCode {
  std::vector<std::array<int, 4>> crossings;

  friend bool operator==(const PDCode&, const PDCode&) = default;
};

/// Crossings are emitted row by row, box by box, bottom to top within a box.
/// Throws EmptyDiagram when every coefficient is zero.
PDCode to_pd_code(const PlatGrid& grid);

/// `X(a,b,c,d),X(...)` on one line.
std::string format_pd(const PDCode& code);

struct GaussToken {
  int crossing = 0;  // 1-based, PD emission order
  bool over = false;
  int sign = 1;      // writhe sign of the crossing

  friend bool operator==(const GaussToken&, const GaussToken&) = default;
};

/// Signed Gauss code along the PD traversal. Throws NotAKnot for links and
/// EmptyDiagram when there are no crossings.
std::vector<GaussToken> gauss_code(const PlatGrid& grid);

/// Space-separated `O<k><sign>` / `U<k><sign>` tokens, e.g. `O1- U2- ...`.
std::string format_gauss(const std::vector<GaussToken>& code);

/// |det| of the Goeritz matrix of the checkerboard colouring; 0 for split
/// diagrams.
mpz_class goeritz_determinant(const PlatGrid& grid);

/// Points at which the Alexander polynomial is sampled.
inline constexpr std::array<int, 3> kAlexanderPoints = {-1, 2, 3};

/// Alexander polynomial values at kAlexanderPoints, normalised to a genuine
/// polynomial with nonzero constant term and value 1 at t = 1. Computed from
/// the Fox-calculus matrix of the Wirtinger presentation. Knots only.
std::map<int, mpz_class> alexander_evaluations(const PlatGrid& grid);

struct InvariantFingerprint {
  int components = 0;
  mpz_class determinant;
  std::optional<std::map<int, mpz_class>> alexander_evals;

  friend bool operator==(const InvariantFingerprint&, const InvariantFingerprint&) = default;
};

InvariantFingerprint fingerprint(const PlatGrid& grid);

/// `components=<k> determinant=<d> alexander(-1)=... alexander(2)=...`
std::string format_fingerprint(const InvariantFingerprint& fp);

/// SVG 1.1 drawing of the plat: strands, bridges, labelled twist boxes, and
/// optionally the arc of a vertical sphere in red.
std::string render_svg(const PlatGrid& grid,
                       const std::optional<VerticalSphereSpec>& overlay = std::nullopt);

}  // namespace plat
