#include <map>
#include <random>
#include <regex>

#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"
#include "plat/braid.hpp"
#include "plat/canonical.hpp"
#include "plat/knotcodes.hpp"

using namespace plat;

namespace {

PlatGrid single_box(Coefficient a) { return PlatGrid::filled(2, 2, a); }

// 4-plat with exponents e1 (sigma_2), e2 (sigma_1), e3 (sigma_2).
PlatGrid four_plat(Coefficient e1, Coefficient e2, Coefficient e3) {
  PlatGrid g = PlatGrid::filled(2, 4, 0);
  g.at(1, 1) = e1;
  g.at(2, 1) = e2;
  g.at(3, 1) = e3;
  return g;
}

// Alexander polynomial of T(2,k), k odd: (t^k + 1)/(t + 1) = sum (-t)^i.
mpz_class torus_alexander(int k, long t) {
  mpz_class total = 0, power = 1;
  for (int i = 0; i < k; ++i) {
    total += power;
    power *= -t;
  }
  return total;
}

std::int64_t crossing_total(const PlatGrid& g) {
  std::int64_t total = 0;
  for (const auto& row : g.rows) {
    for (auto a : row) total += a < 0 ? -a : a;
  }
  return total;
}

}  // namespace

TEST_CASE("classical determinants") {
  CHECK(goeritz_determinant(single_box(3)) == 3);
  CHECK(goeritz_determinant(single_box(1)) == 1);
  CHECK(goeritz_determinant(single_box(5)) == 5);
  CHECK(goeritz_determinant(single_box(-5)) == 5);
  CHECK(goeritz_determinant(single_box(2)) == 2);
  CHECK(goeritz_determinant(single_box(4)) == 4);
  // Split two-component unlink.
  CHECK(goeritz_determinant(PlatGrid::filled(2, 2, 0)) == 0);
}

TEST_CASE("torus knots T(2,k)") {
  for (int k = 1; k <= 15; k += 2) {
    for (int sign : {1, -1}) {
      const auto evals = alexander_evaluations(single_box(sign * k));
      for (int t : kAlexanderPoints) {
        CAPTURE(k);
        CAPTURE(t);
        CHECK(evals.at(t) == torus_alexander(k, t));
      }
      CHECK(goeritz_determinant(single_box(sign * k)) == k);
    }
  }
}

TEST_CASE("figure eight knot") {
  const PlatGrid g = four_plat(2, -1, 1);
  CHECK(component_count(g) == 1);
  CHECK(goeritz_determinant(g) == 5);
  const auto evals = alexander_evaluations(g);
  // Normalized t^2 - 3t + 1 up to the sign fixing P(1) = 1.
  CHECK(evals.at(-1) == -5);
  CHECK(evals.at(2) == 1);
  CHECK(evals.at(3) == -1);
}

TEST_CASE("4-plat determinants follow the continuant") {
  for (Coefficient e1 = -4; e1 <= 4; ++e1) {
    for (Coefficient e2 = -4; e2 <= 4; ++e2) {
      for (Coefficient e3 = -4; e3 <= 4; ++e3) {
        const PlatGrid g = four_plat(e1, e2, e3);
        const Coefficient expected = e1 * e2 * e3 - e1 - e3;
        CAPTURE(format_plat(g));
        CHECK(goeritz_determinant(g) == (expected < 0 ? -expected : expected));
      }
    }
  }
}

TEST_CASE("PD code") {
  const PDCode trefoil = to_pd_code(single_box(3));
  CHECK(format_pd(trefoil) == "X(3,1,4,6),X(1,5,2,4),X(5,3,6,2)");
  try {
    to_pd_code(PlatGrid::filled(3, 4, 0));
    FAIL("expected EmptyDiagram");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyDiagram);
  }
}

TEST_CASE("PD labels appear twice and crossings match the coefficients") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const auto [m, n] = gen::shape(rng, 4, 10);
    PlatGrid g = gen::grid(rng, m, n, gen::range(-4, 4));
    if (crossing_total(g) == 0) g.at(1, 1) = 1;
    const PDCode pd = to_pd_code(g);
    CHECK(static_cast<std::int64_t>(pd.crossings.size()) == crossing_total(g));
    std::map<int, int> seen;
    for (const auto& x : pd.crossings) {
      for (int label : x) ++seen[label];
    }
    CHECK(static_cast<std::int64_t>(seen.size()) == 2 * crossing_total(g));
    for (const auto& [label, count] : seen) {
      CHECK(label >= 1);
      CHECK(count == 2);
    }
    CHECK(seen.rbegin()->first == 2 * crossing_total(g));
  }
}

TEST_CASE("Gauss code") {
  CHECK(format_gauss(gauss_code(single_box(1))) == "O1+ U1+");
  try {
    gauss_code(gen::figure_one());
    FAIL("expected NotAKnot");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAKnot);
  }
  try {
    gauss_code(PlatGrid::filled(2, 2, 0));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK((e.code() == ErrorCode::EmptyDiagram || e.code() == ErrorCode::NotAKnot));
  }
}

TEST_CASE("Gauss codes of random knots are realizable") {
  std::mt19937_64 rng(41);
  int knots = 0;
  for (int trial = 0; trial < 300 && knots < 80; ++trial) {
    const auto [m, n] = gen::shape(rng, 4, 10);
    const PlatGrid g = gen::grid(rng, m, n, gen::range(-3, 3, true));
    if (component_count(g) != 1) continue;
    ++knots;
    const auto code = gauss_code(g);
    CHECK(static_cast<std::int64_t>(code.size()) == 2 * crossing_total(g));
    CHECK(oracle::gauss_evenness(code));
    std::map<int, std::pair<int, int>> over_under;
    for (const auto& token : code) {
      (token.over ? over_under[token.crossing].first : over_under[token.crossing].second)++;
    }
    for (const auto& [crossing, counts] : over_under) {
      CHECK(counts.first == 1);
      CHECK(counts.second == 1);
    }
  }
  CHECK(knots >= 40);
}

TEST_CASE("knot determinants are odd and match the Alexander value at -1") {
  std::mt19937_64 rng(55);
  int knots = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto [m, n] = gen::shape(rng, 4, 8);
    const PlatGrid g = gen::grid(rng, m, n, gen::range(-4, 4));
    if (component_count(g) != 1) continue;
    ++knots;
    const mpz_class det = goeritz_determinant(g);
    CHECK(det % 2 == 1);
    CHECK(abs(alexander_evaluations(g).at(-1)) == det);
  }
  CHECK(knots > 20);
}

TEST_CASE("fingerprint") {
  const auto fig = fingerprint(gen::figure_one());
  CHECK(fig.components == 2);
  CHECK_FALSE(fig.alexander_evals.has_value());
  const auto trefoil = fingerprint(single_box(3));
  CHECK(trefoil.components == 1);
  CHECK(trefoil.determinant == 3);
  REQUIRE(trefoil.alexander_evals.has_value());
  CHECK(trefoil.alexander_evals->at(2) == 3);
  CHECK(trefoil.alexander_evals->at(3) == 7);
  const auto unknot = fingerprint(single_box(1));
  CHECK(unknot.determinant == 1);
  for (const auto& [t, value] : *unknot.alexander_evals) CHECK(value == 1);
  CHECK(format_fingerprint(trefoil).find("determinant=3") != std::string::npos);
}

TEST_CASE("fingerprint is invariant under symmetry and braid round trip") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const auto [m, n] = gen::shape(rng, 4, 8);
    const PlatGrid g = gen::grid(rng, m, n, gen::range(-4, 4, true));
    const auto base = fingerprint(g);
    for (Symmetry s : kAllSymmetries) CHECK(fingerprint(apply_symmetry(g, s)) == base);
    CHECK(fingerprint(from_braid_word(to_braid_word(g))) == base);
  }
}

TEST_CASE("SVG rendering") {
  const PlatGrid fig = gen::figure_one();
  const std::string svg = render_svg(fig);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  const std::regex box("<rect class=\"twist\"");
  const auto count = std::distance(std::sregex_iterator(svg.begin(), svg.end(), box),
                                   std::sregex_iterator());
  CHECK(count == 12);
  CHECK(svg.find("class=\"sphere\"") == std::string::npos);
  const std::string overlay =
      render_svg(fig, VerticalSphereSpec{{1, 1, 1, 1, 1}, SphereKind::Vertical});
  CHECK(overlay.find("class=\"sphere\"") != std::string::npos);
  CHECK(render_svg(fig) == svg);
}
