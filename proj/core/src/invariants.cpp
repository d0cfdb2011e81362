#include <numeric>
#include <stdexcept>

#include "diagram.hpp"
#include "plat/knotcodes.hpp"
#include "plat/linalg.hpp"

namespace plat {

namespace {

using detail::Diagram;

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Number of connected pieces of the diagram, counting crossing-free
// components as pieces of their own.
int diagram_pieces(const Diagram& diagram) {
  const int c_count = static_cast<int>(diagram.crossing_count());
  std::vector<int> parent(c_count);
  std::iota(parent.begin(), parent.end(), 0);
  for (int e = 0; e < 4 * c_count; ++e) {
    parent[find_root(parent, e / 4)] = find_root(parent, diagram.edge_partner(e) / 4);
  }
  int pieces = 0;
  for (int c = 0; c < c_count; ++c) pieces += find_root(parent, c) == c;
  for (const auto& component : diagram.components()) {
    pieces += component.passages.empty();
  }
  return pieces;
}

}  // namespace

mpz_class goeritz_determinant(const PlatGrid& grid) {
  const Diagram diagram(grid);
  const int c_count = static_cast<int>(diagram.crossing_count());
  const int pieces = diagram_pieces(diagram);
  if (pieces > 1) return 0;
  if (c_count == 0) return 1;

  // Corner 4c+s is the region between slots s and s+1 (counterclockwise).
  // Walking the face clockwise: leave along slot s+1, arrive at the far
  // endpoint, continue with the corner that starts there.
  const int corners = 4 * c_count;
  std::vector<int> face(corners, -1);
  int faces = 0;
  for (int start = 0; start < corners; ++start) {
    if (face[start] >= 0) continue;
    int corner = start;
    do {
      face[corner] = faces;
      corner = diagram.edge_partner(4 * (corner / 4) + (corner % 4 + 1) % 4);
    } while (corner != start);
    ++faces;
  }
  if (faces != c_count + 2) {
    throw std::logic_error("diagram is not a connected plane 4-valent graph");
  }

  // Corners on either side of an edge get opposite colours.
  std::vector<int> colour(faces, -1);
  std::vector<std::vector<int>> neighbours(faces);
  for (int corner = 0; corner < corners; ++corner) {
    const int across = 4 * (corner / 4) + (corner % 4 + 1) % 4;
    neighbours[face[corner]].push_back(face[across]);
    neighbours[face[across]].push_back(face[corner]);
  }
  std::vector<int> queue{0};
  colour[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int f = queue[head];
    for (int g : neighbours[f]) {
      if (colour[g] < 0) {
        colour[g] = 1 - colour[f];
        queue.push_back(g);
      } else if (colour[g] == colour[f]) {
        throw std::logic_error("checkerboard colouring failed");
      }
    }
  }

  int in_class[2] = {0, 0};
  for (int f = 0; f < faces; ++f) ++in_class[colour[f]];
  const int shaded = in_class[1] < in_class[0] ? 1 : 0;
  std::vector<int> index(faces, -1);
  int size = 0;
  for (int f = 0; f < faces; ++f) {
    if (colour[f] == shaded) index[f] = size++;
  }

  IntMatrix goeritz(size, std::vector<mpz_class>(size, 0));
  for (int c = 0; c < c_count; ++c) {
    const int s0 = colour[face[4 * c]] == shaded ? 0 : 1;
    const int fa = index[face[4 * c + s0]];
    const int fb = index[face[4 * c + s0 + 2]];
    if (fa == fb) continue;
    // +1 when the shaded corners are the ones swept by turning the
    // over-strand counterclockwise.
    const int under = diagram.under_in_slot(c);
    const int eta = (s0 - under - 1) % 2 == 0 ? 1 : -1;
    goeritz[fa][fb] += eta;
    goeritz[fb][fa] += eta;
    goeritz[fa][fa] -= eta;
    goeritz[fb][fb] -= eta;
  }
  goeritz.pop_back();
  for (auto& row : goeritz) row.pop_back();
  return abs(determinant_bareiss(std::move(goeritz)));
}

namespace {

// One Fox-calculus contribution: entry (row, col) += constant + slope * t.
struct FoxTerm {
  int row;
  int col;
  int constant;
  int slope;
};

// Alexander matrix of the Wirtinger presentation with the last row and
// column removed. Rows are crossings, columns are over-arcs.
struct FoxMatrix {
  int size = 0;
  std::vector<FoxTerm> terms;

  IntMatrix at(const mpz_class& t) const {
    IntMatrix out(size, std::vector<mpz_class>(size, 0));
    for (const auto& term : terms) out[term.row][term.col] += term.constant + term.slope * t;
    return out;
  }

  std::vector<std::vector<std::uint64_t>> at_mod(std::uint64_t t, std::uint64_t p) const {
    std::vector<std::vector<std::uint64_t>> out(size, std::vector<std::uint64_t>(size, 0));
    for (const auto& term : terms) {
      const std::uint64_t c = term.constant >= 0 ? term.constant : p - static_cast<std::uint64_t>(-term.constant);
      const std::uint64_t s = term.slope >= 0 ? term.slope : p - static_cast<std::uint64_t>(-term.slope);
      auto& entry = out[term.row][term.col];
      entry = (entry + c + mul_mod(s, t, p)) % p;
    }
    return out;
  }
};

FoxMatrix fox_matrix(const Diagram& diagram) {
  const auto& passages = diagram.components().front().passages;
  const int c_count = static_cast<int>(diagram.crossing_count());
  const int length = static_cast<int>(passages.size());

  // Edge j leaves passage j; a new over-arc starts after each under passage.
  int first_under = 0;
  while (passages[first_under].over) ++first_under;
  std::vector<int> edge_arc(length);
  int arc = -1;
  for (int step = 0; step < length; ++step) {
    const int j = (first_under + step) % length;
    if (!passages[j].over) ++arc;
    edge_arc[j] = arc;
  }

  std::vector<int> over_arc(c_count);
  std::vector<int> in_arc(c_count);
  std::vector<int> out_arc(c_count);
  for (int j = 0; j < length; ++j) {
    const int c = passages[j].crossing;
    if (passages[j].over) {
      over_arc[c] = edge_arc[j];
    } else {
      in_arc[c] = edge_arc[(j + length - 1) % length];
      out_arc[c] = edge_arc[j];
    }
  }

  FoxMatrix fox;
  fox.size = c_count - 1;
  for (int c = 0; c < fox.size; ++c) {
    auto add = [&](int col, int constant, int slope) {
      if (col < fox.size) fox.terms.push_back({c, col, constant, slope});
    };
    if (diagram.writhe_sign(c) > 0) {
      // out = over * in * over^-1
      add(over_arc[c], 1, -1);
      add(in_arc[c], 0, 1);
      add(out_arc[c], -1, 0);
    } else {
      // out = over^-1 * in * over, row scaled by t
      add(over_arc[c], -1, 1);
      add(in_arc[c], 1, 0);
      add(out_arc[c], 0, -1);
    }
  }
  return fox;
}

// Coefficients (mod p) of det of the Fox matrix as a polynomial in t, by
// evaluation at 0..size and Newton interpolation.
std::vector<std::uint64_t> fox_polynomial_mod(const FoxMatrix& fox, std::uint64_t p) {
  const int points = fox.size + 1;
  std::vector<std::uint64_t> xs(points);
  std::vector<std::uint64_t> coef(points);
  for (int k = 0; k < points; ++k) {
    xs[k] = static_cast<std::uint64_t>(k);
    coef[k] = determinant_mod(fox.at_mod(xs[k], p), p);
  }
  // Divided differences in place.
  for (int level = 1; level < points; ++level) {
    for (int k = points - 1; k >= level; --k) {
      const std::uint64_t num = (coef[k] + p - coef[k - 1]) % p;
      const std::uint64_t den = (xs[k] + p - xs[k - level]) % p;
      coef[k] = mul_mod(num, pow_mod(den, p - 2, p), p);
    }
  }
  // Expand the Newton form into monomials.
  std::vector<std::uint64_t> poly(points, 0);
  for (int k = points - 1; k >= 0; --k) {
    // poly = poly * (t - xs[k]) + coef[k]
    for (int d = points - 1; d >= 1; --d) {
      poly[d] = (poly[d - 1] + p - mul_mod(poly[d], xs[k], p)) % p;
    }
    poly[0] = (p - mul_mod(poly[0], xs[k], p)) % p;
    poly[0] = (poly[0] + coef[k]) % p;
  }
  return poly;
}

// Lowest power of t dividing the Fox determinant, confirmed by the
// palindromic shape of the Alexander polynomial.
int fox_valuation(const FoxMatrix& fox) {
  for (std::size_t attempt = 0; attempt < 4; ++attempt) {
    const std::uint64_t p = modular_prime(attempt);
    const auto poly = fox_polynomial_mod(fox, p);
    int low = 0;
    while (low < static_cast<int>(poly.size()) && poly[low] == 0) ++low;
    if (low == static_cast<int>(poly.size())) continue;
    int high = static_cast<int>(poly.size()) - 1;
    while (poly[high] == 0) --high;
    bool palindromic = true;
    for (int i = 0; low + i <= high - i; ++i) {
      palindromic = palindromic && poly[low + i] == poly[high - i];
    }
    if (palindromic) return low;
  }
  throw std::logic_error("Fox determinant is not a palindromic polynomial");
}

}  // namespace

std::map<int, mpz_class> alexander_evaluations(const PlatGrid& grid) {
  const Diagram diagram(grid);
  if (diagram.components().size() != 1) {
    throw Error(ErrorCode::NotAKnot, "closure has " +
                                         std::to_string(diagram.components().size()) +
                                         " components");
  }
  std::map<int, mpz_class> out;
  if (diagram.crossing_count() == 0) {
    for (int t : kAlexanderPoints) out[t] = 1;
    return out;
  }
  const FoxMatrix fox = fox_matrix(diagram);
  const mpz_class unit = determinant_modular(fox.at(1));
  if (unit != 1 && unit != -1) {
    throw std::logic_error("Fox determinant at t = 1 is not a unit");
  }
  const int valuation = fox_valuation(fox);
  for (int t : kAlexanderPoints) {
    mpz_class value = determinant_modular(fox.at(t));
    mpz_class shift;
    mpz_pow_ui(shift.get_mpz_t(), mpz_class(t).get_mpz_t(), static_cast<unsigned long>(valuation));
    if (value % shift != 0) throw std::logic_error("Fox determinant not divisible by t^s");
    out[t] = value / shift * unit;
  }
  return out;
}

InvariantFingerprint fingerprint(const PlatGrid& grid) {
  InvariantFingerprint fp;
  fp.components = component_count(grid);
  fp.determinant = goeritz_determinant(grid);
  if (fp.components == 1) fp.alexander_evals = alexander_evaluations(grid);
  return fp;
}

}  // namespace plat
