#include "plat/grid.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

namespace plat {

PlatGrid PlatGrid::filled(int m, int n, Coefficient value, Closure closure) {
  PlatGrid grid{m, n, {}, closure};
  for (int row = 1; row < n; ++row) {
    grid.rows.emplace_back(static_cast<std::size_t>(row_width(m, row)), value);
  }
  return grid;
}

ValidationResult validate(const PlatGrid& grid) {
  ValidationResult result;
  auto fail = [&](ErrorCode code, std::string message) {
    result.violations.push_back({code, std::move(message)});
  };

  if (grid.m < 2) {
    fail(ErrorCode::ShapeError,
         "width m must be at least 2 (got " + std::to_string(grid.m) + ")");
  }
  if (grid.closure == Closure::StandardPlat) {
    if (grid.n < 2) {
      fail(ErrorCode::ShapeError,
           "length n must be at least 2 (got " + std::to_string(grid.n) + ")");
    } else if (grid.n % 2 != 0) {
      fail(ErrorCode::ParityError,
           "length n must be even (got " + std::to_string(grid.n) + ")");
    }
  } else {
    // Even plats carry an even number of rows.
    if (grid.n < 3) {
      fail(ErrorCode::ShapeError, "even plat length n must be at least 3 (got " +
                                      std::to_string(grid.n) + ")");
    } else if (grid.n % 2 != 1) {
      fail(ErrorCode::ParityError,
           "even plat needs an even row count, so n must be odd (got " +
               std::to_string(grid.n) + ")");
    }
  }

  const auto expected_rows = static_cast<std::size_t>(std::max(grid.n - 1, 0));
  if (grid.rows.size() != expected_rows) {
    fail(ErrorCode::ShapeError, "expected " + std::to_string(expected_rows) +
                                    " rows, found " +
                                    std::to_string(grid.rows.size()));
  }
  if (grid.m >= 2) {
    for (std::size_t i = 0; i < grid.rows.size(); ++i) {
      const int row = static_cast<int>(i) + 1;
      const auto want = static_cast<std::size_t>(grid.width(row));
      if (grid.rows[i].size() != want) {
        fail(ErrorCode::ShapeError, "row " + std::to_string(row) + " has " +
                                        std::to_string(grid.rows[i].size()) +
                                        " entries, expected " +
                                        std::to_string(want));
      }
    }
  }
  return result;
}

void require_valid(const PlatGrid& grid) {
  auto result = validate(grid);
  if (!result.ok()) {
    const auto& first = result.violations.front();
    throw Error(first.code, first.message);
  }
}

bool is_c_highly_twisted(const PlatGrid& grid, Coefficient c) {
  require_valid(grid);
  for (const auto& row : grid.rows) {
    for (Coefficient a : row) {
      if ((a < 0 ? -a : a) < c) return false;
    }
  }
  return true;
}

int bridge_distance_formula(int m, int n) {
  const int denom = 2 * (m - 2);
  return (n + denom - 1) / denom;
}

int bridge_distance(const PlatGrid& grid) {
  require_valid(grid);
  if (grid.m < 3) {
    throw Error(ErrorCode::HypothesesNotMet,
                "distance formula needs m >= 3 (got " + std::to_string(grid.m) +
                    ")");
  }
  if (!is_c_highly_twisted(grid, 3)) {
    throw Error(ErrorCode::HypothesesNotMet,
                "distance formula needs a 3-highly twisted plat");
  }
  return bridge_distance_formula(grid.m, grid.n);
}

HypothesisReport hypothesis_report(const PlatGrid& grid) {
  require_valid(grid);
  HypothesisReport report;
  report.width_ok = grid.m >= 3;
  report.twist_ok = is_c_highly_twisted(grid, 3);
  report.length_ok = grid.n > 4 * grid.m * (grid.m - 2);
  if (report.width_ok && report.twist_ok) {
    report.distance = bridge_distance_formula(grid.m, grid.n);
  }
  report.unique_bridge_sphere =
      report.width_ok && report.twist_ok && report.length_ok;
  return report;
}

std::int64_t twist_region_count(int m, int n) {
  std::int64_t total = 0;
  for (int row = 1; row < n; ++row) total += PlatGrid::row_width(m, row);
  return total;
}

std::int64_t twist_region_count(const PlatGrid& grid) {
  require_valid(grid);
  return twist_region_count(grid.m, grid.n);
}

int top_partner(int m, int strand) {
  (void)m;
  return strand % 2 == 1 ? strand + 1 : strand - 1;
}

int bottom_partner(int m, int strand, Closure closure) {
  if (closure == Closure::StandardPlat) return top_partner(m, strand);
  // 2-3, 4-5, ..., and 2m back to 1.
  const int last = 2 * m;
  if (strand == 1) return last;
  if (strand == last) return 1;
  return strand % 2 == 0 ? strand + 1 : strand - 1;
}

namespace {

struct DisjointSets {
  explicit DisjointSets(int size) : parent(static_cast<std::size_t>(size)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  std::vector<int> parent;
};

}  // namespace

int component_count(const PlatGrid& grid) {
  require_valid(grid);
  const int strands = grid.strands();
  // position_of[s] = current position of the strand that started at s.
  std::vector<int> at_position(strands + 1);
  std::iota(at_position.begin(), at_position.end(), 0);
  for (int row = 1; row < grid.n; ++row) {
    for (int col = 1; col <= grid.width(row); ++col) {
      if (grid.at(row, col) % 2 != 0) {
        const int k = PlatGrid::generator(row, col);
        std::swap(at_position[k], at_position[k + 1]);
      }
    }
  }
  // at_position[p] = starting strand now at bottom position p.
  DisjointSets sets(strands + 1);
  for (int s = 1; s <= strands; ++s) sets.unite(s, top_partner(grid.m, s));
  for (int p = 1; p <= strands; ++p) {
    sets.unite(at_position[p],
               at_position[bottom_partner(grid.m, p, grid.closure)]);
  }
  int components = 0;
  for (int s = 1; s <= strands; ++s) {
    if (sets.find(s) == s) ++components;
  }
  return components;
}

std::string_view closure_name(Closure closure) noexcept {
  return closure == Closure::StandardPlat ? "standard" : "even";
}

namespace {

class LineScanner {
 public:
  explicit LineScanner(std::string_view text) : text_(text) {}

  // Next line with comments stripped; offset is where the line begins.
  bool next(std::string_view& line, std::size_t& offset) {
    while (pos_ <= text_.size()) {
      if (pos_ == text_.size()) {
        pos_ = text_.size() + 1;
        return false;
      }
      const std::size_t end = std::min(text_.find('\n', pos_), text_.size());
      std::string_view raw = text_.substr(pos_, end - pos_);
      offset = pos_;
      pos_ = end + 1;
      if (auto hash = raw.find('#'); hash != std::string_view::npos) {
        raw = raw.substr(0, hash);
      }
      if (raw.find_first_not_of(" \t\r") == std::string_view::npos) continue;
      line = raw;
      return true;
    }
    return false;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

struct Token {
  std::string_view text;
  std::size_t offset;
};

std::vector<Token> split_tokens(std::string_view line, std::size_t base) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back({line.substr(start, i - start), base + start});
  }
  return tokens;
}

template <typename Int>
Int parse_int(const Token& token) {
  Int value{};
  std::string_view s = token.text;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw SyntaxError(token.offset,
                      "expected an integer, found '" + std::string(token.text) + "'");
  }
  return value;
}

}  // namespace

PlatGrid parse_plat(std::string_view text) {
  LineScanner lines(text);
  std::string_view line;
  std::size_t offset = 0;
  if (!lines.next(line, offset)) throw SyntaxError(0, "missing plat header");

  auto header = split_tokens(line, offset);
  if (header.size() != 4 || header[0].text != "plat") {
    throw SyntaxError(offset,
                      "header must read 'plat m=<int> n=<int> closure=<standard|even>'");
  }
  auto field = [](const Token& token, std::string_view key) {
    if (token.text.substr(0, key.size()) != key) {
      throw SyntaxError(token.offset, "expected '" + std::string(key) + "'");
    }
    return Token{token.text.substr(key.size()), token.offset + key.size()};
  };

  PlatGrid grid;
  grid.m = parse_int<int>(field(header[1], "m="));
  grid.n = parse_int<int>(field(header[2], "n="));
  const Token closure = field(header[3], "closure=");
  if (closure.text == "standard") {
    grid.closure = Closure::StandardPlat;
  } else if (closure.text == "even") {
    grid.closure = Closure::EvenPlat;
  } else {
    throw SyntaxError(closure.offset, "closure must be 'standard' or 'even'");
  }

  while (lines.next(line, offset)) {
    std::vector<Coefficient> row;
    for (const auto& token : split_tokens(line, offset)) {
      row.push_back(parse_int<Coefficient>(token));
    }
    grid.rows.push_back(std::move(row));
  }
  return grid;
}

std::string format_plat(const PlatGrid& grid) {
  std::ostringstream out;
  out << "plat m=" << grid.m << " n=" << grid.n
      << " closure=" << closure_name(grid.closure) << '\n';
  for (const auto& row : grid.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out << ' ';
      out << row[j];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace plat
