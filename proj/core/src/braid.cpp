#include "plat/braid.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace plat {

BraidWord to_braid_word(const PlatGrid& grid) {
  require_valid(grid);
  BraidWord word{grid.strands(), {}};
  for (int row = 1; row < grid.n; ++row) {
    for (int col = 1; col <= grid.width(row); ++col) {
      if (Coefficient a = grid.at(row, col); a != 0) {
        word.letters.push_back({PlatGrid::generator(row, col), a});
      }
    }
  }
  return word;
}

namespace {

bool row_takes(int row, int generator) {
  // Odd rows carry even generators.
  return (row % 2 == 1) == (generator % 2 == 0);
}

int column_of(int generator) { return (generator + 1) / 2; }

void check_word(const BraidWord& word) {
  if (word.strands < 4 || word.strands % 2 != 0) {
    throw Error(ErrorCode::ShapeError, "a plat braid needs an even strand count of at least 4 (got " +
                                           std::to_string(word.strands) + ")");
  }
  for (std::size_t i = 0; i < word.letters.size(); ++i) {
    const auto& letter = word.letters[i];
    if (letter.generator < 1 || letter.generator >= word.strands) {
      throw NotStandardFormError(i, "generator s" + std::to_string(letter.generator) +
                                        " out of range for " +
                                        std::to_string(word.strands) + " strands");
    }
    if (letter.exponent == 0) {
      throw NotStandardFormError(i, "zero exponent");
    }
  }
}

}  // namespace

PlatGrid from_braid_word(const BraidWord& word, std::optional<int> n) {
  check_word(word);
  const int m = word.strands / 2;

  if (!n) {
    // Strict factoring into nonempty alternating blocks.
    std::vector<std::vector<BraidLetter>> blocks;
    for (std::size_t i = 0; i < word.letters.size(); ++i) {
      const auto& letter = word.letters[i];
      const bool extends = !blocks.empty() &&
                           row_takes(static_cast<int>(blocks.size()), letter.generator) &&
                           blocks.back().back().generator < letter.generator;
      if (extends) {
        blocks.back().push_back(letter);
        continue;
      }
      const int next_row = static_cast<int>(blocks.size()) + 1;
      if (!row_takes(next_row, letter.generator)) {
        throw NotStandardFormError(
            i, "s" + std::to_string(letter.generator) + " cannot open row " +
                   std::to_string(next_row) +
                   (next_row % 2 == 1 ? " (odd rows take even generators)"
                                      : " (even rows take odd generators)"));
      }
      blocks.push_back({letter});
    }
    if (blocks.empty() || blocks.size() % 2 == 0) {
      throw Error(ErrorCode::AmbiguousLength,
                  "word factors into " + std::to_string(blocks.size()) +
                      " blocks; supply n to place the empty rows");
    }
    PlatGrid grid = PlatGrid::filled(m, static_cast<int>(blocks.size()) + 1, 0);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (const auto& letter : blocks[b]) {
        grid.at(static_cast<int>(b) + 1, column_of(letter.generator)) = letter.exponent;
      }
    }
    return grid;
  }

  PlatGrid grid = PlatGrid::filled(m, *n, 0);
  require_valid(grid);
  int row = 1;
  int last_generator = 0;  // last generator placed in `row`
  for (std::size_t i = 0; i < word.letters.size(); ++i) {
    const auto& letter = word.letters[i];
    if (!row_takes(row, letter.generator)) {
      row += 1;
      last_generator = 0;
    } else if (letter.generator <= last_generator) {
      row += 2;
      last_generator = 0;
    }
    if (row >= *n) {
      throw NotStandardFormError(i, "word needs more than " + std::to_string(*n - 1) +
                                        " rows");
    }
    grid.at(row, column_of(letter.generator)) = letter.exponent;
    last_generator = letter.generator;
  }
  return grid;
}

BraidWord parse_braid(std::string_view text, std::optional<int> strands) {
  BraidWord word;
  int max_generator = 0;
  std::size_t i = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  auto read_int = [&](std::size_t& pos, auto& value, const char* what) {
    const char* begin = text.data() + pos;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr == begin) {
      throw SyntaxError(pos, std::string("expected ") + what);
    }
    pos += static_cast<std::size_t>(ptr - begin);
  };

  while (true) {
    while (i < text.size() && is_space(text[i])) ++i;
    if (i == text.size()) break;
    const std::size_t start = i;
    if (text[i] != 's') throw SyntaxError(i, "expected 's<k>^<e>'");
    ++i;
    int generator = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
      throw SyntaxError(i, "expected generator index");
    }
    read_int(i, generator, "generator index");
    if (generator < 1) {
      throw SyntaxError(start + 1, "generator out of range (got s" +
                                       std::to_string(generator) + ")");
    }
    if (strands && generator >= *strands) {
      throw SyntaxError(start + 1, "generator s" + std::to_string(generator) +
                                       " out of range for " + std::to_string(*strands) +
                                       " strands");
    }
    if (i >= text.size() || text[i] != '^') throw SyntaxError(i, "expected '^'");
    ++i;
    Coefficient exponent = 0;
    const std::size_t exponent_at = i;
    read_int(i, exponent, "exponent");
    if (exponent == 0) throw SyntaxError(exponent_at, "exponent must be nonzero");
    if (i < text.size() && !is_space(text[i])) {
      throw SyntaxError(i, "unexpected character after token");
    }
    word.letters.push_back({generator, exponent});
    max_generator = std::max(max_generator, generator);
  }
  if (strands) {
    word.strands = *strands;
  } else {
    word.strands = std::max(4, max_generator + 1 + (max_generator + 1) % 2);
  }
  return word;
}

std::string serialize_braid(const BraidWord& word) {
  std::ostringstream out;
  for (std::size_t i = 0; i < word.letters.size(); ++i) {
    if (i > 0) out << ' ';
    out << 's' << word.letters[i].generator << '^' << word.letters[i].exponent;
  }
  return out.str();
}

}  // namespace plat
