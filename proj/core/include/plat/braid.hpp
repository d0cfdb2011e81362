#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plat/grid.hpp"

namespace plat {

/// sigma_generator^exponent, a run-length encoded power of one generator.
struct BraidLetter {
  int generator = 1;
  Coefficient exponent = 1;

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

struct BraidWord {
  int strands = 0;
  std::vector<BraidLetter> letters;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// b_1 b_2 ... b_{n-1}; zero coefficients emit no letter.
BraidWord to_braid_word(const PlatGrid& grid);

/// Factor a word back into plat rows.
///
/// Without `n`, the word must split into nonempty maximal blocks that
/// alternate even-generator and odd-generator blocks, starting with an even
/// one, each listing generators in strictly increasing order. The length is
/// then one more than the block count, which must be odd; otherwise the
/// length is ambiguous.
///
/// With `n`, letters are placed greedily in the earliest admissible row, so
/// empty rows are reinserted wherever the word requires them. Any output of
/// `to_braid_word` for a grid of length n factors this way.
PlatGrid from_braid_word(const BraidWord& word, std::optional<int> n = std::nullopt);

/// Whitespace-separated `s<k>^<e>` tokens, e.g. `s2^-3 s4^-4`. When `strands`
/// is not supplied it is the smallest even count that fits every generator
/// (and at least 4).
BraidWord parse_braid(std::string_view text, std::optional<int> strands = std::nullopt);
std::string serialize_braid(const BraidWord& word);

}  // namespace plat
