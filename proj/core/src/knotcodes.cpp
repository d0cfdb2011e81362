#include "plat/knotcodes.hpp"

#include <sstream>

#include "diagram.hpp"

namespace plat {

PDCode to_pd_code(const PlatGrid& grid) {
  const detail::Diagram diagram(grid);
  if (diagram.crossing_count() == 0) {
    throw Error(ErrorCode::EmptyDiagram, "plat has no crossings");
  }
  PDCode code;
  for (int c : diagram.emission_order()) {
    const int start = diagram.under_in_slot(c);
    std::array<int, 4> tuple{};
    for (int k = 0; k < 4; ++k) tuple[k] = diagram.label(c, (start + k) % 4);
    code.crossings.push_back(tuple);
  }
  return code;
}

std::string format_pd(const PDCode& code) {
  std::ostringstream out;
  for (std::size_t i = 0; i < code.crossings.size(); ++i) {
    const auto& x = code.crossings[i];
    if (i > 0) out << ',';
    out << "X(" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ')';
  }
  return out.str();
}

std::vector<GaussToken> gauss_code(const PlatGrid& grid) {
  const detail::Diagram diagram(grid);
  if (diagram.components().size() != 1) {
    throw Error(ErrorCode::NotAKnot, "closure has " +
                                         std::to_string(diagram.components().size()) +
                                         " components");
  }
  if (diagram.crossing_count() == 0) {
    throw Error(ErrorCode::EmptyDiagram, "plat has no crossings");
  }
  std::vector<GaussToken> code;
  for (const auto& passage : diagram.components().front().passages) {
    code.push_back({diagram.crossings()[passage.crossing].label, passage.over,
                    diagram.writhe_sign(passage.crossing)});
  }
  return code;
}

std::string format_gauss(const std::vector<GaussToken>& code) {
  std::ostringstream out;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (i > 0) out << ' ';
    out << (code[i].over ? 'O' : 'U') << code[i].crossing << (code[i].sign > 0 ? '+' : '-');
  }
  return out.str();
}

std::string format_fingerprint(const InvariantFingerprint& fp) {
  std::ostringstream out;
  out << "components=" << fp.components << " determinant=" << fp.determinant;
  if (fp.alexander_evals) {
    for (const auto& [t, value] : *fp.alexander_evals) {
      out << " alexander(" << t << ")=" << value;
    }
  }
  return out.str();
}

}  // namespace plat
