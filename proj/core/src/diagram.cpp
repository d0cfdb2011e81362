#include "diagram.hpp"

#include <stdexcept>

namespace plat::detail {

namespace {

constexpr int opposite(int slot) { return (slot + 2) % 4; }

}  // namespace

Diagram::Diagram(const PlatGrid& grid) {
  require_valid(grid);
  const int strands = grid.strands();

  // Crossings in braid order, top to bottom.
  std::vector<std::vector<int>> box_members;
  for (int row = 1; row < grid.n; ++row) {
    for (int col = 1; col <= grid.width(row); ++col) {
      const Coefficient a = grid.at(row, col);
      const Coefficient count = a < 0 ? -a : a;
      box_members.emplace_back();
      for (Coefficient t = 0; t < count; ++t) {
        box_members.back().push_back(static_cast<int>(crossings_.size()));
        crossings_.push_back({row, col, PlatGrid::generator(row, col), a > 0, 0});
      }
    }
  }
  for (const auto& members : box_members) {
    for (auto it = members.rbegin(); it != members.rend(); ++it) {
      emission_.push_back(*it);
      crossings_[*it].label = static_cast<int>(emission_.size());
    }
  }

  const int c_count = static_cast<int>(crossings_.size());
  const int top_cap = 4 * c_count;
  const int bottom_cap = top_cap + strands;
  const int nodes = bottom_cap + strands;
  std::vector<int> track(nodes, -1);    // link along a strand position
  std::vector<int> through(nodes, -1);  // link across a crossing or a cap

  std::vector<int> last_at(strands + 1);
  for (int x = 1; x <= strands; ++x) last_at[x] = top_cap + x - 1;
  auto link = [&](int a, int b) {
    track[a] = b;
    track[b] = a;
  };
  for (int c = 0; c < c_count; ++c) {
    const int k = crossings_[c].generator;
    link(last_at[k], 4 * c + kTopLeft);
    link(last_at[k + 1], 4 * c + kTopRight);
    last_at[k] = 4 * c + kBottomLeft;
    last_at[k + 1] = 4 * c + kBottomRight;
    for (int s = 0; s < 4; ++s) through[4 * c + s] = 4 * c + opposite(s);
  }
  for (int x = 1; x <= strands; ++x) {
    link(last_at[x], bottom_cap + x - 1);
    through[top_cap + x - 1] = top_cap + top_partner(grid.m, x) - 1;
    through[bottom_cap + x - 1] = bottom_cap + bottom_partner(grid.m, x, grid.closure) - 1;
  }

  partner_.assign(4 * c_count, -1);
  for (int e = 0; e < 4 * c_count; ++e) {
    int cur = track[e];
    while (cur >= top_cap) cur = track[through[cur]];
    partner_[e] = cur;
  }

  // Trace components from the top caps, left to right, heading down.
  labels_.assign(4 * c_count, 0);
  under_in_.assign(c_count, -1);
  over_in_.assign(c_count, -1);
  std::vector<bool> cap_seen(strands, false);
  int next_label = 1;
  for (int x = 1; x <= strands; ++x) {
    if (cap_seen[x - 1]) continue;
    Component component;
    const int start = top_cap + x - 1;
    int cur = start;
    do {
      cur = track[cur];
      if (cur >= top_cap) {
        if (cur < bottom_cap) cap_seen[cur - top_cap] = true;
      } else {
        const int c = cur / 4;
        const int in_slot = cur % 4;
        const bool slash = in_slot == kBottomLeft || in_slot == kTopRight;
        component.passages.push_back({c, in_slot, opposite(in_slot),
                                      slash == crossings_[c].slash_over});
      }
      cur = through[cur];
      if (cur >= top_cap && cur < bottom_cap) cap_seen[cur - top_cap] = true;
    } while (cur != start);

    const auto count = static_cast<int>(component.passages.size());
    component.first_label = next_label;
    for (int j = 0; j < count; ++j) {
      const Passage& here = component.passages[j];
      const Passage& next = component.passages[(j + 1) % count];
      const int edge = next_label + j;
      labels_[4 * here.crossing + here.out_slot] = edge;
      labels_[4 * next.crossing + next.in_slot] = edge;
      if (here.over) {
        over_in_[here.crossing] = here.in_slot;
      } else {
        under_in_[here.crossing] = here.in_slot;
      }
    }
    next_label += count;
    components_.push_back(std::move(component));
  }
  for (int c = 0; c < c_count; ++c) {
    if (under_in_[c] < 0 || over_in_[c] < 0) {
      throw std::logic_error("crossing not traversed exactly twice");
    }
  }
}

}  // namespace plat::detail
