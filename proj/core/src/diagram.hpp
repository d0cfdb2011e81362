#pragma once

// Planar diagram of a plat closure, traced at the level of crossing
// endpoints. Shared by the PD/Gauss exporters and the invariant oracle.

#include <cstdint>
#include <vector>

#include "plat/grid.hpp"

namespace plat::detail {

// Crossing corners in counterclockwise order as drawn with the braid running
// down the page: top-left, bottom-left, bottom-right, top-right.
enum Slot : int { kTopLeft = 0, kBottomLeft = 1, kBottomRight = 2, kTopRight = 3 };

struct Crossing {
  int row = 0;
  int col = 0;
  int generator = 0;   // left strand position
  bool slash_over = true;  // the lower-left to upper-right strand passes over
  int label = 0;       // 1-based number in PD emission order
};

struct Passage {
  int crossing = 0;
  int in_slot = 0;
  int out_slot = 0;
  bool over = false;
};

struct Component {
  std::vector<Passage> passages;  // in traversal order
  int first_label = 1;            // label of the edge leaving passages[0]
};

class Diagram {
 public:
  explicit Diagram(const PlatGrid& grid);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<Component>& components() const { return components_; }
  std::size_t crossing_count() const { return crossings_.size(); }

  // Edge label at endpoint 4*c + slot.
  int label(int crossing, int slot) const { return labels_[4 * crossing + slot]; }

  // The crossing endpoint at the far end of the edge leaving endpoint e.
  int edge_partner(int endpoint) const { return partner_[endpoint]; }

  // Slot of the incoming under-strand of crossing c.
  int under_in_slot(int crossing) const { return under_in_[crossing]; }
  // Slot where the over-strand enters crossing c.
  int over_in_slot(int crossing) const { return over_in_[crossing]; }

  // +1 for a right-handed crossing with the traced orientation.
  int writhe_sign(int crossing) const {
    return over_in_[crossing] == (under_in_[crossing] + 3) % 4 ? 1 : -1;
  }

  // Crossing indices in PD emission order (row-major, each box bottom-to-top).
  const std::vector<int>& emission_order() const { return emission_; }

 private:
  std::vector<Crossing> crossings_;
  std::vector<Component> components_;
  std::vector<int> labels_;
  std::vector<int> partner_;
  std::vector<int> under_in_;
  std::vector<int> over_in_;
  std::vector<int> emission_;
};

}  // namespace plat::detail
