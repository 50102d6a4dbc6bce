#pragma once

// Young diagrams as finite posets.
//
// A diagram is stored by its column heights: column i holds the boxes (i, 0), ..., (i, h_i - 1),
// with i growing rightward and j growing downward. Heights are positive and nonincreasing, so the
// box set is downward closed for the componentwise order. Every vector indexed by boxes uses the
// row-major scan (j ascending, then i ascending).

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "rpphilb/error.hpp"

namespace rpphilb {

struct Box {
  int i = 0;  // column, rightward
  int j = 0;  // row, downward

  friend bool operator==(const Box&, const Box&) = default;
};

// Row-major order: row first, then column.
inline std::strong_ordering operator<=>(const Box& a, const Box& b) {
  if (auto c = a.j <=> b.j; c != 0) return c;
  return a.i <=> b.i;
}

// Componentwise partial order.
constexpr bool partial_order_leq(Box a, Box b) noexcept { return a.i <= b.i && a.j <= b.j; }

class YoungDiagram {
 public:
  explicit YoungDiagram(std::vector<int> col_heights);

  const std::vector<int>& col_heights() const noexcept { return cols_; }
  int num_cols() const noexcept { return static_cast<int>(cols_.size()); }
  int num_rows() const noexcept { return cols_.front(); }
  // Zero outside the diagram.
  int height(int i) const noexcept;
  // Number of boxes in row j.
  int row_length(int j) const noexcept;

  std::size_t size() const noexcept { return boxes_.size(); }
  bool contains(Box b) const noexcept;

  // Boxes in row-major order.
  const std::vector<Box>& boxes() const noexcept { return boxes_; }
  std::size_t index_of(Box b) const;
  std::optional<std::size_t> find(Box b) const noexcept;

  std::vector<Box> socle() const;
  std::vector<Box> subsocle() const;

  // Boxes below (same column) or to the right (same row) of b, including b.
  std::vector<Box> hook(Box b) const;
  int hook_length(Box b) const;

  friend bool operator==(const YoungDiagram& a, const YoungDiagram& b) { return a.cols_ == b.cols_; }

 private:
  std::vector<int> cols_;
  std::vector<Box> boxes_;
  std::vector<std::size_t> row_offset_;
};

// An upward-closed subset of a diagram, stored as row-major membership flags.
class UpperSet {
 public:
  UpperSet(YoungDiagram diagram, std::vector<bool> members);

  const YoungDiagram& diagram() const noexcept { return diagram_; }
  const std::vector<bool>& members() const noexcept { return members_; }
  bool contains(Box b) const noexcept;
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  bool connected() const;
  std::vector<Box> boxes() const;

  friend bool operator==(const UpperSet& a, const UpperSet& b) {
    return a.diagram_ == b.diagram_ && a.members_ == b.members_;
  }

 private:
  YoungDiagram diagram_;
  std::vector<bool> members_;
};

// All upper sets, obtained as complements of the subdiagrams of the diagram. The order is the
// enumeration order of subdiagram height vectors, largest subdiagram first.
std::vector<UpperSet> enumerate_upper_sets(const YoungDiagram& diagram, bool connected_only,
                                           bool nonempty_only, std::size_t max_boxes = Limits{}.max_boxes);

// Edge-connected classes of an upper set, ordered by their first box in row-major order.
std::vector<UpperSet> connected_parts(const UpperSet& set);

}  // namespace rpphilb
