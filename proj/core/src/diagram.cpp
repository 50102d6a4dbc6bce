#include "rpphilb/diagram.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace rpphilb {

namespace {

std::string heights_text(const std::vector<int>& cols) {
  std::string s;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(cols[k]);
  }
  return s;
}

}  // namespace

YoungDiagram::YoungDiagram(std::vector<int> col_heights) : cols_(std::move(col_heights)) {
  if (cols_.empty()) throw Error(ErrorCode::InvalidInput, "a diagram needs at least one column");
  for (std::size_t k = 0; k < cols_.size(); ++k) {
    if (cols_[k] <= 0)
      throw Error(ErrorCode::InvalidInput, "column heights must be positive", heights_text(cols_));
    if (k > 0 && cols_[k] > cols_[k - 1])
      throw Error(ErrorCode::InvalidInput, "column heights must be nonincreasing", heights_text(cols_));
  }
  row_offset_.reserve(static_cast<std::size_t>(cols_.front()) + 1);
  for (int j = 0; j < cols_.front(); ++j) {
    row_offset_.push_back(boxes_.size());
    for (int i = 0; i < num_cols() && cols_[static_cast<std::size_t>(i)] > j; ++i) boxes_.push_back({i, j});
  }
  row_offset_.push_back(boxes_.size());
}

int YoungDiagram::height(int i) const noexcept {
  if (i < 0 || i >= num_cols()) return 0;
  return cols_[static_cast<std::size_t>(i)];
}

int YoungDiagram::row_length(int j) const noexcept {
  if (j < 0 || j >= num_rows()) return 0;
  return static_cast<int>(row_offset_[static_cast<std::size_t>(j) + 1] - row_offset_[static_cast<std::size_t>(j)]);
}

bool YoungDiagram::contains(Box b) const noexcept { return b.i >= 0 && b.j >= 0 && b.j < height(b.i); }

std::optional<std::size_t> YoungDiagram::find(Box b) const noexcept {
  if (!contains(b)) return std::nullopt;
  return row_offset_[static_cast<std::size_t>(b.j)] + static_cast<std::size_t>(b.i);
}

std::size_t YoungDiagram::index_of(Box b) const {
  auto k = find(b);
  if (!k)
    throw Error(ErrorCode::BoxNotInDiagram, "box is not in the diagram",
                "(" + std::to_string(b.i) + "," + std::to_string(b.j) + ")");
  return *k;
}

std::vector<Box> YoungDiagram::socle() const {
  std::vector<Box> out;
  for (const Box& b : boxes_)
    if (!contains({b.i + 1, b.j}) && !contains({b.i, b.j + 1})) out.push_back(b);
  return out;
}

std::vector<Box> YoungDiagram::subsocle() const {
  std::vector<Box> out;
  for (const Box& b : boxes_)
    if (contains({b.i + 1, b.j}) && contains({b.i, b.j + 1}) && !contains({b.i + 1, b.j + 1})) out.push_back(b);
  return out;
}

std::vector<Box> YoungDiagram::hook(Box b) const {
  index_of(b);
  std::vector<Box> out;
  for (const Box& c : boxes_)
    if ((c.i == b.i && c.j >= b.j) || (c.i >= b.i && c.j == b.j)) out.push_back(c);
  return out;
}

int YoungDiagram::hook_length(Box b) const {
  index_of(b);
  return (height(b.i) - b.j) + (row_length(b.j) - b.i) - 1;
}

UpperSet::UpperSet(YoungDiagram diagram, std::vector<bool> members)
    : diagram_(std::move(diagram)), members_(std::move(members)) {
  if (members_.size() != diagram_.size())
    throw Error(ErrorCode::DiagramMismatch, "membership vector does not match the diagram");
  const auto& boxes = diagram_.boxes();
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    if (!members_[k]) continue;
    for (Box up : {Box{boxes[k].i + 1, boxes[k].j}, Box{boxes[k].i, boxes[k].j + 1}}) {
      auto u = diagram_.find(up);
      if (u && !members_[*u]) throw Error(ErrorCode::InvalidInput, "subset is not upward closed");
    }
  }
}

bool UpperSet::contains(Box b) const noexcept {
  auto k = diagram_.find(b);
  return k && members_[*k];
}

std::size_t UpperSet::size() const noexcept {
  return static_cast<std::size_t>(std::count(members_.begin(), members_.end(), true));
}

std::vector<Box> UpperSet::boxes() const {
  std::vector<Box> out;
  for (std::size_t k = 0; k < members_.size(); ++k)
    if (members_[k]) out.push_back(diagram_.boxes()[k]);
  return out;
}

bool UpperSet::connected() const {
  auto parts = connected_parts(*this);
  return parts.size() <= 1;
}

std::vector<UpperSet> enumerate_upper_sets(const YoungDiagram& diagram, bool connected_only,
                                           bool nonempty_only, std::size_t max_boxes) {
  if (diagram.size() > max_boxes)
    throw Error(ErrorCode::DiagramTooLarge,
                "diagram has " + std::to_string(diagram.size()) + " boxes, cap is " + std::to_string(max_boxes));

  // Subdiagrams mu with mu_i <= lambda_i and mu nonincreasing (zero columns allowed). The
  // upper set is the complement. Heights are tried from large to small.
  const int ncols = diagram.num_cols();
  std::vector<int> mu(static_cast<std::size_t>(ncols), 0);
  std::vector<UpperSet> out;

  std::function<void(int, int)> rec = [&](int col, int bound) {
    if (col == ncols) {
      std::vector<bool> members(diagram.size());
      for (std::size_t k = 0; k < diagram.size(); ++k) {
        const Box& b = diagram.boxes()[k];
        members[k] = b.j >= mu[static_cast<std::size_t>(b.i)];
      }
      UpperSet u(diagram, std::move(members));
      if (nonempty_only && u.empty()) return;
      if (connected_only && !u.connected()) return;
      out.push_back(std::move(u));
      return;
    }
    for (int h = std::min(bound, diagram.height(col)); h >= 0; --h) {
      mu[static_cast<std::size_t>(col)] = h;
      rec(col + 1, h);
    }
  };
  rec(0, diagram.num_rows());
  return out;
}

std::vector<UpperSet> connected_parts(const UpperSet& set) {
  const YoungDiagram& d = set.diagram();
  const auto& members = set.members();
  std::vector<int> label(d.size(), -1);
  std::vector<UpperSet> parts;
  int next = 0;
  for (std::size_t start = 0; start < d.size(); ++start) {
    if (!members[start] || label[start] >= 0) continue;
    std::vector<bool> part(d.size(), false);
    std::vector<std::size_t> stack{start};
    label[start] = next;
    while (!stack.empty()) {
      std::size_t k = stack.back();
      stack.pop_back();
      part[k] = true;
      const Box b = d.boxes()[k];
      for (Box n : {Box{b.i + 1, b.j}, Box{b.i - 1, b.j}, Box{b.i, b.j + 1}, Box{b.i, b.j - 1}}) {
        auto m = d.find(n);
        if (m && members[*m] && label[*m] < 0) {
          label[*m] = next;
          stack.push_back(*m);
        }
      }
    }
    parts.emplace_back(d, std::move(part));
    ++next;
  }
  return parts;
}

}  // namespace rpphilb
