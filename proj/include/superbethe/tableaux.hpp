#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "superbethe/diagrams.hpp"

namespace superbethe {

/// Totally ordered, graded label alphabet. Labels are stored in increasing
/// order; parity 0 marks the even class J+, parity 1 the odd class J-.
class LabelSet {
 public:
  LabelSet() = default;
  LabelSet(std::vector<int> labels, std::vector<int> parities);

  /// 1 < 2 < ... < r+s+2 with J+ = {1..r+1}.
  static LabelSet distinguished(int r, int s);

  int size() const noexcept { return static_cast<int>(labels_.size()); }
  int label(int index) const { return labels_.at(static_cast<std::size_t>(index)); }
  int parity_at(int index) const { return parities_.at(static_cast<std::size_t>(index)); }
  int index_of(int label) const;  // throws Errc::unknown_label
  int parity(int label) const { return parity_at(index_of(label)); }
  bool contains(int label) const noexcept;

 private:
  std::vector<int> labels_;
  std::vector<int> parities_;
};

/// Cells of a skew shape in row-major order together with the positions of
/// their in-shape left and upper neighbours (-1 when absent).
struct CellOrder {
  struct Cell {
    int i;
    int j;
    int left;
    int up;
  };
  std::vector<Cell> cells;

  explicit CellOrder(const SkewShape& shape);
};

class Tableau {
 public:
  Tableau(SkewShape shape, std::vector<int> entries);

  const SkewShape& shape() const noexcept { return shape_; }
  /// Labels in row-major cell order.
  const std::vector<int>& entries() const noexcept { return entries_; }
  int at(int i, int j) const;

  friend bool operator==(const Tableau&, const Tableau&) = default;

  std::string to_string() const;

 private:
  SkewShape shape_;
  std::vector<int> entries_;
};

/// Depth-first walk over admissible fillings. The visitor receives
/// push(cell_position, label_index), pop(cell_position, label_index) and
/// leaf() once per complete tableau; cells are filled in row-major order and
/// label indices increase at each cell.
///
/// A label equal to its left neighbour must be even, a label equal to its
/// upper neighbour must be odd, and labels never decrease along rows or down
/// columns.
template <class Visitor>
void walk_tableaux(const CellOrder& order, const LabelSet& labels, Visitor& visitor) {
  const int n = static_cast<int>(order.cells.size());
  if (n == 0) {
    visitor.leaf();
    return;
  }
  std::vector<int> fill(static_cast<std::size_t>(n), -1);
  const int nlab = labels.size();
  int pos = 0;
  for (;;) {
    const auto& cell = order.cells[static_cast<std::size_t>(pos)];
    int& cur = fill[static_cast<std::size_t>(pos)];
    if (cur >= 0) visitor.pop(pos, cur);
    int lo = 0;
    if (cell.left >= 0) lo = fill[static_cast<std::size_t>(cell.left)];
    if (cell.up >= 0) lo = std::max(lo, fill[static_cast<std::size_t>(cell.up)]);
    int next = cur < 0 ? lo : cur + 1;
    for (; next < nlab; ++next) {
      const int p = labels.parity_at(next);
      if (cell.left >= 0 && fill[static_cast<std::size_t>(cell.left)] == next && p != 0) continue;
      if (cell.up >= 0 && fill[static_cast<std::size_t>(cell.up)] == next && p != 1) continue;
      break;
    }
    if (next >= nlab) {
      cur = -1;
      if (pos == 0) return;
      --pos;
      continue;
    }
    cur = next;
    visitor.push(pos, cur);
    if (pos + 1 == n) {
      visitor.leaf();
    } else {
      ++pos;
    }
  }
}

std::vector<Tableau> enumerate(const SkewShape& shape, const LabelSet& labels);
std::uint64_t count(const SkewShape& shape, const LabelSet& labels);
/// Checks rules (i)-(iii) directly on a filled tableau.
bool is_admissible(const Tableau& t, const LabelSet& labels);

/// The tableau whose term dominates as q^u -> infinity, for the
/// distinguished alphabet of sl(r+1|s+1) on a straight shape.
Tableau top_tableau(const Partition& mu, int r, int s);

}  // namespace superbethe
