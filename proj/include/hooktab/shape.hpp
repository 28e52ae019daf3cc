#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hooktab/error.hpp"

namespace hooktab {

/// A cell of a Ferrers diagram, addressed by 1-based (row, col).
struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline std::string to_string(Cell c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

/// Per-cell statistics of a Ferrers diagram; hook = arm + leg + 1.
struct CellStats {
  int arm = 0;
  int leg = 0;
  int hook = 0;
  int content = 0;
};

/// An integer partition: weakly decreasing positive parts. The empty
/// partition is a valid shape everywhere.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0)
        fail(errc::non_positive_part,
             "partition part " + std::to_string(parts_[i]) + " is not positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        fail(errc::non_monotone_partition, "partition parts must be weakly decreasing");
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int cols() const { return parts_.empty() ? 0 : parts_[0]; }
  long long cell_count() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
  }
  bool empty() const { return parts_.empty(); }

  int row_length(int i) const {  // λ_i, zero outside
    return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0;
  }
  int col_length(int j) const {  // λ'_j, zero outside
    if (j < 1 || j > cols()) return 0;
    int n = 0;
    while (n < rows() && parts_[n] >= j) ++n;
    return n;
  }

  bool contains(Cell c) const {
    return c.row >= 1 && c.row <= rows() && c.col >= 1 && c.col <= parts_[c.row - 1];
  }

  void require(Cell c) const {
    if (!contains(c)) fail(errc::cell_out_of_shape, "cell " + to_string(c) + " not in shape");
  }

  Partition conjugate() const {
    std::vector<int> conj;
    conj.reserve(cols());
    for (int j = 1; j <= cols(); ++j) conj.push_back(col_length(j));
    return Partition(std::move(conj));
  }

  CellStats stats(Cell c) const {
    require(c);
    CellStats s;
    s.arm = row_length(c.row) - c.col;
    s.leg = col_length(c.col) - c.row;
    s.hook = s.arm + s.leg + 1;
    s.content = c.col - c.row;
    return s;
  }

  /// The fixed total order of cells: column by column, top to bottom.
  std::vector<Cell> cells_in_order() const {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(cell_count()));
    for (int j = 1; j <= cols(); ++j)
      for (int i = 1; i <= col_length(j); ++i) out.push_back({i, j});
    return out;
  }

  std::optional<Cell> successor(Cell c) const {
    require(c);
    if (c.row < col_length(c.col)) return Cell{c.row + 1, c.col};
    if (c.col < cols() && col_length(c.col + 1) >= 1) return Cell{1, c.col + 1};
    return std::nullopt;
  }

  std::optional<Cell> predecessor(Cell c) const {
    require(c);
    if (c.row > 1) return Cell{c.row - 1, c.col};
    if (c.col > 1) return Cell{col_length(c.col - 1), c.col - 1};
    return std::nullopt;
  }

  /// Position in the fixed order; usable as a comparison key.
  static bool order_before(Cell a, Cell b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

inline Partition parse_partition(const std::vector<int>& parts) { return Partition(parts); }

inline std::string to_string(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.parts()[i]);
  }
  return s + ")";
}

}  // namespace hooktab
