#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hooktab/error.hpp"
#include "hooktab/shape.hpp"

namespace hooktab {

/// A shape-indexed integer grid: exactly one 64-bit entry per cell.
/// Entries are stored row-major; all addressing goes through Cell.
class Filling {
 public:
  Filling() = default;

  explicit Filling(Partition shape, long long init = 0)
      : shape_(std::move(shape)),
        entries_(static_cast<std::size_t>(shape_.cell_count()), init) {
    build_offsets();
  }

  Filling(Partition shape, const std::vector<std::vector<long long>>& rows)
      : shape_(std::move(shape)) {
    if (static_cast<int>(rows.size()) != shape_.rows())
      fail(errc::invalid_input, "row count does not match shape");
    for (int i = 1; i <= shape_.rows(); ++i)
      if (static_cast<int>(rows[i - 1].size()) != shape_.row_length(i))
        fail(errc::invalid_input, "row " + std::to_string(i) + " length does not match shape");
    for (const auto& r : rows) entries_.insert(entries_.end(), r.begin(), r.end());
    build_offsets();
  }

  const Partition& shape() const { return shape_; }

  long long at(Cell c) const {
    shape_.require(c);
    return entries_[index(c)];
  }
  long long& at(Cell c) {
    shape_.require(c);
    return entries_[index(c)];
  }

  long long norm() const {
    long long n = 0;
    for (long long e : entries_) n += e;
    return n;
  }

  std::vector<std::vector<long long>> rows() const {
    std::vector<std::vector<long long>> out;
    out.reserve(shape_.rows());
    for (int i = 1; i <= shape_.rows(); ++i) {
      out.emplace_back(entries_.begin() + offsets_[i - 1],
                       entries_.begin() + offsets_[i - 1] + shape_.row_length(i));
    }
    return out;
  }

  friend bool operator==(const Filling& a, const Filling& b) {
    return a.shape_ == b.shape_ && a.entries_ == b.entries_;
  }

 private:
  void build_offsets() {
    offsets_.assign(shape_.rows() + 1, 0);
    for (int i = 1; i <= shape_.rows(); ++i)
      offsets_[i] = offsets_[i - 1] + shape_.row_length(i);
  }
  std::size_t index(Cell c) const {
    return static_cast<std::size_t>(offsets_[c.row - 1] + c.col - 1);
  }

  Partition shape_;
  std::vector<long long> entries_;
  std::vector<int> offsets_;
};

/// One violated (cell, constraint) pair reported by validation.
struct Violation {
  Cell cell;
  std::string constraint;
};

namespace detail {
inline void report(std::vector<Violation>& out, Cell c, std::string what) {
  out.push_back({c, std::move(what)});
}
}  // namespace detail

/// Content tabloid constraint: 1 - c_ρ <= entry <= b.
inline std::vector<Violation> check_content(const Filling& f, long long bound) {
  std::vector<Violation> v;
  for (Cell c : f.shape().cells_in_order()) {
    long long lo = 1 - f.shape().stats(c).content;
    long long e = f.at(c);
    if (e < lo) detail::report(v, c, "entry " + std::to_string(e) + " below 1-content " + std::to_string(lo));
    if (e > bound) detail::report(v, c, "entry " + std::to_string(e) + " above bound " + std::to_string(bound));
  }
  return v;
}

/// Hook tabloid constraint: -a_ρ <= entry <= l_ρ.
inline std::vector<Violation> check_hook(const Filling& f) {
  std::vector<Violation> v;
  for (Cell c : f.shape().cells_in_order()) {
    CellStats s = f.shape().stats(c);
    long long e = f.at(c);
    if (e < -s.arm) detail::report(v, c, "entry " + std::to_string(e) + " below -arm " + std::to_string(-s.arm));
    if (e > s.leg) detail::report(v, c, "entry " + std::to_string(e) + " above leg " + std::to_string(s.leg));
  }
  return v;
}

/// Semistandard constraint: rows weakly increasing, columns strictly
/// increasing, entries in [1, b].
inline std::vector<Violation> check_ssyt(const Filling& f, long long bound) {
  std::vector<Violation> v;
  const Partition& sh = f.shape();
  for (Cell c : sh.cells_in_order()) {
    long long e = f.at(c);
    if (e < 1) detail::report(v, c, "entry " + std::to_string(e) + " below 1");
    if (e > bound) detail::report(v, c, "entry " + std::to_string(e) + " above bound " + std::to_string(bound));
    Cell right{c.row, c.col + 1};
    if (sh.contains(right) && e > f.at(right)) detail::report(v, c, "row not weakly increasing");
    Cell down{c.row + 1, c.col};
    if (sh.contains(down) && e >= f.at(down)) detail::report(v, c, "column not strictly increasing");
  }
  return v;
}

/// Plane partition constraint over a rectangle: rows and columns weakly
/// decreasing, entries in [0, ceiling].
inline std::vector<Violation> check_plane_partition(const Filling& f, long long ceiling) {
  std::vector<Violation> v;
  const Partition& sh = f.shape();
  for (int i = 2; i <= sh.rows(); ++i)
    if (sh.row_length(i) != sh.row_length(1)) {
      detail::report(v, {i, 1}, "shape is not rectangular");
      return v;
    }
  for (Cell c : sh.cells_in_order()) {
    long long e = f.at(c);
    if (e < 0) detail::report(v, c, "entry " + std::to_string(e) + " below 0");
    if (e > ceiling) detail::report(v, c, "entry " + std::to_string(e) + " above ceiling " + std::to_string(ceiling));
    Cell right{c.row, c.col + 1};
    if (sh.contains(right) && e < f.at(right)) detail::report(v, c, "row not weakly decreasing");
    Cell down{c.row + 1, c.col};
    if (sh.contains(down) && e < f.at(down)) detail::report(v, c, "column not weakly decreasing");
  }
  return v;
}

/// Box dimensions a x b x c: an a-row, c-column grid with entries up to b.
struct BoxDims {
  int a = 0;
  int b = 0;
  int c = 0;
  friend bool operator==(const BoxDims&, const BoxDims&) = default;
};

inline Partition box_shape(BoxDims d) {
  if (d.a < 0 || d.b < 0 || d.c < 0) fail(errc::negative_dimension, "box dimensions must be >= 0");
  if (d.a == 0 || d.c == 0) return Partition();
  return Partition(std::vector<int>(static_cast<std::size_t>(d.a), d.c));
}

/// Input range for the plane-partition walk: entry at (i,j) in [i-a, b+j-1].
inline std::vector<Violation> check_box_input(const Filling& f, BoxDims d) {
  std::vector<Violation> v;
  if (f.shape() != box_shape(d)) {
    detail::report(v, {1, 1}, "shape is not the a x c rectangle");
    return v;
  }
  for (Cell c : f.shape().cells_in_order()) {
    long long e = f.at(c);
    long long lo = c.row - d.a;
    long long hi = static_cast<long long>(d.b) + c.col - 1;
    if (e < lo) detail::report(v, c, "entry " + std::to_string(e) + " below " + std::to_string(lo));
    if (e > hi) detail::report(v, c, "entry " + std::to_string(e) + " above " + std::to_string(hi));
  }
  return v;
}

namespace detail {
[[noreturn]] inline void throw_violations(const char* what, const std::vector<Violation>& v) {
  std::string msg = std::string(what) + ":";
  for (const auto& x : v) msg += " " + to_string(x.cell) + " " + x.constraint + ";";
  fail(errc::invalid_input, msg);
}
}  // namespace detail

class ContentTabloid {
 public:
  ContentTabloid(Filling f, long long bound) : f_(std::move(f)), bound_(bound) {
    if (auto v = check_content(f_, bound_); !v.empty())
      detail::throw_violations("not a content tabloid", v);
  }
  const Filling& filling() const { return f_; }
  long long bound() const { return bound_; }
  friend bool operator==(const ContentTabloid&, const ContentTabloid&) = default;

 private:
  Filling f_;
  long long bound_;
};

class HookTabloid {
 public:
  explicit HookTabloid(Filling f) : f_(std::move(f)) {
    if (auto v = check_hook(f_); !v.empty()) detail::throw_violations("not a hook tabloid", v);
  }
  const Filling& filling() const { return f_; }
  friend bool operator==(const HookTabloid&, const HookTabloid&) = default;

 private:
  Filling f_;
};

class SemistandardTableau {
 public:
  SemistandardTableau(Filling f, long long bound) : f_(std::move(f)), bound_(bound) {
    if (auto v = check_ssyt(f_, bound_); !v.empty())
      detail::throw_violations("not a semistandard tableau", v);
  }
  const Filling& filling() const { return f_; }
  long long bound() const { return bound_; }
  friend bool operator==(const SemistandardTableau&, const SemistandardTableau&) = default;

 private:
  Filling f_;
  long long bound_;
};

class PlanePartition {
 public:
  PlanePartition(Filling f, long long ceiling) : f_(std::move(f)), ceiling_(ceiling) {
    if (auto v = check_plane_partition(f_, ceiling_); !v.empty())
      detail::throw_violations("not a plane partition", v);
  }
  const Filling& filling() const { return f_; }
  long long ceiling() const { return ceiling_; }
  friend bool operator==(const PlanePartition&, const PlanePartition&) = default;

 private:
  Filling f_;
  long long ceiling_;
};

class BoxFilling {
 public:
  BoxFilling(Filling f, BoxDims dims) : f_(std::move(f)), dims_(dims) {
    if (auto v = check_box_input(f_, dims_); !v.empty())
      detail::throw_violations("not a valid box filling", v);
  }
  const Filling& filling() const { return f_; }
  BoxDims dims() const { return dims_; }
  friend bool operator==(const BoxFilling&, const BoxFilling&) = default;

 private:
  Filling f_;
  BoxDims dims_;
};

/// Entry e in row i of a bounded tableau over the rectangle (c^a) maps to
/// b - e + i; this is the bijection with plane partitions in an a x b x c box.
inline PlanePartition ssyt_to_pp(const SemistandardTableau& t) {
  const Partition& sh = t.filling().shape();
  int a = sh.rows();
  for (int i = 2; i <= a; ++i)
    if (sh.row_length(i) != sh.row_length(1))
      fail(errc::not_rectangular, "tableau shape is not rectangular");
  long long b = t.bound() - a;
  if (b < 0) fail(errc::bound_mismatch, "tableau bound is smaller than its row count");
  Filling out(sh);
  for (Cell c : sh.cells_in_order()) out.at(c) = b - t.filling().at(c) + c.row;
  return PlanePartition(std::move(out), b);
}

inline SemistandardTableau pp_to_ssyt(const PlanePartition& p) {
  const Partition& sh = p.filling().shape();
  int a = sh.rows();
  long long b = p.ceiling();
  Filling out(sh);
  for (Cell c : sh.cells_in_order()) out.at(c) = b - p.filling().at(c) + c.row;
  return SemistandardTableau(std::move(out), a + b);
}

}  // namespace hooktab
