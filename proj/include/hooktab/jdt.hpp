#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hooktab/error.hpp"
#include "hooktab/filling.hpp"
#include "hooktab/shape.hpp"

namespace hooktab {

enum class StepKind { Right, Down, Left, Up };

inline const char* to_string(StepKind k) {
  switch (k) {
    case StepKind::Right: return "Right";
    case StepKind::Down: return "Down";
    case StepKind::Left: return "Left";
    case StepKind::Up: return "Up";
  }
  return "?";
}

/// One slide of the special entry. The displaced neighbour is adjusted by
/// one: +1 on Right, -1 on Down, -1 on Left, +1 on Up.
struct JdtStep {
  Cell from;
  Cell to;
  StepKind kind;
  long long displaced_before = 0;
  long long displaced_after = 0;
  friend bool operator==(const JdtStep&, const JdtStep&) = default;
};

/// The trajectory of the special entry: monotone right/down for forward
/// walks, monotone left/up for backward walks.
struct JdtPath {
  Cell start;
  Cell end;
  std::vector<JdtStep> steps;
  friend bool operator==(const JdtPath&, const JdtPath&) = default;
};

/// Outcome of a backward walk: `reached` is false when the walk terminates
/// away from the target cell (a miss).
struct BackwardOutcome {
  bool reached = false;
  JdtPath path;
};

namespace detail {

// Region used by the slide preconditions: the cells weakly (or strictly)
// after `omega` in the fixed order. Such a region is closed under taking
// right and down neighbours.
inline bool in_region(Cell c, Cell omega, bool include_omega) {
  if (include_omega)
    return !Partition::order_before(c, omega);
  return Partition::order_before(omega, c);
}

inline void check_region_ordered(const Filling& f, Cell omega, bool include_omega,
                                 std::optional<Cell> ignore) {
  const Partition& sh = f.shape();
  for (Cell c : sh.cells_in_order()) {
    if (!in_region(c, omega, include_omega)) continue;
    if (ignore && c == *ignore) continue;
    Cell right{c.row, c.col + 1};
    if (sh.contains(right) && !(ignore && right == *ignore) && f.at(c) > f.at(right))
      fail(errc::precondition_violated,
           "row order violated at " + to_string(c) + " in slide region");
    Cell down{c.row + 1, c.col};
    if (sh.contains(down) && !(ignore && down == *ignore) && f.at(c) >= f.at(down))
      fail(errc::precondition_violated,
           "column order violated at " + to_string(c) + " in slide region");
  }
}

inline void check_step_budget(const JdtPath& p, const Partition& sh) {
  long long budget = (sh.rows() > 0 ? sh.rows() - 1 : 0) + (sh.cols() > 0 ? sh.cols() - 1 : 0);
  internal_check(static_cast<long long>(p.steps.size()) <= budget, "slide exceeded step budget");
}

}  // namespace detail

/// Move the entry at `omega` right/down until the row and column conditions
/// hold again. Precondition: the strict successors of `omega` form a skew
/// tableau. Mutates `f`; returns the path taken.
inline JdtPath forward_path(Filling& f, Cell omega, bool validate = false) {
  const Partition& sh = f.shape();
  sh.require(omega);
  if (validate) detail::check_region_ordered(f, omega, /*include_omega=*/false, std::nullopt);

  JdtPath path{omega, omega, {}};
  Cell pos = omega;
  for (;;) {
    long long s = f.at(pos);
    Cell right{pos.row, pos.col + 1};
    Cell down{pos.row + 1, pos.col};
    bool has_right = sh.contains(right);
    bool has_down = sh.contains(down);
    long long x = has_right ? f.at(right) : 0;
    long long y = has_down ? f.at(down) : 0;

    if ((!has_right || s <= x) && (!has_down || s < y)) break;

    // Missing neighbours count as +infinity here, so a missing bottom forces
    // the Right move and a missing right neighbour forces the Down move.
    bool move_right = has_right && (!has_down || x + 1 < y);
    if (move_right) {
      f.at(pos) = x + 1;
      f.at(right) = s;
      path.steps.push_back({pos, right, StepKind::Right, x, x + 1});
      pos = right;
    } else {
      f.at(pos) = y - 1;
      f.at(down) = s;
      path.steps.push_back({pos, down, StepKind::Down, y, y - 1});
      pos = down;
    }
    if (validate) {
      // After any single move, only pairs involving the special entry may be
      // out of order in the region from omega on.
      try {
        detail::check_region_ordered(f, omega, /*include_omega=*/true, pos);
      } catch (const error&) {
        fail(errc::internal, "non-special order violation after forward move");
      }
    }
  }
  path.end = pos;
  detail::check_step_budget(path, sh);
  return path;
}

namespace detail {

inline BackwardOutcome walk_backward(Filling& f, Cell start, Cell target, bool validate) {
  const Partition& sh = f.shape();
  sh.require(start);
  sh.require(target);
  if (start.row < target.row || start.col < target.col)
    fail(errc::precondition_violated,
         "start cell must be weakly right of and below the target");
  if (validate) check_region_ordered(f, target, /*include_omega=*/true, std::nullopt);

  BackwardOutcome out;
  out.path = JdtPath{start, start, {}};
  Cell pos = start;
  for (;;) {
    if (pos == target) {
      out.reached = true;
      break;
    }
    if (pos.row < target.row) break;  // strictly above the target row: unreachable

    long long s = f.at(pos);
    // A Left move is forbidden once the special entry sits in the target's
    // column; together with a missing above neighbour these act as -infinity
    // sentinels, each forcing the other move.
    bool left_allowed = pos.col > target.col;
    bool has_up = pos.row > 1;
    if (!left_allowed && !has_up) break;  // stuck off target

    Cell left{pos.row, pos.col - 1};
    Cell up{pos.row - 1, pos.col};
    long long x = left_allowed ? f.at(left) : 0;
    long long y = has_up ? f.at(up) : 0;

    bool move_left = left_allowed && (!has_up || x - 1 > y);
    if (move_left) {
      f.at(pos) = x - 1;
      f.at(left) = s;
      out.path.steps.push_back({pos, left, StepKind::Left, x, x - 1});
      pos = left;
    } else {
      f.at(pos) = y + 1;
      f.at(up) = s;
      out.path.steps.push_back({pos, up, StepKind::Up, y, y + 1});
      pos = up;
    }
    if (validate) {
      try {
        check_region_ordered(f, target, /*include_omega=*/true, pos);
      } catch (const error&) {
        fail(errc::internal, "non-special order violation after backward move");
      }
    }
  }
  out.path.end = pos;
  check_step_budget(out.path, sh);
  return out;
}

}  // namespace detail

/// Move the entry at `start` left/up until it reaches `target`. On a miss the
/// input filling is left untouched. Precondition: the region from `target` on
/// is a skew tableau.
inline BackwardOutcome backward_path(Filling& f, Cell start, Cell target, bool validate = false) {
  Filling work = f;
  BackwardOutcome out = detail::walk_backward(work, start, target, validate);
  if (out.reached) f = std::move(work);
  return out;
}

/// Same walk as backward_path, on a scratch copy; the input is never mutated.
inline BackwardOutcome path_only(const Filling& f, Cell start, Cell target, bool validate = false) {
  Filling work = f;
  return detail::walk_backward(work, start, target, validate);
}

}  // namespace hooktab
