#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hooktab/error.hpp"
#include "hooktab/filling.hpp"
#include "hooktab/jdt.hpp"
#include "hooktab/shape.hpp"

namespace hooktab {

/// Snapshot of the working pair after one loop of the map or its inverse.
struct TraceEvent {
  int loop_index = 0;  // 1-based loop counter
  Cell distinguished;  // the cell the loop worked on
  JdtPath path;        // forward path (map) or committed backward path (unmap)
  Filling t_after;
  Filling h_after;
  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

struct HcOptions {
  bool validate = true;       // run the per-loop invariant checks
  bool capture_trace = false; // record a TraceEvent per loop
};

struct HcForwardResult {
  SemistandardTableau tableau;
  HookTabloid hook;
  std::vector<TraceEvent> trace;
  long long total_moves = 0;
};

struct HcInverseResult {
  ContentTabloid content;
  std::vector<TraceEvent> trace;
  long long total_moves = 0;
};

/// Candidate cells for the inverse loop at `omega` = (i,j): every nonpositive
/// entry e of the hook grid at (k,j), k >= i, marks the cell (k, j-e). For a
/// valid hook tabloid all candidates lie inside the shape.
inline std::vector<Cell> candidate_cells(const Filling& hook, const Partition& shape, Cell omega) {
  shape.require(omega);
  std::vector<Cell> out;
  for (int k = omega.row; k <= shape.col_length(omega.col); ++k) {
    long long e = hook.at({k, omega.col});
    if (e > 0) continue;
    Cell cand{k, omega.col - static_cast<int>(e)};
    internal_check(shape.contains(cand), "candidate cell outside shape (corrupted hook grid)");
    out.push_back(cand);
  }
  return out;
}

enum class PathOrder { Before, After };

namespace detail {

// Classification of a reversed backward path at offset k from its end cell:
// an East step (reverse of Left), exhausted, or a South step (reverse of Up).
// The precedence East < Exhausted < South realises the path order: a path
// that peels off to the right comes first, a path that is a proper prefix
// beats one that continues downward.
enum : int { kEast = 0, kExhausted = 1, kSouth = 2 };

inline int reversed_class(const JdtPath& p, std::size_t k) {
  if (k >= p.steps.size()) return kExhausted;
  const JdtStep& st = p.steps[p.steps.size() - 1 - k];
  return st.kind == StepKind::Left ? kEast : kSouth;
}

}  // namespace detail

/// Strict total order on backward paths sharing an end cell: traverse both
/// paths in reverse from the common end and order by the first divergence.
inline PathOrder compare_paths(const JdtPath& p, const JdtPath& q) {
  if (p.end != q.end)
    fail(errc::incomparable_paths, "paths end in different cells");
  for (std::size_t k = 0;; ++k) {
    int cp = detail::reversed_class(p, k);
    int cq = detail::reversed_class(q, k);
    if (cp != cq) return cp < cq ? PathOrder::Before : PathOrder::After;
    if (cp == detail::kExhausted)
      fail(errc::internal, "identical paths have no order");
  }
}

namespace detail {

inline void check_hc_state(const Filling& t, const Filling& h, long long input_norm,
                           long long bound, Cell omega, bool include_omega) {
  internal_check(t.norm() + h.norm() == input_norm, "norm conservation violated");
  internal_check(check_hook(h).empty(), "working hook grid left the hook tabloid range");
  for (Cell c : t.shape().cells_in_order())
    internal_check(t.at(c) <= bound, "working tableau entry exceeded the bound");
  try {
    check_region_ordered(t, omega, include_omega, std::nullopt);
  } catch (const error&) {
    fail(errc::internal, "ordered region is not a skew tableau after loop");
  }
}

inline void check_probe_order(const std::vector<JdtPath>& paths) {
  const std::size_t n = paths.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      PathOrder ab = compare_paths(paths[a], paths[b]);
      PathOrder ba = compare_paths(paths[b], paths[a]);
      internal_check(ab != ba, "path comparison is not antisymmetric");
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (a == b || b == c || a == c) continue;
        if (compare_paths(paths[a], paths[b]) == PathOrder::Before &&
            compare_paths(paths[b], paths[c]) == PathOrder::Before)
          internal_check(compare_paths(paths[a], paths[c]) == PathOrder::Before,
                         "path comparison is not transitive");
      }
}

}  // namespace detail

/// Map a content tabloid to (tableau, hook tabloid). Cells are processed from
/// the last to the first in the fixed order; each loop slides the
/// distinguished entry right/down and then shifts the hook column up by one,
/// recording the horizontal displacement.
inline HcForwardResult hc_forward(const ContentTabloid& input, HcOptions opt = {}) {
  const Partition& sh = input.filling().shape();
  const long long b = input.bound();
  const long long input_norm = input.filling().norm();

  Filling t = input.filling();
  Filling h(sh, 0);
  std::vector<TraceEvent> trace;
  long long moves = 0;

  std::vector<Cell> cells = sh.cells_in_order();
  for (std::size_t idx = cells.size(); idx-- > 0;) {
    Cell omega = cells[idx];
    JdtPath path = forward_path(t, omega, opt.validate);
    moves += static_cast<long long>(path.steps.size());

    const int i = omega.row, j = omega.col;
    const int i2 = path.end.row, j2 = path.end.col;
    for (int k = i; k < i2; ++k) h.at({k, j}) = h.at({k + 1, j}) + 1;
    h.at({i2, j}) = j - j2;

    int loop_index = static_cast<int>(cells.size() - idx);
    if (opt.validate)
      detail::check_hc_state(t, h, input_norm, b, omega, /*include_omega=*/true);
    if (opt.capture_trace) trace.push_back({loop_index, omega, path, t, h});
  }

  internal_check(check_ssyt(t, b).empty(), "output is not a bounded tableau");
  internal_check(check_hook(h).empty(), "output is not a hook tabloid");
  return {SemistandardTableau(std::move(t), b), HookTabloid(std::move(h)), std::move(trace), moves};
}

/// Invert hc_forward. Cells are processed first to last; each loop probes the
/// backward path of every candidate cell, commits the first path in the path
/// order, and shifts the hook column back down.
inline HcInverseResult hc_inverse(const SemistandardTableau& tableau, const HookTabloid& hook,
                                  HcOptions opt = {}) {
  const Partition& sh = tableau.filling().shape();
  if (hook.filling().shape() != sh)
    fail(errc::invalid_input, "tableau and hook tabloid shapes differ");
  const long long b = tableau.bound();
  const long long input_norm = tableau.filling().norm() + hook.filling().norm();

  Filling t = tableau.filling();
  Filling h = hook.filling();
  std::vector<TraceEvent> trace;
  long long moves = 0;

  std::vector<Cell> cells = sh.cells_in_order();
  for (std::size_t idx = 0; idx < cells.size(); ++idx) {
    Cell omega = cells[idx];
    std::vector<Cell> cands = candidate_cells(h, sh, omega);
    internal_check(!cands.empty(), "no candidate cells (corrupted hook grid)");

    std::vector<JdtPath> probes;
    probes.reserve(cands.size());
    for (Cell cand : cands) {
      BackwardOutcome probe = path_only(t, cand, omega, opt.validate);
      internal_check(probe.reached, "candidate backward path missed the distinguished cell");
      probes.push_back(std::move(probe.path));
    }
    if (opt.validate) detail::check_probe_order(probes);

    std::size_t best = 0;
    for (std::size_t m = 1; m < probes.size(); ++m)
      if (compare_paths(probes[m], probes[best]) == PathOrder::Before) best = m;

    BackwardOutcome walked = backward_path(t, cands[best], omega, opt.validate);
    internal_check(walked.reached, "committed backward path missed the distinguished cell");
    internal_check(walked.path == probes[best], "probe and committed walk disagree");
    moves += static_cast<long long>(walked.path.steps.size());

    const int i = omega.row, j = omega.col;
    const int i2 = cands[best].row;
    for (int k = i2; k > i; --k) h.at({k, j}) = h.at({k - 1, j}) - 1;
    h.at({i, j}) = 0;

    int loop_index = static_cast<int>(idx + 1);
    if (opt.validate && idx + 1 < cells.size())
      detail::check_hc_state(t, h, input_norm, b, cells[idx + 1], /*include_omega=*/true);
    if (opt.capture_trace) trace.push_back({loop_index, omega, walked.path, t, h});
  }

  if (opt.validate)
    for (Cell c : sh.cells_in_order())
      internal_check(h.at(c) == 0, "hook grid should be zero after unmapping");
  internal_check(check_content(t, b).empty(), "output is not a content tabloid");
  return {ContentTabloid(std::move(t), b), std::move(trace), moves};
}

}  // namespace hooktab
