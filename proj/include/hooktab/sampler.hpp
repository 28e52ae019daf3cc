#pragma once

#include <utility>

#include "hooktab/bijection.hpp"
#include "hooktab/error.hpp"
#include "hooktab/filling.hpp"
#include "hooktab/rng.hpp"
#include "hooktab/shape.hpp"

namespace hooktab {

template <typename ValueT>
struct SampleReport {
  ValueT value;
  long long moves = 0;    // jeu de taquin moves executed
  std::uint64_t seed = 0; // seed of the generator that produced the value
};

/// Independent uniform entry per cell on [1 - c_ρ, b]; uniform over all
/// prod(b + c_ρ) content tabloids.
inline ContentTabloid random_content_tabloid(const Partition& shape, long long b, Rng& rng) {
  if (b < shape.rows()) fail(errc::bound_too_small, "bound must be at least the row count");
  Filling f(shape);
  for (Cell c : shape.cells_in_order())
    f.at(c) = rng.uniform(1 - shape.stats(c).content, b);
  return ContentTabloid(std::move(f), b);
}

/// Exactly uniform tableau sampler: draw a content tabloid, map it, discard
/// the hook tabloid. Every tableau has the same number prod(h_ρ) of preimages.
inline SampleReport<SemistandardTableau> sample_ssyt(const Partition& shape, long long b, Rng& rng) {
  ContentTabloid c = random_content_tabloid(shape, b, rng);
  HcForwardResult r = hc_forward(c, HcOptions{.validate = false, .capture_trace = false});
  return {std::move(r.tableau), r.total_moves, rng.seed()};
}

/// Independent uniform entry per cell on [i - a, b + j - 1].
inline BoxFilling random_box_filling(BoxDims d, Rng& rng) {
  if (d.a < 0 || d.b < 0 || d.c < 0) fail(errc::negative_dimension, "box dimensions must be >= 0");
  Partition shape = box_shape(d);
  Filling f(shape);
  for (Cell c : shape.cells_in_order())
    f.at(c) = rng.uniform(c.row - d.a, static_cast<long long>(d.b) + c.col - 1);
  return BoxFilling(std::move(f), d);
}

/// The plane-partition deformation of the forward map: slide each
/// distinguished entry right/down until rows and columns are weakly
/// decreasing. Missing neighbours never block the stop test; a down move
/// increments the special entry, a right move decrements the displaced one.
inline SampleReport<PlanePartition> algorithm_pp(const BoxFilling& input) {
  const Partition& sh = input.filling().shape();
  const long long b = input.dims().b;
  Filling p = input.filling();
  long long moves = 0;

  std::vector<Cell> cells = sh.cells_in_order();
  for (std::size_t idx = cells.size(); idx-- > 0;) {
    Cell pos = cells[idx];
    long long s = p.at(pos);
    for (;;) {
      Cell right{pos.row, pos.col + 1};
      Cell down{pos.row + 1, pos.col};
      bool has_right = sh.contains(right);
      bool has_down = sh.contains(down);
      long long x = has_right ? p.at(right) : 0;
      long long y = has_down ? p.at(down) : 0;

      if ((!has_right || s >= x) && (!has_down || s >= y)) break;

      bool move_right = has_right && (!has_down || x - 1 >= y);
      if (move_right) {
        p.at(pos) = x - 1;
        p.at(right) = s;
        pos = right;
      } else {
        p.at(pos) = y;
        p.at(down) = s + 1;
        s += 1;
        pos = down;
      }
      ++moves;
    }
  }

  internal_check(check_plane_partition(p, b).empty(), "output is not a plane partition");
  return {PlanePartition(std::move(p), b), moves, 0};
}

/// Exactly uniform over plane partitions in an a x b x c box.
inline SampleReport<PlanePartition> sample_pp(BoxDims d, Rng& rng) {
  BoxFilling f = random_box_filling(d, rng);
  SampleReport<PlanePartition> r = algorithm_pp(f);
  r.seed = rng.seed();
  return r;
}

/// The exact sum inside the worst-case move bound for algorithm_pp:
/// sum of i*(i-1)/2 for i = a .. a+c-1.
inline long long pp_move_bound(int a, int c) {
  if (a < 1 || c < 1) fail(errc::invalid_input, "pp_move_bound requires a, c >= 1");
  long long total = 0;
  for (long long i = a; i <= static_cast<long long>(a) + c - 1; ++i) total += i * (i - 1) / 2;
  return total;
}

}  // namespace hooktab
