#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hooktab/bijection.hpp"
#include "hooktab/error.hpp"
#include "hooktab/filling.hpp"
#include "hooktab/shape.hpp"

namespace hooktab {

/// Sparse integer Laurent polynomial in q: exponent -> nonzero coefficient.
/// All arithmetic is exact over 64-bit integers.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly constant(long long c) { return monomial(c, 0); }
  static LaurentPoly monomial(long long coeff, long long exp) {
    LaurentPoly p;
    p.add_term(coeff, exp);
    return p;
  }
  /// q^lo + q^(lo+1) + ... + q^hi (zero when the range is empty).
  static LaurentPoly exponent_range(long long lo, long long hi) {
    LaurentPoly p;
    for (long long e = lo; e <= hi; ++e) p.add_term(1, e);
    return p;
  }
  /// 1 - q^e.
  static LaurentPoly one_minus_qpow(long long e) {
    LaurentPoly p;
    p.add_term(1, 0);
    p.add_term(-1, e);
    return p;
  }

  void add_term(long long coeff, long long exp) {
    if (coeff == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
      terms_.emplace(exp, coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<long long, long long>& terms() const { return terms_; }

  long long coeff(long long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? 0 : it->second;
  }
  long long min_exp() const {
    internal_check(!terms_.empty(), "min_exp of zero polynomial");
    return terms_.begin()->first;
  }
  long long max_exp() const {
    internal_check(!terms_.empty(), "max_exp of zero polynomial");
    return terms_.rbegin()->first;
  }

  long long eval_at_one() const {
    long long s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(c, e);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ca * cb, ea + eb);
    return out;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Exact division by (1 - q^h), ascending long division from the lowest
  /// exponent. A nonzero remainder aborts loudly: the callers divide products
  /// that are polynomials by construction, so inexactness means a bug.
  LaurentPoly divide_exact_by_one_minus_qpow(long long h) const {
    internal_check(h >= 1, "divisor exponent must be positive");
    if (is_zero()) return {};
    LaurentPoly rest = *this;
    LaurentPoly quot;
    const long long top = max_exp();
    while (!rest.is_zero()) {
      long long e = rest.min_exp();
      long long c = rest.terms_.begin()->second;
      if (e > top - h)
        fail(errc::non_exact_division, "polynomial is not divisible by 1 - q^" + std::to_string(h));
      quot.add_term(c, e);
      rest.add_term(-c, e);
      rest.add_term(c, e + h);
    }
    return quot;
  }

  /// Canonical form: ascending exponents, no zero terms, e.g. "q^-1 + 2 + 3*q^2".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      long long mag = c < 0 ? -c : c;
      if (first) {
        if (c < 0) s += "-";
        first = false;
      } else {
        s += c < 0 ? " - " : " + ";
      }
      std::string qpart = e == 0 ? "" : (e == 1 ? "q" : "q^" + std::to_string(e));
      if (e == 0) {
        s += std::to_string(mag);
      } else if (mag == 1) {
        s += qpart;
      } else {
        s += std::to_string(mag) + "*" + qpart;
      }
    }
    return s;
  }

 private:
  std::map<long long, long long> terms_;
};

/// q^(sum i*λ_i) * prod (1 - q^(b+c_ρ)) / (1 - q^(h_ρ)), expanded exactly.
inline LaurentPoly hook_content_gf(const Partition& shape, long long b) {
  if (b < shape.rows()) fail(errc::bound_too_small, "bound must be at least the row count");
  long long staircase = 0;
  for (int i = 1; i <= shape.rows(); ++i)
    staircase += static_cast<long long>(i) * shape.row_length(i);
  LaurentPoly p = LaurentPoly::monomial(1, staircase);
  std::vector<int> hooks;
  for (Cell c : shape.cells_in_order()) {
    CellStats s = shape.stats(c);
    p *= LaurentPoly::one_minus_qpow(b + s.content);
    hooks.push_back(s.hook);
  }
  for (int h : hooks) p = p.divide_exact_by_one_minus_qpow(h);
  return p;
}

struct EnumLimits {
  long long cap = 10'000'000;  // maximum number of fillings to visit
};

namespace detail {

inline void bump_enum_count(long long& count, long long cap) {
  if (++count > cap)
    fail(errc::cap_exceeded, "enumeration exceeded cap of " + std::to_string(cap) + " fillings");
}

// Odometer over independent per-cell ranges [lo, hi] in the fixed cell order.
template <typename RangeFn, typename Fn>
long long for_each_independent(const Partition& shape, RangeFn&& range_of, Fn&& fn, EnumLimits lim) {
  std::vector<Cell> cells = shape.cells_in_order();
  Filling f(shape);
  for (Cell c : cells) {
    auto [lo, hi] = range_of(c);
    if (lo > hi) return 0;  // empty range: no fillings at all
    f.at(c) = lo;
  }
  long long count = 0;
  for (;;) {
    bump_enum_count(count, lim.cap);
    fn(static_cast<const Filling&>(f));
    std::size_t k = 0;
    for (; k < cells.size(); ++k) {
      auto [lo, hi] = range_of(cells[k]);
      if (f.at(cells[k]) < hi) {
        ++f.at(cells[k]);
        break;
      }
      f.at(cells[k]) = lo;
    }
    if (k == cells.size()) break;
  }
  return count;
}

template <typename BoundsFn, typename Fn>
long long for_each_grid_recursive(const Partition& shape, BoundsFn&& bounds_of, Fn&& fn,
                                  EnumLimits lim) {
  // Row-major recursion; bounds_of sees the partially filled grid and may
  // read the left and upper neighbours.
  std::vector<Cell> cells;
  for (int i = 1; i <= shape.rows(); ++i)
    for (int j = 1; j <= shape.row_length(i); ++j) cells.push_back({i, j});
  Filling f(shape);
  long long count = 0;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      bump_enum_count(count, lim.cap);
      fn(static_cast<const Filling&>(f));
      return;
    }
    auto [lo, hi] = bounds_of(f, cells[k]);
    for (long long v = lo; v <= hi; ++v) {
      f.at(cells[k]) = v;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return count;
}

inline std::string filling_key(const Filling& f) {
  std::string key;
  for (const auto& row : f.rows()) {
    for (long long e : row) {
      key += std::to_string(e);
      key += ',';
    }
    key += '|';
  }
  return key;
}

}  // namespace detail

/// Exhaustive, duplicate-free enumerations of the four filling classes.
/// Each returns the number of fillings visited and aborts past the cap.
template <typename Fn>
long long for_each_content(const Partition& shape, long long b, Fn&& fn, EnumLimits lim = {}) {
  return detail::for_each_independent(
      shape,
      [&](Cell c) { return std::pair<long long, long long>{1 - shape.stats(c).content, b}; },
      std::forward<Fn>(fn), lim);
}

template <typename Fn>
long long for_each_hook(const Partition& shape, Fn&& fn, EnumLimits lim = {}) {
  return detail::for_each_independent(
      shape,
      [&](Cell c) {
        CellStats s = shape.stats(c);
        return std::pair<long long, long long>{-s.arm, s.leg};
      },
      std::forward<Fn>(fn), lim);
}

template <typename Fn>
long long for_each_ssyt(const Partition& shape, long long b, Fn&& fn, EnumLimits lim = {}) {
  return detail::for_each_grid_recursive(
      shape,
      [&](const Filling& f, Cell c) {
        long long lo = 1;
        if (c.col > 1) lo = std::max(lo, f.at({c.row, c.col - 1}));
        if (c.row > 1 && shape.contains({c.row - 1, c.col}))
          lo = std::max(lo, f.at({c.row - 1, c.col}) + 1);
        return std::pair<long long, long long>{lo, b};
      },
      std::forward<Fn>(fn), lim);
}

template <typename Fn>
long long for_each_plane_partition(BoxDims d, Fn&& fn, EnumLimits lim = {}) {
  if (d.a < 0 || d.b < 0 || d.c < 0) fail(errc::negative_dimension, "box dimensions must be >= 0");
  Partition shape = box_shape(d);
  return detail::for_each_grid_recursive(
      shape,
      [&](const Filling& f, Cell c) {
        long long hi = d.b;
        if (c.col > 1) hi = std::min(hi, f.at({c.row, c.col - 1}));
        if (c.row > 1) hi = std::min(hi, f.at({c.row - 1, c.col}));
        return std::pair<long long, long long>{0, hi};
      },
      std::forward<Fn>(fn), lim);
}

/// Norm generating function sum q^(n(f)) over an enumeration.
inline LaurentPoly gf_of_ssyt(const Partition& shape, long long b, EnumLimits lim = {}) {
  LaurentPoly p;
  for_each_ssyt(shape, b, [&](const Filling& f) { p.add_term(1, f.norm()); }, lim);
  return p;
}
inline LaurentPoly gf_of_content(const Partition& shape, long long b, EnumLimits lim = {}) {
  LaurentPoly p;
  for_each_content(shape, b, [&](const Filling& f) { p.add_term(1, f.norm()); }, lim);
  return p;
}
inline LaurentPoly gf_of_hook(const Partition& shape, EnumLimits lim = {}) {
  LaurentPoly p;
  for_each_hook(shape, [&](const Filling& f) { p.add_term(1, f.norm()); }, lim);
  return p;
}
inline LaurentPoly gf_of_plane_partitions(BoxDims d, EnumLimits lim = {}) {
  LaurentPoly p;
  for_each_plane_partition(d, [&](const Filling& f) { p.add_term(1, f.norm()); }, lim);
  return p;
}

/// The three polynomial forms of the bounded-tableau identity:
///  - product:      sum over tableaux of q^n(T) equals the hook-content product;
///  - hook_side:    tableau gf times prod(1 - q^(h_ρ)) equals
///                  q^(sum i*λ_i) times prod(1 - q^(b+c_ρ));
///  - content_side: tableau gf times the hook-range product equals the
///                  content-range product.
enum class IdentityKind { product, hook_side, content_side };

struct IdentityReport {
  bool pass = false;
  LaurentPoly lhs;
  LaurentPoly rhs;
};

inline IdentityReport verify_identity(IdentityKind which, const Partition& shape, long long b,
                                      EnumLimits lim = {}) {
  if (b < shape.rows()) fail(errc::bound_too_small, "bound must be at least the row count");
  LaurentPoly tableau_gf = gf_of_ssyt(shape, b, lim);
  IdentityReport rep;
  switch (which) {
    case IdentityKind::product: {
      rep.lhs = tableau_gf;
      rep.rhs = hook_content_gf(shape, b);
      break;
    }
    case IdentityKind::hook_side: {
      // Compared cross-multiplied so that both sides stay polynomial.
      LaurentPoly lhs = tableau_gf;
      for (Cell c : shape.cells_in_order())
        lhs *= LaurentPoly::one_minus_qpow(shape.stats(c).hook);
      long long staircase = 0;
      for (int i = 1; i <= shape.rows(); ++i)
        staircase += static_cast<long long>(i) * shape.row_length(i);
      LaurentPoly rhs = LaurentPoly::monomial(1, staircase);
      for (Cell c : shape.cells_in_order())
        rhs *= LaurentPoly::one_minus_qpow(b + shape.stats(c).content);
      rep.lhs = lhs;
      rep.rhs = rhs;
      break;
    }
    case IdentityKind::content_side: {
      LaurentPoly lhs = tableau_gf;
      LaurentPoly rhs = LaurentPoly::constant(1);
      for (Cell c : shape.cells_in_order()) {
        CellStats s = shape.stats(c);
        lhs *= LaurentPoly::exponent_range(-s.arm, s.leg);
        rhs *= LaurentPoly::exponent_range(1 - s.content, b);
      }
      rep.lhs = lhs;
      rep.rhs = rhs;
      break;
    }
  }
  rep.pass = rep.lhs == rep.rhs;
  return rep;
}

struct FiberReport {
  bool pass = false;
  long long fiber_size = 0;     // prod of hook lengths
  long long tableau_count = 0;  // distinct outputs seen
  long long content_count = 0;  // inputs mapped
  long long min_hits = 0;
  long long max_hits = 0;
  bool outputs_match_enumeration = false;
};

/// Deterministic form of the sampler's uniformity: map every content tabloid
/// through the forward algorithm and demand that every bounded tableau is hit
/// exactly prod(h_ρ) times.
inline FiberReport verify_fibers(const Partition& shape, long long b, EnumLimits lim = {}) {
  if (b < shape.rows()) fail(errc::bound_too_small, "bound must be at least the row count");
  FiberReport rep;
  rep.fiber_size = 1;
  for (Cell c : shape.cells_in_order()) rep.fiber_size *= shape.stats(c).hook;

  std::map<std::string, long long> hits;
  rep.content_count = for_each_content(
      shape, b,
      [&](const Filling& f) {
        HcForwardResult r =
            hc_forward(ContentTabloid(f, b), HcOptions{.validate = false, .capture_trace = false});
        ++hits[detail::filling_key(r.tableau.filling())];
      },
      lim);

  std::set<std::string> expected;
  for_each_ssyt(shape, b, [&](const Filling& f) { expected.insert(detail::filling_key(f)); }, lim);

  rep.tableau_count = static_cast<long long>(hits.size());
  rep.min_hits = rep.content_count == 0 ? 0 : hits.begin()->second;
  rep.max_hits = rep.min_hits;
  bool uniform = true;
  for (const auto& [key, n] : hits) {
    rep.min_hits = std::min(rep.min_hits, n);
    rep.max_hits = std::max(rep.max_hits, n);
    if (n != rep.fiber_size) uniform = false;
  }
  std::set<std::string> seen;
  for (const auto& [key, n] : hits) seen.insert(key);
  rep.outputs_match_enumeration = seen == expected;
  rep.pass = uniform && rep.outputs_match_enumeration;
  return rep;
}

/// Counting entry point shared by the command line: independent-range classes
/// are counted by the range product, the rest by enumeration.
inline long long count_content(const Partition& shape, long long b) {
  long long n = 1;
  for (Cell c : shape.cells_in_order()) {
    long long size = b + shape.stats(c).content;  // b - (1 - c) + 1
    if (size <= 0) return 0;
    n *= size;
  }
  return n;
}
inline long long count_hook(const Partition& shape) {
  long long n = 1;
  for (Cell c : shape.cells_in_order()) n *= shape.stats(c).hook;
  return n;
}
inline long long count_ssyt(const Partition& shape, long long b, EnumLimits lim = {}) {
  return for_each_ssyt(shape, b, [](const Filling&) {}, lim);
}
inline long long count_plane_partitions(BoxDims d, EnumLimits lim = {}) {
  return for_each_plane_partition(d, [](const Filling&) {}, lim);
}

}  // namespace hooktab
