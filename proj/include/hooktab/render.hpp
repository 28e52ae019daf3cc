#pragma once

#include <algorithm>
#include <string>

#include "hooktab/filling.hpp"

namespace hooktab {

/// Fixed-width grid of the entries, right-justified, rows on separate lines.
inline std::string render_grid(const Filling& f) {
  std::size_t width = 1;
  for (const auto& row : f.rows())
    for (long long e : row) width = std::max(width, std::to_string(e).size());
  std::string out;
  for (const auto& row : f.rows()) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out += ' ';
      std::string s = std::to_string(row[k]);
      out.append(width - s.size(), ' ');
      out += s;
    }
    out += '\n';
  }
  return out;
}

/// Side view of the stacks of a plane partition: for each grid row, one text
/// line per height level (top level first), '#' where the stack reaches the
/// level and '.' where it does not. Rows are separated by a blank line.
inline std::string render_pp3d(const Filling& f) {
  long long top = 0;
  for (const auto& row : f.rows())
    for (long long e : row) top = std::max(top, e);
  std::string out;
  auto rows = f.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += '\n';
    if (top == 0) {
      out.append(rows[i].size(), '.');
      out += '\n';
      continue;
    }
    for (long long level = top; level >= 1; --level) {
      for (long long e : rows[i]) out += (e >= level ? '#' : '.');
      out += '\n';
    }
  }
  return out;
}

}  // namespace hooktab
