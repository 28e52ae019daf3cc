#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hooktab/bijection.hpp"
#include "hooktab/error.hpp"
#include "hooktab/filling.hpp"
#include "hooktab/jdt.hpp"
#include "hooktab/qcount.hpp"
#include "hooktab/sampler.hpp"
#include "hooktab/shape.hpp"

namespace hooktab {

using json = nlohmann::json;

// Partitions serialize as arrays of parts: [4,3,3,2].
inline json to_json(const Partition& p) { return json(p.parts()); }

inline Partition partition_from_json(const json& j) {
  if (!j.is_array()) fail(errc::invalid_input, "partition must be a JSON array of integers");
  std::vector<int> parts;
  for (const auto& x : j) {
    if (!x.is_number_integer()) fail(errc::invalid_input, "partition parts must be integers");
    parts.push_back(x.get<int>());
  }
  return Partition(std::move(parts));
}

// Fillings serialize as {"shape":[...],"rows":[[...],...]}.
inline json to_json(const Filling& f) {
  json rows = json::array();
  for (const auto& r : f.rows()) rows.push_back(r);
  return json{{"shape", to_json(f.shape())}, {"rows", rows}};
}

inline Filling filling_from_json(const json& j) {
  if (!j.is_object() || !j.contains("shape") || !j.contains("rows"))
    fail(errc::invalid_input, "filling must be an object with \"shape\" and \"rows\"");
  Partition shape = partition_from_json(j.at("shape"));
  std::vector<std::vector<long long>> rows;
  if (!j.at("rows").is_array()) fail(errc::invalid_input, "\"rows\" must be an array");
  for (const auto& r : j.at("rows")) {
    if (!r.is_array()) fail(errc::invalid_input, "each row must be an array");
    std::vector<long long> row;
    for (const auto& x : r) {
      if (!x.is_number_integer()) fail(errc::invalid_input, "entries must be integers");
      row.push_back(x.get<long long>());
    }
    rows.push_back(std::move(row));
  }
  return Filling(std::move(shape), rows);
}

inline json to_json(Cell c) { return json::array({c.row, c.col}); }

inline json to_json(const JdtStep& s) {
  return json{{"kind", to_string(s.kind)}, {"from", to_json(s.from)}, {"to", to_json(s.to)}};
}

inline json to_json(const JdtPath& p) {
  json steps = json::array();
  for (const auto& s : p.steps) steps.push_back(to_json(s));
  return json{{"start", to_json(p.start)}, {"end", to_json(p.end)}, {"steps", steps}};
}

inline json to_json(const TraceEvent& e) {
  return json{{"loop_index", e.loop_index},
              {"distinguished", to_json(e.distinguished)},
              {"path", to_json(e.path)},
              {"T_after", to_json(e.t_after)},
              {"H_after", to_json(e.h_after)}};
}

inline json to_json(const std::vector<TraceEvent>& trace) {
  json arr = json::array();
  for (const auto& e : trace) arr.push_back(to_json(e));
  return arr;
}

template <typename ValueT>
json to_json(const SampleReport<ValueT>& r, bool include_moves) {
  json j{{"value", to_json(r.value.filling())}, {"seed", r.seed}};
  if (include_moves) j["moves"] = r.moves;
  return j;
}

// Polynomials serialize as exponent -> coefficient maps with string keys.
inline json to_json(const LaurentPoly& p) {
  json j = json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c;
  return j;
}

// Text format: one row per line, entries space separated; round-trips
// bit-exactly against parse_filling_text.
inline std::string to_text(const Filling& f) {
  std::string out;
  for (const auto& row : f.rows()) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(row[k]);
    }
    out += '\n';
  }
  return out;
}

inline Filling parse_filling_text(const std::string& text) {
  std::vector<std::vector<long long>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::vector<long long> row;
    long long v;
    while (ls >> v) row.push_back(v);
    if (!ls.eof()) fail(errc::invalid_input, "bad token in filling text");
    rows.push_back(std::move(row));
  }
  std::vector<int> parts;
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  return Filling(Partition(std::move(parts)), rows);
}

}  // namespace hooktab
