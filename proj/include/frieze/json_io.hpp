#ifndef FRIEZE_JSON_IO_HPP
#define FRIEZE_JSON_IO_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "frieze/arc.hpp"
#include "frieze/errors.hpp"
#include "frieze/frieze.hpp"
#include "frieze/ints.hpp"
#include "frieze/mutation.hpp"
#include "frieze/strings.hpp"
#include "frieze/triangulation.hpp"

namespace frieze {

[[nodiscard]] inline Json arc_to_json(Arc x) {
  return Json::array({x.a, x.b});
}

/// Parses an arc from a two-element array [i, j].  Endpoint order is
/// normalized; degenerate arcs are rejected.  Range checks against a
/// particular polygon happen downstream (validate_triangulation et al.).
[[nodiscard]] inline Arc arc_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
      !j[1].is_number_integer()) {
    throw InvalidInput("expected an arc as a two-element array [i, j], got " +
                       j.dump());
  }
  const int a = j[0].get<int>();
  const int b = j[1].get<int>();
  if (a == b) throw InvalidInput("degenerate arc " + j.dump());
  return Arc{std::min(a, b), std::max(a, b)};
}

/// {"n": N, "diagonals": [[i, j], ...]} with i < j on output; input
/// endpoint order is normalized, and the full triangulation invariants
/// are enforced (count n - 3, pairwise non-crossing, no boundary sides).
[[nodiscard]] inline Triangulation triangulation_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("diagonals")) {
    throw InvalidInput(
        R"(triangulation JSON must be {"n": N, "diagonals": [[i,j], ...]})");
  }
  if (!j.at("n").is_number_integer()) {
    throw InvalidInput("\"n\" must be an integer, got " + j.at("n").dump());
  }
  const int n = j.at("n").get<int>();
  std::vector<Arc> ds;
  for (const auto& e : j.at("diagonals")) ds.push_back(arc_from_json(e));
  return validate_triangulation(n, std::move(ds));
}

[[nodiscard]] inline Json triangulation_to_json(const Triangulation& t) {
  Json ds = Json::array();
  for (Arc d : t.diagonals) ds.push_back(arc_to_json(d));
  return Json{{"n", t.n}, {"diagonals", std::move(ds)}};
}

/// {"n": N, "rows": [[...], ...], "offsets": [0, 1, ...]}: interior rows
/// top to bottom, one period wide; offsets record each row's half-column
/// stagger parity.  Entries serialize via int_to_json (decimal strings
/// beyond 64 bits).
[[nodiscard]] inline Json frieze_to_json(const Frieze& f) {
  Json rows = Json::array();
  Json offsets = Json::array();
  const auto interior = f.interior_rows();
  for (std::size_t k = 0; k < interior.size(); ++k) {
    Json row = Json::array();
    for (const Int& v : interior[k]) row.push_back(int_to_json(v));
    rows.push_back(std::move(row));
    offsets.push_back(static_cast<int>((k + 2) % 2));
  }
  return Json{
      {"n", f.order()}, {"rows", std::move(rows)}, {"offsets", std::move(offsets)}};
}

/// Parses and fully re-verifies a frieze from its row JSON ("offsets" is
/// derived data and ignored on input).
[[nodiscard]] inline Frieze frieze_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("rows")) {
    throw InvalidInput(R"(frieze JSON must be {"n": N, "rows": [[...], ...]})");
  }
  const int n = j.at("n").get<int>();
  std::vector<std::vector<Int>> rows;
  for (const auto& row : j.at("rows")) {
    if (!row.is_array()) {
      throw InvalidInput("frieze rows must be arrays, got " + row.dump());
    }
    std::vector<Int> r;
    for (const auto& e : row) r.push_back(int_from_json(e));
    rows.push_back(std::move(r));
  }
  return frieze_from_rows(n, rows);
}

/// {"walk": [[i, j], ...], "dirs": ["f", "b", ...]} with exactly one
/// direction per consecutive walk pair.
[[nodiscard]] inline Json module_to_json(const StringModule& m) {
  Json walk = Json::array();
  for (Arc v : m.walk) walk.push_back(arc_to_json(v));
  Json dirs = Json::array();
  for (char c : m.dirs) dirs.push_back(std::string(1, c));
  return Json{{"walk", std::move(walk)}, {"dirs", std::move(dirs)}};
}

[[nodiscard]] inline StringModule module_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("walk") || !j.contains("dirs")) {
    throw InvalidInput(
        R"(string module JSON must be {"walk": [[i,j], ...], "dirs": ["f"|"b", ...]})");
  }
  StringModule m;
  for (const auto& e : j.at("walk")) m.walk.push_back(arc_from_json(e));
  for (const auto& e : j.at("dirs")) {
    if (!e.is_string() ||
        (e.get<std::string>() != "f" && e.get<std::string>() != "b")) {
      throw InvalidInput("directions must be \"f\" or \"b\", got " + e.dump());
    }
    m.dirs.push_back(e.get<std::string>()[0]);
  }
  if (m.walk.empty()) {
    throw InvalidInput("walk must contain at least one vertex");
  }
  if (m.dirs.size() + 1 != m.walk.size()) {
    throw InvalidInput("need exactly one direction per consecutive walk pair (" +
                       std::to_string(m.walk.size()) + " vertices, " +
                       std::to_string(m.dirs.size()) + " directions)");
  }
  return m;
}

/// Difference report; `full` adds the dual-closure flag, the projection
/// positions, and the projection values on top of the compact
/// {"arc", "region", "delta"} form used inside mutate output.
[[nodiscard]] inline Json delta_report_to_json(const DeltaReport& r,
                                               bool full = true) {
  Json out{{"arc", arc_to_json(r.cell)},
           {"region", region_name(r.region)},
           {"delta", int_to_json(r.delta)}};
  if (full) {
    if (r.dual) out["dual_closure"] = true;
    Json projections = Json::object();
    Json values = Json::object();
    for (const auto& [slot, pos] : r.projections) {
      projections[slot] = arc_to_json(pos);
    }
    for (const auto& [slot, v] : r.values) values[slot] = int_to_json(v);
    out["projections"] = std::move(projections);
    out["values"] = std::move(values);
  }
  return out;
}

/// Output of the mutate operation: both friezes plus one compact report
/// per interior position, sorted by arc.
[[nodiscard]] inline Json mutation_to_json(
    const Frieze& before, const Frieze& after,
    const std::vector<DeltaReport>& reports) {
  Json deltas = Json::array();
  for (const auto& r : reports) {
    deltas.push_back(delta_report_to_json(r, /*full=*/false));
  }
  return Json{{"frieze_before", frieze_to_json(before)},
              {"frieze_after", frieze_to_json(after)},
              {"deltas", std::move(deltas)}};
}

[[nodiscard]] inline Json fit_report_to_json(const FitReport& r) {
  Json candidates = Json::array();
  for (const FitCandidate& c : r.candidates) {
    Json jc{{"name", c.name}, {"exact", c.exact}};
    if (!c.exact) {
      jc["counterexample"] = Json{{"dirs", c.counterexample_dirs},
                                  {"expected", int_to_json(c.expected)},
                                  {"computed", int_to_json(c.computed)}};
    }
    candidates.push_back(std::move(jc));
  }
  Json fitted = Json::array();
  for (const std::string& name : r.fitted) fitted.push_back(name);
  return Json{{"n_max", r.n_max},
              {"distinct_words", r.distinct_words},
              {"candidates", std::move(candidates)},
              {"fitted", std::move(fitted)}};
}

}  // namespace frieze

#endif  // FRIEZE_JSON_IO_HPP
