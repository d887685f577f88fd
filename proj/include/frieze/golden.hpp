#ifndef FRIEZE_GOLDEN_HPP
#define FRIEZE_GOLDEN_HPP

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "frieze/errors.hpp"
#include "frieze/ints.hpp"
#include "frieze/quiver.hpp"

// Generated by the build: compiled-in default fixture directory.
#include "frieze/fixture_path.hpp"

namespace frieze {

/// Directory holding the seed fixtures (reference quiver, grid window,
/// before/after entry pairs, worked examples).  The FRIEZE_SEED_GOLDEN
/// environment variable overrides the compiled-in default.
[[nodiscard]] inline std::filesystem::path golden_fixture_dir() {
  if (const char* env = std::getenv("FRIEZE_SEED_GOLDEN")) {
    if (*env != '\0') return std::filesystem::path(env);
  }
  return std::filesystem::path(kDefaultFixtureDir);
}

/// Reference quiver data: an integer-labeled quiver, the label to flip,
/// and the expected arrow set after the flip.
struct GoldenQuiver {
  LabeledQuiver before;
  LabeledQuiver after;
  int flip_label{0};
};

/// A 12-column window of the reference 14-gon grid: row index r (span of
/// the arc) -> 12 consecutive entries.  Window column k of row r holds the
/// entry at arc [k - floor(r/2) + t, k - floor(r/2) + t + r] for one
/// global translation t that the reproduction search determines.
struct GoldenWindow {
  std::map<int, std::vector<Int>> rows;
};

/// Before/after entry pairs for the same window layout (independent
/// translation), after flipping the reference diagonal.
struct GoldenPairs {
  std::map<int, std::vector<std::pair<Int, Int>>> rows;
};

/// One fully worked difference example, located through the quiver labels
/// of its walk support.
struct GoldenExample {
  std::string name;
  std::vector<int> support_labels;
  std::string region;
  Int count_before{0};
  Int count_after{0};
  Int delta{0};
  std::map<std::string, Int> slot_values;
};

/// A membership example: the position with the given support lies on the
/// named sectional path of the reference diagonal.
struct GoldenRayExample {
  std::vector<int> support_labels;
  std::string ray;
};

struct GoldenData {
  GoldenQuiver quiver;
  GoldenWindow window;
  GoldenPairs pairs;
  std::vector<GoldenExample> examples;
  GoldenRayExample ray_example;
};

namespace detail {

[[nodiscard]] inline Json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidInput(
        "cannot open fixture file " + path.string() +
        " (set FRIEZE_SEED_GOLDEN to the fixture directory)");
  }
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InvalidInput("malformed JSON in " + path.string() + ": " + e.what());
  }
  return j;
}

[[nodiscard]] inline std::vector<std::pair<int, int>> arrow_list(
    const Json& j) {
  std::vector<std::pair<int, int>> arrows;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) {
      throw InvalidInput("arrow entries must be [from, to] pairs");
    }
    arrows.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return arrows;
}

}  // namespace detail

/// Loads all golden fixtures from the directory (see golden_fixture_dir).
[[nodiscard]] inline GoldenData load_golden_data(
    const std::filesystem::path& dir = golden_fixture_dir()) {
  GoldenData g;

  const Json jq = detail::load_json_file(dir / "quiver.json");
  g.quiver.before.num_vertices = jq.at("vertices").get<int>();
  g.quiver.before.arrows = detail::arrow_list(jq.at("arrows"));
  g.quiver.after.num_vertices = g.quiver.before.num_vertices;
  g.quiver.after.arrows = detail::arrow_list(jq.at("arrows_after_flip"));
  g.quiver.flip_label = jq.at("flip_label").get<int>();

  const Json jw = detail::load_json_file(dir / "window.json");
  for (const auto& [key, row] : jw.at("rows").items()) {
    std::vector<Int> entries;
    for (const auto& e : row) entries.push_back(int_from_json(e));
    g.window.rows.emplace(std::stoi(key), std::move(entries));
  }

  const Json jp = detail::load_json_file(dir / "pairs.json");
  for (const auto& [key, row] : jp.at("rows").items()) {
    std::vector<std::pair<Int, Int>> entries;
    for (const auto& e : row) {
      if (!e.is_array() || e.size() != 2) {
        throw InvalidInput("pair entries must be [before, after]");
      }
      entries.emplace_back(int_from_json(e[0]), int_from_json(e[1]));
    }
    g.pairs.rows.emplace(std::stoi(key), std::move(entries));
  }

  const Json je = detail::load_json_file(dir / "worked_examples.json");
  for (const auto& ex : je.at("examples")) {
    GoldenExample e;
    e.name = ex.at("name").get<std::string>();
    for (const auto& v : ex.at("support_labels")) {
      e.support_labels.push_back(v.get<int>());
    }
    e.region = ex.at("region").get<std::string>();
    e.count_before = int_from_json(ex.at("count_before"));
    e.count_after = int_from_json(ex.at("count_after"));
    e.delta = int_from_json(ex.at("delta"));
    for (const auto& [slot, val] : ex.at("slot_values").items()) {
      e.slot_values.emplace(slot, int_from_json(val));
    }
    g.examples.push_back(std::move(e));
  }
  const Json& jr = je.at("ray_example");
  for (const auto& v : jr.at("support_labels")) {
    g.ray_example.support_labels.push_back(v.get<int>());
  }
  g.ray_example.ray = jr.at("ray").get<std::string>();

  return g;
}

}  // namespace frieze

#endif  // FRIEZE_GOLDEN_HPP
