#include <catch2/catch_amalgamated.hpp>

#include "frieze/arc.hpp"
#include "frieze/errors.hpp"
#include "frieze/frieze.hpp"
#include "frieze/golden.hpp"
#include "frieze/json_io.hpp"
#include "frieze/mutation.hpp"
#include "frieze/strings.hpp"
#include "frieze/triangulation.hpp"

using frieze::Arc;
using frieze::Int;
using frieze::Json;
using frieze::Triangulation;

TEST_CASE("triangulation JSON round trip and validation") {
  const Json j = Json::parse(R"({"n": 5, "diagonals": [[1,3],[1,4]]})");
  const Triangulation t = frieze::triangulation_from_json(j);
  REQUIRE(t.n == 5);
  REQUIRE(frieze::triangulation_to_json(t) == j);

  // Reversed endpoint order is normalized.
  const Json rev = Json::parse(R"({"n": 5, "diagonals": [[3,1],[4,1]]})");
  REQUIRE(frieze::triangulation_from_json(rev) == t);

  REQUIRE_THROWS_AS(frieze::triangulation_from_json(
                        Json::parse(R"({"n": 5, "diagonals": [[1,3]]})")),
                    frieze::InvalidInput);
  REQUIRE_THROWS_AS(frieze::triangulation_from_json(
                        Json::parse(R"({"diagonals": [[1,3]]})")),
                    frieze::InvalidInput);
  REQUIRE_THROWS_AS(frieze::triangulation_from_json(
                        Json::parse(R"({"n": 5, "diagonals": [[1,1],[1,4]]})")),
                    frieze::InvalidInput);
}

TEST_CASE("frieze JSON round trip re-verifies the rows") {
  const Triangulation t = frieze::triangulation_from_json(
      Json::parse(R"({"n": 6, "diagonals": [[1,3],[1,4],[1,5]]})"));
  const frieze::Frieze f = frieze::frieze_from_triangulation(t);
  const Json j = frieze::frieze_to_json(f);
  REQUIRE(j.at("n") == 6);
  REQUIRE(j.at("rows").size() == 3);
  REQUIRE(j.at("offsets") == Json::array({0, 1, 0}));
  REQUIRE(frieze::frieze_from_json(j) == f);

  Json bad = j;
  bad["rows"][0][0] = 17;
  REQUIRE_THROWS_AS(frieze::frieze_from_json(bad), frieze::InvalidInput);
}

TEST_CASE("string module JSON round trip") {
  const Json j = Json::parse(
      R"({"walk": [[1,4],[1,5]], "dirs": ["b"]})");
  const frieze::StringModule m = frieze::module_from_json(j);
  REQUIRE(m.walk == std::vector<Arc>{Arc{1, 4}, Arc{1, 5}});
  REQUIRE(m.dirs == "b");
  REQUIRE(frieze::module_to_json(m) == j);

  REQUIRE_THROWS_AS(
      frieze::module_from_json(
          Json::parse(R"({"walk": [[1,4],[1,5]], "dirs": []})")),
      frieze::InvalidInput);
  REQUIRE_THROWS_AS(
      frieze::module_from_json(
          Json::parse(R"({"walk": [[1,4]], "dirs": ["x"]})")),
      frieze::InvalidInput);
}

TEST_CASE("integers beyond 64 bits serialize as decimal strings") {
  const Int big("123456789012345678901234567890123456789");
  const Json j = frieze::int_to_json(big);
  REQUIRE(j.is_string());
  REQUIRE(frieze::int_from_json(j) == big);

  const Json small = frieze::int_to_json(Int(-42));
  REQUIRE(small.is_number_integer());
  REQUIRE(frieze::int_from_json(small) == -42);

  REQUIRE_THROWS_AS(frieze::int_from_json(Json::parse(R"("12x")")),
                    frieze::InvalidInput);
  REQUIRE_THROWS_AS(frieze::int_from_json(Json::parse("1.5")),
                    frieze::InvalidInput);
}

TEST_CASE("difference reports serialize compactly inside mutate output") {
  const Triangulation t = frieze::triangulation_from_json(
      Json::parse(R"({"n": 4, "diagonals": [[1,3]]})"));
  const frieze::Frieze before = frieze::frieze_from_triangulation(t);
  const auto [after, reports] = frieze::mutate_frieze(t, Arc{1, 3});
  const Json j = frieze::mutation_to_json(before, after, reports);
  REQUIRE(j.contains("frieze_before"));
  REQUIRE(j.contains("frieze_after"));
  REQUIRE(j.at("deltas").size() == 2);
  for (const auto& d : j.at("deltas")) {
    REQUIRE(d.contains("arc"));
    REQUIRE(d.contains("region"));
    REQUIRE(d.contains("delta"));
    REQUIRE_FALSE(d.contains("projections"));
  }
  // Full single-position report carries projections and their values.
  const Json full = frieze::delta_report_to_json(reports.front());
  REQUIRE(full.contains("projections"));
  REQUIRE(full.contains("values"));
}

TEST_CASE("bundled reference fixtures load and are well formed") {
  const frieze::GoldenData g = frieze::load_golden_data();
  REQUIRE(g.quiver.before.num_vertices == 11);
  REQUIRE(g.quiver.before.arrows.size() == 14);
  REQUIRE(g.quiver.after.arrows.size() == 14);
  REQUIRE(g.quiver.flip_label >= 1);
  REQUIRE(g.window.rows.size() == 11);  // spans 2..12 of a 14-gon grid
  for (const auto& [r, entries] : g.window.rows) {
    REQUIRE(r >= 2);
    REQUIRE(r <= 12);
    REQUIRE(entries.size() == 12);
  }
  REQUIRE(g.pairs.rows.size() == 11);
  REQUIRE(g.examples.size() == 3);
  for (const auto& ex : g.examples) {
    REQUIRE_FALSE(ex.support_labels.empty());
    REQUIRE(ex.slot_values.size() == 4);
    REQUIRE(ex.delta == ex.count_before - ex.count_after);
  }
  REQUIRE_FALSE(g.ray_example.ray.empty());
}
