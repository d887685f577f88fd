#include <algorithm>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "frieze/arc.hpp"
#include "frieze/errors.hpp"
#include "frieze/triangulation.hpp"

using frieze::Arc;
using frieze::Triangulation;

TEST_CASE("validation rejects malformed triangulations") {
  REQUIRE_THROWS_AS(frieze::validate_triangulation(3, {}),
                    frieze::InvalidInput);
  // Boundary side instead of a diagonal.
  REQUIRE_THROWS_AS(frieze::validate_triangulation(4, {Arc{1, 2}}),
                    frieze::InvalidInput);
  // Wrong count.
  REQUIRE_THROWS_AS(frieze::validate_triangulation(5, {Arc{1, 3}}),
                    frieze::InvalidInput);
  // Crossing pair.
  REQUIRE_THROWS_AS(
      frieze::validate_triangulation(5, {Arc{1, 3}, Arc{2, 4}}),
      frieze::InvalidInput);
  // Duplicate diagonal.
  REQUIRE_THROWS_AS(
      frieze::validate_triangulation(5, {Arc{1, 3}, Arc{1, 3}}),
      frieze::InvalidInput);
  // Out-of-range endpoint.
  REQUIRE_THROWS_AS(frieze::validate_triangulation(5, {Arc{1, 7}, Arc{1, 3}}),
                    frieze::InvalidInput);
}

TEST_CASE("validation accepts and sorts a valid triangulation") {
  const Triangulation t =
      frieze::validate_triangulation(6, {Arc{3, 5}, Arc{1, 3}, Arc{1, 5}});
  REQUIRE(t.n == 6);
  REQUIRE(t.diagonals == std::vector<Arc>{Arc{1, 3}, Arc{1, 5}, Arc{3, 5}});
  REQUIRE(frieze::contains(t, Arc{1, 5}));
  REQUIRE_FALSE(frieze::contains(t, Arc{2, 6}));
}

TEST_CASE("enumeration counts follow the Catalan numbers") {
  REQUIRE(frieze::enumerate_triangulations(4).size() == 2);
  REQUIRE(frieze::enumerate_triangulations(5).size() == 5);
  REQUIRE(frieze::enumerate_triangulations(6).size() == 14);
  REQUIRE(frieze::enumerate_triangulations(7).size() == 42);
  REQUIRE(frieze::enumerate_triangulations(8).size() == 132);
}

TEST_CASE("enumeration yields sorted, valid, distinct triangulations") {
  const auto all = frieze::enumerate_triangulations(7);
  REQUIRE(std::is_sorted(all.begin(), all.end()));
  REQUIRE(std::adjacent_find(all.begin(), all.end()) == all.end());
  for (const Triangulation& t : all) {
    REQUIRE_NOTHROW(frieze::validate_triangulation(t.n, t.diagonals));
  }
}

TEST_CASE("triangles and per-vertex counts of a pentagon fan") {
  const Triangulation t =
      frieze::validate_triangulation(5, {Arc{1, 3}, Arc{1, 4}});
  const auto tris = frieze::triangles_of(t);
  REQUIRE(tris.size() == 3);
  REQUIRE(frieze::quiddity_of(t) == std::vector<int>{3, 1, 2, 2, 1});
}

TEST_CASE("mirroring is an involution and preserves validity") {
  const Triangulation t =
      frieze::validate_triangulation(6, {Arc{2, 6}, Arc{2, 5}, Arc{3, 5}});
  const Triangulation m = frieze::mirrored(t);
  REQUIRE_NOTHROW(frieze::validate_triangulation(m.n, m.diagonals));
  REQUIRE(frieze::mirrored(m) == t);
}
