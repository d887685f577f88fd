#include <set>
#include <utility>

#include <catch2/catch_amalgamated.hpp>

#include "frieze/arc.hpp"
#include "frieze/quadrilateral.hpp"
#include "frieze/quiver.hpp"
#include "frieze/triangulation.hpp"

using frieze::Arc;
using frieze::Triangulation;

namespace {

const Triangulation kFan6 =
    frieze::validate_triangulation(6, {Arc{1, 3}, Arc{1, 4}, Arc{1, 5}});
const Triangulation kSnake6 =
    frieze::validate_triangulation(6, {Arc{1, 3}, Arc{1, 5}, Arc{3, 5}});

}  // namespace

TEST_CASE("fan quiver is a linear chain toward the shortest diagonal") {
  const auto arrows = frieze::quiver_arrows(kFan6);
  const std::set<std::pair<Arc, Arc>> expected = {
      {Arc{1, 4}, Arc{1, 3}},
      {Arc{1, 5}, Arc{1, 4}},
  };
  REQUIRE(arrows == expected);
  REQUIRE(frieze::quiver_of(kFan6).relations.empty());
}

TEST_CASE("central triangle produces an oriented 3-cycle with relations") {
  const frieze::Quiver q = frieze::quiver_of(kSnake6);
  const std::set<std::pair<Arc, Arc>> expected = {
      {Arc{1, 5}, Arc{1, 3}},
      {Arc{1, 3}, Arc{3, 5}},
      {Arc{3, 5}, Arc{1, 5}},
  };
  REQUIRE(q.arrows == expected);
  // Every consecutive pair of arrows on the 3-cycle is a relation.
  REQUIRE(q.relations.size() == 3);
}

TEST_CASE("quivers have no loops and no 2-cycles (spot sizes)") {
  for (int n = 4; n <= 7; ++n) {
    frieze::for_each_triangulation(n, [&](const Triangulation& t) {
      const auto arrows = frieze::quiver_arrows(t);
      for (const auto& [x, y] : arrows) {
        REQUIRE(x != y);
        REQUIRE(arrows.count({y, x}) == 0);
      }
    });
  }
}

TEST_CASE("3-step arrow mutation matches the flipped quiver") {
  const Arc a{1, 3};
  const auto [t2, a2] = frieze::flip(kSnake6, a);
  REQUIRE(a2 == Arc{2, 5});
  auto mutated = frieze::mutate_arrows(frieze::quiver_arrows(kSnake6), a);
  std::set<std::pair<Arc, Arc>> relabeled;
  for (auto [x, y] : mutated) {
    if (x == a) x = a2;
    if (y == a) y = a2;
    relabeled.emplace(x, y);
  }
  REQUIRE(relabeled == frieze::quiver_arrows(t2));
}

TEST_CASE("isomorphism search finds all label assignments") {
  frieze::LabeledQuiver cycle;
  cycle.num_vertices = 3;
  cycle.arrows = {{1, 2}, {2, 3}, {3, 1}};
  const auto isos = frieze::quiver_isomorphisms(cycle, frieze::quiver_of(kSnake6));
  REQUIRE(isos.size() == 3);  // the three rotations of the cycle
  for (const auto& phi : isos) {
    REQUIRE(phi.size() == 3);
  }

  frieze::LabeledQuiver chain;
  chain.num_vertices = 3;
  chain.arrows = {{1, 2}, {2, 3}};
  REQUIRE(frieze::quiver_isomorphisms(chain, frieze::quiver_of(kSnake6)).empty());
  REQUIRE(frieze::quiver_isomorphisms(chain, frieze::quiver_of(kFan6)).size() ==
          1);
}
