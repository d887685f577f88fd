#include <catch2/catch_amalgamated.hpp>

#include "frieze/arc.hpp"
#include "frieze/errors.hpp"

using frieze::Arc;

TEST_CASE("vertex wrapping is 1-based and cyclic") {
  REQUIRE(frieze::wrap_vertex(5, 1) == 1);
  REQUIRE(frieze::wrap_vertex(5, 5) == 5);
  REQUIRE(frieze::wrap_vertex(5, 6) == 1);
  REQUIRE(frieze::wrap_vertex(5, 0) == 5);
  REQUIRE(frieze::wrap_vertex(5, -1) == 4);
  REQUIRE(frieze::wrap_vertex(5, 11) == 1);
}

TEST_CASE("make_arc wraps, sorts, and rejects degenerate pairs") {
  REQUIRE(frieze::make_arc(5, 5, 7) == Arc{2, 5});
  REQUIRE(frieze::make_arc(5, 4, 2) == Arc{2, 4});
  REQUIRE(frieze::make_arc(6, 0, 3) == Arc{3, 6});
  REQUIRE_THROWS_AS(frieze::make_arc(5, 2, 7), frieze::InvalidInput);
}

TEST_CASE("boundary arcs are the polygon sides") {
  REQUIRE(frieze::is_boundary(5, Arc{1, 2}));
  REQUIRE(frieze::is_boundary(5, Arc{4, 5}));
  REQUIRE(frieze::is_boundary(5, Arc{1, 5}));
  REQUIRE_FALSE(frieze::is_boundary(5, Arc{2, 5}));
  REQUIRE_FALSE(frieze::is_boundary(5, Arc{1, 3}));
  REQUIRE(frieze::is_diagonal(5, Arc{1, 3}));
  REQUIRE_FALSE(frieze::is_diagonal(5, Arc{1, 5}));
}

TEST_CASE("crossing is strict interleaving") {
  REQUIRE(frieze::crosses(Arc{1, 3}, Arc{2, 4}));
  REQUIRE(frieze::crosses(Arc{2, 4}, Arc{1, 3}));
  REQUIRE_FALSE(frieze::crosses(Arc{1, 3}, Arc{3, 5}));  // shared endpoint
  REQUIRE_FALSE(frieze::crosses(Arc{1, 3}, Arc{4, 6}));  // disjoint
  REQUIRE_FALSE(frieze::crosses(Arc{1, 4}, Arc{2, 3}));  // nested
  REQUIRE(frieze::crosses(Arc{2, 5}, Arc{3, 6}));
}

TEST_CASE("rotation and reflection act on endpoints") {
  REQUIRE(frieze::rotated(6, Arc{1, 3}, 1) == Arc{2, 4});
  REQUIRE(frieze::rotated(6, Arc{5, 6}, 1) == Arc{1, 6});
  REQUIRE(frieze::rotated(6, Arc{1, 3}, -1) == Arc{2, 6});
  REQUIRE(frieze::rotated(6, frieze::rotated(6, Arc{2, 5}, 4), -4) ==
          Arc{2, 5});
  REQUIRE(frieze::reflected(6, frieze::reflected(6, Arc{2, 5})) == Arc{2, 5});
}

TEST_CASE("counterclockwise steps and cyclic intervals") {
  REQUIRE(frieze::ccw_steps(6, 2, 5) == 3);
  REQUIRE(frieze::ccw_steps(6, 5, 2) == 3);
  REQUIRE(frieze::ccw_steps(6, 4, 4) == 0);
  REQUIRE(frieze::ccw_steps(6, 6, 1) == 1);

  // (2, 5) counterclockwise contains 3 and 4 only.
  REQUIRE(frieze::in_open_interval(6, 3, 2, 5));
  REQUIRE(frieze::in_open_interval(6, 4, 2, 5));
  REQUIRE_FALSE(frieze::in_open_interval(6, 2, 2, 5));
  REQUIRE_FALSE(frieze::in_open_interval(6, 5, 2, 5));
  REQUIRE_FALSE(frieze::in_open_interval(6, 6, 2, 5));
  // The complementary interval wraps.
  REQUIRE(frieze::in_open_interval(6, 6, 5, 2));
  REQUIRE(frieze::in_open_interval(6, 1, 5, 2));
  REQUIRE_FALSE(frieze::in_open_interval(6, 3, 5, 2));

  REQUIRE(frieze::in_closed_interval(6, 2, 2, 5));
  REQUIRE(frieze::in_closed_interval(6, 5, 2, 5));
  REQUIRE_FALSE(frieze::in_closed_interval(6, 6, 2, 5));
}

TEST_CASE("arcs format as i-j") {
  REQUIRE(frieze::arc_to_string(Arc{3, 11}) == "3-11");
}
