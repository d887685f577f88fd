#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "frieze/arc.hpp"
#include "frieze/frieze.hpp"
#include "frieze/mutation.hpp"
#include "frieze/quadrilateral.hpp"
#include "frieze/strings.hpp"
#include "frieze/triangulation.hpp"

using frieze::Arc;
using frieze::Frieze;
using frieze::Int;
using frieze::Region;
using frieze::Triangulation;

namespace {

const Triangulation kSnake6 =
    frieze::validate_triangulation(6, {Arc{1, 3}, Arc{1, 5}, Arc{3, 5}});
const Triangulation kFan6 =
    frieze::validate_triangulation(6, {Arc{1, 3}, Arc{1, 4}, Arc{1, 5}});

}  // namespace

TEST_CASE("quadrilateral around a diagonal: apexes and side labels") {
  const frieze::Quadrilateral quad =
      frieze::quadrilateral_at(kFan6, Arc{1, 4});
  REQUIRE(quad.p == 1);
  REQUIRE(quad.q == 4);
  REQUIRE(quad.r == 3);
  REQUIRE(quad.s == 5);
  REQUIRE(quad.b == Arc{3, 4});
  REQUIRE(quad.e == Arc{1, 3});
  REQUIRE(quad.c == Arc{4, 5});
  REQUIRE(quad.d == Arc{1, 5});
  // The opposite labeling swaps (b, c) with (d, e).
  const frieze::Quadrilateral sw =
      frieze::quadrilateral_at(kFan6, Arc{1, 4}, /*swap_bc_de=*/true);
  REQUIRE(sw.b == quad.d);
  REQUIRE(sw.c == quad.e);
  REQUIRE(sw.d == quad.b);
  REQUIRE(sw.e == quad.c);
}

TEST_CASE("flipping replaces a diagonal by the opposite one") {
  const auto [t2, a2] = frieze::flip(kFan6, Arc{1, 4});
  REQUIRE(a2 == Arc{3, 5});
  REQUIRE(t2.diagonals == std::vector<Arc>{Arc{1, 3}, Arc{1, 5}, Arc{3, 5}});
  const auto [t3, a3] = frieze::flip(t2, a2);
  REQUIRE(t3 == kFan6);
  REQUIRE(a3 == Arc{1, 4});
}

TEST_CASE("region classification on a snake hexagon") {
  const Arc a{1, 5};
  REQUIRE(frieze::classify(kSnake6, a, Arc{1, 3}) == Region::kBE);
  REQUIRE(frieze::classify(kSnake6, a, Arc{2, 4}) == Region::kCEClosure);
  REQUIRE(frieze::classify(kSnake6, a, Arc{3, 5}) == Region::kBDClosure);
  REQUIRE(frieze::classify(kSnake6, a, Arc{1, 4}) == Region::kCEClosure);
  // Boundary positions fall outside every region.
  REQUIRE(frieze::classify(kSnake6, a, Arc{1, 2}) == Region::kF);

  // The two dual-closure positions: one step behind a and behind the
  // replacement diagonal.
  const auto [t2, a2] = frieze::flip(kSnake6, a);
  REQUIRE(a2 == Arc{3, 6});
  REQUIRE(frieze::is_dual_closure_position(kSnake6, a,
                                           frieze::rotated(6, a, -1)));
  REQUIRE(frieze::is_dual_closure_position(kSnake6, a,
                                           frieze::rotated(6, a2, -1)));
  int duals = 0;
  for (int i = 1; i <= 6; ++i) {
    for (int r = 2; r <= 4; ++r) {
      const Arc cell = frieze::make_arc(6, i, i + r);
      if (cell.a == i && frieze::is_dual_closure_position(kSnake6, a, cell)) {
        ++duals;
      }
    }
  }
  REQUIRE(duals == 2);
}

TEST_CASE("difference formula equals entry differences on small polygons") {
  for (int n = 4; n <= 6; ++n) {
    frieze::for_each_triangulation(n, [&](const Triangulation& t) {
      const Frieze f1 = frieze::frieze_from_triangulation(t);
      for (Arc a : t.diagonals) {
        const auto [t2, a2] = frieze::flip(t, a);
        const Frieze f2 = frieze::frieze_from_triangulation(t2);
        for (const auto& [cell, before] : f1.cells()) {
          const frieze::DeltaReport rep = frieze::delta_at(t, a, cell);
          REQUIRE(rep.delta == before - f2.at(cell));
        }
      }
    });
  }
}

TEST_CASE("dual-closure positions evaluate equally through either closure") {
  for (int n = 4; n <= 6; ++n) {
    frieze::for_each_triangulation(n, [&](const Triangulation& t) {
      for (Arc a : t.diagonals) {
        for (int i = 1; i <= n; ++i) {
          for (int r = 2; r <= n - 2; ++r) {
            const Arc cell = frieze::make_arc(n, i, i + r);
            if (cell.a != i) continue;
            if (!frieze::is_dual_closure_position(t, a, cell)) continue;
            const auto ce =
                frieze::delta_at(t, a, cell, nullptr, Region::kCEClosure);
            const auto bd =
                frieze::delta_at(t, a, cell, nullptr, Region::kBDClosure);
            REQUIRE(ce.delta == bd.delta);
            REQUIRE(ce.region == Region::kCEClosure);
            REQUIRE(bd.region == Region::kBDClosure);
          }
        }
      }
    });
  }
}

TEST_CASE("relabeling the quadrilateral leaves the difference unchanged") {
  for (int n = 4; n <= 6; ++n) {
    frieze::for_each_triangulation(n, [&](const Triangulation& t) {
      for (Arc a : t.diagonals) {
        for (int i = 1; i <= n; ++i) {
          for (int r = 2; r <= n - 2; ++r) {
            const Arc cell = frieze::make_arc(n, i, i + r);
            if (cell.a != i) continue;
            const auto plain =
                frieze::delta_at(t, a, cell, nullptr, std::nullopt, false);
            const auto swapped =
                frieze::delta_at(t, a, cell, nullptr, std::nullopt, true);
            REQUIRE(plain.delta == swapped.delta);
            // Open regions trade names; closures and F are fixed.
            if (!frieze::is_dual_closure_position(t, a, cell)) {
              using frieze::Region;
              Region want = plain.region;
              if (plain.region == Region::kBC) want = Region::kDE;
              if (plain.region == Region::kDE) want = Region::kBC;
              if (plain.region == Region::kBE) want = Region::kCD;
              if (plain.region == Region::kCD) want = Region::kBE;
              REQUIRE(swapped.region == want);
            }
          }
        }
      }
    });
  }
}

TEST_CASE("mutating the square frieze swaps its two grids") {
  const Triangulation t = frieze::validate_triangulation(4, {Arc{1, 3}});
  const auto [after, reports] = frieze::mutate_frieze(t, Arc{1, 3});
  REQUIRE(after.interior_rows() ==
          std::vector<std::vector<Int>>{{1, 2, 1, 2}});
  REQUIRE(reports.size() == 2);
  for (const auto& rep : reports) {
    REQUIRE((rep.delta == 1 || rep.delta == -1));
  }
}

TEST_CASE("mutation reproduces the recomputed frieze") {
  for (int n = 4; n <= 6; ++n) {
    frieze::for_each_triangulation(n, [&](const Triangulation& t) {
      for (Arc a : t.diagonals) {
        const auto [t2, a2] = frieze::flip(t, a);
        const auto [after, reports] = frieze::mutate_frieze(t, a);
        REQUIRE(after == frieze::frieze_from_triangulation(t2));
      }
    });
  }
}

TEST_CASE("all eight sectional paths degenerate on the square") {
  const Triangulation t = frieze::validate_triangulation(4, {Arc{1, 3}});
  const frieze::Rays rays = frieze::rays_at(t, Arc{1, 3});
  const std::vector<Arc> marker_position = {Arc{2, 4}};  // behind a
  const std::vector<Arc> replacement_position = {Arc{1, 3}};  // behind 2-4
  REQUIRE(rays.b == marker_position);
  REQUIRE(rays.c == marker_position);
  REQUIRE(rays.d == marker_position);
  REQUIRE(rays.e == marker_position);
  REQUIRE(rays.b_a == replacement_position);
  REQUIRE(rays.c_a == replacement_position);
  REQUIRE(rays.d_a == replacement_position);
  REQUIRE(rays.e_a == replacement_position);
}

TEST_CASE("sectional paths partition around the snake diagonal") {
  const Arc a{1, 5};
  const frieze::Rays rays = frieze::rays_at(kSnake6, a);
  // Paths toward the marker end at it; continuations end at the
  // replacement position.
  const Arc marker = frieze::rotated(6, a, -1);
  const auto [t2, a2] = frieze::flip(kSnake6, a);
  const Arc replacement = frieze::rotated(6, a2, -1);
  REQUIRE(rays.b.back() == marker);
  REQUIRE(rays.c.front() == marker);
  REQUIRE(rays.e.front() == marker);
  REQUIRE(rays.d.back() == marker);
  REQUIRE(rays.c_a.back() == replacement);
  REQUIRE(rays.e_a.back() == replacement);
  REQUIRE(rays.b_a.front() == replacement);
  REQUIRE(rays.d_a.front() == replacement);
}

TEST_CASE("support changes follow the region rules on small polygons") {
  for (int n = 4; n <= 6; ++n) {
    frieze::for_each_triangulation(n, [&](const Triangulation& t) {
      for (Arc a : t.diagonals) {
        const frieze::SupportChangeReport rep =
            frieze::support_change_check(t, a);
        CAPTURE(n, frieze::arc_to_string(a));
        REQUIRE(rep.ok());
        REQUIRE(rep.positions_checked == n * (n - 3));
      }
    });
  }
}
