#ifndef FRIEZE_QUADRILATERAL_HPP
#define FRIEZE_QUADRILATERAL_HPP

#include <utility>
#include <vector>

#include "frieze/arc.hpp"
#include "frieze/errors.hpp"
#include "frieze/triangulation.hpp"

namespace frieze {

/// Side-labeling convention for the quadrilateral around a diagonal
/// a = [p, q] (p < q): with the default value, labels b and e go to the
/// triangle whose apex lies in the counterclockwise interval (p, q), and
/// labels c and d to the other triangle.  The opposite convention swaps
/// (b, c) with (d, e); every difference-formula value is invariant under
/// that swap, which the test suite asserts.
inline constexpr bool kApexOfBeSideIsCcwFromLowerEndpoint = true;

/// The quadrilateral formed by the two triangles adjacent to a diagonal a.
///
///   - a = [p, q] with p < q;
///   - r is the apex of the adjacent triangle with r in ccw (p, q);
///   - s is the apex of the other adjacent triangle, s in ccw (q, p);
///   - sides are labeled b = [r, q], e = [p, r], c = [q, s], d = [p, s]
///     (default convention), so b is opposite d and c is opposite e, b and
///     e share an endpoint of a, and c and d share the other.
///
/// Flipping a replaces it with the other diagonal [r, s].
struct Quadrilateral {
  Arc a{};
  int p{0}, q{0}, r{0}, s{0};
  Arc b{}, c{}, d{}, e{};
};

/// Computes the quadrilateral around diagonal a of t.  `swap_bc_de`
/// selects the opposite side-labeling convention (used by the symmetry
/// tests); geometry (p, q, r, s as positions) is convention-independent,
/// only the four side labels move.  Throws InvalidInput when a is not a
/// diagonal of t.
[[nodiscard]] inline Quadrilateral quadrilateral_at(const Triangulation& t,
                                                    Arc a,
                                                    bool swap_bc_de = false) {
  if (!contains(t, a)) {
    throw InvalidInput("diagonal " + arc_to_string(a) +
                       " is not in the triangulation");
  }
  const int n = t.n;
  const int p = a.a;
  const int q = a.b;
  int r = 0, s = 0;
  for (const auto& tri : triangles_of(t)) {
    int apex = 0;
    int hits = 0;
    for (int v : tri) {
      if (v == p || v == q) {
        ++hits;
      } else {
        apex = v;
      }
    }
    if (hits != 2) continue;
    if (in_open_interval(n, apex, p, q)) {
      r = apex;
    } else {
      s = apex;
    }
  }
  if (r == 0 || s == 0) {
    throw InvariantViolation("diagonal " + arc_to_string(a) +
                             " is not adjacent to two triangles");
  }
  Quadrilateral quad;
  quad.a = a;
  quad.p = p;
  quad.q = q;
  quad.r = r;
  quad.s = s;
  const Arc rq = make_arc(n, r, q);
  const Arc pr = make_arc(n, p, r);
  const Arc qs = make_arc(n, q, s);
  const Arc ps = make_arc(n, p, s);
  const bool upper = kApexOfBeSideIsCcwFromLowerEndpoint != swap_bc_de;
  if (upper) {
    quad.b = rq;
    quad.e = pr;
    quad.c = qs;
    quad.d = ps;
  } else {
    quad.b = ps;
    quad.e = qs;
    quad.c = pr;
    quad.d = rq;
  }
  return quad;
}

/// Flips diagonal a of t: removes a and inserts the other diagonal of its
/// quadrilateral.  Returns the new triangulation together with the new
/// diagonal.  Involutive: flipping the result at the returned diagonal
/// restores t.
[[nodiscard]] inline std::pair<Triangulation, Arc> flip(const Triangulation& t,
                                                        Arc a) {
  const Quadrilateral quad = quadrilateral_at(t, a);
  const Arc replacement = make_arc(t.n, quad.r, quad.s);
  std::vector<Arc> ds;
  ds.reserve(t.diagonals.size());
  for (Arc d : t.diagonals) {
    if (d != a) ds.push_back(d);
  }
  ds.push_back(replacement);
  std::sort(ds.begin(), ds.end());
  return {Triangulation{t.n, std::move(ds)}, replacement};
}

}  // namespace frieze

#endif  // FRIEZE_QUADRILATERAL_HPP
