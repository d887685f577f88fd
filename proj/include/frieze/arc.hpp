#ifndef FRIEZE_ARC_HPP
#define FRIEZE_ARC_HPP

#include <compare>
#include <string>

#include "frieze/errors.hpp"

namespace frieze {

/// A chord of a convex n-gon whose vertices are labeled 1..n
/// counterclockwise.  Stored with endpoints ordered a < b, so each
/// unordered vertex pair has exactly one representation and arcs can be
/// used directly as ordered map keys.
struct Arc {
  int a{0};
  int b{0};

  auto operator<=>(const Arc&) const = default;
};

/// Wraps an arbitrary integer vertex index into the cyclic range 1..n.
[[nodiscard]] constexpr int wrap_vertex(int n, int v) {
  int w = (v - 1) % n;
  if (w < 0) w += n;
  return w + 1;
}

/// Builds the normalized arc {i, j} (endpoints wrapped into 1..n and then
/// sorted).  Throws InvalidInput when the wrapped endpoints coincide.
[[nodiscard]] inline Arc make_arc(int n, int i, int j) {
  i = wrap_vertex(n, i);
  j = wrap_vertex(n, j);
  if (i == j) {
    throw InvalidInput("degenerate arc: both endpoints are vertex " +
                       std::to_string(i) + " (n=" + std::to_string(n) + ")");
  }
  return i < j ? Arc{i, j} : Arc{j, i};
}

/// True when the arc joins two cyclically adjacent vertices, i.e. it is a
/// side of the polygon rather than a diagonal.
[[nodiscard]] constexpr bool is_boundary(int n, Arc x) {
  return x.b - x.a == 1 || (x.a == 1 && x.b == n);
}

/// True when the arc is a genuine diagonal (not a polygon side).
[[nodiscard]] constexpr bool is_diagonal(int n, Arc x) {
  return !is_boundary(n, x);
}

/// True when the two arcs cross in their interiors.  Arcs sharing an
/// endpoint never cross.  Both arcs must be normalized (a < b).
[[nodiscard]] constexpr bool crosses(Arc x, Arc y) {
  return (x.a < y.a && y.a < x.b && x.b < y.b) ||
         (y.a < x.a && x.a < y.b && y.b < x.b);
}

/// The arc obtained by moving both endpoints s steps counterclockwise
/// (s may be negative).
[[nodiscard]] inline Arc rotated(int n, Arc x, int s) {
  return make_arc(n, x.a + s, x.b + s);
}

/// The arc obtained from the mirror symmetry v -> n + 1 - v.
[[nodiscard]] inline Arc reflected(int n, Arc x) {
  return make_arc(n, n + 1 - x.a, n + 1 - x.b);
}

/// Number of counterclockwise steps from vertex x to vertex y
/// (0 when x == y, otherwise in 1..n-1).
[[nodiscard]] constexpr int ccw_steps(int n, int x, int y) {
  int d = (y - x) % n;
  if (d < 0) d += n;
  return d;
}

/// True when vertex v lies strictly inside the counterclockwise interval
/// from x to y.
[[nodiscard]] constexpr bool in_open_interval(int n, int v, int x, int y) {
  const int dv = ccw_steps(n, x, v);
  return 0 < dv && dv < ccw_steps(n, x, y);
}

/// True when vertex v lies in the closed counterclockwise interval from x
/// to y (endpoints included).
[[nodiscard]] constexpr bool in_closed_interval(int n, int v, int x, int y) {
  return v == x || v == y || in_open_interval(n, v, x, y);
}

/// Compact text form "a-b", used by the CLI for arc arguments and reports.
[[nodiscard]] inline std::string arc_to_string(Arc x) {
  return std::to_string(x.a) + "-" + std::to_string(x.b);
}

}  // namespace frieze

#endif  // FRIEZE_ARC_HPP
