#ifndef FRIEZE_TRIANGULATION_HPP
#define FRIEZE_TRIANGULATION_HPP

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "frieze/arc.hpp"
#include "frieze/errors.hpp"

namespace frieze {

/// A triangulation of a convex n-gon: a maximal set of pairwise
/// non-crossing diagonals.  Diagonals are kept sorted, so two
/// triangulations are equal iff their containers are equal.
struct Triangulation {
  int n{0};
  std::vector<Arc> diagonals;

  auto operator<=>(const Triangulation&) const = default;
};

/// Validates (n, diagonals) and returns the normalized triangulation.
/// Throws InvalidInput naming the offending arc or pair when
///  - n < 4, or an endpoint is out of range,
///  - an arc is a boundary side rather than a diagonal,
///  - the count differs from n - 3, or
///  - two diagonals cross.
[[nodiscard]] inline Triangulation validate_triangulation(
    int n, std::vector<Arc> diagonals) {
  if (n < 4) {
    throw InvalidInput("polygon size must be at least 4, got " +
                       std::to_string(n));
  }
  for (Arc& d : diagonals) {
    if (d.a < 1 || d.b < 1 || d.a > n || d.b > n || d.a == d.b) {
      throw InvalidInput("arc endpoints out of range for n=" +
                         std::to_string(n) + ": " + arc_to_string(d));
    }
    d = make_arc(n, d.a, d.b);
    if (is_boundary(n, d)) {
      throw InvalidInput("arc " + arc_to_string(d) +
                         " is a polygon side, not a diagonal");
    }
  }
  std::sort(diagonals.begin(), diagonals.end());
  if (std::adjacent_find(diagonals.begin(), diagonals.end()) !=
      diagonals.end()) {
    throw InvalidInput("duplicate diagonal supplied");
  }
  if (static_cast<int>(diagonals.size()) != n - 3) {
    throw InvalidInput("a triangulation of an n-gon needs n-3 = " +
                       std::to_string(n - 3) + " diagonals, got " +
                       std::to_string(diagonals.size()));
  }
  for (std::size_t i = 0; i < diagonals.size(); ++i) {
    for (std::size_t j = i + 1; j < diagonals.size(); ++j) {
      if (crosses(diagonals[i], diagonals[j])) {
        throw InvalidInput("diagonals cross: " + arc_to_string(diagonals[i]) +
                           " and " + arc_to_string(diagonals[j]));
      }
    }
  }
  return Triangulation{n, std::move(diagonals)};
}

/// True when the triangulation contains the given diagonal.
[[nodiscard]] inline bool contains(const Triangulation& t, Arc d) {
  return std::binary_search(t.diagonals.begin(), t.diagonals.end(), d);
}

/// Streams every triangulation of the n-gon to the callback, each exactly
/// once, with sorted diagonal lists, in lexicographic order of those lists.
/// Throws InvalidInput for n < 4.
///
/// Ear recursion on a stack of pending sub-polygons: the top sub-polygon is
/// split along the unique triangle containing its first edge, so each
/// triangulation is assembled exactly once.
inline void for_each_triangulation(
    int n, const std::function<void(const Triangulation&)>& callback) {
  if (n < 4) {
    throw InvalidInput("polygon size must be at least 4, got " +
                       std::to_string(n));
  }
  std::vector<Arc> acc;
  std::vector<Triangulation> all;
  std::function<void(std::vector<std::vector<int>>&)> rec =
      [&](std::vector<std::vector<int>>& pending) {
        if (pending.empty()) {
          std::vector<Arc> sorted = acc;
          std::sort(sorted.begin(), sorted.end());
          all.push_back(Triangulation{n, std::move(sorted)});
          return;
        }
        std::vector<int> verts = pending.back();
        pending.pop_back();
        const int k = static_cast<int>(verts.size());
        if (k < 4) {
          rec(pending);
          pending.push_back(std::move(verts));
          return;
        }
        for (int idx = 2; idx < k; ++idx) {
          const int apex = verts[idx];
          std::size_t pushed = 0;
          if (idx > 2) {
            acc.push_back(make_arc(n, verts[1], apex));
            ++pushed;
          }
          if (idx < k - 1) {
            acc.push_back(make_arc(n, verts[0], apex));
            ++pushed;
          }
          const std::size_t depth = pending.size();
          std::vector<int> left(verts.begin() + 1, verts.begin() + idx + 1);
          std::vector<int> right(verts.begin() + idx, verts.end());
          right.push_back(verts[0]);
          pending.push_back(std::move(right));
          pending.push_back(std::move(left));
          rec(pending);
          pending.resize(depth);
          acc.resize(acc.size() - pushed);
        }
        pending.push_back(std::move(verts));
      };
  std::vector<std::vector<int>> pending;
  std::vector<int> outer(n);
  for (int i = 0; i < n; ++i) outer[i] = i + 1;
  pending.push_back(std::move(outer));
  rec(pending);
  std::sort(all.begin(), all.end());
  for (const Triangulation& t : all) callback(t);
}

/// All triangulations of the n-gon in lexicographic order; the size is the
/// Catalan number C(n-2).
[[nodiscard]] inline std::vector<Triangulation> enumerate_triangulations(
    int n) {
  std::vector<Triangulation> out;
  for_each_triangulation(n, [&](const Triangulation& t) { out.push_back(t); });
  return out;
}

/// The n - 2 triangles of the triangulation, as sorted vertex triples in
/// lexicographic order.  A triple is a triangle iff all three of its
/// connecting arcs are polygon sides or diagonals of t.
[[nodiscard]] inline std::vector<std::array<int, 3>> triangles_of(
    const Triangulation& t) {
  const int n = t.n;
  std::set<Arc> edges(t.diagonals.begin(), t.diagonals.end());
  for (int i = 1; i <= n; ++i) edges.insert(make_arc(n, i, i + 1));
  auto has = [&](int u, int v) { return edges.count(make_arc(n, u, v)) > 0; };
  std::vector<std::array<int, 3>> tris;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (!has(u, v)) continue;
      for (int w = v + 1; w <= n; ++w) {
        if (has(v, w) && has(u, w)) tris.push_back({u, v, w});
      }
    }
  }
  if (static_cast<int>(tris.size()) != n - 2) {
    throw InvariantViolation("triangulation does not decompose into n-2 "
                             "triangles; found " +
                             std::to_string(tris.size()));
  }
  return tris;
}

/// The quiddity sequence: entry i-1 counts the triangles incident to
/// vertex i.  Always sums to 3n - 6.
[[nodiscard]] inline std::vector<int> quiddity_of(const Triangulation& t) {
  std::vector<int> q(static_cast<std::size_t>(t.n), 0);
  for (const auto& tri : triangles_of(t)) {
    for (int v : tri) q[static_cast<std::size_t>(v - 1)] += 1;
  }
  return q;
}

/// The mirror image of the triangulation under v -> n + 1 - v.
[[nodiscard]] inline Triangulation mirrored(const Triangulation& t) {
  std::vector<Arc> ds;
  ds.reserve(t.diagonals.size());
  for (Arc d : t.diagonals) ds.push_back(reflected(t.n, d));
  std::sort(ds.begin(), ds.end());
  return Triangulation{t.n, std::move(ds)};
}

}  // namespace frieze

#endif  // FRIEZE_TRIANGULATION_HPP
