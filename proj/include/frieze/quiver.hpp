#ifndef FRIEZE_QUIVER_HPP
#define FRIEZE_QUIVER_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "frieze/arc.hpp"
#include "frieze/errors.hpp"
#include "frieze/triangulation.hpp"

namespace frieze {

/// Directed graph on the diagonals of a triangulation, with the length-2
/// zero-relations carried alongside.  Vertices are the diagonals
/// themselves; arrows are ordered diagonal pairs.
struct Quiver {
  std::vector<Arc> vertices;                       // sorted diagonals
  std::set<std::pair<Arc, Arc>> arrows;            // (from, to)
  std::set<std::pair<std::pair<Arc, Arc>,
                     std::pair<Arc, Arc>>> relations;  // ((x,y),(y,z))
};

/// Arrow set of the triangulation quiver: at every polygon vertex v, sort
/// the incident diagonals by the counterclockwise distance from v to their
/// far endpoint; each diagonal receives an arrow to its immediate
/// predecessor in that order (one clockwise rotation step about v).
[[nodiscard]] inline std::set<std::pair<Arc, Arc>> quiver_arrows(
    const Triangulation& t) {
  const int n = t.n;
  std::set<std::pair<Arc, Arc>> arrows;
  for (int v = 1; v <= n; ++v) {
    std::vector<Arc> inc;
    for (Arc d : t.diagonals) {
      if (d.a == v || d.b == v) inc.push_back(d);
    }
    if (inc.size() < 2) continue;
    std::sort(inc.begin(), inc.end(), [&](Arc x, Arc y) {
      const int fx = (x.a == v) ? x.b : x.a;
      const int fy = (y.a == v) ? y.b : y.a;
      return ccw_steps(n, v, fx) < ccw_steps(n, v, fy);
    });
    for (std::size_t i = 0; i + 1 < inc.size(); ++i) {
      arrows.emplace(inc[i + 1], inc[i]);
    }
  }
  return arrows;
}

/// The full quiver with relations.  A relation is a pair of consecutive
/// arrows x -> y -> z such that z -> x is also an arrow (the three lie on
/// an oriented 3-cycle, and the composite path is declared zero).
[[nodiscard]] inline Quiver quiver_of(const Triangulation& t) {
  Quiver q;
  q.vertices = t.diagonals;
  q.arrows = quiver_arrows(t);
  for (const auto& [x, y] : q.arrows) {
    for (const auto& [y2, z] : q.arrows) {
      if (y2 != y) continue;
      if (q.arrows.count({z, x}) > 0) {
        q.relations.insert({{x, y}, {y, z}});
      }
    }
  }
  return q;
}

/// Standard three-step mutation of an arrow multiset at vertex k:
/// (1) for every path x -> k -> y add an arrow x -> y, (2) reverse all
/// arrows at k, (3) cancel maximal sets of opposite arrow pairs.  Used as
/// an independent cross-check that the quiver of a flipped triangulation
/// equals the mutated quiver.  Template over the vertex type so the same
/// rule serves arc-labeled and integer-labeled quivers.
template <typename V>
[[nodiscard]] std::set<std::pair<V, V>> mutate_arrows(
    const std::set<std::pair<V, V>>& arrows, const V& k) {
  std::map<std::pair<V, V>, int> mult;
  for (const auto& [x, y] : arrows) {
    if (x == k || y == k) {
      mult[{y, x}] += 1;
    } else {
      mult[{x, y}] += 1;
    }
  }
  for (const auto& [x, k1] : arrows) {
    if (!(k1 == k)) continue;
    for (const auto& [k2, y] : arrows) {
      if (!(k2 == k)) continue;
      mult[{x, y}] += 1;
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [key, m] : mult) {
      if (m <= 0) continue;
      auto it = mult.find({key.second, key.first});
      if (it != mult.end() && it->second > 0) {
        const int c = std::min(m, it->second);
        m -= c;
        it->second -= c;
        changed = true;
      }
    }
  }
  std::set<std::pair<V, V>> out;
  for (const auto& [key, m] : mult) {
    if (m > 0) out.insert(key);
  }
  return out;
}

/// A quiver given by integer vertex labels 1..num_vertices, used for
/// isomorphism searches against externally specified arrow tables.
struct LabeledQuiver {
  int num_vertices{0};
  std::vector<std::pair<int, int>> arrows;
};

/// All label assignments phi : {1..pattern.num_vertices} -> vertices of q
/// with (x, y) an arrow of the pattern iff (phi x, phi y) an arrow of q.
/// Plain backtracking with in/out-degree pruning; quivers here have at
/// most ~2n vertices, so this is cheap.
[[nodiscard]] inline std::vector<std::map<int, Arc>> quiver_isomorphisms(
    const LabeledQuiver& pattern, const Quiver& q) {
  std::vector<std::map<int, Arc>> result;
  if (static_cast<int>(q.vertices.size()) != pattern.num_vertices ||
      q.arrows.size() != pattern.arrows.size()) {
    return result;
  }
  std::map<int, std::pair<int, int>> pdeg;  // label -> (out, in)
  for (int v = 1; v <= pattern.num_vertices; ++v) pdeg[v] = {0, 0};
  std::set<std::pair<int, int>> parrows(pattern.arrows.begin(),
                                        pattern.arrows.end());
  for (const auto& [x, y] : parrows) {
    pdeg[x].first += 1;
    pdeg[y].second += 1;
  }
  std::map<Arc, std::pair<int, int>> qdeg;
  for (Arc v : q.vertices) qdeg[v] = {0, 0};
  for (const auto& [x, y] : q.arrows) {
    qdeg[x].first += 1;
    qdeg[y].second += 1;
  }
  // Assign high-degree pattern vertices first.
  std::vector<int> order;
  for (int v = 1; v <= pattern.num_vertices; ++v) order.push_back(v);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    const auto dx = pdeg[x].first + pdeg[x].second;
    const auto dy = pdeg[y].first + pdeg[y].second;
    return dx != dy ? dx > dy : x < y;
  });
  std::map<int, Arc> phi;
  std::set<Arc> used;
  std::function<void(std::size_t)> bt = [&](std::size_t k) {
    if (k == order.size()) {
      result.push_back(phi);
      return;
    }
    const int v = order[k];
    for (Arc c : q.vertices) {
      if (used.count(c) > 0 || qdeg[c] != pdeg[v]) continue;
      bool good = true;
      for (const auto& [u, pu] : phi) {
        if ((parrows.count({u, v}) > 0) != (q.arrows.count({pu, c}) > 0) ||
            (parrows.count({v, u}) > 0) != (q.arrows.count({c, pu}) > 0)) {
          good = false;
          break;
        }
      }
      if (!good) continue;
      phi[v] = c;
      used.insert(c);
      bt(k + 1);
      phi.erase(v);
      used.erase(c);
    }
  };
  bt(0);
  return result;
}

}  // namespace frieze

#endif  // FRIEZE_QUIVER_HPP
