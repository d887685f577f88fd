#ifndef FRIEZE_MUTATION_HPP
#define FRIEZE_MUTATION_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "frieze/arc.hpp"
#include "frieze/errors.hpp"
#include "frieze/frieze.hpp"
#include "frieze/ints.hpp"
#include "frieze/quadrilateral.hpp"
#include "frieze/strings.hpp"
#include "frieze/triangulation.hpp"

namespace frieze {

/// Classification of a grid position relative to a chosen diagonal a.  The
/// four open regions take their names from the pairs of quadrilateral
/// sides the underlying module reaches; the two closures are the
/// rectangles spanned between the position of a's rotation marker and the
/// position of the new diagonal; F is everything else (zero difference).
enum class Region {
  kBC,
  kDE,
  kBE,
  kCD,
  kCEClosure,
  kBDClosure,
  kF,
};

[[nodiscard]] inline std::string region_name(Region r) {
  switch (r) {
    case Region::kBC: return "BC";
    case Region::kDE: return "DE";
    case Region::kBE: return "BE";
    case Region::kCD: return "CD";
    case Region::kCEClosure: return "CE_closure";
    case Region::kBDClosure: return "BD_closure";
    case Region::kF: return "F";
  }
  return "?";
}

[[nodiscard]] inline std::optional<Region> region_from_name(
    const std::string& s) {
  if (s == "BC") return Region::kBC;
  if (s == "DE") return Region::kDE;
  if (s == "BE") return Region::kBE;
  if (s == "CD") return Region::kCD;
  if (s == "CE_closure") return Region::kCEClosure;
  if (s == "BD_closure") return Region::kBDClosure;
  if (s == "F") return Region::kF;
  return std::nullopt;
}

namespace detail {

/// Geometry of the quadrilateral around a, with the two apexes in fixed
/// geometric positions: rr lies counterclockwise-inside (p, q), ss inside
/// (q, p).  The label convention (which apex carries the b/e sides) is
/// applied on top of this when regions are named.
struct QuadFrame {
  int n{0};
  int p{0}, q{0}, rr{0}, ss{0};
};

[[nodiscard]] inline QuadFrame quad_frame(const Triangulation& t, Arc a,
                                          bool swap_labels) {
  const Quadrilateral quad = quadrilateral_at(t, a);
  QuadFrame f;
  f.n = t.n;
  // The opposite labeling convention is realized by reading the same
  // quadrilateral from the other endpoint of a: (p,q,rr,ss) -> (q,p,ss,rr).
  // All classification arithmetic below is expressed through this frame,
  // so the swap reindexes every region and projection consistently.
  const bool upper = kApexOfBeSideIsCcwFromLowerEndpoint != swap_labels;
  if (upper) {
    f.p = quad.p;
    f.q = quad.q;
    f.rr = quad.r;
    f.ss = quad.s;
  } else {
    f.p = quad.q;
    f.q = quad.p;
    f.rr = quad.s;
    f.ss = quad.r;
  }
  return f;
}

/// Geometric classification of the rotated arc w = [y, z] against the
/// frame: returns the region, the endpoint ordering (u, v) that realized
/// the membership test, and whether the position belongs to both closures
/// (exactly the marker of a and the position of the new diagonal).
struct GeomClass {
  Region region{Region::kF};
  int u{0}, v{0};
  bool dual{false};
};

[[nodiscard]] inline GeomClass classify_rotated(const QuadFrame& f, Arc w) {
  const int n = f.n;
  const int p = f.p, q = f.q, r = f.rr, s = f.ss;
  const int y = w.a, z = w.b;
  const std::pair<int, int> orders[2] = {{y, z}, {z, y}};
  for (const auto& [u, v] : orders) {
    if (in_open_interval(n, u, r, q) && in_open_interval(n, v, q, s)) {
      return {Region::kBC, u, v, false};
    }
    if (in_open_interval(n, u, p, r) && in_open_interval(n, v, s, p)) {
      return {Region::kDE, u, v, false};
    }
    if (in_open_interval(n, u, p, r) && in_open_interval(n, v, r, q)) {
      return {Region::kBE, u, v, false};
    }
    if (in_open_interval(n, u, q, s) && in_open_interval(n, v, s, p)) {
      return {Region::kCD, u, v, false};
    }
  }
  std::optional<std::pair<int, int>> ce, bd;
  for (const auto& [u, v] : orders) {
    if (in_closed_interval(n, u, p, r) && in_closed_interval(n, v, q, s)) {
      ce = {u, v};
    }
    if (in_closed_interval(n, u, r, q) && in_closed_interval(n, v, s, p)) {
      bd = {u, v};
    }
  }
  if (ce && bd) return {Region::kCEClosure, ce->first, ce->second, true};
  if (ce) return {Region::kCEClosure, ce->first, ce->second, false};
  if (bd) return {Region::kBDClosure, bd->first, bd->second, false};
  return {Region::kF, 0, 0, false};
}

/// Projection targets in rotated-arc space for a classified position.
/// Keys are the slot names used in reports; values are rotated arcs whose
/// grid value enters the difference formula.
[[nodiscard]] inline std::map<std::string, Arc> projection_targets(
    const QuadFrame& f, Region region, int u, int v) {
  const int n = f.n;
  const int p = f.p, q = f.q, r = f.rr, s = f.ss;
  auto A = [&](int i, int j) { return make_arc(n, i, j); };
  switch (region) {
    case Region::kBC:
      return {{"pi1_plus", A(u, s)},
              {"pi2_plus", A(p, u)},
              {"pi1_minus", A(r, v)},
              {"pi2_minus", A(p, v)}};
    case Region::kDE:
      return {{"pi1_plus", A(v, r)},
              {"pi2_plus", A(v, q)},
              {"pi1_minus", A(u, s)},
              {"pi2_minus", A(u, q)}};
    case Region::kBE:
      return {{"pi1_plus", A(u, q)},
              {"pi2_plus", A(u, s)},
              {"pi1_minus", A(p, v)},
              {"pi2_minus", A(v, s)}};
    case Region::kCD:
      return {{"pi1_plus", A(p, u)},
              {"pi2_plus", A(r, u)},
              {"pi1_minus", A(v, q)},
              {"pi2_minus", A(v, r)}};
    case Region::kCEClosure:
      return {{"pi_p_up", A(u, q)},
              {"pi_p_down", A(p, v)},
              {"pi_s_up", A(r, v)},
              {"pi_s_down", A(u, s)}};
    case Region::kBDClosure:
      return {{"pi_p_up", A(v, q)},
              {"pi_p_down", A(p, u)},
              {"pi_s_up", A(u, s)},
              {"pi_s_down", A(v, r)}};
    case Region::kF:
      return {};
  }
  return {};
}

}  // namespace detail

/// Full per-position difference report: the region, the projection
/// targets (as grid positions, i.e. rotated back into arc coordinates),
/// their values, and the difference itself.
struct DeltaReport {
  Arc cell{};
  Region region{Region::kF};
  bool dual{false};  // belongs to both closures
  std::map<std::string, Arc> projections;  // slot -> grid position
  std::map<std::string, Int> values;       // slot -> value
  Int delta{0};
};

/// Classifies the grid position `cell` relative to diagonal a.  Boundary
/// positions are F.  `swap_labels` applies the opposite quadrilateral
/// labeling convention: the open regions trade names (BC<->DE, BE<->CD)
/// while both closures and F are fixed, since endpoint pairs are tested
/// unordered; every difference value is unchanged.
[[nodiscard]] inline Region classify(const Triangulation& t, Arc a, Arc cell,
                                     bool swap_labels = false) {
  if (is_boundary(t.n, cell)) return Region::kF;
  const detail::QuadFrame f = detail::quad_frame(t, a, swap_labels);
  return detail::classify_rotated(f, rotated(t.n, cell, +1)).region;
}

/// True when the position belongs to both closures (the rotation marker
/// of a and the position of the replacement diagonal).
[[nodiscard]] inline bool is_dual_closure_position(const Triangulation& t,
                                                   Arc a, Arc cell) {
  if (is_boundary(t.n, cell)) return false;
  const detail::QuadFrame f = detail::quad_frame(t, a, false);
  return detail::classify_rotated(f, rotated(t.n, cell, +1)).dual;
}

/// Computes the difference report at one grid position.
///
/// The closed form evaluates projection values s(.) of the position's
/// sectional projections onto the bounding paths of its region:
///   BC/DE:      (s(pi1+) - s(pi2+)) * (s(pi1-) - s(pi2-))
///   BE/CD:      -(s(pi2+) - 2 s(pi1+)) * (s(pi2-) - 2 s(pi1-))
///   closures:   s(pi_s_down) s(pi_p_down) + s(pi_s_up) s(pi_p_up)
///               - 3 s(pi_p_down) s(pi_p_up)
///   F:          0
/// and equals the entry of the frieze of t minus the entry of the frieze
/// of flip(t, a) at the same position (asserted exhaustively by the
/// verification suite).
///
/// `force_closure` evaluates a dual position through the named closure
/// membership (both give the same value); `memo` caches projection values
/// across calls against the same t.
[[nodiscard]] inline DeltaReport delta_at(
    const Triangulation& t, Arc a, Arc cell, ValueMemo* memo = nullptr,
    std::optional<Region> force_closure = std::nullopt,
    bool swap_labels = false) {
  DeltaReport rep;
  rep.cell = cell;
  if (is_boundary(t.n, cell)) {
    rep.region = Region::kF;
    return rep;
  }
  const detail::QuadFrame f = detail::quad_frame(t, a, swap_labels);
  const Arc w = rotated(t.n, cell, +1);
  detail::GeomClass g = detail::classify_rotated(f, w);
  rep.dual = g.dual;
  if (g.dual && force_closure.has_value()) {
    if (force_closure != Region::kCEClosure &&
        force_closure != Region::kBDClosure) {
      throw InvalidInput("force_closure must name one of the two closures");
    }
    if (*force_closure == Region::kBDClosure) {
      // Recompute the endpoint ordering for the other closed rectangle.
      const int n = f.n;
      for (const auto& [u, v] :
           {std::pair<int, int>{w.a, w.b}, std::pair<int, int>{w.b, w.a}}) {
        if (in_closed_interval(n, u, f.rr, f.q) &&
            in_closed_interval(n, v, f.ss, f.p)) {
          g.region = Region::kBDClosure;
          g.u = u;
          g.v = v;
        }
      }
    }
  }
  rep.region = g.region;
  if (g.region == Region::kF) {
    return rep;
  }
  const auto targets = detail::projection_targets(f, g.region, g.u, g.v);
  for (const auto& [slot, warc] : targets) {
    rep.projections.emplace(slot, rotated(t.n, warc, -1));
    rep.values.emplace(slot, rotated_arc_value(t, warc, memo));
  }
  const auto& V = rep.values;
  switch (g.region) {
    case Region::kBC:
    case Region::kDE:
      rep.delta = (V.at("pi1_plus") - V.at("pi2_plus")) *
                  (V.at("pi1_minus") - V.at("pi2_minus"));
      break;
    case Region::kBE:
    case Region::kCD:
      rep.delta = -(V.at("pi2_plus") - 2 * V.at("pi1_plus")) *
                  (V.at("pi2_minus") - 2 * V.at("pi1_minus"));
      break;
    case Region::kCEClosure:
    case Region::kBDClosure:
      rep.delta = V.at("pi_s_down") * V.at("pi_p_down") +
                  V.at("pi_s_up") * V.at("pi_p_up") -
                  3 * V.at("pi_p_down") * V.at("pi_p_up");
      break;
    case Region::kF:
      break;
  }
  return rep;
}

/// The eight sectional paths bounding the regions around a, returned as
/// ordered lists of grid positions.  Naming (default convention, with
/// a = [p, q], apexes r, s and M the marker position of x at its rotated
/// arc):
///   b, c, d, e : the four paths ending at the marker of a (inclusive);
///                b starts after the marker of e's side, etc.
///   c_a, e_a   : continuations from the markers of b and d (exclusive)
///                to the position of the replacement diagonal (inclusive);
///   b_a, d_a   : paths from the replacement position (inclusive) toward
///                the markers of c and e (exclusive).
struct Rays {
  std::vector<Arc> b, c, d, e;
  std::vector<Arc> b_a, d_a, c_a, e_a;
};

[[nodiscard]] inline Rays rays_at(const Triangulation& t, Arc a,
                                  bool swap_labels = false) {
  const detail::QuadFrame f = detail::quad_frame(t, a, swap_labels);
  const int n = f.n;
  const int p = f.p, q = f.q, r = f.rr, s = f.ss;
  Rays rays;
  auto cell = [&](int i, int j) { return rotated(n, make_arc(n, i, j), -1); };
  // b = {[p, z] : z in (r, q]}, ordered toward the marker of a.
  for (int z = wrap_vertex(n, r + 1); ; z = wrap_vertex(n, z + 1)) {
    if (z == p) break;
    rays.b.push_back(cell(p, z));
    if (z == q) break;
  }
  // c = {[p, z] : z in [q, s)}.
  for (int z = q; z != s; z = wrap_vertex(n, z + 1)) {
    rays.c.push_back(cell(p, z));
  }
  // e = {[y, q] : y in [p, r)}.
  for (int y = p; y != r; y = wrap_vertex(n, y + 1)) {
    rays.e.push_back(cell(y, q));
  }
  // d = {[y, q] : y in (s, p]}, ordered from s side toward p.
  for (int y = wrap_vertex(n, s + 1); ; y = wrap_vertex(n, y + 1)) {
    rays.d.push_back(cell(y, q));
    if (y == p) break;
  }
  // c_a = {[r, z] : z in (q, s]}.
  for (int z = wrap_vertex(n, q + 1); ; z = wrap_vertex(n, z + 1)) {
    rays.c_a.push_back(cell(r, z));
    if (z == s) break;
  }
  // e_a = {[y, s] : y in (p, r]}.
  for (int y = wrap_vertex(n, p + 1); ; y = wrap_vertex(n, y + 1)) {
    rays.e_a.push_back(cell(y, s));
    if (y == r) break;
  }
  // b_a = {[y, s] : y in [r, q)}.
  for (int y = r; y != q; y = wrap_vertex(n, y + 1)) {
    rays.b_a.push_back(cell(y, s));
  }
  // d_a = {[y, r] : y in [s, p)}.
  for (int y = s; y != p; y = wrap_vertex(n, y + 1)) {
    rays.d_a.push_back(cell(y, r));
  }
  return rays;
}

/// Applies the closed-form difference at every interior position:
/// entry(d) - delta(d) must reproduce the frieze of the flipped
/// triangulation exactly; a non-positive or mismatching entry would
/// falsify the formula and raises InvariantViolation.  Returns the new
/// frieze plus one report per interior arc (sorted by arc).
[[nodiscard]] inline std::pair<Frieze, std::vector<DeltaReport>> mutate_frieze(
    const Triangulation& t, Arc a) {
  const int n = t.n;
  const Frieze before = frieze_from_triangulation(t);
  ValueMemo memo;
  std::map<Arc, Int> cells;
  std::vector<DeltaReport> reports;
  for (const auto& [cell, value] : before.cells()) {
    DeltaReport rep = delta_at(t, a, cell, &memo);
    const Int after = value - rep.delta;
    if (after <= 0) {
      throw InvariantViolation("mutated entry at " + arc_to_string(cell) +
                               " is not positive");
    }
    cells.emplace(cell, after);
    reports.push_back(std::move(rep));
  }
  return {Frieze(n, std::move(cells)), std::move(reports)};
}

/// Report of the support-change law for one flip.
struct SupportChangeReport {
  int positions_checked{0};
  std::vector<std::string> violations;
  [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// Checks, for every grid position, how the crossed-diagonal support of
/// its object changes under the flip of a:
///   - away from a and its replacement, supports are identical;
///   - open regions BC/DE lose the crossing with a (gaining none),
///     BE/CD gain the crossing with the replacement;
///   - on closure rays through the marker of a the object gains the new
///     crossing, on rays through the replacement position it loses a;
///     in the closure interiors both happen; corner markers stay markers;
///   - the marker of a becomes the simple module at the replacement, the
///     replacement position becomes a marker;
///   - F positions keep their support verbatim.
/// Also checks the region correspondence between (t, a) and the flipped
/// pair: open regions swap families, closures map to closures, F to F.
[[nodiscard]] inline SupportChangeReport support_change_check(
    const Triangulation& t, Arc a) {
  const int n = t.n;
  SupportChangeReport rep;
  auto [t2, a2] = flip(t, a);
  const detail::QuadFrame f = detail::quad_frame(t, a, false);

  auto support = [&](const Triangulation& tt,
                     Arc w) -> std::optional<std::set<Arc>> {
    if (contains(tt, w)) return std::nullopt;  // marker: no module here
    std::set<Arc> s;
    for (Arc dgn : tt.diagonals) {
      if (crosses(w, dgn)) s.insert(dgn);
    }
    return s;
  };
  auto complain = [&](Arc cell, const std::string& what) {
    rep.violations.push_back("position " + arc_to_string(cell) + ": " + what);
  };

  std::map<Region, std::set<Arc>> regions1, regions2;
  std::set<Arc> duals1, duals2;
  for (int i = 1; i <= n; ++i) {
    for (int r = 2; r <= n - 2; ++r) {
      const Arc cell = make_arc(n, i, i + r);
      const Arc w = rotated(n, cell, +1);
      ++rep.positions_checked;

      const detail::GeomClass g =
          detail::classify_rotated(f, w);
      const auto s1 = support(t, w);
      const auto s2 = support(t2, w);

      // Supports away from the flipped pair must agree.
      std::set<Arc> away1, away2;
      if (s1) { away1 = *s1; away1.erase(a); }
      if (s2) { away2 = *s2; away2.erase(a2); }
      if (away1 != away2) {
        complain(cell, "support away from the flipped diagonal changed");
        continue;
      }

      const bool had_a = s1 && s1->count(a) > 0;
      const bool has_a2 = s2 && s2->count(a2) > 0;
      const bool lose = had_a && !has_a2;
      const bool gain = has_a2 && !had_a;
      const bool both = had_a && has_a2;

      const detail::GeomClass g2 = detail::classify_rotated(
          detail::quad_frame(t2, a2, false), w);
      if (g.dual) duals1.insert(cell); else regions1[g.region].insert(cell);
      if (g2.dual) duals2.insert(cell); else regions2[g2.region].insert(cell);

      switch (g.region) {
        case Region::kBC:
        case Region::kDE:
          if (!(lose && !gain)) complain(cell, "expected to lose the crossing");
          break;
        case Region::kBE:
        case Region::kCD:
          if (!(gain && !lose)) complain(cell, "expected to gain a crossing");
          break;
        case Region::kCEClosure:
        case Region::kBDClosure: {
          if (g.dual) {
            if (w == a) {
              if (!(!s1 && s2 && s2->count(a2) > 0)) {
                complain(cell, "marker of a should become the simple module "
                               "at the replacement");
              }
            } else if (w == make_arc(n, f.rr, f.ss)) {
              if (!(!s2 && s1 && s1->count(a) > 0)) {
                complain(cell, "replacement position should become a marker");
              }
            } else {
              complain(cell, "dual position is neither marker");
            }
          } else if (!s1) {
            // Corner marker (one of the quadrilateral sides in t).
            if (!(contains(t, w) && w != a && !s2)) {
              complain(cell, "corner marker should stay a marker");
            }
          } else if (w.a == f.p || w.b == f.p || w.a == f.q || w.b == f.q) {
            if (!(gain && !lose)) {
              complain(cell, "closure ray through the marker should gain");
            }
          } else if (w.a == f.rr || w.b == f.rr || w.a == f.ss ||
                     w.b == f.ss) {
            if (!(lose && !gain)) {
              complain(cell, "closure ray through the replacement should "
                             "lose");
            }
          } else if (!both) {
            complain(cell, "closure interior should both lose and gain");
          }
          break;
        }
        case Region::kF:
          if (!(away1 == away2 && !had_a && !has_a2 &&
                s1.has_value() == s2.has_value())) {
            complain(cell, "outside region must keep its support verbatim");
          }
          break;
      }
    }
  }

  // Region correspondence at the set level (the exact pairing of the two
  // regions inside each family depends on arc normalization).
  auto family = [](const std::map<Region, std::set<Arc>>& m, Region x,
                   Region y) {
    std::set<std::set<Arc>> fam;
    auto get = [&](Region k) {
      auto it = m.find(k);
      return it == m.end() ? std::set<Arc>{} : it->second;
    };
    fam.insert(get(x));
    fam.insert(get(y));
    return fam;
  };
  auto get = [](const std::map<Region, std::set<Arc>>& m, Region k) {
    auto it = m.find(k);
    return it == m.end() ? std::set<Arc>{} : it->second;
  };
  if (duals1 != duals2) {
    rep.violations.push_back("dual positions differ across the flip");
  }
  if (get(regions1, Region::kF) != get(regions2, Region::kF)) {
    rep.violations.push_back("outside regions differ across the flip");
  }
  if (family(regions1, Region::kBC, Region::kDE) !=
      family(regions2, Region::kBE, Region::kCD)) {
    rep.violations.push_back("losing regions do not map onto gaining ones");
  }
  if (family(regions1, Region::kBE, Region::kCD) !=
      family(regions2, Region::kBC, Region::kDE)) {
    rep.violations.push_back("gaining regions do not map onto losing ones");
  }
  if (family(regions1, Region::kCEClosure, Region::kBDClosure) !=
      family(regions2, Region::kCEClosure, Region::kBDClosure)) {
    rep.violations.push_back("closures do not map onto closures");
  }
  return rep;
}

}  // namespace frieze

#endif  // FRIEZE_MUTATION_HPP
