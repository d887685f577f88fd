#ifndef FRIEZE_CHECKS_HPP
#define FRIEZE_CHECKS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "frieze/arc.hpp"
#include "frieze/errors.hpp"
#include "frieze/frieze.hpp"
#include "frieze/golden.hpp"
#include "frieze/ints.hpp"
#include "frieze/mutation.hpp"
#include "frieze/quadrilateral.hpp"
#include "frieze/quiver.hpp"
#include "frieze/strings.hpp"
#include "frieze/triangulation.hpp"

namespace frieze {

/// Outcome of one named exhaustive check.  `detail` summarizes the work
/// done on success and carries a minimal counterexample on failure.
struct CheckResult {
  std::string name;
  bool ok{true};
  std::string detail;
};

namespace detail {

/// Per-shard accumulator with deterministic merge: counters are additive
/// and the reported violation is the one with the smallest global index,
/// so results do not depend on the number of workers.
struct ShardOutcome {
  long long cases{0};
  long long positions{0};
  std::optional<std::pair<std::size_t, std::string>> first_violation;

  void note(std::size_t index, std::string message) {
    if (!first_violation || index < first_violation->first) {
      first_violation = {index, std::move(message)};
    }
  }
  void merge(const ShardOutcome& other) {
    cases += other.cases;
    positions += other.positions;
    if (other.first_violation) {
      note(other.first_violation->first, other.first_violation->second);
    }
  }
};

/// Runs fn(index, shard_outcome) for index = 0..count-1 across `jobs`
/// workers (jobs < 1 selects the hardware concurrency) and merges the
/// shard outcomes in worker order.
template <typename Fn>
[[nodiscard]] inline ShardOutcome run_sharded(std::size_t count, int jobs,
                                              const Fn& fn) {
  if (jobs < 1) {
    jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
  }
  if (static_cast<std::size_t>(jobs) > count && count > 0) {
    jobs = static_cast<int>(count);
  }
  std::vector<ShardOutcome> outcomes(static_cast<std::size_t>(jobs));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i, outcomes[0]);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));
    for (int tid = 0; tid < jobs; ++tid) {
      workers.emplace_back([&, tid] {
        for (std::size_t i = static_cast<std::size_t>(tid); i < count;
             i += static_cast<std::size_t>(jobs)) {
          fn(i, outcomes[static_cast<std::size_t>(tid)]);
        }
      });
    }
    for (auto& w : workers) w.join();
  }
  ShardOutcome total;
  for (const auto& o : outcomes) total.merge(o);
  return total;
}

[[nodiscard]] inline std::vector<Triangulation> all_triangulations_up_to(
    int n_max) {
  std::vector<Triangulation> all;
  for (int n = 4; n <= n_max; ++n) {
    for_each_triangulation(
        n, [&](const Triangulation& t) { all.push_back(t); });
  }
  return all;
}

[[nodiscard]] inline std::string describe(const Triangulation& t) {
  std::string s = "n=" + std::to_string(t.n) + " {";
  for (std::size_t i = 0; i < t.diagonals.size(); ++i) {
    if (i > 0) s += ",";
    s += arc_to_string(t.diagonals[i]);
  }
  return s + "}";
}

}  // namespace detail

/// Exhaustive cross-validation of the two frieze constructions: for every
/// triangulation with 4 <= n <= n_max, the per-arc value map and the
/// quiddity recurrence produce the same frieze, and that frieze passes the
/// structural verifier (positivity, diamond rule, periodicity, glide).
[[nodiscard]] inline CheckResult check_pipelines_agree(int n_max,
                                                       int jobs = 1) {
  const auto all = detail::all_triangulations_up_to(n_max);
  const auto out = detail::run_sharded(
      all.size(), jobs, [&](std::size_t i, detail::ShardOutcome& o) {
        const Triangulation& t = all[i];
        const Frieze f1 = frieze_from_triangulation(t);
        const Frieze f2 = frieze_from_quiddity(quiddity_of(t));
        if (!(f1 == f2)) {
          o.note(i, detail::describe(t) +
                        ": the two constructions disagree entrywise");
          return;
        }
        const VerifyReport r1 = verify_frieze(f1);
        if (!r1.ok) {
          o.note(i, detail::describe(t) + ": " + r1.violation);
          return;
        }
        ++o.cases;
      });
  CheckResult r;
  r.name = "cross_validation";
  if (out.first_violation) {
    r.ok = false;
    r.detail = out.first_violation->second;
  } else {
    r.detail = std::to_string(out.cases) + " triangulations (n <= " +
               std::to_string(n_max) +
               "): both constructions agree and verify";
  }
  return r;
}

/// Exhaustive check of the difference formula: for every triangulation
/// with n <= n_max and every diagonal a, every per-position delta equals
/// the difference of the two directly computed friezes, and the mutated
/// frieze equals the recomputed one entrywise.
[[nodiscard]] inline CheckResult check_difference_formula(int n_max,
                                                          int jobs = 1) {
  const auto all = detail::all_triangulations_up_to(n_max);
  const auto out = detail::run_sharded(
      all.size(), jobs, [&](std::size_t i, detail::ShardOutcome& o) {
        const Triangulation& t = all[i];
        const Frieze f1 = frieze_from_triangulation(t);
        for (Arc a : t.diagonals) {
          const auto [t2, a2] = flip(t, a);
          const Frieze f2 = frieze_from_triangulation(t2);
          const auto [mutated, reports] = mutate_frieze(t, a);
          if (!(mutated == f2)) {
            o.note(i, detail::describe(t) + " flip " + arc_to_string(a) +
                          ": mutated frieze differs from the recomputed one");
            return;
          }
          for (const DeltaReport& rep : reports) {
            if (rep.delta != f1.at(rep.cell) - f2.at(rep.cell)) {
              o.note(i, detail::describe(t) + " flip " + arc_to_string(a) +
                            " position " + arc_to_string(rep.cell) +
                            ": formula gives " + rep.delta.str() +
                            ", entry difference is " +
                            Int(f1.at(rep.cell) - f2.at(rep.cell)).str());
              return;
            }
            ++o.positions;
          }
          ++o.cases;
        }
      });
  CheckResult r;
  r.name = "difference_formula";
  if (out.first_violation) {
    r.ok = false;
    r.detail = out.first_violation->second;
  } else {
    r.detail = std::to_string(out.cases) + " (triangulation, diagonal) pairs, " +
               std::to_string(out.positions) + " positions (n <= " +
               std::to_string(n_max) + "): formula matches entry differences";
  }
  return r;
}

/// Everything recovered by the reference-fixture reproduction: the matched
/// triangulation, the label assignment, the window alignments, and the
/// per-example results.
struct GoldenOutcome {
  bool ok{false};
  std::string failure;
  int candidates_matched{0};
  Triangulation found{};
  std::map<int, Arc> phi;  // fixture label -> diagonal
  Arc flipped_diagonal{};
  Arc replacement{};
  int window_shift{-1};
  int pair_shift{-1};
  std::vector<CheckResult> example_results;
};

namespace detail {

/// Searches for a horizontal translation t such that window column k of
/// row r equals the frieze entry at [k - r/2 + t, k - r/2 + t + r] for
/// every row; glide symmetry is inherent in entry().
[[nodiscard]] inline std::optional<int> find_window_shift(
    const Frieze& f, const std::map<int, std::vector<Int>>& rows) {
  for (int t = 0; t < f.order(); ++t) {
    bool all_ok = true;
    for (const auto& [r, entries] : rows) {
      for (std::size_t k = 0; k < entries.size(); ++k) {
        const int i = static_cast<int>(k) - r / 2 + t;
        if (f.entry(i, i + r) != entries[k]) {
          all_ok = false;
          break;
        }
      }
      if (!all_ok) break;
    }
    if (all_ok) return t;
  }
  return std::nullopt;
}

/// Same alignment search for before/after pairs against two friezes.
[[nodiscard]] inline std::optional<int> find_pair_shift(
    const Frieze& before, const Frieze& after,
    const std::map<int, std::vector<std::pair<Int, Int>>>& rows) {
  for (int t = 0; t < before.order(); ++t) {
    bool all_ok = true;
    for (const auto& [r, entries] : rows) {
      for (std::size_t k = 0; k < entries.size(); ++k) {
        const int i = static_cast<int>(k) - r / 2 + t;
        if (before.entry(i, i + r) != entries[k].first ||
            after.entry(i, i + r) != entries[k].second) {
          all_ok = false;
          break;
        }
      }
      if (!all_ok) break;
    }
    if (all_ok) return t;
  }
  return std::nullopt;
}

/// Locates the unique interior position whose object is a string module
/// supported exactly on the given diagonals.
[[nodiscard]] inline std::optional<Arc> find_cell_by_support(
    const Triangulation& t, const std::set<Arc>& support) {
  for (int i = 1; i <= t.n; ++i) {
    for (int r = 2; r <= t.n - 2; ++r) {
      const Arc cell = make_arc(t.n, i, i + r);
      const ArcObject obj = classify_arc(t, cell);
      if (obj.kind != ArcObject::Kind::kModule) continue;
      const std::set<Arc> s(obj.module.walk.begin(), obj.module.walk.end());
      if (s == support) return cell;
    }
  }
  return std::nullopt;
}

[[nodiscard]] inline const std::vector<Arc>& ray_by_name(
    const Rays& rays, const std::string& name) {
  if (name == "b") return rays.b;
  if (name == "c") return rays.c;
  if (name == "d") return rays.d;
  if (name == "e") return rays.e;
  if (name == "b_a") return rays.b_a;
  if (name == "d_a") return rays.d_a;
  if (name == "c_a") return rays.c_a;
  if (name == "e_a") return rays.e_a;
  throw InvalidInput("unknown sectional path name: " + name);
}

}  // namespace detail

/// Reproduces the bundled 14-gon reference data from scratch:
///   1. enumerate all triangulations of the polygon that the fixture
///      quiver's vertex count dictates;
///   2. keep those whose quiver is isomorphic to the fixture quiver;
///   3. for a matching triangulation, align its frieze with the fixture
///      window (one global horizontal shift, glide handled by indexing);
///   4. flip the diagonal carrying the fixture's flip label, align the
///      before/after pairs the same way;
///   5. verify the flipped quiver equals the relabeled fixture quiver and
///      that the plain 3-step arrow mutation reproduces it on labels;
///   6. verify every worked example (region, counts before/after, slot
///      values, delta) and the sectional-path membership example.
/// The first enumerated match passing every step is reported.
[[nodiscard]] inline GoldenOutcome run_golden_checks(const GoldenData& g) {
  GoldenOutcome out;
  const int num_labels = g.quiver.before.num_vertices;
  const int n = num_labels + 3;
  const std::size_t want_arrows = g.quiver.before.arrows.size();

  std::vector<std::pair<Triangulation, std::map<int, Arc>>> matches;
  for_each_triangulation(n, [&](const Triangulation& t) {
    Quiver q;
    q.vertices = t.diagonals;
    q.arrows = quiver_arrows(t);
    if (q.arrows.size() != want_arrows) return;
    auto isos = quiver_isomorphisms(g.quiver.before, q);
    if (!isos.empty()) {
      matches.emplace_back(t, std::move(isos.front()));
    }
  });
  out.candidates_matched = static_cast<int>(matches.size());
  if (matches.empty()) {
    out.failure = "no triangulation of the " + std::to_string(n) +
                  "-gon has a quiver isomorphic to the fixture quiver";
    return out;
  }

  std::string last_failure;
  for (const auto& [t, phi] : matches) {
    auto fail = [&](const std::string& why) {
      last_failure = detail::describe(t) + ": " + why;
    };

    const Frieze f1 = frieze_from_triangulation(t);
    const auto shift = detail::find_window_shift(f1, g.window.rows);
    if (!shift) {
      fail("frieze does not contain the fixture window at any translation");
      continue;
    }

    const auto it_a = phi.find(g.quiver.flip_label);
    if (it_a == phi.end()) {
      fail("fixture flip label is not a quiver vertex");
      continue;
    }
    const Arc a = it_a->second;
    const auto [t2, a2] = flip(t, a);
    const Frieze f2 = frieze_from_triangulation(t2);

    const auto pshift = detail::find_pair_shift(f1, f2, g.pairs.rows);
    if (!pshift) {
      fail("before/after pairs do not align at any translation");
      continue;
    }

    // Flipped quiver must equal the relabeled fixture quiver...
    std::map<int, Arc> phi2 = phi;
    phi2[g.quiver.flip_label] = a2;
    std::set<std::pair<Arc, Arc>> expected_arrows;
    for (const auto& [x, y] : g.quiver.after.arrows) {
      expected_arrows.emplace(phi2.at(x), phi2.at(y));
    }
    if (quiver_arrows(t2) != expected_arrows) {
      fail("flipped quiver differs from the relabeled fixture quiver");
      continue;
    }
    // ...and the plain 3-step arrow mutation must reproduce it on labels.
    std::set<std::pair<int, int>> before_arrows(g.quiver.before.arrows.begin(),
                                                g.quiver.before.arrows.end());
    std::set<std::pair<int, int>> after_arrows(g.quiver.after.arrows.begin(),
                                               g.quiver.after.arrows.end());
    if (mutate_arrows(before_arrows, g.quiver.flip_label) != after_arrows) {
      fail("3-step arrow mutation does not reproduce the fixture quiver");
      continue;
    }

    // Worked examples against this match.
    std::vector<CheckResult> example_results;
    bool examples_ok = true;
    ValueMemo memo;
    for (const GoldenExample& ex : g.examples) {
      CheckResult er;
      er.name = "worked_example_" + ex.name;
      er.ok = true;
      std::set<Arc> support;
      for (int lbl : ex.support_labels) {
        auto it = phi.find(lbl);
        if (it == phi.end()) {
          er.ok = false;
          er.detail = "support label " + std::to_string(lbl) +
                      " is not a quiver vertex";
          break;
        }
        support.insert(it->second);
      }
      if (er.ok) {
        const auto cell = detail::find_cell_by_support(t, support);
        if (!cell) {
          er.ok = false;
          er.detail = "no position carries a module with the given support";
        } else {
          const ArcObject obj = classify_arc(t, *cell);
          const DeltaReport rep = delta_at(t, a, *cell, &memo);
          std::string problems;
          auto expect = [&](bool cond, const std::string& what) {
            if (!cond) problems += (problems.empty() ? "" : "; ") + what;
          };
          expect(region_name(rep.region) == ex.region,
                 "region is " + region_name(rep.region) + ", fixture says " +
                     ex.region);
          expect(count_submodules(obj.module) == ex.count_before,
                 "submodule count is " + count_submodules(obj.module).str() +
                     ", fixture says " + ex.count_before.str());
          expect(f1.at(*cell) == ex.count_before,
                 "entry before is " + f1.at(*cell).str() + ", fixture says " +
                     ex.count_before.str());
          expect(f2.at(*cell) == ex.count_after,
                 "entry after is " + f2.at(*cell).str() + ", fixture says " +
                     ex.count_after.str());
          expect(rep.delta == ex.delta, "delta is " + rep.delta.str() +
                                            ", fixture says " +
                                            ex.delta.str());
          for (const auto& [slot, want] : ex.slot_values) {
            auto vit = rep.values.find(slot);
            if (vit == rep.values.end()) {
              expect(false, "no projection value in slot " + slot);
            } else {
              expect(vit->second == want,
                     "slot " + slot + " is " + vit->second.str() +
                         ", fixture says " + want.str());
            }
          }
          er.ok = problems.empty();
          er.detail = er.ok ? "position " + arc_to_string(*cell) +
                                  ": region, counts, slots, delta all match"
                            : problems;
        }
      }
      examples_ok = examples_ok && er.ok;
      example_results.push_back(std::move(er));
    }

    {
      CheckResult er;
      er.name = "sectional_path_membership";
      er.ok = true;
      std::set<Arc> support;
      for (int lbl : g.ray_example.support_labels) {
        support.insert(phi.at(lbl));
      }
      const auto cell = detail::find_cell_by_support(t, support);
      if (!cell) {
        er.ok = false;
        er.detail = "no position carries a module with the given support";
      } else {
        const Rays rays = rays_at(t, a);
        const auto& ray = detail::ray_by_name(rays, g.ray_example.ray);
        const bool member =
            std::find(ray.begin(), ray.end(), *cell) != ray.end();
        er.ok = member;
        er.detail = member ? "position " + arc_to_string(*cell) +
                                 " lies on path " + g.ray_example.ray
                           : "position " + arc_to_string(*cell) +
                                 " is not on path " + g.ray_example.ray;
      }
      examples_ok = examples_ok && er.ok;
      example_results.push_back(std::move(er));
    }

    if (!examples_ok) {
      out.example_results = std::move(example_results);
      fail("a worked example does not match (see example results)");
      continue;
    }

    out.ok = true;
    out.found = t;
    out.phi = phi;
    out.flipped_diagonal = a;
    out.replacement = a2;
    out.window_shift = *shift;
    out.pair_shift = *pshift;
    out.example_results = std::move(example_results);
    return out;
  }
  out.failure = last_failure;
  return out;
}

/// Criterion pair built from one reproduction run: the search/alignment
/// result and the worked-example results.
[[nodiscard]] inline std::pair<CheckResult, CheckResult>
check_golden_reproduction(const GoldenData& g) {
  const GoldenOutcome out = run_golden_checks(g);
  CheckResult search;
  search.name = "reference_reproduction";
  CheckResult examples;
  examples.name = "worked_examples";
  if (out.ok) {
    search.detail = std::to_string(out.candidates_matched) +
                    " quiver-isomorphic triangulations; matched " +
                    detail::describe(out.found) + ", window shift " +
                    std::to_string(out.window_shift) + ", flip " +
                    arc_to_string(out.flipped_diagonal) + " -> " +
                    arc_to_string(out.replacement) + ", pair shift " +
                    std::to_string(out.pair_shift);
    std::string ex_detail;
    bool all_ok = true;
    for (const CheckResult& er : out.example_results) {
      all_ok = all_ok && er.ok;
      if (!ex_detail.empty()) ex_detail += "; ";
      ex_detail += er.name + (er.ok ? " ok" : " FAILED: " + er.detail);
    }
    examples.ok = all_ok;
    examples.detail = ex_detail;
  } else {
    search.ok = false;
    search.detail = out.failure.empty() ? "reproduction failed" : out.failure;
    examples.ok = false;
    examples.detail = "reproduction search failed, examples not reached";
    for (const CheckResult& er : out.example_results) {
      if (!er.ok) {
        examples.detail = er.name + ": " + er.detail;
        break;
      }
    }
  }
  return {search, examples};
}

/// Fits the candidate admissibility predicates against the brute-force
/// submodule count on every direction word arising up to n_max.  Passes
/// when the shipped odd-index-gap rule (and its orientation-based
/// equivalent) agrees with the oracle on all of them.
[[nodiscard]] inline CheckResult check_formula_fit(int n_max) {
  const FitReport rep = fit_admissibility(n_max);
  CheckResult r;
  r.name = "formula_fit";
  bool shipped_exact = false;
  for (const std::string& name : rep.fitted) {
    if (name == "odd_index_gaps") shipped_exact = true;
  }
  std::string fitted;
  for (const std::string& name : rep.fitted) {
    if (!fitted.empty()) fitted += ", ";
    fitted += name;
  }
  if (shipped_exact) {
    r.detail = std::to_string(rep.distinct_words) +
               " distinct direction words (n <= " + std::to_string(n_max) +
               "); exact: " + fitted;
  } else {
    r.ok = false;
    for (const FitCandidate& c : rep.candidates) {
      if (c.name != "odd_index_gaps") continue;
      r.detail = "shipped rule disagrees with the oracle on dirs='" +
                 c.counterexample_dirs + "': oracle " + c.expected.str() +
                 ", formula " + c.computed.str();
    }
    if (r.detail.empty()) r.detail = "shipped rule not exact";
  }
  return r;
}

/// Exhaustive support-change law: zero violations over all
/// (triangulation, diagonal) pairs with n <= n_max.
[[nodiscard]] inline CheckResult check_support_change(int n_max,
                                                      int jobs = 1) {
  const auto all = detail::all_triangulations_up_to(n_max);
  const auto out = detail::run_sharded(
      all.size(), jobs, [&](std::size_t i, detail::ShardOutcome& o) {
        const Triangulation& t = all[i];
        for (Arc a : t.diagonals) {
          const SupportChangeReport rep = support_change_check(t, a);
          o.positions += rep.positions_checked;
          if (!rep.ok()) {
            o.note(i, detail::describe(t) + " flip " + arc_to_string(a) +
                          ": " + rep.violations.front());
            return;
          }
          ++o.cases;
        }
      });
  CheckResult r;
  r.name = "support_change";
  if (out.first_violation) {
    r.ok = false;
    r.detail = out.first_violation->second;
  } else {
    r.detail = std::to_string(out.cases) + " (triangulation, diagonal) pairs, " +
               std::to_string(out.positions) + " positions (n <= " +
               std::to_string(n_max) + "): zero violations";
  }
  return r;
}

namespace detail {

[[nodiscard]] inline Int catalan(int k) {
  Int c = 1;
  for (int m = 0; m < k; ++m) {
    c = c * 2 * (2 * m + 1) / (m + 2);
  }
  return c;
}

}  // namespace detail

/// Structural property suite.  Bounds: `n_small` caps the quadratic
/// per-pair checks (flip involution, quiver mutation, dual-closure and
/// relabeling agreement, support-style scans), `n_mid` the per-position
/// counting checks, `n_counts` the enumeration count check.
[[nodiscard]] inline std::vector<CheckResult> check_property_suite(
    int n_small = 8, int n_mid = 10, int n_counts = 12) {
  std::vector<CheckResult> results;

  {  // Flip is an involution.
    CheckResult r;
    r.name = "flip_involution";
    long long pairs = 0;
    for (int n = 4; n <= n_small && r.ok; ++n) {
      for_each_triangulation(n, [&](const Triangulation& t) {
        if (!r.ok) return;
        for (Arc a : t.diagonals) {
          const auto [t2, a2] = flip(t, a);
          const auto [t3, a3] = flip(t2, a2);
          ++pairs;
          if (!(t3 == t && a3 == a)) {
            r.ok = false;
            r.detail = detail::describe(t) + " flip " + arc_to_string(a) +
                       ": double flip does not restore the triangulation";
            return;
          }
        }
      });
    }
    if (r.ok) {
      r.detail = std::to_string(pairs) + " flips (n <= " +
                 std::to_string(n_small) + ") undo themselves";
    }
    results.push_back(std::move(r));
  }

  {  // Triangle counts per vertex sum to 3n - 6 and are positive.
    CheckResult r;
    r.name = "quiddity_sum";
    long long cases = 0;
    for (int n = 4; n <= n_mid && r.ok; ++n) {
      for_each_triangulation(n, [&](const Triangulation& t) {
        if (!r.ok) return;
        const auto q = quiddity_of(t);
        long long sum = 0;
        bool positive = true;
        for (int v : q) {
          sum += v;
          positive = positive && v >= 1;
        }
        ++cases;
        if (sum != 3LL * t.n - 6 || !positive) {
          r.ok = false;
          r.detail = detail::describe(t) + ": triangle counts sum to " +
                     std::to_string(sum) + ", want " +
                     std::to_string(3 * t.n - 6);
        }
      });
    }
    if (r.ok) {
      r.detail = std::to_string(cases) + " triangulations (n <= " +
                 std::to_string(n_mid) + "): counts sum to 3n-6";
    }
    results.push_back(std::move(r));
  }

  {  // Interior entries of value 1 sit exactly at the rotated diagonals.
    CheckResult r;
    r.name = "unit_positions";
    long long cases = 0;
    for (int n = 4; n <= n_small && r.ok; ++n) {
      for_each_triangulation(n, [&](const Triangulation& t) {
        if (!r.ok) return;
        const Frieze f = frieze_from_triangulation(t);
        std::set<Arc> ones;
        for (const auto& [cell, v] : f.cells()) {
          if (v == 1) ones.insert(cell);
        }
        std::set<Arc> expected;
        for (Arc d : t.diagonals) expected.insert(rotated(t.n, d, -1));
        ++cases;
        if (ones != expected) {
          r.ok = false;
          r.detail = detail::describe(t) +
                     ": unit positions differ from the rotated diagonals";
        }
      });
    }
    if (r.ok) {
      r.detail = std::to_string(cases) + " friezes (n <= " +
                 std::to_string(n_small) +
                 "): value-1 interior positions = rotated diagonals";
    }
    results.push_back(std::move(r));
  }

  {  // Quiver shape and agreement of flip with plain arrow mutation.
    CheckResult r;
    r.name = "quiver_mutation";
    long long pairs = 0;
    for (int n = 4; n <= n_small && r.ok; ++n) {
      for_each_triangulation(n, [&](const Triangulation& t) {
        if (!r.ok) return;
        const auto arrows = quiver_arrows(t);
        std::map<Arc, int> out_deg, in_deg;
        for (const auto& [x, y] : arrows) {
          if (x == y) {
            r.ok = false;
            r.detail = detail::describe(t) + ": loop at " + arc_to_string(x);
            return;
          }
          if (arrows.count({y, x}) > 0) {
            r.ok = false;
            r.detail = detail::describe(t) + ": 2-cycle between " +
                       arc_to_string(x) + " and " + arc_to_string(y);
            return;
          }
          out_deg[x] += 1;
          in_deg[y] += 1;
        }
        for (const auto& [v, d] : out_deg) {
          if (d > 2 || in_deg[v] > 2) {
            r.ok = false;
            r.detail = detail::describe(t) + ": vertex " + arc_to_string(v) +
                       " has degree above 2";
            return;
          }
        }
        for (Arc a : t.diagonals) {
          const auto [t2, a2] = flip(t, a);
          auto mutated = mutate_arrows(arrows, a);
          // The flip renames vertex a to the replacement diagonal.
          std::set<std::pair<Arc, Arc>> relabeled;
          for (auto [x, y] : mutated) {
            if (x == a) x = a2;
            if (y == a) y = a2;
            relabeled.emplace(x, y);
          }
          ++pairs;
          if (relabeled != quiver_arrows(t2)) {
            r.ok = false;
            r.detail = detail::describe(t) + " flip " + arc_to_string(a) +
                       ": 3-step arrow mutation does not match the flipped "
                       "quiver";
            return;
          }
        }
      });
    }
    if (r.ok) {
      r.detail = std::to_string(pairs) + " flips (n <= " +
                 std::to_string(n_small) +
                 "): no loops/2-cycles, degrees <= 2, mutation matches";
    }
    results.push_back(std::move(r));
  }

  {  // Dual-closure positions: both evaluations agree, and there are
     // exactly two such positions per (triangulation, diagonal).
    CheckResult r;
    r.name = "dual_closure_agreement";
    long long cells = 0;
    for (int n = 4; n <= n_small && r.ok; ++n) {
      for_each_triangulation(n, [&](const Triangulation& t) {
        if (!r.ok) return;
        for (Arc a : t.diagonals) {
          int duals = 0;
          ValueMemo memo;
          for (int i = 1; i <= t.n && r.ok; ++i) {
            for (int rr = 2; rr <= t.n - 2; ++rr) {
              const Arc cell = make_arc(t.n, i, i + rr);
              if (cell.a != i) continue;  // visit each arc once
              if (!is_dual_closure_position(t, a, cell)) continue;
              ++duals;
              ++cells;
              const DeltaReport ce =
                  delta_at(t, a, cell, &memo, Region::kCEClosure);
              const DeltaReport bd =
                  delta_at(t, a, cell, &memo, Region::kBDClosure);
              if (ce.delta != bd.delta) {
                r.ok = false;
                r.detail = detail::describe(t) + " flip " + arc_to_string(a) +
                           " position " + arc_to_string(cell) +
                           ": the two closure evaluations disagree (" +
                           ce.delta.str() + " vs " + bd.delta.str() + ")";
                return;
              }
            }
          }
          if (r.ok && duals != 2) {
            r.ok = false;
            r.detail = detail::describe(t) + " flip " + arc_to_string(a) +
                       ": expected exactly 2 dual-closure positions, found " +
                       std::to_string(duals);
            return;
          }
        }
      });
    }
    if (r.ok) {
      r.detail = std::to_string(cells) + " dual positions (n <= " +
                 std::to_string(n_small) + "): both evaluations agree";
    }
    results.push_back(std::move(r));
  }

  {  // Relabeling the quadrilateral sides leaves every delta unchanged
     // and permutes region names as documented.
    CheckResult r;
    r.name = "relabeling_invariance";
    long long cells = 0;
    auto swapped_name = [](Region x) {
      switch (x) {
        case Region::kBC: return Region::kDE;
        case Region::kDE: return Region::kBC;
        case Region::kBE: return Region::kCD;
        case Region::kCD: return Region::kBE;
        // The closure conditions test unordered endpoint pairs, so the
        // relabeling maps each closure to itself.
        case Region::kCEClosure: return Region::kCEClosure;
        case Region::kBDClosure: return Region::kBDClosure;
        case Region::kF: return Region::kF;
      }
      return Region::kF;
    };
    for (int n = 4; n <= n_small && r.ok; ++n) {
      for_each_triangulation(n, [&](const Triangulation& t) {
        if (!r.ok) return;
        for (Arc a : t.diagonals) {
          ValueMemo memo;
          for (int i = 1; i <= t.n && r.ok; ++i) {
            for (int rr = 2; rr <= t.n - 2; ++rr) {
              const Arc cell = make_arc(t.n, i, i + rr);
              if (cell.a != i) continue;
              const DeltaReport plain =
                  delta_at(t, a, cell, &memo, std::nullopt, false);
              const DeltaReport swapped =
                  delta_at(t, a, cell, &memo, std::nullopt, true);
              ++cells;
              if (plain.delta != swapped.delta) {
                r.ok = false;
                r.detail = detail::describe(t) + " flip " + arc_to_string(a) +
                           " position " + arc_to_string(cell) +
                           ": relabeling changed delta (" + plain.delta.str() +
                           " vs " + swapped.delta.str() + ")";
                return;
              }
              const bool dual = is_dual_closure_position(t, a, cell);
              if (!dual && swapped.region != swapped_name(plain.region)) {
                r.ok = false;
                r.detail = detail::describe(t) + " flip " + arc_to_string(a) +
                           " position " + arc_to_string(cell) +
                           ": region does not permute as documented (" +
                           region_name(plain.region) + " -> " +
                           region_name(swapped.region) + ")";
                return;
              }
            }
          }
        }
      });
    }
    if (r.ok) {
      r.detail = std::to_string(cells) + " positions (n <= " +
                 std::to_string(n_small) +
                 "): delta invariant, regions permute";
    }
    results.push_back(std::move(r));
  }

  {  // Enumeration counts match the Catalan numbers; members validate;
     // output is strictly sorted (hence duplicate-free).
    CheckResult r;
    r.name = "enumeration_counts";
    std::string counts;
    for (int n = 4; n <= n_counts && r.ok; ++n) {
      const auto all = enumerate_triangulations(n);
      const Int want = detail::catalan(n - 2);
      if (Int(static_cast<long long>(all.size())) != want) {
        r.ok = false;
        r.detail = "n=" + std::to_string(n) + ": enumerated " +
                   std::to_string(all.size()) + ", want " + want.str();
        break;
      }
      for (std::size_t k = 0; k + 1 < all.size(); ++k) {
        if (!(all[k] < all[k + 1])) {
          r.ok = false;
          r.detail = "n=" + std::to_string(n) +
                     ": enumeration is not strictly sorted";
          break;
        }
      }
      if (!r.ok) break;
      for (const Triangulation& t : all) {
        try {
          (void)validate_triangulation(t.n, t.diagonals);
        } catch (const InvalidInput& e) {
          r.ok = false;
          r.detail = detail::describe(t) +
                     ": enumerated member fails validation: " + e.what();
          break;
        }
      }
      if (!counts.empty()) counts += ", ";
      counts += std::to_string(all.size());
    }
    if (r.ok) {
      r.detail = "counts for n=4.." + std::to_string(n_counts) + ": " + counts;
    }
    results.push_back(std::move(r));
  }

  {  // The linear-scan count equals subset enumeration on every module.
    CheckResult r;
    r.name = "count_cross_check";
    long long modules = 0;
    for (int n = 4; n <= std::min(n_mid, 9) && r.ok; ++n) {
      for_each_triangulation(n, [&](const Triangulation& t) {
        if (!r.ok) return;
        for (int i = 1; i <= t.n; ++i) {
          for (int rr = 2; rr <= t.n - 2; ++rr) {
            const Arc cell = make_arc(t.n, i, i + rr);
            if (cell.a != i) continue;
            const ArcObject obj = classify_arc(t, cell);
            if (obj.kind != ArcObject::Kind::kModule) continue;
            ++modules;
            if (count_submodules(obj.module) !=
                count_submodules_bruteforce(obj.module)) {
              r.ok = false;
              r.detail = detail::describe(t) + " position " +
                         arc_to_string(cell) +
                         ": scan and subset counts disagree";
              return;
            }
          }
        }
      });
    }
    if (r.ok) {
      r.detail = std::to_string(modules) +
                 " modules: linear scan equals subset enumeration";
    }
    results.push_back(std::move(r));
  }

  return results;
}

}  // namespace frieze

#endif  // FRIEZE_CHECKS_HPP
