#ifndef FRIEZE_FRIEZE_HPP
#define FRIEZE_FRIEZE_HPP

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "frieze/arc.hpp"
#include "frieze/errors.hpp"
#include "frieze/ints.hpp"
#include "frieze/strings.hpp"
#include "frieze/triangulation.hpp"

namespace frieze {

/// A frieze of order n: the periodic integer grid m_{i,j} with border rows
/// m_{i,i} = 0 and m_{i,i+1} = 1 and positive interior entries satisfying
/// the diamond rule
///     m_{i,j} * m_{i+1,j+1} - m_{i+1,j} * m_{i,j+1} = 1.
/// One fundamental domain is stored, keyed by the interior arcs of the
/// n-gon; n-periodicity and the glide symmetry m_{i,j} = m_{j,i+n} are
/// consequences of that indexing.
class Frieze {
 public:
  Frieze(int n, std::map<Arc, Int> cells) : n_(n), cells_(std::move(cells)) {}

  [[nodiscard]] int order() const { return n_; }

  /// Entry at an interior arc position (2 <= span <= n-2).
  [[nodiscard]] const Int& at(Arc cell) const {
    auto it = cells_.find(cell);
    if (it == cells_.end()) {
      throw InvalidInput("not an interior grid position: " +
                         arc_to_string(cell));
    }
    return it->second;
  }

  /// Entry at arbitrary cyclic coordinates: 0 on the degenerate rows
  /// (i == j mod n), 1 on the boundary rows, interior value otherwise.
  /// Periodicity and glide are applied automatically via arc
  /// normalization.
  [[nodiscard]] Int entry(int i, int j) const {
    const int wi = wrap_vertex(n_, i);
    const int wj = wrap_vertex(n_, j);
    if (wi == wj) return 0;
    const Arc x = make_arc(n_, wi, wj);
    if (is_boundary(n_, x)) return 1;
    return at(x);
  }

  [[nodiscard]] const std::map<Arc, Int>& cells() const { return cells_; }

  /// Interior rows of one period, top to bottom: row index r = 2..n-2,
  /// entries m_{i,i+r} for i = 1..n.
  [[nodiscard]] std::vector<std::vector<Int>> interior_rows() const {
    std::vector<std::vector<Int>> rows;
    for (int r = 2; r <= n_ - 2; ++r) {
      std::vector<Int> row;
      row.reserve(static_cast<std::size_t>(n_));
      for (int i = 1; i <= n_; ++i) {
        row.push_back(at(make_arc(n_, i, i + r)));
      }
      rows.push_back(std::move(row));
    }
    return rows;
  }

  /// The first interior row (m_{i,i+2}), read back as the quiddity-style
  /// row of the grid.
  [[nodiscard]] std::vector<Int> quiddity_row() const {
    std::vector<Int> row;
    for (int i = 1; i <= n_; ++i) row.push_back(at(make_arc(n_, i, i + 2)));
    return row;
  }

  bool operator==(const Frieze&) const = default;

 private:
  int n_;
  std::map<Arc, Int> cells_;
};

/// Builds the frieze determined by a quiddity sequence by propagating the
/// diamond rule row by row:  m_{r+1,i} = (m_{r,i} * m_{r,i+1} - 1) / m_{r-1,i+1}
/// (indices in row-offset coordinates).  Every division must be exact,
/// every entry positive, and the closing row must be all 1s; otherwise the
/// sequence is not realizable and InvalidInput is thrown.  The stored
/// fundamental domain is checked for glide consistency.
[[nodiscard]] inline Frieze frieze_from_quiddity(const std::vector<int>& q) {
  const int n = static_cast<int>(q.size());
  if (n < 4) {
    throw InvalidInput("quiddity length must be at least 4, got " +
                       std::to_string(n));
  }
  for (int v : q) {
    if (v <= 0) throw InvalidInput("quiddity entries must be positive");
  }
  // grid[r][i]: value of m_{i, i+r}, r = 1..n-1, i = 1..n (cyclic).
  std::vector<std::vector<Int>> grid(
      static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n + 1), 0));
  auto at = [&](int r, int i) -> Int& {
    return grid[static_cast<std::size_t>(r)]
               [static_cast<std::size_t>(wrap_vertex(n, i))];
  };
  for (int i = 1; i <= n; ++i) {
    at(1, i) = 1;
    at(2, i) = q[static_cast<std::size_t>(wrap_vertex(n, i + 2) - 1)];
  }
  for (int r = 2; r <= n - 2; ++r) {
    for (int i = 1; i <= n; ++i) {
      const Int num = at(r, i) * at(r, i + 1) - 1;
      const Int den = at(r - 1, i + 1);
      if (den == 0 || num % den != 0) {
        throw InvalidInput(
            "sequence is not the quiddity of any triangulation "
            "(non-exact division at row " +
            std::to_string(r + 1) + ", column " + std::to_string(i) + ")");
      }
      const Int v = num / den;
      if (v <= 0) {
        throw InvalidInput(
            "sequence is not the quiddity of any triangulation "
            "(non-positive entry at row " +
            std::to_string(r + 1) + ", column " + std::to_string(i) + ")");
      }
      at(r + 1, i) = v;
    }
  }
  for (int i = 1; i <= n; ++i) {
    if (at(n - 1, i) != 1) {
      throw InvalidInput(
          "sequence is not the quiddity of any triangulation "
          "(closing border row is not all 1s)");
    }
  }
  std::map<Arc, Int> cells;
  for (int r = 2; r <= n - 2; ++r) {
    for (int i = 1; i <= n; ++i) {
      const Arc cell = make_arc(n, i, i + r);
      const Int& v = at(r, i);
      auto [it, inserted] = cells.emplace(cell, v);
      if (!inserted && it->second != v) {
        throw InvariantViolation("glide symmetry violated at " +
                                 arc_to_string(cell));
      }
    }
  }
  return Frieze(n, std::move(cells));
}

/// Builds the frieze of a triangulation by evaluating the per-arc value
/// map at every interior position (boundary rows are implicit).  Agrees
/// entrywise with frieze_from_quiddity(quiddity_of(t)); the verification
/// suite asserts this exhaustively.
[[nodiscard]] inline Frieze frieze_from_triangulation(const Triangulation& t) {
  const int n = t.n;
  std::map<Arc, Int> cells;
  ValueMemo memo;
  for (int i = 1; i <= n; ++i) {
    for (int r = 2; r <= n - 2; ++r) {
      const Arc cell = make_arc(n, i, i + r);
      if (cells.count(cell) == 0) {
        cells.emplace(cell, cc_entry(t, cell, &memo));
      }
    }
  }
  return Frieze(n, std::move(cells));
}

/// Outcome of a structural check; `ok` with an empty violation on
/// success, otherwise the first violation found, named precisely.
struct VerifyReport {
  bool ok{true};
  std::string violation;
};

/// Verifies the frieze invariants on a full fundamental domain:
/// positivity, the diamond rule at every unit diamond (including those
/// touching the border rows), and well-definedness of the arc indexing
/// (periodicity/glide hold by construction of Frieze, so they are checked
/// through entry()).
[[nodiscard]] inline VerifyReport verify_frieze(const Frieze& f) {
  const int n = f.order();
  for (const auto& [cell, v] : f.cells()) {
    if (v <= 0) {
      return {false, "non-positive entry at " + arc_to_string(cell)};
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int r = 1; r <= n - 1; ++r) {
      // m_{i,j} m_{i+1,j+1} - m_{i+1,j} m_{i,j+1} = 1 with j = i + r;
      // r = 1 and r = n-1 exercise the diamonds touching the border rows.
      const int j = i + r;
      const Int lhs = f.entry(i, j) * f.entry(i + 1, j + 1) -
                      f.entry(i + 1, j) * f.entry(i, j + 1);
      if (lhs != 1) {
        return {false, "diamond rule fails at (i,j) = (" + std::to_string(i) +
                           "," + std::to_string(wrap_vertex(n, j)) + ")"};
      }
    }
  }
  return {};
}

/// Verifies a raw row grid (as parsed from JSON: interior rows top to
/// bottom, each of length n) without assuming any symmetry: positivity,
/// the diamond rule across all rows including the implicit border rows,
/// and the glide relation row[r][i] == row[n-2-r][i + r + ...]; returns
/// the first violation.  On success the rows define a valid Frieze.
[[nodiscard]] inline VerifyReport verify_rows(
    int n, const std::vector<std::vector<Int>>& rows) {
  if (n < 4) return {false, "order must be at least 4"};
  if (static_cast<int>(rows.size()) != n - 3) {
    return {false, "want " + std::to_string(n - 3) + " interior rows, got " +
                       std::to_string(rows.size())};
  }
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      return {false, "every interior row must have n = " + std::to_string(n) +
                         " entries"};
    }
    for (const Int& v : row) {
      if (v <= 0) return {false, "non-positive interior entry"};
    }
  }
  // E(r, i) = m_{i, i+r} in row coordinates; border rows implicit.  The
  // raw grid is one period wide, so columns are read cyclically, but no
  // glide symmetry is assumed here (it is checked explicitly below).
  auto entry = [&](int r, int i) -> Int {
    if (r == 0 || r == n) return 0;
    if (r == 1 || r == n - 1) return 1;
    return rows[static_cast<std::size_t>(r - 2)]
               [static_cast<std::size_t>(wrap_vertex(n, i) - 1)];
  };
  for (int r = 1; r <= n - 1; ++r) {
    for (int i = 1; i <= n; ++i) {
      // m_{i,j} m_{i+1,j+1} - m_{i+1,j} m_{i,j+1} = 1 with j = i + r.
      const Int lhs = entry(r, i) * entry(r, i + 1) -
                      entry(r - 1, i + 1) * entry(r + 1, i);
      if (lhs != 1) {
        return {false, "diamond rule fails at row " + std::to_string(r) +
                           ", column " + std::to_string(i)};
      }
    }
  }
  // Glide: m_{i,j} = m_{j, i+n}. In row coordinates the entry of arc
  // [i, i+r] appears in row r at column i and in row n-r at column i+r.
  for (int r = 2; r <= n - 2; ++r) {
    for (int i = 1; i <= n; ++i) {
      if (entry(r, i) != entry(n - r, i + r)) {
        return {false, "glide symmetry fails for the arc " +
                           arc_to_string(make_arc(n, i, i + r))};
      }
    }
  }
  return {};
}

/// Builds a Frieze from raw interior rows after verify_rows succeeds.
[[nodiscard]] inline Frieze frieze_from_rows(
    int n, const std::vector<std::vector<Int>>& rows) {
  const VerifyReport rep = verify_rows(n, rows);
  if (!rep.ok) throw InvalidInput("invalid frieze rows: " + rep.violation);
  std::map<Arc, Int> cells;
  for (int r = 2; r <= n - 2; ++r) {
    for (int i = 1; i <= n; ++i) {
      cells.emplace(make_arc(n, i, i + r),
                    rows[static_cast<std::size_t>(r - 2)]
                        [static_cast<std::size_t>(i - 1)]);
    }
  }
  return Frieze(n, std::move(cells));
}

/// Staggered plain-text rendering: rows r = 0..n top to bottom (the two
/// 0-rows and 1-rows included), `window` columns per row, consecutive rows
/// offset by half a column.  Output is deterministic byte-for-byte for a
/// given (frieze, window).
[[nodiscard]] inline std::string render_frieze(const Frieze& f, int window) {
  const int n = f.order();
  if (window <= 0) window = n;
  std::size_t width = 1;
  for (int r = 0; r <= n; ++r) {
    for (int i = 1; i <= window; ++i) {
      width = std::max(width, f.entry(i, i + r).str().size());
    }
  }
  std::ostringstream os;
  const std::string half(static_cast<std::size_t>((width + 1) / 2), ' ');
  for (int r = 0; r <= n; ++r) {
    if (r % 2 == 1) os << half;
    for (int i = 1; i <= window; ++i) {
      const std::string s = f.entry(i, i + r).str();
      if (i > 1) os << ' ';
      os << std::string(width - s.size(), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace frieze

#endif  // FRIEZE_FRIEZE_HPP
