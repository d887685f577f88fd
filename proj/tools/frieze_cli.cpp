// Command-line front end for the frieze library: generation, flipping,
// difference inspection, exhaustive verification, enumeration, formula
// fitting, and rendering.  Output is deterministic byte-for-byte for a
// given invocation.  Exit codes: 0 success, 1 invalid input, 2 violated
// invariant (with a minimal counterexample on stderr).

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frieze/checks.hpp"
#include "frieze/errors.hpp"
#include "frieze/frieze.hpp"
#include "frieze/golden.hpp"
#include "frieze/json_io.hpp"
#include "frieze/mutation.hpp"
#include "frieze/quadrilateral.hpp"
#include "frieze/strings.hpp"
#include "frieze/triangulation.hpp"

namespace {

using frieze::Arc;
using frieze::Frieze;
using frieze::Int;
using frieze::InvalidInput;
using frieze::InvariantViolation;
using frieze::Json;
using frieze::Triangulation;

/// Positional inputs are either inline JSON (first non-space character is
/// '{') or a path to a JSON file.
[[nodiscard]] Json read_input(const std::string& src) {
  const auto pos = src.find_first_not_of(" \t\r\n");
  std::string text;
  if (pos != std::string::npos && src[pos] == '{') {
    text = src;
  } else {
    std::ifstream in(src);
    if (!in) throw InvalidInput("cannot open input file: " + src);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    throw InvalidInput(std::string("malformed JSON input: ") + e.what());
  }
}

[[nodiscard]] int parse_positive_int(const std::string& tok,
                                     const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size() || v < 1) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw InvalidInput("expected a positive integer for " + what + ", got '" +
                       tok + "'");
  }
}

/// "4-8" -> (4, 8).
[[nodiscard]] std::pair<int, int> parse_arc_token(const std::string& tok) {
  const auto dash = tok.find('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 >= tok.size()) {
    throw InvalidInput("expected an arc as i-j, got '" + tok + "'");
  }
  return {parse_positive_int(tok.substr(0, dash), "arc endpoint"),
          parse_positive_int(tok.substr(dash + 1), "arc endpoint")};
}

[[nodiscard]] std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

struct TriangulationInput {
  std::string input;      // positional: file path or inline JSON
  int n{0};               // --n
  std::string diagonals;  // --diagonals "1-3,1-4"
};

[[nodiscard]] Triangulation get_triangulation(const TriangulationInput& in) {
  if (in.n > 0 || !in.diagonals.empty()) {
    if (in.n <= 0) {
      throw InvalidInput("--diagonals requires --n");
    }
    std::vector<Arc> ds;
    if (!in.diagonals.empty()) {
      for (const std::string& tok : split_commas(in.diagonals)) {
        const auto [i, j] = parse_arc_token(tok);
        ds.push_back(frieze::make_arc(in.n, i, j));
      }
    }
    return frieze::validate_triangulation(in.n, std::move(ds));
  }
  if (in.input.empty()) {
    throw InvalidInput(
        "provide a triangulation: positional JSON (inline or file) or "
        "--n with --diagonals");
  }
  return frieze::triangulation_from_json(read_input(in.input));
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- gen --

int run_gen(const TriangulationInput& tri_in, const std::string& quiddity,
            const std::string& pipeline, const std::string& format,
            int window) {
  Frieze f = [&] {
    if (!quiddity.empty()) {
      if (tri_in.n > 0 || !tri_in.diagonals.empty() || !tri_in.input.empty()) {
        throw InvalidInput(
            "give either a triangulation input or --quiddity, not both");
      }
      if (pipeline == "ccmap") {
        throw InvalidInput(
            "--pipeline ccmap needs a triangulation input, not --quiddity");
      }
      std::vector<int> q;
      for (const std::string& tok : split_commas(quiddity)) {
        q.push_back(parse_positive_int(tok, "--quiddity entry"));
      }
      return frieze::frieze_from_quiddity(q);
    }
    const Triangulation t = get_triangulation(tri_in);
    if (pipeline == "quiddity") {
      return frieze::frieze_from_quiddity(frieze::quiddity_of(t));
    }
    if (pipeline == "ccmap") {
      return frieze::frieze_from_triangulation(t);
    }
    Frieze f1 = frieze::frieze_from_triangulation(t);
    const Frieze f2 = frieze::frieze_from_quiddity(frieze::quiddity_of(t));
    if (!(f1 == f2)) {
      throw InvariantViolation(
          "the two construction pipelines disagree for " +
          frieze::triangulation_to_json(t).dump());
    }
    return f1;
  }();
  const frieze::VerifyReport rep = frieze::verify_frieze(f);
  if (!rep.ok) throw InvariantViolation(rep.violation);
  if (format == "json") {
    print_json(frieze::frieze_to_json(f));
  } else {
    std::cout << frieze::render_frieze(f, window);
  }
  return 0;
}

// --------------------------------------------------------------- flip --

int run_flip(const TriangulationInput& tri_in, const std::string& at,
             const std::string& seq, const std::string& format) {
  Triangulation t = get_triangulation(tri_in);
  std::vector<Arc> sequence;
  if (!at.empty() && !seq.empty()) {
    throw InvalidInput("give either --at or --seq, not both");
  }
  const std::string flips_str = !at.empty() ? at : seq;
  if (flips_str.empty()) {
    throw InvalidInput("flip needs --at i-j or --seq i-j,k-l,...");
  }
  for (const std::string& tok : split_commas(flips_str)) {
    const auto [i, j] = parse_arc_token(tok);
    sequence.push_back(frieze::make_arc(t.n, i, j));
  }
  Json steps = Json::array();
  for (Arc a : sequence) {
    const auto [t2, a2] = frieze::flip(t, a);
    const Frieze f = frieze::frieze_from_triangulation(t2);
    const frieze::VerifyReport rep = frieze::verify_frieze(f);
    if (!rep.ok) throw InvariantViolation(rep.violation);
    if (format == "json") {
      steps.push_back(Json{{"flipped", frieze::arc_to_json(a)},
                           {"replacement", frieze::arc_to_json(a2)},
                           {"triangulation", frieze::triangulation_to_json(t2)},
                           {"frieze", frieze::frieze_to_json(f)}});
    } else {
      std::cout << "flip " << frieze::arc_to_string(a) << " -> "
                << frieze::arc_to_string(a2) << "\n";
      std::cout << "diagonals:";
      for (Arc d : t2.diagonals) {
        std::cout << " " << frieze::arc_to_string(d);
      }
      std::cout << "\n" << frieze::render_frieze(f, 0);
    }
    t = t2;
  }
  if (format == "json") print_json(Json{{"steps", std::move(steps)}});
  return 0;
}

// -------------------------------------------------------------- delta --

int run_delta(const TriangulationInput& tri_in, const std::string& at,
              const std::string& arc, const std::string& format) {
  const Triangulation t = get_triangulation(tri_in);
  if (at.empty()) throw InvalidInput("delta needs --at i-j");
  const auto [ai, aj] = parse_arc_token(at);
  const Arc a = frieze::make_arc(t.n, ai, aj);
  const auto [t2, a2] = frieze::flip(t, a);

  frieze::ValueMemo memo;
  auto cross_checked_report = [&](Arc cell) {
    frieze::DeltaReport rep = frieze::delta_at(t, a, cell, &memo);
    const Int truth =
        frieze::cc_entry(t, cell) - frieze::cc_entry(t2, cell);
    if (rep.delta != truth) {
      throw InvariantViolation(
          "difference formula disagrees with the entry difference at " +
          frieze::arc_to_string(cell) + ": formula " + rep.delta.str() +
          ", entries " + truth.str() + " (triangulation " +
          frieze::triangulation_to_json(t).dump() + ", diagonal " +
          frieze::arc_to_string(a) + ")");
    }
    return rep;
  };

  auto print_text = [&](const frieze::DeltaReport& rep) {
    std::cout << "position " << frieze::arc_to_string(rep.cell) << ": region "
              << frieze::region_name(rep.region) << ", delta "
              << rep.delta.str() << "\n";
    for (const auto& [slot, pos] : rep.projections) {
      std::cout << "  " << slot << " -> " << frieze::arc_to_string(pos)
                << " value " << rep.values.at(slot).str() << "\n";
    }
  };

  if (!arc.empty()) {
    const auto [di, dj] = parse_arc_token(arc);
    const frieze::DeltaReport rep =
        cross_checked_report(frieze::make_arc(t.n, di, dj));
    if (format == "json") {
      print_json(frieze::delta_report_to_json(rep));
    } else {
      print_text(rep);
    }
    return 0;
  }

  // All interior positions, sorted by arc.
  Json reports = Json::array();
  for (int i = 1; i <= t.n; ++i) {
    for (int r = 2; r <= t.n - 2; ++r) {
      const Arc cell = frieze::make_arc(t.n, i, i + r);
      if (cell.a != i) continue;  // each arc once, in sorted order
      const frieze::DeltaReport rep = cross_checked_report(cell);
      if (format == "json") {
        reports.push_back(frieze::delta_report_to_json(rep));
      } else {
        print_text(rep);
      }
    }
  }
  if (format == "json") {
    print_json(Json{{"diagonal", frieze::arc_to_json(a)},
                    {"reports", std::move(reports)}});
  }
  return 0;
}

// ------------------------------------------------------------- verify --

int run_verify(int n_max, int jobs, bool golden) {
  std::vector<frieze::CheckResult> results;
  results.push_back(frieze::check_pipelines_agree(n_max, jobs));
  results.push_back(frieze::check_difference_formula(n_max, jobs));
  results.push_back(frieze::check_support_change(n_max, jobs));
  for (auto& r : frieze::check_property_suite(
           std::min(n_max, 8), std::min(n_max, 10), std::min(n_max, 12))) {
    results.push_back(std::move(r));
  }
  if (golden) {
    const auto [search, examples] =
        frieze::check_golden_reproduction(frieze::load_golden_data());
    results.push_back(search);
    results.push_back(examples);
  }
  bool all_ok = true;
  for (const auto& r : results) {
    all_ok = all_ok && r.ok;
    std::cout << (r.ok ? "[PASS] " : "[FAIL] ") << r.name << " — " << r.detail
              << "\n";
  }
  if (!all_ok) {
    for (const auto& r : results) {
      if (!r.ok) {
        std::cerr << "violation: " << r.name << ": " << r.detail << "\n";
        break;
      }
    }
    return 2;
  }
  return 0;
}

// ---------------------------------------------------------- enumerate --

int run_enumerate(int n, const std::string& format) {
  if (n < 4) throw InvalidInput("--n must be at least 4");
  const auto all = frieze::enumerate_triangulations(n);
  if (format == "json") {
    Json list = Json::array();
    for (const Triangulation& t : all) {
      Json ds = Json::array();
      for (Arc d : t.diagonals) ds.push_back(frieze::arc_to_json(d));
      list.push_back(std::move(ds));
    }
    print_json(Json{{"n", n},
                    {"count", static_cast<long long>(all.size())},
                    {"triangulations", std::move(list)}});
  } else {
    for (const Triangulation& t : all) {
      for (std::size_t i = 0; i < t.diagonals.size(); ++i) {
        if (i > 0) std::cout << ",";
        std::cout << frieze::arc_to_string(t.diagonals[i]);
      }
      std::cout << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------- fit --

int run_fit(int n_max, const std::string& format) {
  const frieze::FitReport rep = frieze::fit_admissibility(n_max);
  if (format == "json") {
    print_json(frieze::fit_report_to_json(rep));
    return 0;
  }
  std::cout << "distinct direction words: " << rep.distinct_words
            << " (n <= " << rep.n_max << ")\n";
  for (const frieze::FitCandidate& c : rep.candidates) {
    if (c.exact) {
      std::cout << "candidate " << c.name << ": exact\n";
    } else {
      std::cout << "candidate " << c.name << ": counterexample dirs='"
                << c.counterexample_dirs << "' oracle=" << c.expected.str()
                << " formula=" << c.computed.str() << "\n";
    }
  }
  std::cout << "fitted:";
  for (const std::string& name : rep.fitted) std::cout << " " << name;
  std::cout << "\n";
  return 0;
}

// ------------------------------------------------------------- render --

int run_render(const std::string& input, int window,
               const std::string& format) {
  if (input.empty()) throw InvalidInput("render needs a frieze JSON input");
  const Frieze f = frieze::frieze_from_json(read_input(input));
  const std::string text = frieze::render_frieze(f, window);
  if (format == "json") {
    print_json(Json{{"n", f.order()},
                    {"window", window > 0 ? window : f.order()},
                    {"text", text}});
  } else {
    std::cout << text;
  }
  return 0;
}

// ------------------------------------------------------------- mutate --

int run_mutate(const TriangulationInput& tri_in, const std::string& at,
               const std::string& format) {
  const Triangulation t = get_triangulation(tri_in);
  if (at.empty()) throw InvalidInput("mutate needs --at i-j");
  const auto [ai, aj] = parse_arc_token(at);
  const Arc a = frieze::make_arc(t.n, ai, aj);
  const Frieze before = frieze::frieze_from_triangulation(t);
  const auto [after, reports] = frieze::mutate_frieze(t, a);
  const auto [t2, a2] = frieze::flip(t, a);
  if (!(after == frieze::frieze_from_triangulation(t2))) {
    throw InvariantViolation(
        "mutated frieze differs from the recomputed one for " +
        frieze::triangulation_to_json(t).dump() + " at diagonal " +
        frieze::arc_to_string(a));
  }
  if (format == "json") {
    print_json(frieze::mutation_to_json(before, after, reports));
  } else {
    std::cout << frieze::render_frieze(before, 0);
    std::cout << "flip " << frieze::arc_to_string(a) << " -> "
              << frieze::arc_to_string(a2) << "\n";
    std::cout << frieze::render_frieze(after, 0);
    for (const frieze::DeltaReport& rep : reports) {
      if (rep.delta == 0) continue;
      std::cout << "position " << frieze::arc_to_string(rep.cell)
                << ": region " << frieze::region_name(rep.region) << ", delta "
                << rep.delta.str() << "\n";
    }
  }
  return 0;
}

// ------------------------------------------------------ strings count --

int run_strings_count(const std::string& input, const std::string& format) {
  if (input.empty()) throw InvalidInput("strings count needs a module JSON");
  const frieze::StringModule m =
      frieze::module_from_json(read_input(input));
  const Int count = frieze::count_submodules(m);
  if (m.dirs.size() <= 20) {
    const Int brute = frieze::count_submodules_bruteforce(m);
    if (brute != count) {
      throw InvariantViolation("linear scan count " + count.str() +
                               " disagrees with subset enumeration " +
                               brute.str() + " for dirs='" + m.dirs + "'");
    }
  }
  if (format == "json") {
    print_json(Json{{"count", frieze::int_to_json(count)}});
  } else {
    std::cout << count.str() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-integer friezes from polygon triangulations: "
               "construction, submodule counting, and flip differences"};
  app.require_subcommand(1);
  // Let `--format` (declared on the app) appear after the subcommand name.
  app.fallthrough();

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  TriangulationInput tri_in;
  std::string quiddity, pipeline = "both", at, seq, arc, input;
  int window = 0, n = 0, n_max = 8, jobs = 0, fit_n_max = 10;
  bool golden = false;

  auto add_triangulation_opts = [&](CLI::App* cmd) {
    cmd->add_option("input", tri_in.input,
                    "Triangulation JSON (inline or file path)");
    cmd->add_option("--n", tri_in.n, "Polygon size (with --diagonals)");
    cmd->add_option("--diagonals", tri_in.diagonals,
                    "Diagonals as i-j,k-l,... (with --n)");
  };

  CLI::App* gen = app.add_subcommand(
      "gen", "Build the frieze of a triangulation or quiddity sequence");
  add_triangulation_opts(gen);
  gen->add_option("--quiddity", quiddity,
                  "Quiddity sequence q1,q2,... instead of a triangulation");
  gen->add_option("--pipeline", pipeline,
                  "Construction pipeline (default: both, with agreement "
                  "check)")
      ->check(CLI::IsMember({"quiddity", "ccmap", "both"}));
  gen->add_option("--window", window, "Columns in text rendering");

  CLI::App* flip_cmd = app.add_subcommand(
      "flip", "Flip one diagonal (--at) or a sequence (--seq)");
  add_triangulation_opts(flip_cmd);
  flip_cmd->add_option("--at", at, "Diagonal to flip, as i-j");
  flip_cmd->add_option("--seq", seq, "Diagonals to flip in order, i-j,k-l,...");

  CLI::App* delta_cmd = app.add_subcommand(
      "delta", "Difference reports for flipping --at (one --arc or all)");
  add_triangulation_opts(delta_cmd);
  delta_cmd->add_option("--at", at, "Diagonal to flip, as i-j");
  delta_cmd->add_option("--arc", arc, "Single position to report, as i-j");

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Exhaustive invariant suite over all triangulations up to "
                "--n-max");
  verify_cmd->add_option("--n-max", n_max, "Largest polygon size")
      ->capture_default_str();
  verify_cmd->add_option(
      "--jobs", jobs, "Worker threads (0 = all cores); results independent");
  verify_cmd->add_flag("--golden", golden,
                       "Also reproduce the bundled 14-gon reference data");

  CLI::App* enum_cmd =
      app.add_subcommand("enumerate", "List all triangulations of an n-gon");
  enum_cmd->add_option("--n", n, "Polygon size")->required();

  CLI::App* fit_cmd = app.add_subcommand(
      "fit", "Fit closed-form admissibility rules against the subset oracle");
  fit_cmd->add_option("--n-max", fit_n_max, "Largest polygon size")
      ->capture_default_str();

  CLI::App* render_cmd =
      app.add_subcommand("render", "Render a frieze JSON as a staggered grid");
  render_cmd->add_option("input", input, "Frieze JSON (inline or file path)");
  render_cmd->add_option("--window", window, "Columns in text rendering");

  CLI::App* mutate_cmd = app.add_subcommand(
      "mutate", "Apply the difference formula at every position for --at");
  add_triangulation_opts(mutate_cmd);
  mutate_cmd->add_option("--at", at, "Diagonal to flip, as i-j");

  CLI::App* strings_cmd =
      app.add_subcommand("strings", "String-module utilities");
  strings_cmd->require_subcommand(1);
  CLI::App* scount = strings_cmd->add_subcommand(
      "count", "Count submodules of a string module JSON");
  scount->add_option("input", input, "Module JSON (inline or file path)");
  CLI::App* sfit = strings_cmd->add_subcommand(
      "fit", "Same as top-level fit: closed-form admissibility rules");
  sfit->add_option("--n-max", fit_n_max, "Largest polygon size")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(gen)) {
      return run_gen(tri_in, quiddity, pipeline, format, window);
    }
    if (app.got_subcommand(flip_cmd)) {
      return run_flip(tri_in, at, seq, format);
    }
    if (app.got_subcommand(delta_cmd)) {
      return run_delta(tri_in, at, arc, format);
    }
    if (app.got_subcommand(verify_cmd)) {
      return run_verify(n_max, jobs, golden);
    }
    if (app.got_subcommand(enum_cmd)) {
      return run_enumerate(n, format);
    }
    if (app.got_subcommand(fit_cmd)) {
      return run_fit(fit_n_max, format);
    }
    if (app.got_subcommand(render_cmd)) {
      return run_render(input, window, format);
    }
    if (app.got_subcommand(mutate_cmd)) {
      return run_mutate(tri_in, at, format);
    }
    if (app.got_subcommand(strings_cmd)) {
      if (strings_cmd->got_subcommand(scount)) {
        return run_strings_count(input, format);
      }
      if (strings_cmd->got_subcommand(sfit)) {
        return run_fit(fit_n_max, format);
      }
    }
    throw InvalidInput("no subcommand selected");
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvariantViolation& e) {
    std::cerr << "violation: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
