// idprism: identifying codes in complementary prisms of cycles.
//
// Exit codes: 0 success / valid, 1 checked and invalid, 2 infeasible,
// 64 usage or input error.

#include "idprism/idprism.hpp"
#include "idprism/json_report.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

using namespace idprism;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_infeasible = 2;
constexpr int exit_usage = 64;

class UsageError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

auto slurp(const std::string & path) -> std::string {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

auto load_graph(const std::string & path) -> Graph { return graph_from_string(slurp(path)); }

struct OutputFlags
{
  bool json = false;
  std::string format = "text";

  auto want_json() const -> bool { return json || format == "json"; }
};

auto add_output_flags(CLI::App * cmd, OutputFlags & f) -> void {
  cmd->add_flag("--json", f.json, "Emit JSON");
  cmd->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

struct SolveFlags
{
  std::string strategy = "bnb";
  int workers = 1;
  std::uint64_t seed = 0;
  int cap = 0;
  std::uint64_t node_limit = 0;

  auto options() const -> SolverOptions {
    SolverOptions o;
    o.strategy = strategy == "exhaustive" ? Strategy::exhaustive : Strategy::branch_and_bound;
    o.worker_count = workers;
    o.seed = seed;
    if (cap > 0)
      o.size_cap = cap;
    if (node_limit > 0)
      o.node_limit = node_limit;
    return o;
  }
};

auto add_solve_flags(CLI::App * cmd, SolveFlags & f) -> void {
  cmd->add_option("--strategy", f.strategy, "Search strategy")->check(CLI::IsMember({"exhaustive", "bnb"}));
  cmd->add_option("--workers", f.workers, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.seed, "Root-split shuffle seed (0 = fixed order)");
  cmd->add_option("--cap", f.cap, "Largest code size to search for")->check(CLI::PositiveNumber);
  cmd->add_option("--node-limit", f.node_limit, "Search-node budget");
}

auto labels(const std::vector<int> & vs, const std::optional<PrismIndexing> & prism) -> std::string {
  std::string s;
  for (int v : vs)
    s += (s.empty() ? "" : " ") + vertex_label(v, prism);
  return s;
}

auto cmd_gen(const std::string & kind, int n) -> int {
  if (kind == "cycle") {
    write_graph(std::cout, cycle(n));
    return exit_ok;
  }
  const auto [g, pi] = cycle_prism(n);
  write_graph(std::cout, g);
  std::cout << "c prism of C_" << n << ": vertices 1.." << n << " are v1..v" << n << ", vertices " << n + 1 << ".."
            << 2 * n << " are vbar1..vbar" << n << '\n';
  return exit_ok;
}

auto cmd_verify(const std::string & graph_file, int d, const std::string & code_file) -> int {
  const auto g = load_graph(graph_file);
  std::istringstream code_text(slurp(code_file));
  const auto code = read_vertex_set(code_text, g);
  const auto report = is_identifying_code(g, d, code);
  std::cout << report_json(report, detect_prism(g)).dump() << '\n';
  return report.valid ? exit_ok : exit_invalid;
}

auto cmd_pattern(int n, bool ascii, const OutputFlags & out) -> int {
  const auto c = pattern_code(n);
  if (out.want_json()) {
    const auto ub = upper_bound(n);
    std::cout << json{{"n", n},
                      {"x", c.x_string()},
                      {"xbar", c.xbar_string()},
                      {"size", c.size()},
                      {"upper_bound", ub.analytic.to_string()}}
                     .dump()
              << '\n';
    return exit_ok;
  }
  write_code_pair(std::cout, c);
  if (ascii)
    std::cout << render_ascii(c);
  return exit_ok;
}

auto cmd_conditions(int n, const std::string & code_file, const OutputFlags & out) -> int {
  std::istringstream text(slurp(code_file));
  const auto code = read_code_pair(text);
  if (code.n() != n)
    throw UsageError("code has " + std::to_string(code.n()) + " columns, expected " + std::to_string(n));
  const auto r = lemma1_check(code);
  const bool sufficient = code.complement_count() >= 4;
  if (out.want_json()) {
    json v = json::array();
    for (const auto & x : r.violations) {
      json item{{"family", to_string(x.family)}, {"i", x.i}};
      if (x.family != ConditionFamily::C_i)
        item["j"] = x.j;
      v.push_back(item);
    }
    std::cout << json{{"holds", r.holds()},
                      {"conditions_decide", sufficient},
                      {"identifying", lemma1_equiv_verify(code)},
                      {"violations", v},
                      {"bad_indices", r.bad_indices},
                      {"bar_i_set", r.bar_i_set}}
                     .dump()
              << '\n';
  } else {
    std::cout << "violations: " << r.violations.size() << '\n';
    for (const auto & x : r.violations) {
      std::cout << "  " << to_string(x.family) << " i=" << x.i;
      if (x.family != ConditionFamily::C_i)
        std::cout << " j=" << x.j;
      std::cout << '\n';
    }
    auto list = [](const std::vector<int> & xs) {
      std::string s;
      for (int x : xs)
        s += " " + std::to_string(x);
      return s;
    };
    std::cout << "bad indices:" << list(r.bad_indices) << '\n';
    std::cout << "bar-I set:" << list(r.bar_i_set) << '\n';
    std::cout << "identifying: " << (lemma1_equiv_verify(code) ? "yes" : "no")
              << (sufficient ? "" : " (decided by the definition, |Cbar| < 4)") << '\n';
  }
  return r.holds() ? exit_ok : exit_invalid;
}

auto cmd_solve(const std::string & graph_file, int d, const SolveFlags & flags, const OutputFlags & out) -> int {
  const auto g = load_graph(graph_file);
  const auto prism = detect_prism(g);
  const auto r = solve_min_idcode(g, d, flags.options());
  if (out.want_json())
    std::cout << result_json(r, prism).dump() << '\n';
  else
    std::cout << result_json(r, prism).dump(2) << '\n';
  return r.status == SolverStatus::infeasible ? exit_infeasible : exit_ok;
}

auto cmd_twins(const std::string & graph_file, int d, const OutputFlags & out) -> int {
  const auto g = load_graph(graph_file);
  const auto prism = detect_prism(g);
  const auto tw = closed_twins(g, d);
  if (out.want_json()) {
    json arr = json::array();
    for (auto [u, v] : tw)
      arr.push_back(vertices_json({u, v}, prism));
    std::cout << json{{"d", d}, {"twins", arr}}.dump() << '\n';
  } else {
    for (auto [u, v] : tw)
      std::cout << labels({u, v}, prism) << '\n';
    std::cerr << tw.size() << " twin pair(s)\n";
  }
  return tw.empty() ? exit_ok : exit_infeasible;
}

auto cmd_hitting(const std::string & graph_file, int d, bool reduce) -> int {
  const auto g = load_graph(graph_file);
  const auto inst = hitting_instance(g, d, reduce);
  write_hitting_instance(std::cout, inst);
  if (!inst.feasible())
    std::cerr << inst.infeasible_pairs.size() << " twin pair(s): instance is infeasible\n";
  return inst.feasible() ? exit_ok : exit_infeasible;
}

auto cmd_cwcheck(const std::string & target, int trials, std::uint64_t seed, const OutputFlags & out) -> int {
  std::mt19937_64 rng(seed);
  std::vector<std::tuple<std::string, Graph, LayoutTree>> cases;
  int n = 0;
  const bool numeric = !target.empty() && target.find_first_not_of("0123456789") == std::string::npos;
  if (numeric) {
    n = std::stoi(target);
    if (n < 1)
      throw UsageError("order must be positive");
    if (n >= 3)
      cases.emplace_back("cycle", cycle(n), balanced_layout(n));
    for (int k = 0; k < trials; ++k) {
      auto g = random_graph(n, 0.5, rng);
      cases.emplace_back("random", std::move(g), random_layout(n, rng));
    }
  } else {
    const auto g = load_graph(target);
    cases.emplace_back("balanced", g, balanced_layout(g.order()));
    for (int k = 0; k < trials; ++k)
      cases.emplace_back("random", g, random_layout(g.order(), rng));
  }

  bool all_ok = true;
  json rows = json::array();
  for (const auto & [kind, g, t] : cases) {
    const auto r = check_doubling(g, t);
    all_ok = all_ok && r.ok;
    if (out.want_json())
      rows.push_back({{"kind", kind}, {"tree", t.to_string()}, {"a", r.base_classes}, {"b", r.prism_classes}, {"ok", r.ok}});
    else
      std::cout << kind << " a=" << r.base_classes << " b=" << r.prism_classes << (r.ok ? " ok" : " FAIL") << '\n';
  }
  if (out.want_json())
    std::cout << json{{"cases", rows}, {"ok", all_ok}}.dump() << '\n';
  else
    std::cout << (all_ok ? "all " : "NOT all ") << cases.size() << " case(s) satisfy b <= 2a\n";
  return all_ok ? exit_ok : exit_invalid;
}

auto cmd_scan(int from, int to, const SolveFlags & flags, const OutputFlags & out) -> int {
  if (from < 3 || to < from)
    throw UsageError("scan range must satisfy 3 <= from <= to");
  json rows = json::array();
  if (!out.want_json())
    std::cout << "n\tlower\tic\tpattern\tupper\n";
  for (int n = from; n <= to; ++n) {
    const auto r = solve_min_idcode(cycle_prism(n).first, 1, flags.options());
    const std::string ic = r.status == SolverStatus::optimal ? std::to_string(r.size) : to_string(r.status);
    const bool bounded = n >= 9;
    const std::string lower = bounded ? lower_bound(n).to_string() : "-";
    const std::string pattern = bounded ? std::to_string(upper_bound(n).exact) : "-";
    const std::string upper = bounded ? upper_bound(n).analytic.to_string() : "-";
    if (bounded && r.status == SolverStatus::optimal &&
        (Rational(r.size) < lower_bound(n) || r.size > upper_bound(n).exact))
      throw std::logic_error("solver optimum outside the proven bounds at n = " + std::to_string(n));
    if (out.want_json()) {
      json row{{"n", n}, {"status", to_string(r.status)}};
      row["ic"] = r.status == SolverStatus::optimal ? json(r.size) : json(nullptr);
      row["lower"] = bounded ? json(lower) : json(nullptr);
      row["pattern"] = bounded ? json(upper_bound(n).exact) : json(nullptr);
      row["upper"] = bounded ? json(upper) : json(nullptr);
      rows.push_back(row);
    } else {
      std::cout << n << '\t' << lower << '\t' << ic << '\t' << pattern << '\t' << upper << '\n';
    }
  }
  if (out.want_json())
    std::cout << rows.dump() << '\n';
  return exit_ok;
}

} // namespace

int main(int argc, char ** argv) {
  CLI::App app{"Identifying codes in complementary prisms of cycles"};
  app.require_subcommand(1);
  std::function<int()> run;

  std::string kind;
  int n = 0;
  auto * gen = app.add_subcommand("gen", "Write a cycle or cycle prism in the graph text format");
  gen->add_option("kind", kind, "cycle or prism")->required()->check(CLI::IsMember({"cycle", "prism"}));
  gen->add_option("n", n, "Cycle order")->required();
  gen->callback([&] { run = [&] { return cmd_gen(kind, n); }; });

  std::string graph_file;
  std::string code_file;
  int d = 1;
  auto * verify = app.add_subcommand("verify", "Check a vertex set against the identifying-code definition");
  verify->add_option("graph", graph_file, "Graph file ('-' for stdin)")->required();
  verify->add_option("d", d, "Radius")->required();
  verify->add_option("code", code_file, "Code file")->required();
  verify->callback([&] { run = [&] { return cmd_verify(graph_file, d, code_file); }; });

  OutputFlags out;
  bool ascii = false;
  auto * pattern = app.add_subcommand("pattern", "Print the periodic construction for the n-prism");
  pattern->add_option("n", n, "Cycle order (>= 9)")->required();
  pattern->add_flag("--ascii", ascii, "Also draw the two rows");
  add_output_flags(pattern, out);
  pattern->callback([&] { run = [&] { return cmd_pattern(n, ascii, out); }; });

  auto * conditions = app.add_subcommand("conditions", "Evaluate the local condition families on a code pair");
  conditions->add_option("n", n, "Cycle order (>= 9)")->required();
  conditions->add_option("code", code_file, "Two-line code pair file")->required();
  add_output_flags(conditions, out);
  conditions->callback([&] { run = [&] { return cmd_conditions(n, code_file, out); }; });

  SolveFlags sflags;
  auto * solve = app.add_subcommand("solve", "Compute a minimum d-identifying code");
  solve->add_option("graph", graph_file, "Graph file ('-' for stdin)")->required();
  solve->add_option("d", d, "Radius")->default_val(1);
  add_solve_flags(solve, sflags);
  add_output_flags(solve, out);
  solve->callback([&] { run = [&] { return cmd_solve(graph_file, d, sflags, out); }; });

  auto * twins = app.add_subcommand("twins", "List vertex pairs with equal d-balls");
  twins->add_option("graph", graph_file, "Graph file ('-' for stdin)")->required();
  twins->add_option("d", d, "Radius")->required();
  add_output_flags(twins, out);
  twins->callback([&] { run = [&] { return cmd_twins(graph_file, d, out); }; });

  bool reduce = false;
  auto * hitting = app.add_subcommand("hitting", "Export the hitting-set instance");
  hitting->add_option("graph", graph_file, "Graph file ('-' for stdin)")->required();
  hitting->add_option("d", d, "Radius")->required();
  hitting->add_flag("--reduce", reduce, "Drop constraints that contain another constraint");
  hitting->callback([&] { run = [&] { return cmd_hitting(graph_file, d, reduce); }; });

  std::string target;
  int trials = 100;
  std::uint64_t seed = 1;
  auto * cw = app.add_subcommand("cwcheck", "Check the class-count doubling on random layout trees");
  cw->add_option("target", target, "Graph order for random graphs, or a graph file")->required();
  cw->add_option("--trials", trials, "Random cases")->check(CLI::NonNegativeNumber);
  cw->add_option("--seed", seed, "Random seed");
  add_output_flags(cw, out);
  cw->callback([&] { run = [&] { return cmd_cwcheck(target, trials, seed, out); }; });

  int from = 0;
  int to = 0;
  auto * scan = app.add_subcommand("scan", "Tabulate bounds and exact optima for a range of n");
  scan->add_option("from", from, "First n (>= 3)")->required();
  scan->add_option("to", to, "Last n")->required();
  add_solve_flags(scan, sflags);
  add_output_flags(scan, out);
  scan->callback([&] { run = [&] { return cmd_scan(from, to, sflags, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp & e) {
    return app.exit(e);
  } catch (const CLI::ParseError & e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    return run();
  } catch (const ParseError & e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const UsageError & e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::domain_error & e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument & e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return exit_usage;
}
