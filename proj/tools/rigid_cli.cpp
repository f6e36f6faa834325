// rigid: command-line front end for rigidity checks, Chern numbers,
// classification and bounded searches over weight matrices.
//
// Exit codes: 0 success (check: rigid), 1 check found the series non-constant,
// 2 input or flag error, 3 search stopped by its budget.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "rigid/bott.hpp"
#include "rigid/error.hpp"
#include "rigid/io.hpp"
#include "rigid/rigidity.hpp"
#include "rigid/search.hpp"

namespace {

using namespace rigid;

constexpr int kExitRigid = 0;
constexpr int kExitNotRigid = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

std::string format_rational(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

int cmd_check(const std::string& path, Mode mode, bool json) {
  const WeightMatrix w = parse_matrix(read_input(path), json);
  const RigidityVerdict v = is_rigid(w, mode);
  const BivarPoly candidate = mode == Mode::T ? candidate_constant(w) : BivarPoly(candidate_l_constant(w));
  if (v.is_rigid()) {
    std::cout << "Rigid, constant = " << v.constant().to_string() << '\n';
    if (mode == Mode::L) std::cout << "L = " << v.constant().as_constant()->get_str() << '\n';
    std::cout << "candidate constant = " << candidate.to_string()
              << (candidate == v.constant() ? " (agrees)" : " (DISAGREES)") << '\n';
    return kExitRigid;
  }
  const Witness& wit = v.witness();
  std::cout << "NotRigid\n";
  std::cout << "residual lowest term: (" << wit.residual_low_coefficient.to_string() << ")*z^"
            << wit.residual_low_degree << '\n';
  if (wit.point) {
    std::cout << "witness: z = " << format_rational(wit.point->z) << ", x = " << format_rational(wit.point->x)
              << ", y = " << format_rational(wit.point->y) << ": value " << format_rational(wit.value_at_point)
              << " != constant " << format_rational(wit.expected_constant_at_point) << '\n';
  } else {
    std::cout << "witness: no grid point separates the series from " << candidate.to_string() << '\n';
  }
  return kExitNotRigid;
}

int cmd_classify(const std::string& path, bool json) {
  const ClassLabel label = classify_two_fixed_points(parse_matrix(read_input(path), json));
  std::cout << label.to_string();
  if (!label.reason.empty()) std::cout << " (" << label.reason << ')';
  std::cout << '\n';
  return 0;
}

void print_chern(const ChernPartition& r, const Rational& value) {
  std::cout << render_partition(r) << " = " << format_rational(value)
            << (value.get_den() == 1 ? " (integer)" : " (not an integer)") << '\n';
}

int cmd_chern(const std::string& path, const std::string& partition, bool json) {
  const WeightMatrix w = parse_matrix(read_input(path), json);
  if (!partition.empty()) {
    const ChernPartition r = parse_partition(partition);
    if (r.size() != w.n()) throw Error(ErrorCode::ParseError, "partition needs n = " + std::to_string(w.n()) + " entries");
    const Rational value = chern_number(w, r);
    std::cout << format_rational(value) << (value.get_den() == 1 ? " (integer)" : " (not an integer)") << '\n';
    return 0;
  }
  const auto n = static_cast<unsigned>(w.n());
  for (const ChernPartition& r : partitions_of_degree(n, n)) print_chern(r, chern_number(w, r));
  return 0;
}

int cmd_screen(const std::string& path, bool json) {
  const WeightMatrix w = parse_matrix(read_input(path), json);
  const auto violations = realizability_screen(w);
  if (violations.empty()) {
    std::cout << "realizability: every Chern number below top degree vanishes\n";
  } else {
    std::cout << "realizability: " << violations.size()
              << " nonzero Chern number(s) below top degree; not fixed-point data of a unitary S^1-manifold\n";
    for (const Violation& v : violations) {
      std::cout << "  " << render_partition(v.partition) << " = " << format_rational(v.value) << '\n';
    }
  }
  if (is_boundary_candidate(w)) {
    std::cout << "boundary candidate: all Chern numbers vanish\n";
  } else {
    std::cout << "not a boundary: some top-degree Chern number is nonzero\n";
  }
  return 0;
}

struct SearchOptions {
  unsigned m = 0;
  unsigned n = 0;
  int bound = 0;
  std::string mode = "T";
  std::uint64_t budget = SearchBudget{}.max_candidates;
  std::uint64_t exact_budget = SearchBudget{}.max_exact_checks;
  int shards = 0;
  std::string out;
  std::string signs;
  std::string spec_file;
  bool problem24 = false;
  bool no_canonical = false;
};

void write_file(const std::string& path, const std::string& content) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  out << content;
}

int cmd_search(const SearchOptions& o) {
  if (o.problem24) {
    if (o.n < 1 || o.bound < 1) throw Error(ErrorCode::InvalidSearchSpec, "--problem24 needs --n and --bound");
    const auto solutions = problem_2_4_search(o.n, o.bound, o.shards);
    std::cout << solutions.size() << " solutions\n";
    for (const auto& s : solutions) {
      std::cout << "  a = " << WeightMatrix({Row{s.a, 1}}).to_string() << "  b = " << WeightMatrix({Row{s.b, 1}}).to_string()
                << "  c = " << WeightMatrix({Row{s.c, -1}}).to_string() << '\n';
    }
    write_file(o.out, render_problem24_jsonl(o.n, o.bound, solutions));
    return 0;
  }

  SearchSpec spec;
  if (!o.spec_file.empty()) {
    Document doc = parse_document(read_input(o.spec_file));
    if (!std::holds_alternative<SearchSpec>(doc)) throw Error(ErrorCode::ParseError, "--spec file must hold a search declaration");
    spec = std::get<SearchSpec>(doc);
  } else {
    spec.m = o.m;
    spec.n = o.n;
    spec.bound = o.bound;
    spec.mode = o.mode == "L" ? Mode::L : Mode::T;
    spec.budget = {o.budget, o.exact_budget};
    spec.canonicalize = !o.no_canonical;
    if (!o.signs.empty()) spec.fixed_signs = parse_signs(o.signs);
  }

  const SearchReport report = sweep(spec, o.shards);
  std::cout << render_report_table(report);
  std::cout << "found " << report.found.size() << " rigid configuration(s); " << report.stats.candidates
            << " candidates, " << report.stats.prefilter_rejections << " rejected by pre-filter, "
            << report.stats.exact_checks << " exact checks, " << report.stats.wall_seconds << " s\n";
  for (const std::string& a : report.alerts()) std::cout << "!!! " << a << '\n';
  write_file(o.out, render_report_jsonl(report));
  if (report.budget_exceeded) {
    std::cout << "BUDGET EXCEEDED: completed " << report.stats.shards_completed << " of " << report.stats.shards_total
              << " shards; results are partial\n";
    return kExitBudget;
  }
  return 0;
}

int cmd_quasilinear(const std::vector<int>& a, bool json) {
  const WeightMatrix w = quasilinear(a);
  if (json) {
    std::cout << matrix_to_json(w).dump() << '\n';
  } else {
    std::cout << render_matrix(w);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rigidity of weight matrices, Chern numbers, and bounded searches"};
  app.require_subcommand(1);

  std::string path;
  std::string mode = "T";
  std::string partition;
  bool json = false;

  auto* check = app.add_subcommand("check", "decide T- or L-rigidity of a weight matrix");
  check->add_option("file", path, "input document ('-' for stdin)")->required();
  check->add_option("--mode", mode, "T or L")->check(CLI::IsMember({"T", "L"}));
  check->add_flag("--json", json, "input is JSON");

  auto* classify = app.add_subcommand("classify", "label a two-fixed-point set as Z, L1 or S3");
  classify->add_option("file", path)->required();
  classify->add_flag("--json", json);

  auto* chern = app.add_subcommand("chern", "Chern numbers by the Bott residue formula");
  chern->add_option("file", path)->required();
  chern->add_option("--partition", partition, "exponents r1,...,rn (default: every top-degree monomial)");
  chern->add_flag("--json", json);

  auto* screen = app.add_subcommand("screen", "realizability and boundary screens");
  screen->add_option("file", path)->required();
  screen->add_flag("--json", json);

  SearchOptions so;
  auto* search = app.add_subcommand("search", "exhaustive bounded search for rigid sets");
  search->add_option("--m", so.m, "rows (fixed points)");
  search->add_option("--n", so.n, "columns (weights per fixed point)");
  search->add_option("--bound", so.bound, "max |weight|");
  search->add_option("--mode", so.mode, "T or L")->check(CLI::IsMember({"T", "L"}));
  search->add_option("--budget", so.budget, "max enumerated candidates");
  search->add_option("--exact-budget", so.exact_budget, "max exact rigidity checks");
  search->add_option("--shards", so.shards, "worker threads over first-row shards (1 = serial, 0 = all cores)");
  search->add_option("--out", so.out, "write newline-delimited JSON report here");
  search->add_option("--signs", so.signs, "fixed sign multiset, e.g. +,+,-");
  search->add_option("--spec", so.spec_file, "read a 'search:' declaration from a file");
  search->add_flag("--problem24", so.problem24, "solve L(a) + L(b) = L(c) + 1 over n-tuples up to --bound");
  search->add_flag("--no-canonical", so.no_canonical, "enumerate every ordered matrix");

  std::vector<int> seeds;
  auto* ql = app.add_subcommand("quasilinear", "print the quasilinear set of distinct integers a1 ... a(n+1)");
  ql->add_option("a", seeds)->required()->expected(2, -1);
  ql->add_flag("--json", json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  const Mode m = mode == "L" ? Mode::L : Mode::T;
  try {
    if (*check) return cmd_check(path, m, json);
    if (*classify) return cmd_classify(path, json);
    if (*chern) return cmd_chern(path, partition, json);
    if (*screen) return cmd_screen(path, json);
    if (*search) {
      if (!so.problem24 && so.spec_file.empty() && (so.m < 1 || so.n < 1 || so.bound < 1)) {
        std::cerr << "error: search needs --m, --n and --bound (or --spec / --problem24)\n";
        return kExitInput;
      }
      return cmd_search(so);
    }
    if (*ql) return cmd_quasilinear(seeds, json);
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
