#include "rigid/io.hpp"

#include <charconv>
#include <iomanip>
#include <sstream>

#include "rigid/error.hpp"

namespace rigid {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class T>
bool to_number(std::string_view tok, T& out) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

int parse_int(std::size_t line, std::string_view tok, const char* what) {
  int v = 0;
  if (!to_number(tok, v)) fail(line, std::string("expected integer ") + what + ", got '" + std::string(tok) + "'");
  return v;
}

int parse_sign_token(std::size_t line, std::string_view tok) {
  if (tok == "+" || tok == "+1" || tok == "1") return 1;
  if (tok == "-" || tok == "-1") return -1;
  fail(line, "sign must be + or -, got '" + std::string(tok) + "'");
}

Mode parse_mode(std::size_t line, std::string_view tok) {
  if (tok == "T" || tok == "t") return Mode::T;
  if (tok == "L" || tok == "l") return Mode::L;
  fail(line, "mode must be T or L, got '" + std::string(tok) + "'");
}

SearchSpec parse_search_line(std::size_t line, std::string_view rest) {
  SearchSpec spec;
  bool have_m = false, have_n = false, have_bound = false;
  for (std::string_view tok : split_ws(rest)) {
    const auto eq = tok.find('=');
    if (eq == std::string_view::npos) fail(line, "expected key=value, got '" + std::string(tok) + "'");
    const std::string_view key = tok.substr(0, eq);
    const std::string_view val = tok.substr(eq + 1);
    std::uint64_t u = 0;
    if (key == "m") {
      spec.m = static_cast<unsigned>(parse_int(line, val, "m")), have_m = true;
    } else if (key == "n") {
      spec.n = static_cast<unsigned>(parse_int(line, val, "n")), have_n = true;
    } else if (key == "bound") {
      spec.bound = parse_int(line, val, "bound"), have_bound = true;
    } else if (key == "mode") {
      spec.mode = parse_mode(line, val);
    } else if (key == "budget") {
      if (!to_number(val, u)) fail(line, "budget must be a non-negative integer");
      spec.budget.max_candidates = u;
    } else if (key == "exact-budget") {
      if (!to_number(val, u)) fail(line, "exact-budget must be a non-negative integer");
      spec.budget.max_exact_checks = u;
    } else if (key == "signs") {
      try {
        spec.fixed_signs = parse_signs(val);
      } catch (const Error& e) {
        fail(line, e.what());
      }
    } else if (key == "canonicalize") {
      spec.canonicalize = val != "false" && val != "0";
    } else {
      fail(line, "unknown search key '" + std::string(key) + "'");
    }
  }
  if (!have_m || !have_n || !have_bound) fail(line, "search needs m, n and bound");
  try {
    spec.validate();
  } catch (const Error& e) {
    fail(line, e.what());
  }
  return spec;
}

}  // namespace

Document parse_document(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t lineno = 0;
  for (std::size_t pos = 0; pos <= text.size();) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++lineno;
    std::string_view line = text.substr(pos, end - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) lines.emplace_back(lineno, line);
    pos = end + 1;
  }
  if (lines.empty()) fail(lineno, "empty document");

  const auto [first_no, first] = lines.front();
  auto declaration = [&](std::string_view keyword) -> std::optional<std::string_view> {
    if (first.substr(0, keyword.size()) != keyword) return std::nullopt;
    std::string_view rest = trim(first.substr(keyword.size()));
    if (rest.empty() || rest.front() != ':') return std::nullopt;
    if (lines.size() > 1) fail(lines[1].first, "unexpected content after declaration");
    return trim(rest.substr(1));
  };

  if (auto rest = declaration("quasilinear")) {
    QuasilinearSeed seed;
    for (std::string_view tok : split_ws(*rest)) seed.a.push_back(parse_int(first_no, tok, "seed"));
    if (seed.a.size() < 2) fail(first_no, "quasilinear needs at least two entries");
    return seed;
  }
  if (auto rest = declaration("search")) return parse_search_line(first_no, *rest);

  const auto header = split_ws(first);
  if (header.size() != 2) fail(first_no, "header must be 'm n'");
  const int m = parse_int(first_no, header[0], "m");
  const int n = parse_int(first_no, header[1], "n");
  if (m < 1 || n < 1) fail(first_no, "m and n must be positive");
  if (lines.size() - 1 != static_cast<std::size_t>(m)) {
    fail(lines.back().first, "expected " + std::to_string(m) + " rows, found " + std::to_string(lines.size() - 1));
  }

  std::vector<Row> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [no, line] = lines[i];
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) fail(no, "row must look like 'sign: w1 ... wn'");
    Row r;
    r.sign = parse_sign_token(no, trim(line.substr(0, colon)));
    for (std::string_view tok : split_ws(line.substr(colon + 1))) {
      const int w = parse_int(no, tok, "weight");
      if (w == 0) fail(no, "weights must be nonzero");
      r.weights.push_back(w);
    }
    if (r.weights.size() != static_cast<std::size_t>(n)) {
      fail(no, "expected " + std::to_string(n) + " weights, found " + std::to_string(r.weights.size()));
    }
    rows.push_back(std::move(r));
  }
  return WeightMatrix(std::move(rows));
}

Document parse_json_document(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("json: ") + e.what());
  }
  try {
    if (j.contains("quasilinear")) {
      QuasilinearSeed seed{j.at("quasilinear").get<std::vector<int>>()};
      if (seed.a.size() < 2) throw Error(ErrorCode::ParseError, "json: quasilinear needs at least two entries");
      return seed;
    }
    if (j.contains("search")) {
      const auto& s = j.at("search");
      SearchSpec spec;
      spec.m = s.at("m").get<unsigned>();
      spec.n = s.at("n").get<unsigned>();
      spec.bound = s.at("bound").get<int>();
      const std::string mode = s.value("mode", "T");
      spec.mode = parse_mode(1, mode);
      spec.budget.max_candidates = s.value("budget", spec.budget.max_candidates);
      spec.budget.max_exact_checks = s.value("exact_budget", spec.budget.max_exact_checks);
      if (s.contains("signs")) spec.fixed_signs = s.at("signs").get<std::vector<int>>();
      spec.canonicalize = s.value("canonicalize", true);
      spec.validate();
      return spec;
    }
    std::vector<Row> rows;
    for (const auto& r : j.at("rows")) rows.push_back(Row{r.at("weights").get<std::vector<int>>(), r.at("sign").get<int>()});
    WeightMatrix w(std::move(rows));
    if (j.contains("m") && j.at("m").get<std::size_t>() != w.m()) throw Error(ErrorCode::ParseError, "json: m does not match rows");
    if (j.contains("n") && j.at("n").get<std::size_t>() != w.n()) throw Error(ErrorCode::ParseError, "json: n does not match rows");
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("json: ") + e.what());
  }
}

WeightMatrix parse_matrix(std::string_view text, bool json) {
  Document doc = json ? parse_json_document(text) : parse_document(text);
  if (auto* w = std::get_if<WeightMatrix>(&doc)) return *w;
  if (auto* q = std::get_if<QuasilinearSeed>(&doc)) {
    try {
      return quasilinear(q->a);
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
  }
  throw Error(ErrorCode::ParseError, "expected a weight matrix, found a search declaration");
}

std::string render_matrix(const WeightMatrix& w) {
  std::ostringstream os;
  os << w.m() << ' ' << w.n() << '\n';
  for (const Row& r : w.rows()) {
    os << (r.sign > 0 ? '+' : '-') << ':';
    for (int v : r.weights) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

nlohmann::json matrix_to_json(const WeightMatrix& w) {
  nlohmann::json rows = nlohmann::json::array();
  for (const Row& r : w.rows()) rows.push_back({{"sign", r.sign}, {"weights", r.weights}});
  return {{"m", w.m()}, {"n", w.n()}, {"rows", rows}};
}

std::string render_partition(const ChernPartition& r) {
  std::string out;
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (r[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += "c" + std::to_string(k + 1);
    if (r[k] > 1) out += "^" + std::to_string(r[k]);
  }
  return out.empty() ? "c0" : out;
}

ChernPartition parse_partition(std::string_view text) {
  ChernPartition r;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = trim(text.substr(pos, end - pos));
    unsigned v = 0;
    if (!to_number(tok, v)) throw Error(ErrorCode::ParseError, "partition entries must be non-negative integers");
    r.push_back(v);
    pos = end + 1;
  }
  return r;
}

std::vector<int> parse_signs(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = trim(text.substr(pos, end - pos));
    if (tok == "+" || tok == "1" || tok == "+1") {
      out.push_back(1);
    } else if (tok == "-" || tok == "-1") {
      out.push_back(-1);
    } else {
      throw Error(ErrorCode::ParseError, "signs must be + or -, got '" + std::string(tok) + "'");
    }
    pos = end + 1;
  }
  return out;
}

namespace {

nlohmann::json spec_to_json(const SearchSpec& spec) {
  nlohmann::json j{{"record", "spec"},
                   {"m", spec.m},
                   {"n", spec.n},
                   {"bound", spec.bound},
                   {"mode", to_string(spec.mode)},
                   {"canonicalize", spec.canonicalize},
                   {"budget", spec.budget.max_candidates},
                   {"exact_budget", spec.budget.max_exact_checks}};
  j["signs"] = spec.fixed_signs ? nlohmann::json(*spec.fixed_signs) : nlohmann::json(nullptr);
  return j;
}

}  // namespace

std::string render_report_jsonl(const SearchReport& report) {
  std::ostringstream os;
  os << spec_to_json(report.spec).dump() << '\n';
  for (const Find& f : report.found) {
    nlohmann::json j{{"record", "find"},
                     {"matrix", matrix_to_json(f.matrix)["rows"]},
                     {"constant", f.constant.to_string()},
                     {"label", f.label},
                     {"kosniowski_ok", f.kosniowski_ok},
                     {"pairable", f.pairable},
                     {"unexpected_nonzero_l", f.unexpected_nonzero_l}};
    j["quasilinear_seed"] = f.quasilinear_seed ? nlohmann::json(*f.quasilinear_seed) : nlohmann::json(nullptr);
    os << j.dump() << '\n';
  }
  nlohmann::json summary{{"record", "summary"},
                         {"found", report.found.size()},
                         {"candidates", report.stats.candidates},
                         {"prefilter_rejections", report.stats.prefilter_rejections},
                         {"exact_checks", report.stats.exact_checks},
                         {"shards_total", report.stats.shards_total},
                         {"shards_completed", report.stats.shards_completed},
                         {"budget_exceeded", report.budget_exceeded},
                         {"alerts", report.alerts()}};
  os << summary.dump() << '\n';
  return os.str();
}

std::string render_report_table(const SearchReport& report) {
  std::ostringstream os;
  os << std::left << std::setw(40) << "matrix" << std::setw(28) << "constant" << std::setw(18) << "label"
     << "kosniowski pairable\n";
  for (const Find& f : report.found) {
    os << std::setw(40) << f.matrix.to_string() << ' ' << std::setw(27) << f.constant.to_string() << ' '
       << std::setw(17) << f.label << (f.kosniowski_ok ? "ok         " : "VIOLATED   ")
       << (f.pairable ? "yes" : "NO") << '\n';
  }
  return os.str();
}

std::string render_problem24_jsonl(unsigned n, int bound, const std::vector<Problem24Solution>& solutions) {
  std::ostringstream os;
  os << nlohmann::json{{"record", "spec"}, {"problem24", true}, {"n", n}, {"bound", bound}}.dump() << '\n';
  for (const auto& s : solutions) {
    os << nlohmann::json{{"record", "solution"}, {"a", s.a}, {"b", s.b}, {"c", s.c}}.dump() << '\n';
  }
  os << nlohmann::json{{"record", "summary"}, {"solutions", solutions.size()}}.dump() << '\n';
  return os.str();
}

}  // namespace rigid
