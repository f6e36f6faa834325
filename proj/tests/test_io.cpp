#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "rigid/error.hpp"
#include "rigid/io.hpp"
#include "test_support.hpp"

using namespace rigid;

namespace {

WeightMatrix mat(std::initializer_list<Row> rows) { return WeightMatrix(std::vector<Row>(rows)); }

std::string parse_error(std::string_view text) {
  try {
    parse_document(text);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("text matrices") {
  const Document doc = parse_document("# two-sphere\n2 1\n+: 1\n\n+: -1  # second row\n");
  REQUIRE(std::holds_alternative<WeightMatrix>(doc));
  CHECK(std::get<WeightMatrix>(doc) == mat({{{1}, 1}, {{-1}, 1}}));

  CHECK(parse_matrix("1 3\n-1: 2 -3 5\n", false) == mat({{{2, -3, 5}, -1}}));
}

TEST_CASE("errors carry line numbers") {
  CHECK(parse_error("2 1\n+: 1\n").find("line 2") == 0);
  CHECK(parse_error("1 2\n+: 1\n").find("line 2") == 0);
  CHECK(parse_error("1 1\n\n*: 1\n").find("line 3") == 0);
  CHECK(parse_error("1 1\n+: 0\n").find("line 2") == 0);
  CHECK(parse_error("1 1\n+: x\n").find("line 2") == 0);
  CHECK(parse_error("x 1\n").find("line 1") == 0);
  CHECK(parse_error("# nothing\n").find("empty") != std::string::npos);
  CHECK(parse_error("quasilinear: 0 1\n2 1\n").find("line 2") == 0);
}

TEST_CASE("declarations") {
  const Document q = parse_document("quasilinear: 0 1 2\n");
  REQUIRE(std::holds_alternative<QuasilinearSeed>(q));
  CHECK(std::get<QuasilinearSeed>(q).a == std::vector<int>{0, 1, 2});
  CHECK(parse_matrix("quasilinear: 0 1 2", false) == quasilinear({0, 1, 2}));
  CHECK_THROWS_AS(parse_matrix("quasilinear: 1 1", false), Error);

  const Document s = parse_document("search: m=3 n=2 bound=8 mode=L budget=500 exact-budget=7 signs=+,+,- canonicalize=false");
  REQUIRE(std::holds_alternative<SearchSpec>(s));
  const SearchSpec& spec = std::get<SearchSpec>(s);
  CHECK(spec.m == 3);
  CHECK(spec.n == 2);
  CHECK(spec.bound == 8);
  CHECK(spec.mode == Mode::L);
  CHECK(spec.budget.max_candidates == 500);
  CHECK(spec.budget.max_exact_checks == 7);
  CHECK(spec.fixed_signs == std::vector<int>{1, 1, -1});
  CHECK_FALSE(spec.canonicalize);

  CHECK(parse_error("search: m=2 n=1").find("line 1") == 0);
  CHECK(parse_error("search: m=2 n=1 bound=2 colour=red").find("line 1") == 0);
  CHECK_THROWS_AS(parse_matrix("search: m=2 n=1 bound=2", false), Error);
}

TEST_CASE("json documents") {
  const WeightMatrix w = parse_matrix(R"({"m": 2, "n": 1, "rows": [{"sign": 1, "weights": [1]}, {"sign": 1, "weights": [-1]}]})", true);
  CHECK(w == mat({{{1}, 1}, {{-1}, 1}}));
  CHECK(parse_matrix(R"({"quasilinear": [0, 2, 5]})", true) == quasilinear({0, 2, 5}));

  const Document s = parse_json_document(R"({"search": {"m": 2, "n": 3, "bound": 5, "mode": "T", "signs": [1, -1]}})");
  REQUIRE(std::holds_alternative<SearchSpec>(s));
  CHECK(std::get<SearchSpec>(s).n == 3);
  CHECK(std::get<SearchSpec>(s).fixed_signs == std::vector<int>{1, -1});

  CHECK_THROWS_AS(parse_json_document("{"), Error);
  CHECK_THROWS_AS(parse_json_document(R"({"m": 3, "rows": [{"sign": 1, "weights": [1]}]})"), Error);
  CHECK_THROWS_AS(parse_json_document(R"({"rows": [{"sign": 1, "weights": [0]}]})"), Error);
}

TEST_CASE("round trip through both formats") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const WeightMatrix w = rigid::testing::random_matrix(rng, 1 + trial % 5, 1 + trial % 4, 12, false);
    CHECK(parse_matrix(render_matrix(w), false) == w);
    CHECK(parse_matrix(matrix_to_json(w).dump(), true) == w);
    CHECK(canonical_form(parse_matrix(render_matrix(w), false), Mode::T) == canonical_form(w, Mode::T));
  }
}

TEST_CASE("partitions and signs") {
  CHECK(render_partition({0, 0, 0}) == "c0");
  CHECK(render_partition({2, 0, 1}) == "c1^2*c3");
  CHECK(render_partition({0, 1}) == "c2");
  CHECK(parse_partition("2,0,1") == ChernPartition{2, 0, 1});
  CHECK_THROWS_AS(parse_partition("1,-1"), Error);
  CHECK(parse_signs("+,-,+") == std::vector<int>{1, -1, 1});
  CHECK(parse_signs("1,-1") == std::vector<int>{1, -1});
  CHECK_THROWS_AS(parse_signs("+,?"), Error);
}

TEST_CASE("report is deterministic across thread counts") {
  SearchSpec spec;
  spec.m = 3;
  spec.n = 2;
  spec.bound = 4;
  spec.mode = Mode::L;
  const std::string serial = render_report_jsonl(sweep_serial(spec));
  for (int threads : {2, 4, 7}) CHECK(render_report_jsonl(sweep_parallel(spec, threads)) == serial);

  std::istringstream lines(serial);
  std::string line;
  std::vector<std::string> kinds;
  while (std::getline(lines, line)) kinds.push_back(nlohmann::json::parse(line).at("record").get<std::string>());
  REQUIRE(kinds.size() >= 2);
  CHECK(kinds.front() == "spec");
  CHECK(kinds.back() == "summary");
  CHECK(serial.find("wall") == std::string::npos);
}

TEST_CASE("problem24 report") {
  const std::string out = render_problem24_jsonl(2, 4, problem_2_4_search_serial(2, 4));
  CHECK(out.find(R"("a":[1,2])") != std::string::npos);
  CHECK(out.find(R"("solutions":4)") != std::string::npos);
}
