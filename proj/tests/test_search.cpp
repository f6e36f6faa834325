#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "rigid/error.hpp"
#include "rigid/search.hpp"
#include "test_support.hpp"

using namespace rigid;
using rigid::testing::random_distinct;

namespace {

WeightMatrix mat(std::initializer_list<Row> rows) { return WeightMatrix(std::vector<Row>(rows)); }

std::set<std::string> canonical_set(const std::vector<Find>& found, Mode mode) {
  std::set<std::string> out;
  for (const Find& f : found) out.insert(canonical_form(f.matrix, mode).to_string());
  return out;
}

std::vector<std::string> matrices(const SearchReport& r) {
  std::vector<std::string> out;
  for (const Find& f : r.found) out.push_back(f.matrix.to_string());
  return out;
}

SearchSpec spec_of(unsigned m, unsigned n, int bound, Mode mode) {
  SearchSpec s;
  s.m = m;
  s.n = n;
  s.bound = bound;
  s.mode = mode;
  return s;
}

}  // namespace

TEST_CASE("canonical_form") {
  const WeightMatrix w = mat({{{-1, 2}, -1}, {{1, 3}, 1}});
  const WeightMatrix c = canonical_form(w, Mode::T);
  CHECK(c.to_string() == mat({{{2, -1}, -1}, {{3, 1}, 1}}).to_string());
  CHECK(canonical_form(c, Mode::T) == c);

  // L mode flips negative weights into the row sign first
  const WeightMatrix l = canonical_form(w, Mode::L);
  CHECK(l == mat({{{2, 1}, 1}, {{3, 1}, 1}}));
  CHECK(canonical_form(l, Mode::L) == l);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const WeightMatrix r = rigid::testing::random_matrix(rng, 3, 3, 5, false);
    std::vector<Row> rows = r.rows();
    std::shuffle(rows.begin(), rows.end(), rng);
    for (Row& row : rows) std::shuffle(row.weights.begin(), row.weights.end(), rng);
    CHECK(canonical_form(WeightMatrix(rows), Mode::T) == canonical_form(r, Mode::T));
    CHECK(canonical_form(WeightMatrix(rows), Mode::L) == canonical_form(r, Mode::L));
  }
}

TEST_CASE("quasilinearity_test") {
  CHECK(quasilinearity_test(quasilinear({0, 1, 2})) == std::vector<int>{0, 1, 2});
  CHECK(quasilinearity_test(quasilinear({3, 4, 5})) == std::vector<int>{0, 1, 2});
  CHECK(quasilinearity_test(quasilinear({0, 2, 5})) == std::vector<int>{0, 2, 5});
  CHECK_FALSE(quasilinearity_test(mat({{{1, 1}, 1}, {{1, 1}, 1}, {{1, 1}, 1}})));
  try {
    quasilinearity_test(mat({{{1}, 1}}));
    FAIL("wrong shape accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::WrongShape);
  }

  SUBCASE("recovers shuffled quasilinear sets") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 1 + trial % 4;
      std::vector<int> a = random_distinct(rng, n + 1, 8);
      std::vector<Row> rows = quasilinear(a).rows();
      std::shuffle(rows.begin(), rows.end(), rng);
      for (Row& r : rows) std::shuffle(r.weights.begin(), r.weights.end(), rng);
      const auto seed = quasilinearity_test(WeightMatrix(rows));
      REQUIRE(seed);
      CHECK(canonical_form(quasilinear(*seed), Mode::T) == canonical_form(WeightMatrix(rows), Mode::T));
    }
  }

  SUBCASE("L mode sees through sign normalization") {
    const WeightMatrix q = normalize_signs_for_L(quasilinear({0, 1, 3}));
    CHECK(quasilinearity_test(q, Mode::L));
    CHECK_FALSE(quasilinearity_test(q, Mode::T));
  }
}

TEST_CASE("row_types and pre-filter") {
  const auto types = row_types(spec_of(2, 2, 2, Mode::T));
  // non-increasing pairs from {2, 1, -1, -2}: 10, each with two signs
  CHECK(types.size() == 20);
  CHECK(std::is_sorted(types.begin(), types.end()));
  CHECK(row_types(spec_of(2, 2, 2, Mode::L)).size() == 6);
  CHECK(prefilter_points(Mode::T).size() == 4);
  CHECK(prefilter_points(Mode::L).size() == 2);

  // deltas of rows summing to a rigid set sum to zero
  const WeightMatrix q = quasilinear({0, 1, 2});
  std::vector<Rational> total(prefilter_points(Mode::T).size(), 0);
  for (const Row& r : q.rows()) {
    const auto d = row_prefilter_deltas(r, Mode::T);
    for (std::size_t i = 0; i < d.size(); ++i) total[i] += d[i];
  }
  for (const Rational& v : total) CHECK(v == 0);
}

TEST_CASE("sweep m=2 n=1 bound=3 in T mode") {
  const SearchReport r = sweep_serial(spec_of(2, 1, 3, Mode::T));
  std::set<std::string> expected;
  for (int a = 1; a <= 3; ++a) {
    for (int s : {1, -1}) {
      expected.insert(canonical_form(mat({{{a}, s}, {{-a}, s}}), Mode::T).to_string());
      expected.insert(canonical_form(mat({{{s * a}, 1}, {{s * a}, -1}}), Mode::T).to_string());
    }
  }
  CHECK(expected.size() == 12);
  CHECK(canonical_set(r.found, Mode::T) == expected);
  CHECK(r.found.size() == 12);
  CHECK_FALSE(r.budget_exceeded);
  for (const Find& f : r.found) CHECK(f.label != "NotClassified");
  CHECK(r.alerts().empty());
  CHECK(r.stats.exact_checks + r.stats.prefilter_rejections <= r.stats.candidates);
}

TEST_CASE("serial and parallel kernels agree") {
  for (const SearchSpec& spec : {spec_of(2, 2, 3, Mode::T), spec_of(3, 2, 4, Mode::L), spec_of(4, 1, 4, Mode::L)}) {
    const SearchReport s = sweep_serial(spec);
    for (int threads : {2, 3, 8}) {
      const SearchReport p = sweep_parallel(spec, threads);
      CHECK(matrices(p) == matrices(s));
      CHECK(p.stats.candidates == s.stats.candidates);
      CHECK(p.stats.exact_checks == s.stats.exact_checks);
      CHECK(p.stats.prefilter_rejections == s.stats.prefilter_rejections);
    }
  }
}

TEST_CASE("canonical enumeration loses nothing") {
  for (const SearchSpec& base : {spec_of(2, 2, 2, Mode::T), spec_of(3, 1, 3, Mode::L), spec_of(3, 2, 3, Mode::L)}) {
    SearchSpec all = base;
    all.canonicalize = false;
    const SearchReport c = sweep_serial(base);
    const SearchReport a = sweep_serial(all);
    CHECK(canonical_set(a.found, base.mode) == canonical_set(c.found, base.mode));
    CHECK(a.found.size() >= c.found.size());
  }
}

TEST_CASE("every find is exactly rigid") {
  const SearchReport r = sweep_serial(spec_of(3, 2, 4, Mode::L));
  REQUIRE_FALSE(r.found.empty());
  for (const Find& f : r.found) {
    const RigidityVerdict v = is_l_rigid(f.matrix);
    REQUIRE(v.is_rigid());
    CHECK(v.constant() == f.constant);
  }
}

TEST_CASE("budgets") {
  const SearchSpec full = spec_of(2, 2, 3, Mode::T);
  const SearchReport all = sweep_serial(full);

  SUBCASE("candidate budget keeps a prefix of shards") {
    SearchSpec s = full;
    s.budget.max_candidates = 200;
    const SearchReport r = sweep_serial(s);
    CHECK(r.budget_exceeded);
    CHECK(r.stats.shards_completed < r.stats.shards_total);
    CHECK(r.stats.candidates <= 200);
    const auto got = matrices(r), want = matrices(all);
    REQUIRE(got.size() <= want.size());
    CHECK(std::equal(got.begin(), got.end(), want.begin()));
    CHECK(matrices(sweep_parallel(s, 4)) == got);
  }
  SUBCASE("exact-check budget") {
    SearchSpec s = full;
    s.budget.max_exact_checks = 3;
    const SearchReport r = sweep_serial(s);
    CHECK(r.budget_exceeded);
    CHECK(r.stats.exact_checks <= 3);
    CHECK(r.found.size() <= 3);
    CHECK(matrices(sweep_parallel(s, 4)) == matrices(r));
  }
  SUBCASE("generous budget is not exceeded") {
    SearchSpec s = full;
    s.budget.max_candidates = all.stats.candidates;
    CHECK_FALSE(sweep_serial(s).budget_exceeded);
  }
}

TEST_CASE("fixed signs") {
  SearchSpec s = spec_of(2, 1, 3, Mode::T);
  s.fixed_signs = std::vector<int>{1, 1};
  const SearchReport r = sweep_serial(s);
  CHECK(r.found.size() == 3);
  for (const Find& f : r.found) {
    CHECK(f.label == "L1");
    for (const Row& row : f.matrix.rows()) CHECK(row.sign == 1);
  }
}

TEST_CASE("invalid specs") {
  SearchSpec s = spec_of(0, 1, 1, Mode::T);
  CHECK_THROWS_AS(s.validate(), Error);
  s = spec_of(2, 1, 0, Mode::T);
  CHECK_THROWS_AS(sweep_serial(s), Error);
  s = spec_of(2, 1, 2, Mode::T);
  s.fixed_signs = std::vector<int>{1};
  CHECK_THROWS_AS(sweep_serial(s), Error);
}

TEST_CASE("problem_2_4_search") {
  const std::vector<Problem24Solution> expected{
      {{1, 2}, {1, 2}, {1, 1}},
      {{1, 3}, {2, 3}, {1, 2}},
      {{1, 4}, {3, 4}, {1, 3}},
      {{2, 4}, {2, 4}, {2, 2}},
  };
  const auto found = problem_2_4_search_serial(2, 4);
  CHECK(found == expected);
  CHECK(problem_2_4_search(2, 4, 4) == expected);
  CHECK(problem_2_4_search(1, 3, 2).empty());
  for (const auto& s : found) CHECK(is_l_rigid(problem_2_4_matrix(s)).is_rigid());
  CHECK(problem_2_4_matrix(expected[0]).row(2).sign == -1);
}
