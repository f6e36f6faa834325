#pragma once

// Exhaustive enumeration of weight matrices with bounded entries.
//
// Candidates are generated directly in canonical form: rows are non-increasing
// weight tuples, and the row list is non-decreasing in (weights, sign). The
// first row's position in the row-type list defines a shard. Shards are
// independent, so the parallel kernel runs them under OpenMP and the merge is
// a concatenation in shard order; sweep_serial runs the same shards in a
// plain loop and is the reference the parallel kernel is tested against.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rigid/algebra.hpp"
#include "rigid/bott.hpp"
#include "rigid/rigidity.hpp"
#include "rigid/weights.hpp"

namespace rigid {

struct SearchBudget {
  std::uint64_t max_candidates = 10'000'000;
  std::uint64_t max_exact_checks = 100'000;
};

struct SearchSpec {
  unsigned m = 2;
  unsigned n = 1;
  int bound = 1;
  Mode mode = Mode::T;
  /// When set, only sign assignments with this multiset of signs are kept
  /// (exact per-row pattern when canonicalize is false).
  std::optional<std::vector<int>> fixed_signs;
  /// false enumerates every ordered matrix instead of canonical representatives.
  bool canonicalize = true;
  SearchBudget budget;

  /// Throws InvalidSearchSpec.
  void validate() const;
};

struct Find {
  WeightMatrix matrix;
  BivarPoly constant;
  /// Z / L1 / S3 / NotClassified for T-mode m = 2; otherwise a structural
  /// tag: "quasilinear", "cancelling-pairs" or "unclassified".
  std::string label;
  std::optional<std::vector<int>> quasilinear_seed;
  bool kosniowski_ok = true;
  bool pairable = true;
  /// L mode, m <= n+1, L != 0, and m < n+1 or |L| != 1.
  bool unexpected_nonzero_l = false;
};

struct SearchStats {
  std::uint64_t candidates = 0;
  std::uint64_t prefilter_rejections = 0;
  std::uint64_t exact_checks = 0;
  std::uint64_t shards_total = 0;
  std::uint64_t shards_completed = 0;
  double wall_seconds = 0.0;
};

struct SearchReport {
  SearchSpec spec;
  std::vector<Find> found;
  SearchStats stats;
  bool budget_exceeded = false;

  /// Human-readable lines for every find that contradicts a classification
  /// result or the fixed-point lower bound.
  std::vector<std::string> alerts() const;
};

/// Rows sorted descending (L mode: after normalize_signs_for_L), then the row
/// list sorted ascending by (weights, sign).
WeightMatrix canonical_form(const WeightMatrix& w, Mode mode);

/// Some(a) with a[0] = 0 when w is quasilinear(a) up to row and column order.
/// In L mode the weights' signs are recovered and a global sign flip of all
/// rows is also accepted. Throws WrongShape unless m = n + 1.
std::optional<std::vector<int>> quasilinearity_test(const WeightMatrix& w, Mode mode = Mode::T);

/// True when the rows cancel in identical pairs of opposite sign.
bool has_cancelling_pairs(const WeightMatrix& w, Mode mode);

/// Row types the enumeration draws from, in canonical order.
std::vector<Row> row_types(const SearchSpec& spec);

/// Signs-and-shape sample points used by the pre-filter.
std::vector<SamplePoint> prefilter_points(Mode mode);

/// Exact evaluation of one row's contribution minus its share of the
/// candidate constant at each pre-filter point. Zero sums are necessary for
/// rigidity.
std::vector<Rational> row_prefilter_deltas(const Row& row, Mode mode);

SearchReport sweep_serial(const SearchSpec& spec);
/// threads <= 0 uses the OpenMP default.
SearchReport sweep_parallel(const SearchSpec& spec, int threads = 0);
/// Serial for threads == 1, parallel otherwise.
SearchReport sweep(const SearchSpec& spec, int threads = 0);

struct Problem24Solution {
  std::vector<int> a, b, c;
  auto operator<=>(const Problem24Solution&) const = default;
};

/// All (a, b, c), entries in [1, bound], each list ascending and a <= b, with
/// L(a) + L(b) = L(c) + 1 as an identity in z.
std::vector<Problem24Solution> problem_2_4_search(unsigned n, int bound, int threads = 0);
std::vector<Problem24Solution> problem_2_4_search_serial(unsigned n, int bound);

/// Rows a(+), b(+), c(-).
WeightMatrix problem_2_4_matrix(const Problem24Solution& s);

}  // namespace rigid
