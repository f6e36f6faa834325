#include "rigid/search.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "rigid/error.hpp"

namespace rigid {

void SearchSpec::validate() const {
  if (m < 1) throw Error(ErrorCode::InvalidSearchSpec, "m must be at least 1");
  if (n < 1) throw Error(ErrorCode::InvalidSearchSpec, "n must be at least 1");
  if (bound < 1) throw Error(ErrorCode::InvalidSearchSpec, "bound must be at least 1");
  if (fixed_signs) {
    if (fixed_signs->size() != m) {
      throw Error(ErrorCode::InvalidSearchSpec, "fixed sign pattern must have m entries");
    }
    for (int s : *fixed_signs) {
      if (s != 1 && s != -1) throw Error(ErrorCode::InvalidSearchSpec, "signs must be +1 or -1");
    }
  }
}

WeightMatrix canonical_form(const WeightMatrix& w, Mode mode) {
  std::vector<Row> rows = mode == Mode::L ? normalize_signs_for_L(w).rows() : w.rows();
  for (Row& r : rows) std::sort(r.weights.begin(), r.weights.end(), std::greater<>());
  std::sort(rows.begin(), rows.end());
  return WeightMatrix(std::move(rows));
}

std::optional<std::vector<int>> quasilinearity_test(const WeightMatrix& w, Mode mode) {
  if (w.m() != w.n() + 1) {
    throw Error(ErrorCode::WrongShape, "quasilinear sets have m = n + 1, got m = " + std::to_string(w.m()) +
                                           ", n = " + std::to_string(w.n()));
  }
  const WeightMatrix target = canonical_form(w, mode);
  std::optional<WeightMatrix> reversed;
  if (mode == Mode::L) {
    std::vector<Row> rows = target.rows();
    for (Row& r : rows) r.sign = -r.sign;
    reversed = canonical_form(WeightMatrix(std::move(rows)), mode);
  }

  // Row 0 plays a_1 = 0, so its weights are -a_j. In L mode the weights'
  // original signs are unknown and every assignment is tried.
  const Row& first = target.row(0);
  const std::size_t n = w.n();
  const std::uint64_t assignments = mode == Mode::L ? (std::uint64_t{1} << n) : 1;
  for (std::uint64_t mask = 0; mask < assignments; ++mask) {
    std::vector<int> a{0};
    for (std::size_t j = 0; j < n; ++j) {
      int v = first.weights[j];
      if ((mask >> j) & 1) v = -v;
      a.push_back(-v);
    }
    std::vector<int> sorted = a;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;

    WeightMatrix q = canonical_form(quasilinear(a), mode);
    if (q == target || (reversed && q == *reversed)) {
      std::sort(a.begin() + 1, a.end());
      return a;
    }
  }
  return std::nullopt;
}

bool has_cancelling_pairs(const WeightMatrix& w, Mode mode) {
  std::map<std::vector<int>, int> balance;
  const WeightMatrix c = canonical_form(w, mode);
  for (const Row& r : c.rows()) balance[r.weights] += r.sign;
  return std::all_of(balance.begin(), balance.end(), [](const auto& kv) { return kv.second == 0; });
}

std::vector<Row> row_types(const SearchSpec& spec) {
  std::vector<int> values;
  if (spec.mode == Mode::T) {
    for (int v = -spec.bound; v <= -1; ++v) values.push_back(v);
  }
  for (int v = 1; v <= spec.bound; ++v) values.push_back(v);
  std::sort(values.begin(), values.end(), std::greater<>());

  std::vector<Row> out;
  std::vector<int> tuple(spec.n);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
    if (pos == spec.n) {
      out.push_back(Row{tuple, -1});
      out.push_back(Row{tuple, 1});
      return;
    }
    // canonical rows are non-increasing, i.e. value indices non-decreasing
    for (std::size_t i = spec.canonicalize ? from : 0; i < values.size(); ++i) {
      tuple[pos] = values[i];
      rec(pos + 1, i);
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SamplePoint> prefilter_points(Mode mode) {
  std::vector<SamplePoint> pts;
  for (long z : {2L, 3L}) {
    pts.push_back({z, 1, 1});
    if (mode == Mode::T) pts.push_back({z, 2, 1});
  }
  return pts;
}

std::vector<Rational> row_prefilter_deltas(const Row& row, Mode mode) {
  const WeightMatrix single({row});
  const LaurentRational series = mode == Mode::T ? t_series(single) : l_series(single);
  const BivarPoly constant = mode == Mode::T ? candidate_constant(single) : BivarPoly(candidate_l_constant(single));
  std::vector<Rational> out;
  for (const SamplePoint& p : prefilter_points(mode)) {
    Rational d = rational_eval(series, p.z, p.x, p.y) - constant.eval(p.x, p.y);
    d.canonicalize();
    out.push_back(d);
  }
  return out;
}

namespace {

struct Context {
  const SearchSpec& spec;
  std::vector<Row> rows;
  std::vector<std::vector<Rational>> deltas;
  int plus_signs_required = -1;  // canonical fixed-sign filter
};

struct ShardResult {
  std::vector<Find> found;
  std::uint64_t candidates = 0;
  std::uint64_t rejections = 0;
  std::uint64_t exact_checks = 0;
  bool aborted = false;
};

Find annotate(WeightMatrix w, const RigidityVerdict& verdict, const SearchSpec& spec) {
  Find f{std::move(w), verdict.constant(), "unclassified", std::nullopt, true, true, false};
  const auto m = static_cast<unsigned>(f.matrix.m());
  const auto n = static_cast<unsigned>(f.matrix.n());

  if (m == n + 1) f.quasilinear_seed = quasilinearity_test(f.matrix, spec.mode);
  if (spec.mode == Mode::T && m == 2) {
    f.label = classify_two_fixed_points(f.matrix).to_string();
  } else if (f.quasilinear_seed) {
    f.label = "quasilinear";
  } else if (has_cancelling_pairs(f.matrix, spec.mode)) {
    f.label = "cancelling-pairs";
  }

  const bool nonzero = !f.constant.is_zero();
  f.kosniowski_ok = !nonzero || m >= kosniowski_bound(n);
  f.pairable = pair_partition(normalize_signs_for_L(f.matrix)).has_value();
  if (spec.mode == Mode::L && nonzero && m <= n + 1) {
    const Integer l = *f.constant.as_constant();
    f.unexpected_nonzero_l = m < n + 1 || abs(l) != 1;
  }
  return f;
}

ShardResult run_shard(const Context& ctx, std::size_t first) {
  ShardResult res;
  const SearchSpec& spec = ctx.spec;
  const std::size_t m = spec.m;
  const std::size_t k = ctx.rows.size();
  const std::size_t npoints = ctx.deltas.front().size();

  std::vector<std::size_t> idx(m, 0);
  std::vector<std::vector<Rational>> partial(m, std::vector<Rational>(npoints));
  idx[0] = first;
  partial[0] = ctx.deltas[first];

  auto leaf = [&]() {
    ++res.candidates;
    if (spec.fixed_signs) {
      if (spec.canonicalize) {
        int plus = 0;
        for (std::size_t d = 0; d < m; ++d) plus += ctx.rows[idx[d]].sign > 0;
        if (plus != ctx.plus_signs_required) return;
      } else {
        for (std::size_t d = 0; d < m; ++d) {
          if (ctx.rows[idx[d]].sign != (*spec.fixed_signs)[d]) return;
        }
      }
    }
    for (const Rational& v : partial[m - 1]) {
      if (v != 0) {
        ++res.rejections;
        return;
      }
    }
    if (res.exact_checks >= spec.budget.max_exact_checks) {
      res.aborted = true;
      return;
    }
    ++res.exact_checks;
    std::vector<Row> rows;
    rows.reserve(m);
    for (std::size_t d = 0; d < m; ++d) rows.push_back(ctx.rows[idx[d]]);
    WeightMatrix w(std::move(rows));
    RigidityVerdict verdict = is_rigid(w, spec.mode);
    if (verdict.is_rigid()) res.found.push_back(annotate(std::move(w), verdict, spec));
  };

  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (res.aborted) return;
    if (depth == m) {
      leaf();
      return;
    }
    for (std::size_t t = spec.canonicalize ? idx[depth - 1] : 0; t < k && !res.aborted; ++t) {
      idx[depth] = t;
      for (std::size_t p = 0; p < npoints; ++p) partial[depth][p] = partial[depth - 1][p] + ctx.deltas[t][p];
      rec(depth + 1);
    }
  };
  rec(1);
  return res;
}

Integer shard_size(const SearchSpec& spec, std::size_t k, std::size_t first) {
  Integer out;
  const unsigned long rest = spec.m - 1;
  if (spec.canonicalize) {
    // multisets of size m-1 drawn from the k - first types at or after `first`
    mpz_bin_uiui(out.get_mpz_t(), k - first + rest - 1, rest);
  } else {
    mpz_ui_pow_ui(out.get_mpz_t(), k, rest);
  }
  return out;
}

Context make_context(const SearchSpec& spec) {
  Context ctx{spec, row_types(spec), {}, -1};
  ctx.deltas.reserve(ctx.rows.size());
  for (const Row& r : ctx.rows) ctx.deltas.push_back(row_prefilter_deltas(r, spec.mode));
  if (spec.fixed_signs) {
    ctx.plus_signs_required =
        static_cast<int>(std::count(spec.fixed_signs->begin(), spec.fixed_signs->end(), 1));
  }
  return ctx;
}

// Shards whose cumulative raw size stays within the candidate budget.
std::size_t admitted_shards(const SearchSpec& spec, std::size_t k) {
  Integer total = 0;
  const Integer cap(std::to_string(spec.budget.max_candidates));
  for (std::size_t s = 0; s < k; ++s) {
    total += shard_size(spec, k, s);
    if (total > cap) return s;
  }
  return k;
}

SearchReport merge(const SearchSpec& spec, std::size_t k, std::vector<ShardResult>& shards) {
  SearchReport report{spec, {}, {}, shards.size() < k};
  report.stats.shards_total = k;
  for (ShardResult& s : shards) {
    if (s.aborted || report.stats.exact_checks + s.exact_checks > spec.budget.max_exact_checks) {
      report.budget_exceeded = true;
      break;
    }
    report.stats.candidates += s.candidates;
    report.stats.prefilter_rejections += s.rejections;
    report.stats.exact_checks += s.exact_checks;
    ++report.stats.shards_completed;
    std::move(s.found.begin(), s.found.end(), std::back_inserter(report.found));
  }
  return report;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

SearchReport sweep_serial(const SearchSpec& spec) {
  spec.validate();
  const auto t0 = Clock::now();
  const Context ctx = make_context(spec);
  const std::size_t k = ctx.rows.size();
  const std::size_t admitted = admitted_shards(spec, k);

  std::vector<ShardResult> shards;
  shards.reserve(admitted);
  for (std::size_t s = 0; s < admitted; ++s) shards.push_back(run_shard(ctx, s));

  SearchReport report = merge(spec, k, shards);
  report.stats.wall_seconds = seconds_since(t0);
  return report;
}

SearchReport sweep_parallel(const SearchSpec& spec, int threads) {
  spec.validate();
  const auto t0 = Clock::now();
  const Context ctx = make_context(spec);
  const std::size_t k = ctx.rows.size();
  const std::size_t admitted = admitted_shards(spec, k);
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();

  std::vector<ShardResult> shards(admitted);
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
  for (std::ptrdiff_t s = 0; s < static_cast<std::ptrdiff_t>(admitted); ++s) {
    shards[s] = run_shard(ctx, static_cast<std::size_t>(s));
  }

  SearchReport report = merge(spec, k, shards);
  report.stats.wall_seconds = seconds_since(t0);
  return report;
}

SearchReport sweep(const SearchSpec& spec, int threads) {
  return threads == 1 ? sweep_serial(spec) : sweep_parallel(spec, threads);
}

std::vector<std::string> SearchReport::alerts() const {
  std::vector<std::string> out;
  for (const Find& f : found) {
    const std::string where = f.matrix.to_string() + " (constant " + f.constant.to_string() + ")";
    const auto m = f.matrix.m();
    const auto n = f.matrix.n();
    if (!f.kosniowski_ok) {
      out.push_back("KOSNIOWSKI BOUND VIOLATED: m = " + std::to_string(m) + " < floor(n/2)+1 = " +
                    std::to_string(kosniowski_bound(static_cast<unsigned>(n))) + " for " + where);
    }
    if (!f.pairable) out.push_back("NO CROSS-ROW PAIRING of equal weights for " + where);
    if (f.unexpected_nonzero_l) out.push_back("NONZERO L WITH m <= n+1 BUT NOT (m = n+1, |L| = 1): " + where);
    if (spec.mode == Mode::T && m == 2 && f.label == "NotClassified") {
      out.push_back("RIGID m = 2 SET OUTSIDE Z/L1/S3: " + where);
    }
    if (m == 3 && n == 2 && !f.quasilinear_seed) out.push_back("RIGID m = 3, n = 2 SET NOT QUASILINEAR: " + where);
  }
  return out;
}

// ------------------------------------------------------------------ L(a) + L(b) = L(c) + 1

namespace {

std::vector<std::vector<int>> ascending_lists(unsigned n, int bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n);
  std::function<void(unsigned, int)> rec = [&](unsigned pos, int from) {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    for (int v = from; v <= bound; ++v) {
      cur[pos] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, 1);
  return out;
}

struct Problem24Tables {
  std::vector<std::vector<int>> lists;
  std::vector<std::vector<Rational>> plus, minus;
};

Problem24Tables make_tables(unsigned n, int bound) {
  if (n < 1 || bound < 1) throw Error(ErrorCode::InvalidSearchSpec, "n and bound must be positive");
  Problem24Tables t{ascending_lists(n, bound), {}, {}};
  for (const auto& l : t.lists) {
    t.plus.push_back(row_prefilter_deltas(Row{l, 1}, Mode::L));
    t.minus.push_back(row_prefilter_deltas(Row{l, -1}, Mode::L));
  }
  return t;
}

std::vector<Problem24Solution> problem24_block(const Problem24Tables& t, std::size_t i) {
  std::vector<Problem24Solution> out;
  const std::size_t count = t.lists.size();
  const std::size_t npoints = t.plus[i].size();
  std::vector<Rational> ab(npoints);
  for (std::size_t j = i; j < count; ++j) {
    for (std::size_t p = 0; p < npoints; ++p) ab[p] = t.plus[i][p] + t.plus[j][p];
    for (std::size_t c = 0; c < count; ++c) {
      bool zero = true;
      for (std::size_t p = 0; p < npoints && zero; ++p) zero = ab[p] + t.minus[c][p] == 0;
      if (!zero) continue;
      Problem24Solution s{t.lists[i], t.lists[j], t.lists[c]};
      if (is_l_rigid(problem_2_4_matrix(s)).is_rigid()) out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace

WeightMatrix problem_2_4_matrix(const Problem24Solution& s) {
  return WeightMatrix({Row{s.a, 1}, Row{s.b, 1}, Row{s.c, -1}});
}

std::vector<Problem24Solution> problem_2_4_search_serial(unsigned n, int bound) {
  const Problem24Tables t = make_tables(n, bound);
  std::vector<Problem24Solution> out;
  for (std::size_t i = 0; i < t.lists.size(); ++i) {
    auto block = problem24_block(t, i);
    std::move(block.begin(), block.end(), std::back_inserter(out));
  }
  return out;
}

std::vector<Problem24Solution> problem_2_4_search(unsigned n, int bound, int threads) {
  if (threads == 1) return problem_2_4_search_serial(n, bound);
  const Problem24Tables t = make_tables(n, bound);
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
  std::vector<std::vector<Problem24Solution>> blocks(t.lists.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(t.lists.size()); ++i) {
    blocks[i] = problem24_block(t, static_cast<std::size_t>(i));
  }
  std::vector<Problem24Solution> out;
  for (auto& b : blocks) std::move(b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace rigid
