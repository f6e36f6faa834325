#include "rigid/rigidity.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "rigid/error.hpp"

namespace rigid {

const char* to_string(Mode mode) { return mode == Mode::T ? "T" : "L"; }

LaurentRational term_fraction(int w) {
  if (w == 0) throw Error(ErrorCode::ZeroWeight, "weight must be nonzero");
  const std::int64_t a = std::llabs(w);
  LaurentPoly num;
  if (w > 0) {
    num = LaurentPoly::term(BivarPoly::x(), a) + LaurentPoly(BivarPoly::y());
  } else {
    // (x z^-a + y)/(z^-a - 1) = -(x + y z^a)/(z^a - 1)
    num = LaurentPoly(-BivarPoly::x()) + LaurentPoly::term(-BivarPoly::y(), a);
  }
  return {std::move(num), DenomFactors::single(a)};
}

namespace {

LaurentRational series(const WeightMatrix& w, bool at_unit_point) {
  LaurentRational total;
  for (const Row& row : w.rows()) {
    LaurentRational prod{LaurentPoly(BivarPoly(row.sign)), DenomFactors{}};
    for (int weight : row.weights) {
      LaurentRational f = term_fraction(weight);
      if (at_unit_point) f = f.specialize(1, 1);
      prod = rational_mul(prod, f);
    }
    total = rational_add(total, prod);
  }
  return total;
}

RigidityVerdict decide(const LaurentRational& r, const BivarPoly& constant, bool at_unit_point) {
  LaurentPoly residual = r.num - r.den.expand() * constant;
  if (residual.is_zero()) return RigidityVerdict::rigid(constant);

  Witness witness;
  witness.residual_low_degree = residual.low_degree();
  witness.residual_low_coefficient = residual.coefficient(residual.low_degree());

  for (long z : kWitnessZ) {
    for (auto [x, y] : kWitnessXY) {
      if (at_unit_point && (x != 1 || y != 1)) continue;
      Rational value = rational_eval(r, z, x, y);
      Rational expected = constant.eval(Rational(x), Rational(y));
      if (value != expected) {
        witness.point = SamplePoint{z, x, y};
        witness.value_at_point = value;
        witness.expected_constant_at_point = expected;
        return RigidityVerdict::not_rigid(std::move(witness));
      }
    }
  }
  return RigidityVerdict::not_rigid(std::move(witness));
}

}  // namespace

LaurentRational t_series(const WeightMatrix& w) { return series(w, false); }

LaurentRational l_series(const WeightMatrix& w) { return series(w, true); }

BivarPoly candidate_constant(const WeightMatrix& w) {
  BivarPoly sum;
  for (const Row& row : w.rows()) {
    const int pos = row.positives();
    const int neg = row.negatives();
    const long sign = (neg % 2 == 0 ? 1 : -1) * row.sign;
    sum += BivarPoly::monomial(sign, pos, neg);
  }
  return sum;
}

Integer candidate_l_constant(const WeightMatrix& w) { return candidate_constant(w).eval(Integer(1), Integer(1)); }

RigidityVerdict is_rigid(const WeightMatrix& w) {
  return decide(t_series(w), candidate_constant(w), false);
}

RigidityVerdict is_l_rigid(const WeightMatrix& w) {
  return decide(l_series(w), BivarPoly(candidate_l_constant(w)), true);
}

RigidityVerdict is_rigid(const WeightMatrix& w, Mode mode) {
  return mode == Mode::T ? is_rigid(w) : is_l_rigid(w);
}

WeightMatrix normalize_signs_for_L(const WeightMatrix& w) {
  std::vector<Row> rows = w.rows();
  for (Row& r : rows) {
    if (r.negatives() % 2 != 0) r.sign = -r.sign;
    for (int& x : r.weights) x = std::abs(x);
  }
  return WeightMatrix(std::move(rows));
}

bool parity_check(const WeightMatrix& w, const Integer& l_constant) {
  const long m = static_cast<long>(w.m());
  if (w.n() % 2 == 1) return l_constant == 0 && m % 2 == 0;
  Integer diff = l_constant - m;
  return mpz_even_p(diff.get_mpz_t()) != 0;
}

WeightMatrix quasilinear(const std::vector<int>& a) {
  if (a.size() < 2) throw Error(ErrorCode::InvalidMatrix, "quasilinear needs at least two entries");
  std::set<int> seen(a.begin(), a.end());
  if (seen.size() != a.size()) throw Error(ErrorCode::DuplicateEntries, "quasilinear entries must be distinct");

  std::vector<Row> rows;
  rows.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Row r;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j != i) r.weights.push_back(a[i] - a[j]);
    }
    rows.push_back(std::move(r));
  }
  return WeightMatrix(std::move(rows));
}

std::optional<WeightPairing> pair_partition(const WeightMatrix& w) {
  // value -> row -> column positions still unpaired
  std::map<int, std::map<std::size_t, std::vector<std::size_t>>> occurrences;
  for (std::size_t i = 0; i < w.m(); ++i) {
    for (std::size_t j = 0; j < w.n(); ++j) {
      int v = w.row(i).weights[j];
      if (v <= 0) throw Error(ErrorCode::InvalidMatrix, "pair_partition expects positive weights");
      occurrences[v][i].push_back(j);
    }
  }

  for (const auto& [v, by_row] : occurrences) {
    std::size_t total = 0, largest = 0;
    for (const auto& [row, cols] : by_row) {
      total += cols.size();
      largest = std::max(largest, cols.size());
    }
    if (total % 2 != 0 || 2 * largest > total) return std::nullopt;
  }

  WeightPairing pairing;
  for (auto& [v, by_row] : occurrences) {
    for (auto& [row, cols] : by_row) std::reverse(cols.begin(), cols.end());
    for (;;) {
      // Two rows with the most remaining occurrences, lower index first on ties.
      std::size_t best = SIZE_MAX, second = SIZE_MAX;
      auto remaining = [&](std::size_t r) { return r == SIZE_MAX ? 0 : by_row[r].size(); };
      for (const auto& [row, cols] : by_row) {
        if (cols.empty()) continue;
        if (cols.size() > remaining(best)) {
          second = best;
          best = row;
        } else if (cols.size() > remaining(second)) {
          second = row;
        }
      }
      if (best == SIZE_MAX) break;
      auto& a = by_row[best];
      auto& b = by_row[second];
      WeightPosition pa{best, a.back()}, pb{second, b.back()};
      a.pop_back();
      b.pop_back();
      pairing.emplace_back(std::min(pa, pb), std::max(pa, pb));
    }
  }
  return pairing;
}

}  // namespace rigid
