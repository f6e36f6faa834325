#include "rigid/bott.hpp"

#include <algorithm>
#include <functional>

#include "rigid/error.hpp"

namespace rigid {

unsigned weighted_degree(const ChernPartition& r) {
  unsigned d = 0;
  for (std::size_t k = 0; k < r.size(); ++k) d += static_cast<unsigned>(k + 1) * r[k];
  return d;
}

namespace {

void enumerate_partitions(unsigned n, unsigned max_degree, bool exact,
                          std::vector<ChernPartition>& out) {
  ChernPartition r(n, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t k, unsigned used) {
    if (k == n) {
      if (!exact || used == max_degree) out.push_back(r);
      return;
    }
    const unsigned step = static_cast<unsigned>(k + 1);
    for (unsigned e = 0; used + e * step <= max_degree; ++e) {
      r[k] = e;
      rec(k + 1, used + e * step);
    }
    r[k] = 0;
  };
  rec(0, 0);
}

}  // namespace

std::vector<ChernPartition> partitions_of_degree(unsigned n, unsigned degree) {
  std::vector<ChernPartition> out;
  enumerate_partitions(n, degree, true, out);
  return out;
}

std::vector<ChernPartition> subtop_partitions(unsigned n) {
  std::vector<ChernPartition> out;
  if (n == 0) return out;
  enumerate_partitions(n, n - 1, false, out);
  return out;
}

Integer elementary_symmetric(std::size_t k, std::span<const int> w) {
  if (k > w.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "sigma_" + std::to_string(k) + " of " + std::to_string(w.size()) + " values");
  }
  // e[j] = sigma_j of the prefix processed so far
  std::vector<Integer> e(k + 1, 0);
  e[0] = 1;
  for (int v : w) {
    for (std::size_t j = k; j >= 1; --j) e[j] += e[j - 1] * v;
  }
  return e[k];
}

Rational chern_number(const WeightMatrix& w, const ChernPartition& r) {
  if (r.size() != w.n()) {
    throw Error(ErrorCode::IndexOutOfRange, "partition length must equal n = " + std::to_string(w.n()));
  }
  Rational sum = 0;
  for (const Row& row : w.rows()) {
    Integer numer = 1;
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (r[k] == 0) continue;
      Integer s = elementary_symmetric(k + 1, row.weights);
      Integer p;
      mpz_pow_ui(p.get_mpz_t(), s.get_mpz_t(), r[k]);
      numer *= p;
    }
    Integer denom = row.sign;
    for (int v : row.weights) denom *= v;
    Rational term(numer, denom);
    term.canonicalize();
    sum += term;
  }
  sum.canonicalize();
  return sum;
}

std::vector<Violation> realizability_screen(const WeightMatrix& w) {
  std::vector<Violation> out;
  for (const ChernPartition& r : subtop_partitions(static_cast<unsigned>(w.n()))) {
    Rational v = chern_number(w, r);
    if (v != 0) out.push_back({r, v});
  }
  return out;
}

bool is_boundary_candidate(const WeightMatrix& w) {
  const auto n = static_cast<unsigned>(w.n());
  for (const ChernPartition& r : partitions_of_degree(n, n)) {
    if (chern_number(w, r) != 0) return false;
  }
  return true;
}

std::string ClassLabel::to_string() const {
  switch (kind) {
    case ClassKind::Z: return "Z";
    case ClassKind::L1: return "L1";
    case ClassKind::S3: return "S3";
    case ClassKind::NotClassified: return "NotClassified";
  }
  return "NotClassified";
}

namespace {

std::vector<int> sorted_weights(const Row& r) {
  std::vector<int> v = r.weights;
  std::sort(v.begin(), v.end());
  return v;
}

// {a, b, -(a+b)} with a, b > 0
bool is_s3_row(const std::vector<int>& sorted) {
  return sorted.size() == 3 && sorted[0] < 0 && sorted[1] > 0 &&
         sorted[0] + sorted[1] + sorted[2] == 0;
}

}  // namespace

ClassLabel classify_two_fixed_points(const WeightMatrix& w) {
  if (w.m() != 2) {
    throw Error(ErrorCode::WrongFixedPointCount,
                "classification needs exactly 2 fixed points, got " + std::to_string(w.m()));
  }
  const Row& r1 = w.row(0);
  const Row& r2 = w.row(1);
  const auto s1 = sorted_weights(r1);
  const auto s2 = sorted_weights(r2);

  if (s1 == s2 && r1.sign == -r2.sign) return {ClassKind::Z, {}};
  if (w.n() == 1 && r1.weights[0] == -r2.weights[0] && r1.sign == r2.sign) return {ClassKind::L1, {}};
  if (w.n() == 3 && r1.sign == r2.sign) {
    std::vector<int> neg2;
    for (int v : s2) neg2.push_back(-v);
    std::sort(neg2.begin(), neg2.end());
    if (neg2 == s1 && (is_s3_row(s1) || is_s3_row(s2))) return {ClassKind::S3, {}};
  }

  RigidityVerdict v = is_rigid(w);
  std::string reason = v.is_rigid() ? "rigid with constant " + v.constant().to_string() +
                                          " but outside the Z, L1, S3 families"
                                    : "not T-rigid";
  return {ClassKind::NotClassified, std::move(reason)};
}

unsigned kosniowski_bound(unsigned n) { return n / 2 + 1; }

}  // namespace rigid
