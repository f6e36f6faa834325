#pragma once

// Chern numbers from fixed-point data via the Bott residue formula,
// realizability and boundary screens, and the two-fixed-point classifier.

#include <span>
#include <string>
#include <vector>

#include "rigid/algebra.hpp"
#include "rigid/rigidity.hpp"

namespace rigid {

/// Exponents (r_1, ..., r_n) of the monomial c_1^{r_1} ... c_n^{r_n}.
using ChernPartition = std::vector<unsigned>;

/// r_1 + 2 r_2 + ... + n r_n.
unsigned weighted_degree(const ChernPartition& r);

/// Every r of length n with weighted degree exactly `degree`, in lexicographic order.
std::vector<ChernPartition> partitions_of_degree(unsigned n, unsigned degree);

/// Every r of length n with weighted degree strictly below n (includes all zeros).
std::vector<ChernPartition> subtop_partitions(unsigned n);

/// sigma_k(w); sigma_0 = 1. Throws IndexOutOfRange for k > w.size().
Integer elementary_symmetric(std::size_t k, std::span<const int> w);

/// sum_i prod_k sigma_k(w_i)^{r_k} / (eps_i prod_j w_ij). Requires r.size() == n.
Rational chern_number(const WeightMatrix& w, const ChernPartition& r);

struct Violation {
  ChernPartition partition;
  Rational value;
};

/// Partitions of weighted degree < n whose Chern number is nonzero. A
/// nonempty result rules the data out as fixed points of a unitary action.
std::vector<Violation> realizability_screen(const WeightMatrix& w);

/// True iff every top-degree Chern number vanishes.
bool is_boundary_candidate(const WeightMatrix& w);

enum class ClassKind { Z, L1, S3, NotClassified };

struct ClassLabel {
  ClassKind kind = ClassKind::NotClassified;
  std::string reason;  // only for NotClassified

  std::string to_string() const;
  friend bool operator==(const ClassLabel& a, const ClassLabel& b) { return a.kind == b.kind; }
};

/// Matches the Z, L1 and S3 families syntactically. Throws
/// WrongFixedPointCount unless m = 2.
ClassLabel classify_two_fixed_points(const WeightMatrix& w);

/// floor(n/2) + 1.
unsigned kosniowski_bound(unsigned n);

}  // namespace rigid
