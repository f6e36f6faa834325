#pragma once

// T_{x,y} and L series of a weight matrix and the exact constancy decision.

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "rigid/algebra.hpp"
#include "rigid/weights.hpp"

namespace rigid {

enum class Mode { T, L };

const char* to_string(Mode mode);

struct SamplePoint {
  Rational z;
  Rational x;
  Rational y;
};

/// Certificate for a non-constant series. The residual coefficient is
/// authoritative; the sample point is best effort and may be absent.
struct Witness {
  std::int64_t residual_low_degree = 0;
  BivarPoly residual_low_coefficient;
  std::optional<SamplePoint> point;
  Rational value_at_point;
  Rational expected_constant_at_point;
};

class RigidityVerdict {
 public:
  static RigidityVerdict rigid(BivarPoly constant) {
    RigidityVerdict v;
    v.rigid_ = true;
    v.constant_ = std::move(constant);
    return v;
  }
  static RigidityVerdict not_rigid(Witness witness) {
    RigidityVerdict v;
    v.witness_ = std::move(witness);
    return v;
  }

  bool is_rigid() const { return rigid_; }
  /// Requires is_rigid().
  const BivarPoly& constant() const { return constant_; }
  /// Requires !is_rigid().
  const Witness& witness() const { return *witness_; }

 private:
  RigidityVerdict() = default;

  bool rigid_ = false;
  BivarPoly constant_;
  std::optional<Witness> witness_;
};

/// (x z^w + y) / (z^w - 1), with negative w rewritten as
/// -(x + y z^|w|) / (z^|w| - 1). Throws ZeroWeight for w = 0.
LaurentRational term_fraction(int w);

/// Sum over rows of sign times the product of term fractions.
LaurentRational t_series(const WeightMatrix& w);

/// t_series at x = y = 1.
LaurentRational l_series(const WeightMatrix& w);

/// Sum over rows of sign * x^{s+} * (-y)^{s-}: the only value a constant
/// series can take, read off from z -> infinity.
BivarPoly candidate_constant(const WeightMatrix& w);

/// candidate_constant at x = y = 1.
Integer candidate_l_constant(const WeightMatrix& w);

/// Decides constancy by checking num - C * expand(den) == 0 exactly.
RigidityVerdict is_rigid(const WeightMatrix& w);
RigidityVerdict is_l_rigid(const WeightMatrix& w);
RigidityVerdict is_rigid(const WeightMatrix& w, Mode mode);

/// Witness grid scanned for non-rigid verdicts.
inline constexpr std::array<long, 3> kWitnessZ{2, 3, 5};
inline constexpr std::array<std::pair<long, long>, 5> kWitnessXY{
    {{1, 1}, {1, 2}, {2, 1}, {1, 0}, {0, 1}}};

/// All weights made positive, each flip negating the row sign.
WeightMatrix normalize_signs_for_L(const WeightMatrix& w);

/// Odd n: L = 0 and m even. Even n: L = m (mod 2).
bool parity_check(const WeightMatrix& w, const Integer& l_constant);

/// Rows (a_i - a_j, j != i), all signs +1. Throws DuplicateEntries.
WeightMatrix quasilinear(const std::vector<int>& a);

struct WeightPosition {
  std::size_t row;
  std::size_t column;
  auto operator<=>(const WeightPosition&) const = default;
};
using WeightPairing = std::vector<std::pair<WeightPosition, WeightPosition>>;

/// Pairs equal weights from different rows. Requires positive weights.
std::optional<WeightPairing> pair_partition(const WeightMatrix& w);

}  // namespace rigid
