#pragma once

// Exact sparse arithmetic in Z[x, y], Laurent polynomials in z over Z[x, y],
// and rational functions whose denominators are products of (z^a - 1).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace rigid {

using Integer = mpz_class;
using Rational = mpq_class;

struct Monomial {
  std::uint32_t x = 0;
  std::uint32_t y = 0;

  auto operator<=>(const Monomial&) const = default;
  std::uint32_t degree() const { return x + y; }
};

/// Polynomial in x, y with arbitrary-precision integer coefficients.
/// Stored sparsely; a zero coefficient is never kept, so the zero polynomial
/// is the empty map.
class BivarPoly {
 public:
  using Terms = std::map<Monomial, Integer>;

  BivarPoly() = default;
  BivarPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit BivarPoly(const Integer& c);

  static BivarPoly monomial(const Integer& c, std::uint32_t deg_x,
                            std::uint32_t deg_y);
  static BivarPoly x() { return monomial(1, 1, 0); }
  static BivarPoly y() { return monomial(1, 0, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(std::uint32_t deg_x, std::uint32_t deg_y) const;

  /// The value if the polynomial has no x or y dependence.
  std::optional<Integer> as_constant() const;

  Rational eval(const Rational& x0, const Rational& y0) const;
  Integer eval(const Integer& x0, const Integer& y0) const;

  BivarPoly& operator+=(const BivarPoly& rhs);
  BivarPoly& operator-=(const BivarPoly& rhs);
  BivarPoly& operator*=(const BivarPoly& rhs);
  BivarPoly operator-() const;

  friend BivarPoly operator+(BivarPoly lhs, const BivarPoly& rhs) { return lhs += rhs; }
  friend BivarPoly operator-(BivarPoly lhs, const BivarPoly& rhs) { return lhs -= rhs; }
  friend BivarPoly operator*(const BivarPoly& lhs, const BivarPoly& rhs);
  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

  /// Graded lexicographic order, x before y: "x^2 - x*y + y^2".
  std::string to_string() const;

  /// Drops zero coefficients. Arithmetic already maintains this; exposed for
  /// values assembled term by term.
  void normalize();

 private:
  void add_term(const Monomial& m, const Integer& c);

  Terms terms_;
};

BivarPoly poly_add(const BivarPoly& p, const BivarPoly& q);
BivarPoly poly_mul(const BivarPoly& p, const BivarPoly& q);
BivarPoly poly_neg(const BivarPoly& p);

/// Sum of c_k z^k with BivarPoly coefficients; k may be negative.
class LaurentPoly {
 public:
  using Terms = std::map<std::int64_t, BivarPoly>;

  LaurentPoly() = default;
  explicit LaurentPoly(BivarPoly c);

  static LaurentPoly term(BivarPoly c, std::int64_t exponent);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BivarPoly coefficient(std::int64_t exponent) const;

  /// Lowest exponent with a nonzero coefficient. Requires !is_zero().
  std::int64_t low_degree() const { return terms_.begin()->first; }
  std::int64_t high_degree() const { return terms_.rbegin()->first; }

  Rational eval(const Rational& z0, const Rational& x0, const Rational& y0) const;

  /// Replaces every coefficient by its value at (x0, y0), keeping integer
  /// constants as coefficients.
  LaurentPoly specialize(const Integer& x0, const Integer& y0) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const BivarPoly& c);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator*(LaurentPoly lhs, const BivarPoly& c) { return lhs *= c; }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string to_string() const;

 private:
  friend LaurentPoly laurent_mul_factor(const LaurentPoly& p, std::int64_t a);
  void add_term(std::int64_t e, const BivarPoly& c);

  Terms terms_;
};

/// p * (z^a - 1). Requires a > 0.
LaurentPoly laurent_mul_factor(const LaurentPoly& p, std::int64_t a);

/// Multiset of factors (z^a - 1), a > 0, stored as a -> multiplicity.
class DenomFactors {
 public:
  using Factors = std::map<std::int64_t, std::uint32_t>;

  DenomFactors() = default;

  static DenomFactors single(std::int64_t a);

  const Factors& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  std::uint32_t multiplicity(std::int64_t a) const;

  void add(std::int64_t a, std::uint32_t count = 1);

  /// Product of two factor multisets (multiplicities add).
  DenomFactors product(const DenomFactors& other) const;
  /// Least common multiple in the factored sense: per-factor max multiplicity.
  DenomFactors lcm(const DenomFactors& other) const;
  /// Factors of `this` not present in `sub`. Requires sub to divide this.
  DenomFactors quotient(const DenomFactors& sub) const;

  /// Multiplies p by every factor.
  LaurentPoly scale(LaurentPoly p) const;
  LaurentPoly expand() const { return scale(LaurentPoly(BivarPoly(1))); }

  /// Product of (z0^a - 1)^mult. Throws PoleAtSamplePoint if any factor vanishes.
  Rational eval(const Rational& z0) const;

  friend bool operator==(const DenomFactors&, const DenomFactors&) = default;

  std::string to_string() const;

 private:
  Factors factors_;
};

/// num / den with den kept factored. Never reduced to lowest terms.
struct LaurentRational {
  LaurentPoly num;
  DenomFactors den;

  LaurentRational() = default;
  LaurentRational(LaurentPoly n, DenomFactors d) : num(std::move(n)), den(std::move(d)) {}

  LaurentRational operator-() const { return {-num, den}; }

  LaurentRational specialize(const Integer& x0, const Integer& y0) const {
    return {num.specialize(x0, y0), den};
  }

  std::string to_string() const;
};

/// Sum over the common denominator lcm(r1.den, r2.den).
LaurentRational rational_add(const LaurentRational& r1, const LaurentRational& r2);

/// Product: numerators multiply, factor multiplicities add.
LaurentRational rational_mul(const LaurentRational& r1, const LaurentRational& r2);

/// Exact value at (z0, x0, y0). Throws ZeroBase for z0 = 0 and
/// PoleAtSamplePoint when some z0^a = 1.
Rational rational_eval(const LaurentRational& r, const Rational& z0,
                       const Rational& x0, const Rational& y0);

/// z0^e for any integer e; z0 must be nonzero when e < 0.
Rational rational_pow(const Rational& z0, std::int64_t e);

}  // namespace rigid
