#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "rigid/algebra.hpp"
#include "rigid/error.hpp"
#include "test_support.hpp"

using namespace rigid;

namespace {

const BivarPoly X = BivarPoly::x();
const BivarPoly Y = BivarPoly::y();

LaurentPoly zpow(std::int64_t e, BivarPoly c = 1) { return LaurentPoly::term(std::move(c), e); }

BivarPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-4, 4), deg(0, 3), count(0, 4);
  BivarPoly p;
  for (int i = count(rng); i > 0; --i) p += BivarPoly::monomial(coef(rng), deg(rng), deg(rng));
  return p;
}

LaurentPoly random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> e(-3, 4), count(0, 3);
  LaurentPoly p;
  for (int i = count(rng); i > 0; --i) p += zpow(e(rng), random_poly(rng));
  return p;
}

LaurentRational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> a(1, 4), count(0, 3);
  DenomFactors d;
  for (int i = count(rng); i > 0; --i) d.add(a(rng));
  return {random_laurent(rng), d};
}

}  // namespace

TEST_CASE("bivariate ring arithmetic") {
  CHECK(((X + Y) + (-X - Y)).is_zero());
  CHECK((X + Y) * (X - Y) == X * X - Y * Y);
  CHECK(BivarPoly::monomial(1, 2, 3) * BivarPoly(1) == BivarPoly::monomial(1, 2, 3));
  CHECK(poly_add(X, poly_neg(X)).is_zero());
  CHECK(poly_mul(X, Y) == BivarPoly::monomial(1, 1, 1));
}

TEST_CASE("polynomials print in graded lexicographic order") {
  CHECK((X * X - X * Y + Y * Y).to_string() == "x^2 - x*y + y^2");
  CHECK((Y * Y + X * X - X * Y).to_string() == "x^2 - x*y + y^2");
  CHECK((-(X * X * Y) + X * Y * Y).to_string() == "-x^2*y + x*y^2");
  CHECK(BivarPoly().to_string() == "0");
  CHECK(BivarPoly(-3).to_string() == "-3");
  CHECK((BivarPoly::monomial(3, 1, 0) + 2).to_string() == "3*x + 2");
}

TEST_CASE("coefficients never overflow") {
  BivarPoly p = 1;
  for (int i = 0; i < 200; ++i) p *= (X + 1000);
  CHECK(p.coefficient(0, 0) == Integer("1" + std::string(600, '0')));
  CHECK(p.coefficient(200, 0) == 1);
}

TEST_CASE("laurent_mul_factor") {
  CHECK(laurent_mul_factor(LaurentPoly(1), 2) == zpow(2) - zpow(0));
  CHECK(laurent_mul_factor(zpow(-1), 1) == zpow(0) - zpow(-1));
  // (x z + y)(z - 1) = x z^2 + (y - x) z - y
  const LaurentPoly p = zpow(1, X) + zpow(0, Y);
  CHECK(laurent_mul_factor(p, 1) == zpow(2, X) + zpow(1, Y - X) + zpow(0, -Y));
  CHECK_THROWS_AS(laurent_mul_factor(p, 0), Error);
}

TEST_CASE("rational_add") {
  SUBCASE("quasilinear n = 1 sum before constancy detection") {
    LaurentRational r1{zpow(1, X) + zpow(0, Y), DenomFactors::single(1)};
    LaurentRational r2{zpow(0, -X) + zpow(1, -Y), DenomFactors::single(1)};
    LaurentRational s = rational_add(r1, r2);
    CHECK(s.den == DenomFactors::single(1));
    CHECK(s.num == zpow(1, X - Y) + zpow(0, Y - X));
  }
  SUBCASE("r + (-r) has zero numerator") {
    LaurentRational r{zpow(3, X) + zpow(-1, Y), DenomFactors::single(2)};
    CHECK(rational_add(r, -r).num.is_zero());
  }
  SUBCASE("cross-multiplication oracle on distinct factors") {
    LaurentRational r1{LaurentPoly(1), DenomFactors::single(1)};
    LaurentRational r2{LaurentPoly(1), DenomFactors::single(2)};
    LaurentRational s = rational_add(r1, r2);
    CHECK(s.den.multiplicity(1) == 1);
    CHECK(s.den.multiplicity(2) == 1);
    const LaurentPoly d1 = r1.den.expand(), d2 = r2.den.expand(), dout = s.den.expand();
    CHECK(s.num * d1 * d2 == (r1.num * d2 + r2.num * d1) * dout);
    // (z^2 - 1) + (z - 1) over (z - 1)(z^2 - 1)
    CHECK(s.num == zpow(2) + zpow(1) - zpow(0, 2));
  }
  SUBCASE("shared factors use the maximum multiplicity") {
    DenomFactors d1, d2;
    d1.add(1, 2);
    d2.add(1, 1);
    d2.add(3, 1);
    LaurentRational s = rational_add({LaurentPoly(1), d1}, {LaurentPoly(1), d2});
    CHECK(s.den.multiplicity(1) == 2);
    CHECK(s.den.multiplicity(3) == 1);
  }
}

TEST_CASE("rational_eval") {
  LaurentRational r{zpow(1) + zpow(0), DenomFactors::single(1)};
  CHECK(rational_eval(r, 2, 0, 0) == 3);
  LaurentRational t{zpow(1, X) + zpow(0, Y), DenomFactors::single(1)};
  CHECK(rational_eval(t, 2, 1, 1) == 3);

  CHECK_THROWS_WITH_AS(rational_eval(r, 1, 1, 1), doctest::Contains("z0^1 = 1"), Error);
  LaurentRational even{LaurentPoly(1), DenomFactors::single(2)};
  try {
    rational_eval(even, -1, 1, 1);
    FAIL("expected a pole");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PoleAtSamplePoint);
  }
  try {
    rational_eval(r, 0, 1, 1);
    FAIL("expected ZeroBase");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroBase);
  }
  // odd factors only: z0 = -1 is not a pole
  CHECK(rational_eval(r, -1, 1, 1) == 0);
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937 rng(17);
  for (int i = 0; i < 200; ++i) {
    BivarPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    LaurentPoly p = random_laurent(rng), q = random_laurent(rng), s = random_laurent(rng);
    CHECK(p * q == q * p);
    CHECK((p * q) * s == p * (q * s));
    CHECK(p * (q + s) == p * q + p * s);
    CHECK((p + q) - q == p);
  }
}

TEST_CASE("evaluation is a homomorphism for rational_add chains") {
  std::mt19937 rng(29);
  for (int chain = 0; chain < 30; ++chain) {
    std::vector<LaurentRational> parts;
    for (int i = 0; i < 4; ++i) parts.push_back(random_rational(rng));
    LaurentRational sum = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) sum = rational_add(sum, parts[i]);
    for (int p = 0; p < 10; ++p) {
      const Rational z = testing::random_sample_z(rng);
      const Rational x(static_cast<int>(rng() % 7) - 3), y(static_cast<int>(rng() % 5) + 1, 2);
      Rational expected = 0;
      for (const auto& r : parts) expected += rational_eval(r, z, x, y);
      CHECK(rational_eval(sum, z, x, y) == expected);
    }
  }
}

TEST_CASE("laurent_mul_factor agrees with evaluation") {
  std::mt19937 rng(31);
  for (int i = 0; i < 100; ++i) {
    const LaurentPoly p = random_laurent(rng);
    const std::int64_t a = 1 + rng() % 5;
    const Rational z = testing::random_sample_z(rng), x(2), y(-1);
    CHECK(laurent_mul_factor(p, a).eval(z, x, y) == p.eval(z, x, y) * (testing::qpow(z, a) - 1));
  }
}

TEST_CASE("normalization is idempotent and drops zeros") {
  std::mt19937 rng(37);
  for (int i = 0; i < 50; ++i) {
    BivarPoly p = random_poly(rng) - random_poly(rng);
    BivarPoly once = p;
    once.normalize();
    BivarPoly twice = once;
    twice.normalize();
    CHECK(once == twice);
    for (const auto& [m, c] : once.terms()) CHECK(c != 0);
  }
  CHECK((X - X).terms().empty());
}
