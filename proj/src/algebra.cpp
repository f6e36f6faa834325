#include "rigid/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "rigid/error.hpp"

namespace rigid {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroWeight: return "ZeroWeight";
    case ErrorCode::InvalidMatrix: return "InvalidMatrix";
    case ErrorCode::DuplicateEntries: return "DuplicateEntries";
    case ErrorCode::PoleAtSamplePoint: return "PoleAtSamplePoint";
    case ErrorCode::ZeroBase: return "ZeroBase";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::WrongFixedPointCount: return "WrongFixedPointCount";
    case ErrorCode::WrongShape: return "WrongShape";
    case ErrorCode::InvalidSearchSpec: return "InvalidSearchSpec";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- BivarPoly

BivarPoly::BivarPoly(long c) {
  if (c != 0) terms_.emplace(Monomial{}, Integer(c));
}

BivarPoly::BivarPoly(const Integer& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

BivarPoly BivarPoly::monomial(const Integer& c, std::uint32_t deg_x,
                              std::uint32_t deg_y) {
  BivarPoly p;
  if (c != 0) p.terms_.emplace(Monomial{deg_x, deg_y}, c);
  return p;
}

Integer BivarPoly::coefficient(std::uint32_t deg_x, std::uint32_t deg_y) const {
  auto it = terms_.find(Monomial{deg_x, deg_y});
  return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<Integer> BivarPoly::as_constant() const {
  if (terms_.empty()) return Integer(0);
  if (terms_.size() == 1 && terms_.begin()->first == Monomial{}) {
    return terms_.begin()->second;
  }
  return std::nullopt;
}

namespace {

template <class T>
T power(const T& base, std::uint32_t e) {
  T result = 1;
  for (std::uint32_t i = 0; i < e; ++i) result *= base;
  return result;
}

}  // namespace

Rational BivarPoly::eval(const Rational& x0, const Rational& y0) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    sum += Rational(c) * power(x0, m.x) * power(y0, m.y);
  }
  sum.canonicalize();
  return sum;
}

Integer BivarPoly::eval(const Integer& x0, const Integer& y0) const {
  Integer sum = 0;
  for (const auto& [m, c] : terms_) {
    sum += c * power(x0, m.x) * power(y0, m.y);
  }
  return sum;
}

void BivarPoly::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void BivarPoly::normalize() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

BivarPoly operator*(const BivarPoly& lhs, const BivarPoly& rhs) {
  BivarPoly out;
  for (const auto& [ml, cl] : lhs.terms_) {
    for (const auto& [mr, cr] : rhs.terms_) {
      out.add_term(Monomial{ml.x + mr.x, ml.y + mr.y}, cl * cr);
    }
  }
  return out;
}

BivarPoly& BivarPoly::operator*=(const BivarPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

std::string BivarPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Integer>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() > b.first.degree();
    return a.first.x > b.first.x;
  });

  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : ordered) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;

    std::vector<std::string> factors;
    if (mag != 1 || m.degree() == 0) factors.push_back(mag.get_str());
    if (m.x == 1) factors.emplace_back("x");
    if (m.x > 1) factors.push_back("x^" + std::to_string(m.x));
    if (m.y == 1) factors.emplace_back("y");
    if (m.y > 1) factors.push_back("y^" + std::to_string(m.y));
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) os << '*';
      os << factors[i];
    }
  }
  return os.str();
}

BivarPoly poly_add(const BivarPoly& p, const BivarPoly& q) { return p + q; }
BivarPoly poly_mul(const BivarPoly& p, const BivarPoly& q) { return p * q; }
BivarPoly poly_neg(const BivarPoly& p) { return -p; }

// -------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(BivarPoly c) {
  if (!c.is_zero()) terms_.emplace(0, std::move(c));
}

LaurentPoly LaurentPoly::term(BivarPoly c, std::int64_t exponent) {
  LaurentPoly p;
  if (!c.is_zero()) p.terms_.emplace(exponent, std::move(c));
  return p;
}

BivarPoly LaurentPoly::coefficient(std::int64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BivarPoly() : it->second;
}

void LaurentPoly::add_term(std::int64_t e, const BivarPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const BivarPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly out;
  for (const auto& [el, cl] : lhs.terms_) {
    for (const auto& [er, cr] : rhs.terms_) out.add_term(el + er, cl * cr);
  }
  return out;
}

Rational rational_pow(const Rational& z0, std::int64_t e) {
  if (e < 0) {
    if (z0 == 0) throw Error(ErrorCode::ZeroBase, "negative power of zero");
    Rational inv = 1 / z0;
    return power(inv, static_cast<std::uint32_t>(-e));
  }
  return power(z0, static_cast<std::uint32_t>(e));
}

Rational LaurentPoly::eval(const Rational& z0, const Rational& x0,
                           const Rational& y0) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) sum += c.eval(x0, y0) * rational_pow(z0, e);
  sum.canonicalize();
  return sum;
}

LaurentPoly LaurentPoly::specialize(const Integer& x0, const Integer& y0) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.add_term(e, BivarPoly(c.eval(x0, y0)));
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << '(' << it->second.to_string() << ')';
    if (it->first != 0) os << "*z^" << it->first;
  }
  return os.str();
}

LaurentPoly laurent_mul_factor(const LaurentPoly& p, std::int64_t a) {
  if (a <= 0) throw Error(ErrorCode::IndexOutOfRange, "factor exponent must be positive");
  LaurentPoly out;
  for (const auto& [e, c] : p.terms()) {
    out.add_term(e + a, c);
    out.add_term(e, -c);
  }
  return out;
}

// ------------------------------------------------------------- DenomFactors

DenomFactors DenomFactors::single(std::int64_t a) {
  DenomFactors d;
  d.add(a);
  return d;
}

std::uint32_t DenomFactors::multiplicity(std::int64_t a) const {
  auto it = factors_.find(a);
  return it == factors_.end() ? 0 : it->second;
}

void DenomFactors::add(std::int64_t a, std::uint32_t count) {
  if (a <= 0) throw Error(ErrorCode::IndexOutOfRange, "factor exponent must be positive");
  if (count == 0) return;
  factors_[a] += count;
}

DenomFactors DenomFactors::product(const DenomFactors& other) const {
  DenomFactors out = *this;
  for (const auto& [a, k] : other.factors_) out.factors_[a] += k;
  return out;
}

DenomFactors DenomFactors::lcm(const DenomFactors& other) const {
  DenomFactors out = *this;
  for (const auto& [a, k] : other.factors_) {
    auto& slot = out.factors_[a];
    slot = std::max(slot, k);
  }
  return out;
}

DenomFactors DenomFactors::quotient(const DenomFactors& sub) const {
  DenomFactors out = *this;
  for (const auto& [a, k] : sub.factors_) {
    auto it = out.factors_.find(a);
    if (it == out.factors_.end() || it->second < k) {
      throw Error(ErrorCode::IndexOutOfRange, "denominator does not divide");
    }
    it->second -= k;
    if (it->second == 0) out.factors_.erase(it);
  }
  return out;
}

LaurentPoly DenomFactors::scale(LaurentPoly p) const {
  for (const auto& [a, k] : factors_) {
    for (std::uint32_t i = 0; i < k; ++i) p = laurent_mul_factor(p, a);
  }
  return p;
}

Rational DenomFactors::eval(const Rational& z0) const {
  Rational prod = 1;
  for (const auto& [a, k] : factors_) {
    Rational f = rational_pow(z0, a) - 1;
    if (f == 0) {
      throw Error(ErrorCode::PoleAtSamplePoint,
                  "z0^" + std::to_string(a) + " = 1 at z0 = " + z0.get_str());
    }
    prod *= power(f, k);
  }
  return prod;
}

std::string DenomFactors::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, k] : factors_) {
    if (!first) os << '*';
    first = false;
    os << "(z^" << a << " - 1)";
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

// ---------------------------------------------------------- LaurentRational

std::string LaurentRational::to_string() const {
  return "[" + num.to_string() + "] / [" + den.to_string() + "]";
}

LaurentRational rational_add(const LaurentRational& r1, const LaurentRational& r2) {
  DenomFactors common = r1.den.lcm(r2.den);
  LaurentPoly num = common.quotient(r1.den).scale(r1.num);
  num += common.quotient(r2.den).scale(r2.num);
  return {std::move(num), std::move(common)};
}

LaurentRational rational_mul(const LaurentRational& r1, const LaurentRational& r2) {
  return {r1.num * r2.num, r1.den.product(r2.den)};
}

Rational rational_eval(const LaurentRational& r, const Rational& z0,
                       const Rational& x0, const Rational& y0) {
  if (z0 == 0) throw Error(ErrorCode::ZeroBase, "z0 = 0 is not a valid sample point");
  Rational den = r.den.eval(z0);
  Rational value = r.num.eval(z0, x0, y0) / den;
  value.canonicalize();
  return value;
}

}  // namespace rigid
