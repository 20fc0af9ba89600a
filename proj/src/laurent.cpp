#include "cjones/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace cjones {

namespace {

// exp(2 pi i * num/den * k / 2) with the angle reduced exactly.
std::complex<double> unit_phase_half(const Rational& x, std::int64_t k) {
  // angle = pi * x * k = pi * (num*k mod 2den) / den
  const std::int64_t den = x.denominator();
  const std::int64_t mod = 2 * den;
  __int128 t = static_cast<__int128>(x.numerator()) * k;
  std::int64_t red = static_cast<std::int64_t>(t % mod);
  if (red < 0) red += mod;
  const double angle = std::numbers::pi * static_cast<double>(red) / static_cast<double>(den);
  return std::polar(1.0, angle);
}

}  // namespace

PhasePoint::PhasePoint(double x_, double r_) : x(x_), r(r_) {
  if (!(r_ > 0)) throw std::invalid_argument("PhasePoint modulus must be positive");
}

PhasePoint::PhasePoint(Rational x_, double r_)
    : x(boost::rational_cast<double>(x_)), r(r_), exact(x_) {
  if (!(r_ > 0)) throw std::invalid_argument("PhasePoint modulus must be positive");
}

std::complex<double> PhasePoint::power_half(std::int64_t half_units) const {
  const double mod = (r == 1.0) ? 1.0 : std::pow(r, 0.5 * static_cast<double>(half_units));
  if (exact) return mod * unit_phase_half(*exact, half_units);
  return std::polar(mod, std::numbers::pi * x * static_cast<double>(half_units));
}

std::complex<double> PhasePoint::power(double a) const {
  const double mod = (r == 1.0) ? 1.0 : std::pow(r, a);
  return std::polar(mod, 2.0 * std::numbers::pi * x * a);
}

PhasePoint PhasePoint::inverse() const {
  PhasePoint p;
  p.x = -x;
  p.r = 1.0 / r;
  if (exact) p.exact = -*exact;
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<std::pair<std::int64_t, BigInt>> raw) {
  std::sort(raw.begin(), raw.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(raw.size());
  for (auto& [e, c] : raw) {
    if (!out.empty() && out.back().exp == e) {
      out.back().coef += c;
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(Term{e, std::move(c)});
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::from_terms(std::initializer_list<std::pair<std::int64_t, long>> raw) {
  std::vector<std::pair<std::int64_t, BigInt>> v;
  v.reserve(raw.size());
  for (const auto& [e, c] : raw) v.emplace_back(e, BigInt(c));
  return from_terms(std::move(v));
}

LaurentPoly LaurentPoly::monomial(std::int64_t half_exp, BigInt coef) {
  if (coef == 0) return {};
  return LaurentPoly(std::vector<Term>{Term{half_exp, std::move(coef)}});
}

LaurentPoly LaurentPoly::q_integer(int n) {
  std::vector<Term> t;
  for (int a = 0; a < n; ++a) t.push_back(Term{2 * a, BigInt(1)});
  return LaurentPoly(std::move(t));
}

std::int64_t LaurentPoly::min_exp() const {
  if (terms_.empty()) throw ZeroPolynomial("min_exp of the zero polynomial");
  return terms_.front().exp;
}

std::int64_t LaurentPoly::max_exp() const {
  if (terms_.empty()) throw ZeroPolynomial("max_exp of the zero polynomial");
  return terms_.back().exp;
}

bool LaurentPoly::has_half_integer_exponents() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.exp % 2 != 0; });
}

LaurentPoly LaurentPoly::shifted(std::int64_t half_units) const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.exp += half_units;
  return out;
}

LaurentPoly LaurentPoly::mirrored() const {
  std::vector<Term> t(terms_.rbegin(), terms_.rend());
  for (auto& term : t) term.exp = -term.exp;
  return LaurentPoly(std::move(t));
}

BigInt LaurentPoly::coefficient(std::int64_t half_exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), half_exp,
                             [](const Term& t, std::int64_t e) { return t.exp < e; });
  if (it != terms_.end() && it->exp == half_exp) return it->coef;
  return 0;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->exp < b->exp)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exp < a->exp) {
      out.push_back(*b++);
    } else {
      BigInt c = a->coef + b->coef;
      if (c != 0) out.push_back(Term{a->exp, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const std::int64_t lo = a.min_exp() + b.min_exp();
  const std::int64_t hi = a.max_exp() + b.max_exp();
  const bool dense = hi - lo < static_cast<std::int64_t>(4 * a.size() * b.size() + 64);
  if (dense) {
    std::vector<BigInt> acc(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) {
        // acc += s.coef * t.coef without a temporary
        mpz_addmul(acc[static_cast<std::size_t>(s.exp + t.exp - lo)].get_mpz_t(),
                   s.coef.get_mpz_t(), t.coef.get_mpz_t());
      }
    std::vector<Term> out;
    for (std::size_t i = 0; i < acc.size(); ++i)
      if (acc[i] != 0) out.push_back(Term{lo + static_cast<std::int64_t>(i), std::move(acc[i])});
    return LaurentPoly(std::move(out));
  }
  std::map<std::int64_t, BigInt> acc;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc[s.exp + t.exp] += s.coef * t.coef;
  std::vector<Term> out;
  for (auto& [e, c] : acc)
    if (c != 0) out.push_back(Term{e, c});
  return LaurentPoly(std::move(out));
}

LaurentPoly operator-(LaurentPoly a) {
  for (auto& t : a.terms_) t.coef = -t.coef;
  return a;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    BigInt mag = abs(t.coef);
    const bool neg = t.coef < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1);
    if (t.exp == 0) {
      os << mag.get_str();
      continue;
    }
    if (!unit) os << mag.get_str() << "*";
    os << "q";
    if (t.exp % 2 == 0) {
      if (t.exp != 2) os << "^" << t.exp / 2;
    } else {
      os << "^(" << t.exp << "/2)";
    }
  }
  return os.str();
}

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
LaurentPoly lp_neg(const LaurentPoly& a) { return -a; }

LaurentPoly lp_exact_div(const LaurentPoly& a, const LaurentPoly& d) {
  if (d.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
  if (a.is_zero()) return {};
  const std::int64_t qlo = a.min_exp() - d.min_exp();
  const std::int64_t qhi = a.max_exp() - d.max_exp();
  if (qhi < qlo) throw NonExactDivision("degree range of divisor exceeds dividend");

  // Dense long division from the top term down.
  const std::int64_t alo = a.min_exp();
  std::vector<BigInt> rem(static_cast<std::size_t>(a.max_exp() - alo + 1));
  for (const auto& t : a.terms()) rem[static_cast<std::size_t>(t.exp - alo)] = t.coef;

  const BigInt& lead = d.terms().back().coef;
  std::vector<std::pair<std::int64_t, BigInt>> quot;
  BigInt c;
  for (std::int64_t qe = qhi; qe >= qlo; --qe) {
    BigInt& top = rem[static_cast<std::size_t>(qe + d.max_exp() - alo)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw NonExactDivision("coefficient not divisible during exact division");
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (const auto& t : d.terms()) {
      BigInt& slot = rem[static_cast<std::size_t>(qe + t.exp - alo)];
      mpz_submul(slot.get_mpz_t(), c.get_mpz_t(), t.coef.get_mpz_t());
    }
    quot.emplace_back(qe, c);
  }
  for (const auto& r : rem)
    if (r != 0) throw NonExactDivision("nonzero remainder in exact division");
  return LaurentPoly::from_terms(std::move(quot));
}

std::complex<double> lp_eval(const LaurentPoly& a, const PhasePoint& p) {
  std::complex<double> acc = 0;
  for (const auto& t : a.terms()) acc += t.coef.get_d() * p.power_half(t.exp);
  return acc;
}

DegreeInfo lp_degrees(const LaurentPoly& a) {
  if (a.is_zero()) throw ZeroPolynomial("degrees of the zero polynomial");
  DegreeInfo d;
  d.min_deg = static_cast<double>(a.min_exp()) / 2.0;
  d.max_deg = static_cast<double>(a.max_exp()) / 2.0;
  d.length = d.max_deg - d.min_deg + 1.0;
  return d;
}

}  // namespace cjones
