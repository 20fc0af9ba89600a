#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>
#include <gmpxx.h>

#include "cjones/errors.hpp"

namespace cjones {

using BigInt = mpz_class;
using Rational = boost::rational<std::int64_t>;

/// Evaluation point z = r * exp(2 pi i x).
///
/// Fractional powers are always taken as z^a = r^a * exp(2 pi i x a), so a
/// phase x and x + 1 denote the same z but different branches of q^(1/2).
/// When the phase is rational, `exact` carries it so that large exponents can
/// be reduced without rounding.
struct PhasePoint {
  double x = 0.0;
  double r = 1.0;
  std::optional<Rational> exact;

  PhasePoint() = default;
  PhasePoint(double x_, double r_ = 1.0);
  PhasePoint(Rational x_, double r_ = 1.0);

  /// z^a for a given in units of q^(1/2), i.e. z^(half_units / 2).
  std::complex<double> power_half(std::int64_t half_units) const;
  /// z^a for a real exponent a.
  std::complex<double> power(double a) const;
  /// The point q^{-1}, on the same branch family (x -> -x, r -> 1/r).
  PhasePoint inverse() const;
};

/// One term c * q^(exp/2).
struct Term {
  std::int64_t exp = 0;  // units of q^(1/2)
  BigInt coef;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Exact Laurent polynomial in q^(1/2) with arbitrary-precision integer
/// coefficients. Terms are kept sorted by strictly increasing exponent with no
/// zero coefficients, so equality is structural.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  /// Merge, sort and drop zero coefficients.
  static LaurentPoly from_terms(std::vector<std::pair<std::int64_t, BigInt>> raw);
  static LaurentPoly from_terms(std::initializer_list<std::pair<std::int64_t, long>> raw);
  static LaurentPoly monomial(std::int64_t half_exp, BigInt coef = 1);
  static LaurentPoly constant(BigInt c) { return monomial(0, std::move(c)); }
  /// [n]_q = 1 + q + ... + q^(n-1).
  static LaurentPoly q_integer(int n);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::int64_t min_exp() const;  // half units; requires nonzero
  std::int64_t max_exp() const;
  bool has_half_integer_exponents() const;
  bool is_monomial() const { return terms_.size() == 1; }

  /// Multiply by q^(half_units/2).
  LaurentPoly shifted(std::int64_t half_units) const;
  /// Substitute q -> q^{-1}.
  LaurentPoly mirrored() const;
  /// Coefficient of q^(half_exp/2).
  BigInt coefficient(std::int64_t half_exp) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(LaurentPoly a);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Human-readable form, e.g. "q^-2 - q^-1 + 1 - q + q^2"; half-integer
  /// powers print as q^(5/2).
  std::string to_string() const;

 private:
  explicit LaurentPoly(std::vector<Term> canonical) : terms_(std::move(canonical)) {}
  std::vector<Term> terms_;
};

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_neg(const LaurentPoly& a);

/// Returns c with c * d == a. Throws NonExactDivision when the remainder is
/// nonzero and ZeroPolynomial when d == 0.
LaurentPoly lp_exact_div(const LaurentPoly& a, const LaurentPoly& d);

std::complex<double> lp_eval(const LaurentPoly& a, const PhasePoint& p);

/// Degrees measured in powers of q (so they may be half-integers).
struct DegreeInfo {
  double min_deg = 0;
  double max_deg = 0;
  double length = 0;  // max_deg - min_deg + 1
};

DegreeInfo lp_degrees(const LaurentPoly& a);

}  // namespace cjones
