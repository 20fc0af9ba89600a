#include "cjones/qformulas.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "mp_complex.hpp"

namespace cjones {

namespace {

bool is_nonneg_integer(double m) { return m >= 0 && std::floor(m) == m; }

// Integer half of an index that the summation parity guarantees is even.
int half_of(int twice) {
  if (twice % 2 != 0)
    throw NonIntegerIndex("index " + std::to_string(twice) + "/2 is not an integer");
  return twice / 2;
}

// The evaluation point in multiprecision: q^a = exp(a log r) exp(2 pi i x a).
struct MpPoint {
  mp::Real x;
  mp::Real log_r;

  mp::Complex pow(const mp::Real& a) const {
    const mp::Real two_pi = mp::Real(2) * mp::Real::pi();
    mp::Real rho = log_r.is_zero() ? mp::Real(1) : mp::exp(a * log_r);
    return mp::Complex::polar(rho, two_pi * x * a);
  }
  mp::Complex pow(std::int64_t num, std::int64_t den) const { return pow(mp::Real::ratio(num, den)); }
};

MpPoint to_mp(const PhasePoint& p) {
  MpPoint m;
  m.x = p.exact ? mp::Real::ratio(p.exact->numerator(), p.exact->denominator()) : mp::Real(p.x);
  m.log_r = p.r == 1.0 ? mp::Real(0) : mp::log(mp::Real(p.r));
  return m;
}

// Tables of [m], [m]! and 1/[m]! for 0 <= m <= M at one point.
struct BracketTables {
  std::vector<mp::Complex> qi, fact, inv_fact;
  int vanishing = 0;  // numerators q^(m/2) - q^(-m/2) below the threshold, 1 <= m <= M
};

BracketTables brackets(const MpPoint& q, int M, double threshold = 0) {
  BracketTables t;
  const mp::Complex half = q.pow(1, 2) - q.pow(-1, 2);
  t.qi.resize(static_cast<std::size_t>(M) + 1);
  t.fact.resize(t.qi.size());
  t.inv_fact.resize(t.qi.size());
  t.qi[0] = mp::Complex();
  t.fact[0] = mp::Complex(mp::Real(1));
  const double half_abs = half.abs().to_double();
  if (half_abs < threshold) ++t.vanishing;
  for (int m = 1; m <= M; ++m) {
    const mp::Complex num = q.pow(m, 2) - q.pow(-m, 2);
    if (num.abs().to_double() < threshold) ++t.vanishing;
    t.qi[static_cast<std::size_t>(m)] = half_abs > 0 ? num / half : mp::Complex(mp::Real(m));
    t.fact[static_cast<std::size_t>(m)] = t.fact[static_cast<std::size_t>(m - 1)] * t.qi[static_cast<std::size_t>(m)];
  }
  for (int m = 0; m <= M; ++m) {
    const auto& f = t.fact[static_cast<std::size_t>(m)];
    t.inv_fact[static_cast<std::size_t>(m)] = f.is_zero() ? mp::Complex() : mp::Complex(mp::Real(1)) / f;
  }
  return t;
}

// (n+1)-colored K_0 sum at the point q, normalized by 1/[n+1].
mp::Complex k0_sum(int n, const MpPoint& q) {
  const int M = 3 * n + 2;
  const BracketTables t = brackets(q, M);
  const auto& F = t.fact;
  const auto& iF = t.inv_fact;
  auto at = [](const std::vector<mp::Complex>& v, int i) -> const mp::Complex& {
    return v[static_cast<std::size_t>(i)];
  };
  auto binom = [&](int a, int b) -> mp::Complex {
    if (b < 0 || b > a) return mp::Complex();
    return at(F, a) * at(iF, b) * at(iF, a - b);
  };

  mp::Complex total;
  for (int k = 0; k <= 2 * n; k += 2) {
    const int kh = half_of(k);
    for (int l = std::abs(n - k); l <= n + k; l += 2) {
      const int s = half_of(n + k + l);
      // the binomial complements bound z by n + k
      const int zlo = std::max(n + kh, s);
      const int zhi = std::min({half_of(n + 2 * k + l), half_of(3 * n + l), n + k});
      if (zlo > zhi) continue;
      const std::int64_t e8 = -3LL * (2 * k + k * k) + 7LL * (2 * l + l * l) - 51LL * (2 * n + n * n);
      mp::Complex outer = q.pow(e8, 8) * at(t.qi, k + 1) * at(t.qi, l + 1) * at(iF, n + kh + 1) * at(F, kh) *
                          at(F, kh) * at(F, n - kh) * at(iF, s + 1);
      if (kh % 2 == 1) outer = -outer;
      const int a1 = half_of(k + l - n), a2 = half_of(n + l - k), a3 = half_of(n + k - l);
      mp::Complex inner;
      for (int z = zlo; z <= zhi; ++z) {
        mp::Complex term = binom(a1, half_of(n + 2 * k + l) - z) * binom(a2, half_of(3 * n + l) - z) *
                           binom(a3, n + k - z) * at(iF, z - s) * at(F, z + 1);
        if (z % 2 == 0)
          inner += term;
        else
          inner -= term;
      }
      total += outer * inner;
    }
  }
  return total / at(t.qi, n + 1);
}

// Upper bound on |q-degree| of J_{n+1}(K_0), used to size the contour.
double k0_degree_bound(int n) { return 10.0 * (n + 1) * (n + 1) + 10.0; }

}  // namespace

std::complex<double> qint(double m, const PhasePoint& p) {
  const std::complex<double> den = p.power(0.5) - p.power(-0.5);
  if (std::abs(den) < 1e-14) {
    // q^(1/2) = s = +-1: the limit is m (s^m + s^-m) / (s + 1/s)
    const std::complex<double> s = p.power(0.5);
    return m * (p.power(m / 2) + p.power(-m / 2)) / (s + 1.0 / s);
  }
  return (p.power(m / 2) - p.power(-m / 2)) / den;
}

std::complex<double> qfact(double m, const PhasePoint& p) {
  if (!is_nonneg_integer(m)) throw NonIntegerIndex("factorial argument " + std::to_string(m));
  std::complex<double> f = 1.0;
  for (int j = 1; j <= static_cast<int>(m); ++j) f *= qint(j, p);
  return f;
}

std::complex<double> qbinom(double a, double b, const PhasePoint& p) {
  if (std::floor(b) != b || std::floor(a) != a) throw NonIntegerIndex("binomial arguments must be integers");
  if (b < 0 || b > a) return 0.0;
  // product form avoids 0/0 when a factorial vanishes but the binomial does not
  std::complex<double> r = 1.0;
  for (int j = 1; j <= static_cast<int>(b); ++j) r *= qint(a - b + j, p) / qint(j, p);
  return r;
}

std::string knot_name(KnotId k) { return k == KnotId::Fig8 ? "4_1" : "K_0"; }

LaurentPoly jones_fig8_symbolic(int n) {
  if (n < 1) throw std::invalid_argument("color must be at least 1");
  LaurentPoly total;
  LaurentPoly prod = LaurentPoly::constant(1);
  for (int k = 0; k < n; ++k) {
    if (k > 0) {
      prod *= LaurentPoly::from_terms({{0, 1}, {2 * (n + k), -1}});
      prod *= LaurentPoly::from_terms({{0, 1}, {2 * (n - k), -1}});
    }
    total += prod.shifted(-2LL * n * k);
  }
  return total;
}

ColoredJonesValue jones_fig8(int n, const PhasePoint& p, bool symbolic) {
  if (n < 1) throw std::invalid_argument("color must be at least 1");
  ColoredJonesValue v;
  v.knot = KnotId::Fig8;
  v.color = n;
  v.phase = p;
  v.digits = 16;
  std::complex<double> total = 0.0, prod = 1.0;
  for (int k = 0; k < n; ++k) {
    if (k > 0) prod *= (1.0 - p.power_half(2LL * (n + k))) * (1.0 - p.power_half(2LL * (n - k)));
    total += p.power_half(-2LL * n * k) * prod;
  }
  v.value = total;
  if (symbolic) v.symbolic = jones_fig8_symbolic(n);
  return v;
}

ColoredJonesValue jones_K0(int color, const PhasePoint& p, const K0Options& opt) {
  if (color < 1) throw std::invalid_argument("color must be at least 1");
  const int n = color - 1;
  ColoredJonesValue v;
  v.knot = KnotId::K0;
  v.color = color;
  v.phase = p;

  int digits = opt.digits > 0 ? opt.digits : 30 + color / 2;
  // the closed form in its native orientation is the engine's polynomial at q^-1
  const PhasePoint q0 = p.inverse();

  // probe for vanishing brackets at working precision
  int vanishing = 0;
  {
    mp::PrecisionScope scope(static_cast<mpfr_prec_t>(digits * 3.33) + 16);
    vanishing = brackets(to_mp(q0), 3 * n + 2, std::pow(10.0, -digits / 3.0)).vanishing;
  }

  if (vanishing == 0) {
    mp::PrecisionScope scope(static_cast<mpfr_prec_t>(digits * 3.33) + 16);
    v.value = k0_sum(n, to_mp(q0)).to_complex();
    v.digits = digits;
    return v;
  }

  // J is a Laurent polynomial in q, so averaging J(q0 e^w) over a small
  // circle of w recovers J(q0) while every node avoids the vanishing brackets.
  const double eps = std::min(opt.contour_radius, 0.25 / k0_degree_bound(n));
  // each summand has at most nine factorials and one bracket in its denominator
  const int poles = 9 * vanishing + 1;
  digits += static_cast<int>(std::ceil(poles * std::log10(1.0 / eps))) + 10;
  mp::PrecisionScope scope(static_cast<mpfr_prec_t>(digits * 3.33) + 16);
  const int K = std::max(8, opt.contour_nodes);
  const MpPoint base = to_mp(q0);
  mp::Complex acc;
  for (int j = 0; j < K; ++j) {
    const double theta = 2.0 * std::numbers::pi * (j + 0.5) / K;
    MpPoint node;
    node.x = base.x + mp::Real(eps * std::sin(theta) / (2.0 * std::numbers::pi));
    node.log_r = base.log_r + mp::Real(eps * std::cos(theta));
    acc += k0_sum(n, node);
  }
  acc /= mp::Complex(mp::Real(K));
  v.value = acc.to_complex();
  v.digits = digits;
  return v;
}

}  // namespace cjones
