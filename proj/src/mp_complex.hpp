#pragma once

#include <complex>
#include <cstdint>
#include <utility>

#include <mpfr.h>

namespace cjones::mp {

/// Working precision for newly created values on this thread.
class PrecisionScope {
 public:
  explicit PrecisionScope(mpfr_prec_t bits) : saved_(current()) { current() = bits; }
  ~PrecisionScope() { current() = saved_; }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

  static mpfr_prec_t& current() {
    thread_local mpfr_prec_t bits = 128;
    return bits;
  }

 private:
  mpfr_prec_t saved_;
};

/// RAII handle for one mpfr_t at the thread's working precision.
class Real {
 public:
  Real() { mpfr_init2(v_, PrecisionScope::current()); mpfr_set_zero(v_, 1); }
  Real(double d) { mpfr_init2(v_, PrecisionScope::current()); mpfr_set_d(v_, d, MPFR_RNDN); }
  Real(long n) { mpfr_init2(v_, PrecisionScope::current()); mpfr_set_si(v_, n, MPFR_RNDN); }
  Real(int n) : Real(static_cast<long>(n)) {}
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real ratio(std::int64_t num, std::int64_t den) {
    Real r(static_cast<long>(num));
    mpfr_div_si(r.v_, r.v_, static_cast<long>(den), MPFR_RNDN);
    return r;
  }
  static Real pi() {
    Real r;
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }

  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator-(Real a) { mpfr_neg(a.v_, a.v_, MPFR_RNDN); return a; }

 private:
  mpfr_t v_;
};

inline Real sqrt(const Real& a) { Real r; mpfr_sqrt(r.get(), a.get(), MPFR_RNDN); return r; }
inline Real exp(const Real& a) { Real r; mpfr_exp(r.get(), a.get(), MPFR_RNDN); return r; }
inline Real log(const Real& a) { Real r; mpfr_log(r.get(), a.get(), MPFR_RNDN); return r; }
inline std::pair<Real, Real> sin_cos(const Real& a) {
  Real s, c;
  mpfr_sin_cos(s.get(), c.get(), a.get(), MPFR_RNDN);
  return {std::move(s), std::move(c)};
}

/// Minimal complex arithmetic over Real.
struct Complex {
  Real re, im;

  Complex() = default;
  Complex(Real r) : re(std::move(r)), im() {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  /// rho * exp(i theta)
  static Complex polar(const Real& rho, const Real& theta) {
    auto [s, c] = sin_cos(theta);
    return {rho * c, rho * s};
  }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
  Real norm() const { return re * re + im * im; }
  Real abs() const { return sqrt(norm()); }

  Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
  Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    const Real d = o.norm();
    Real r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
  }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator-(Complex a) { return {-a.re, -a.im}; }
};

}  // namespace cjones::mp
