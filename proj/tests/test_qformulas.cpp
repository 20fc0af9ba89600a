#include <numbers>
#include <random>

#include "doctest.h"
#include "cjones/jones_engine.hpp"
#include "cjones/qformulas.hpp"
#include "test_support.hpp"

using namespace cjones;

namespace {

BraidWord k0_word() {
  BraidWord w{3, {1, 1}};
  for (int j = 0; j < 8; ++j) {
    w.letters.push_back(1);
    w.letters.push_back(2);
  }
  return w;
}

// Direct product-sum for |J_n(4_1)| at the Kashaev phase.
double kashaev_fig8(int n) {
  double total = 0;
  for (int k = 0; k < n; ++k) {
    double prod = 1;
    for (int l = 1; l <= k; ++l) prod *= std::norm(1.0 - std::polar(1.0, 2 * std::numbers::pi * l / n));
    total += prod;
  }
  return total;
}

double rel(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }

}  // namespace

TEST_CASE("quantum integers") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> ux(0.01, 0.99);
  for (int trial = 0; trial < 20; ++trial) {
    const PhasePoint p(ux(rng));
    CHECK(std::abs(qint(1, p) - 1.0) < 1e-12);
    CHECK(std::abs(qint(0, p)) < 1e-12);
    CHECK(std::abs(qint(-3, p) + qint(3, p)) < 1e-12);
    // on the unit circle [m] = sin(pi m x) / sin(pi x)
    CHECK(std::abs(qint(5, p) - std::sin(5 * std::numbers::pi * p.x) / std::sin(std::numbers::pi * p.x)) < 1e-10);
  }
  CHECK(std::abs(qint(2, PhasePoint(1e-6)) - 2.0) < 1e-4);
  CHECK(std::abs(qint(7, PhasePoint(0.0)) - 7.0) < 1e-12);
  CHECK(std::abs(qbinom(3, 1, PhasePoint(1e-6)) - 3.0) < 1e-4);
  CHECK(std::abs(qbinom(3, 1, PhasePoint(0.0)) - 3.0) < 1e-12);
  CHECK(std::abs(qbinom(3, 4, PhasePoint(0.2))) == 0.0);
  CHECK(std::abs(qbinom(3, -1, PhasePoint(0.2))) == 0.0);
  const PhasePoint p(0.3);
  CHECK(rel(qbinom(6, 2, p), qfact(6, p) / (qfact(2, p) * qfact(4, p))) < 1e-12);
  CHECK_THROWS_AS(qfact(2.5, p), NonIntegerIndex);
  CHECK_THROWS_AS(qfact(-1, p), NonIntegerIndex);
  CHECK_THROWS_AS(qbinom(2.5, 1, p), NonIntegerIndex);
}

TEST_CASE("figure-eight closed form, symbolic") {
  CHECK(jones_fig8_symbolic(1) == LaurentPoly::constant(1));
  CHECK(jones_fig8_symbolic(2) == cjones::testing::fig8_jones());
  CHECK(jones_fig8_symbolic(2) == jones(BraidWord{3, {1, -2, 1, -2}}, 2).polynomial);
  CHECK(jones_fig8_symbolic(3) == jones(BraidWord{3, {1, -2, 1, -2}}, 3).polynomial);
  CHECK(jones_fig8_symbolic(3) == cjones::testing::fig8_adjoint());
  for (int n = 1; n <= 10; ++n) {
    const auto j = jones_fig8_symbolic(n);
    CHECK(j == j.mirrored());
    CHECK_FALSE(j.has_half_integer_exponents());
  }
}

TEST_CASE("figure-eight closed form, numeric") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> ux(0.0, 1.0);
  for (int n = 1; n <= 12; ++n) {
    const PhasePoint p(ux(rng));
    const auto v = jones_fig8(n, p, true);
    REQUIRE(v.symbolic);
    CHECK(rel(v.value, lp_eval(*v.symbolic, p)) < 1e-10);
    const auto w = jones_fig8(n, PhasePoint(1.0 - p.x));
    CHECK(std::abs(v.value - std::conj(w.value)) < 1e-9 * (1 + std::abs(v.value)));
  }
  CHECK(std::abs(jones_fig8(1, PhasePoint(0.37)).value - 1.0) < 1e-15);
  for (int n : {2, 3, 4, 7}) {
    const auto v = jones_fig8(n, PhasePoint(Rational(1, n)));
    CHECK(std::abs(std::abs(v.value) - kashaev_fig8(n)) < 1e-9 * kashaev_fig8(n));
  }
  CHECK(std::abs(kashaev_fig8(3) - 13.0) < 1e-12);
  CHECK(std::abs(jones_fig8(3, PhasePoint(Rational(1, 3))).value - 13.0) < 1e-11);
}

TEST_CASE("K_0 closed form at trivial color") {
  CHECK(std::abs(jones_K0(1, PhasePoint(0.3)).value - 1.0) < 1e-14);
  CHECK(std::abs(jones_K0(1, PhasePoint(0.3, 1.2)).value - 1.0) < 1e-14);
}

TEST_CASE("K_0 closed form agrees with the vertex engine") {
  const BraidWord w = k0_word();
  const auto j2 = jones(w, 2).polynomial;
  const auto j3 = jones(w, 3).polynomial;
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> ux(0.0, 1.0);
  for (int trial = 0; trial < 12; ++trial) {
    const PhasePoint p(ux(rng), trial % 3 == 0 ? 0.95 + 0.1 * ux(rng) : 1.0);
    CHECK(rel(jones_K0(2, p).value, lp_eval(j2, p)) < 1e-8);
    CHECK(rel(jones_K0(3, p).value, lp_eval(j3, p)) < 1e-8);
  }
  CHECK(rel(jones_K0(2, PhasePoint(Rational(1, 2))).value, jones_eval(w, 2, PhasePoint(Rational(1, 2)))) < 1e-8);
  CHECK(rel(jones_K0(3, PhasePoint(Rational(4, 15))).value, jones_eval(w, 3, PhasePoint(Rational(4, 15)))) < 1e-8);
}

TEST_CASE("K_0 at phases where brackets vanish") {
  const BraidWord w = k0_word();
  // [n] = 0 at the Kashaev phase x = 1/n, so the sum is taken on a contour
  CHECK(rel(jones_K0(2, PhasePoint(Rational(1, 2))).value, lp_eval(jones(w, 2).polynomial, PhasePoint(0.5))) < 1e-8);
  CHECK(rel(jones_K0(3, PhasePoint(Rational(1, 3))).value, lp_eval(jones(w, 3).polynomial, PhasePoint(Rational(1, 3)))) <
        1e-8);
  CHECK(std::abs(jones_K0(3, PhasePoint(0.0)).value - 1.0) < 1e-8);
}

TEST_CASE("K_0 sum is stable under extra precision") {
  for (int color : {8, 20}) {
    const PhasePoint p(Rational(color + 1, color * (color + 2)));
    const auto a = jones_K0(color, p);
    K0Options hi;
    hi.digits = a.digits + 40;
    const auto b = jones_K0(color, p, hi);
    CHECK(rel(a.value, b.value) < 1e-12);
  }
}
