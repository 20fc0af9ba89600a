#include <random>

#include "doctest.h"
#include "cjones/json_forms.hpp"
#include "cjones/laurent.hpp"
#include "test_support.hpp"

using namespace cjones;
using cjones::testing::lp;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng, int max_terms = 20) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> ex(-40, 40);
  std::uniform_int_distribution<long> co(-1000000, 1000000);
  std::vector<std::pair<std::int64_t, BigInt>> raw;
  const int n = nterms(rng);
  for (int k = 0; k < n; ++k) raw.emplace_back(ex(rng), BigInt(co(rng)));
  return LaurentPoly::from_terms(std::move(raw));
}

}  // namespace

TEST_CASE("from_terms canonicalizes") {
  auto p = LaurentPoly::from_terms({{2, 1}, {2, 1}});
  REQUIRE(p.size() == 1);
  CHECK(p.terms()[0].exp == 2);
  CHECK(p.terms()[0].coef == 2);

  CHECK(LaurentPoly::from_terms({}).is_zero());
  CHECK(LaurentPoly::from_terms({{3, 1}, {3, -1}}).is_zero());

  // q + q^3 - q^4 in half units
  auto trefoil = LaurentPoly::from_terms({{8, -1}, {2, 1}, {6, 1}});
  CHECK(trefoil == lp({{1, 1}, {3, 1}, {4, -1}}));
  CHECK(trefoil.to_string() == "q + q^3 - q^4");
}

TEST_CASE("ring operations on small examples") {
  const auto qp1 = lp({{1, 1}, {0, 1}});
  const auto qm1 = lp({{1, 1}, {0, -1}});
  CHECK(qp1 * qm1 == lp({{2, 1}, {0, -1}}));
  CHECK(qp1 + LaurentPoly{} == qp1);
  CHECK(lp_neg(qp1) + qp1 == LaurentPoly{});

  // q^{-2}(1 - q^3)(1 - q), the k = 1 summand of the n = 2 figure-eight sum
  const auto s = lp({{-2, 1}}) * lp({{0, 1}, {3, -1}}) * lp({{0, 1}, {1, -1}});
  CHECK(s == lp({{-2, 1}, {-1, -1}, {1, -1}, {2, 1}}));
}

TEST_CASE("exact division") {
  const auto num = lp({{3, 1}, {0, -1}});
  const auto den = LaurentPoly::q_integer(3);
  CHECK(lp_exact_div(num, den) == lp({{1, 1}, {0, -1}}));
  CHECK(lp_exact_div(num, LaurentPoly::constant(1)) == num);
  CHECK_THROWS_AS(lp_exact_div(lp({{2, 1}}), LaurentPoly::q_integer(2)), NonExactDivision);
  CHECK_THROWS_AS(lp_exact_div(lp({{2, 3}}), LaurentPoly::constant(2)), NonExactDivision);
  CHECK_THROWS_AS(lp_exact_div(num, LaurentPoly{}), ZeroPolynomial);
  // half-integer exponents divide in the variable q^(1/2)
  const auto half = LaurentPoly::from_terms({{1, -1}, {5, 1}});  // -q^(1/2) + q^(5/2)
  CHECK(lp_exact_div(half, LaurentPoly::from_terms({{1, 1}})) == lp({{0, -1}, {2, 1}}));
}

TEST_CASE("evaluation at phase points") {
  const auto fig8 = lp({{-2, 1}, {-1, -1}, {0, 1}, {1, -1}, {2, 1}});
  const auto v = lp_eval(fig8, PhasePoint(Rational(1, 2)));
  CHECK(v.real() == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(std::abs(v.imag()) < 1e-12);

  const auto trefoil = lp({{1, 1}, {3, 1}, {4, -1}});
  CHECK(lp_eval(trefoil, PhasePoint(0.0)).real() == doctest::Approx(1.0));

  // adjoint figure-eight polynomial; value frozen from direct substitution
  const auto j3 = cjones::testing::fig8_adjoint();
  const auto w = lp_eval(j3, PhasePoint(Rational(4, 15)));
  CHECK(w.real() == doctest::Approx(3.9562952014676087).epsilon(1e-12));
  CHECK(std::abs(w.imag()) < 1e-12);

  // half-integer powers follow the phase parameterization: q = -1 via x = 1/2
  // gives q^(1/2) = i, via x = -1/2 gives -i
  const auto root = LaurentPoly::from_terms({{1, 1}});
  CHECK(std::abs(lp_eval(root, PhasePoint(0.5)) - std::complex<double>(0, 1)) < 1e-15);
  CHECK(std::abs(lp_eval(root, PhasePoint(-0.5)) - std::complex<double>(0, -1)) < 1e-15);
  // off-circle modulus
  CHECK(std::abs(lp_eval(lp({{2, 1}}), PhasePoint(0.0, 3.0)) - 9.0) < 1e-12);
}

TEST_CASE("degrees") {
  const auto d = lp_degrees(lp({{1, 1}, {3, 1}, {4, -1}}));
  CHECK(d.min_deg == 1);
  CHECK(d.max_deg == 4);
  CHECK(d.length == 4);
  const auto c = lp_degrees(LaurentPoly::constant(1));
  CHECK(c.min_deg == 0);
  CHECK(c.length == 1);
  const auto j3 = lp_degrees(cjones::testing::fig8_adjoint());
  CHECK(j3.min_deg == -6);
  CHECK(j3.max_deg == 6);
  CHECK(j3.length == 13);
  CHECK_THROWS_AS(lp_degrees(LaurentPoly{}), ZeroPolynomial);
  const auto h = lp_degrees(LaurentPoly::from_terms({{1, 1}, {4, 1}}));
  CHECK(h.min_deg == 0.5);
  CHECK(h.length == 2.5);
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LaurentPoly{});
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ux(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_poly(rng, 8), b = random_poly(rng, 8);
    const PhasePoint p(ux(rng));
    const auto lhs = lp_eval(a * b, p);
    const auto rhs = lp_eval(a, p) * lp_eval(b, p);
    // coefficients reach 1e12, so compare relative to the coefficient mass
    const auto ab = a * b;
    double mass = 0;
    for (const auto& t : ab.terms()) mass += std::abs(t.coef.get_d());
    CHECK(std::abs(lhs - rhs) < 1e-9 * (1 + std::abs(rhs) + 1e-6 * mass));
  }
}

TEST_CASE("exact division inverts multiplication") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_poly(rng);
    auto d = random_poly(rng, 6);
    if (d.is_zero()) d = LaurentPoly::constant(3);
    CHECK(lp_exact_div(a * d, d) == a);
  }
}

TEST_CASE("conjugate symmetry of real-coefficient evaluation") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> ux(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_poly(rng, 10);
    // integer exponents only: half-integer powers are not 1-periodic in x
    std::vector<std::pair<std::int64_t, BigInt>> raw;
    for (const auto& t : a.terms()) raw.emplace_back(2 * (t.exp / 2), t.coef);
    a = LaurentPoly::from_terms(std::move(raw));
    const double x = ux(rng);
    const auto u = lp_eval(a, PhasePoint(x));
    const auto v = lp_eval(a, PhasePoint(1.0 - x));
    double mass = 1;
    for (const auto& t : a.terms()) mass += std::abs(t.coef.get_d());
    CHECK(std::abs(u - std::conj(v)) < 1e-12 * mass);
  }
}

TEST_CASE("canonical JSON form round-trips") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_poly(rng) * LaurentPoly::constant(BigInt("123456789012345678901234567890"));
    CHECK(lp_from_json(lp_to_json(a)) == a);
  }
  const auto j = lp_to_json(LaurentPoly::from_terms({{1, -1}, {5, 1}}));
  CHECK(j.dump() == R"({"terms":[[1,"-1"],[5,"1"]],"unit":2})");
  CHECK_THROWS_AS(lp_from_json(nlohmann::json::parse(R"({"unit":2,"terms":[[3,"1"],[1,"1"]]})")), SchemaError);
  CHECK_THROWS_AS(lp_from_json(nlohmann::json::parse(R"({"unit":1,"terms":[]})")), SchemaError);
}
