#include <algorithm>
#include <random>
#include <sstream>

#include "doctest.h"
#include "cjones/analysis.hpp"
#include "cjones/jones_engine.hpp"
#include "test_support.hpp"

using namespace cjones;
using cjones::testing::lp;

namespace {

BraidWord k0_word() {
  BraidWord w{3, {1, 1}};
  for (int j = 0; j < 8; ++j) {
    w.letters.push_back(1);
    w.letters.push_back(2);
  }
  return w;
}

// Shared oracle: residual bound and coefficient reconstruction.
void check_roots(const LaurentPoly& p) {
  const RootSet rs = roots(p);
  CHECK(rs.converged);
  const std::int64_t base = std::min<std::int64_t>(p.min_exp() / 2, 0);
  const std::int64_t deg = p.max_exp() / 2 - base;
  CHECK(rs.roots.size() == static_cast<std::size_t>(deg));
  std::vector<std::complex<double>> c(static_cast<std::size_t>(deg) + 1, 0.0);
  for (const auto& t : p.terms()) c[static_cast<std::size_t>(t.exp / 2 - base)] = t.coef.get_d();
  for (const auto& z : rs.roots) {
    std::complex<double> v = 0;
    for (std::size_t k = c.size(); k-- > 0;) v = v * z + c[k];
    CHECK(std::abs(v) < 1e-8 * std::pow(1 + std::abs(z), static_cast<double>(deg)));
  }
  const auto rc = reconstruct(rs.roots, c.back());
  double scale = 0, err = 0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    scale = std::max(scale, std::abs(c[k]));
    err = std::max(err, std::abs(rc[k] - c[k]));
  }
  CHECK(err < 1e-6 * scale);
  CHECK(rs.zero_at_origin_count == std::max<std::int64_t>(p.min_exp() / 2, 0));
}

}  // namespace

TEST_CASE("roots of small polynomials") {
  const auto rs = roots(lp({{2, 1}, {0, -1}}));
  REQUIRE(rs.roots.size() == 2);
  std::vector<double> re{rs.roots[0].real(), rs.roots[1].real()};
  std::sort(re.begin(), re.end());
  CHECK(re[0] == doctest::Approx(-1.0));
  CHECK(re[1] == doctest::Approx(1.0));
  CHECK(rs.zero_at_origin_count == 0);

  const auto tr = roots(cjones::testing::trefoil_jones());
  CHECK(tr.zero_at_origin_count == 1);
  REQUIRE(tr.roots.size() == 4);
  CHECK(std::count(tr.roots.begin(), tr.roots.end(), std::complex<double>(0.0)) == 1);
  for (const auto& z : tr.roots)
    if (z != 0.0) CHECK(std::abs(1.0 + z * z - z * z * z) < 1e-10);

  CHECK_THROWS_AS(roots(LaurentPoly{}), ZeroPolynomial);
  CHECK(roots(LaurentPoly::constant(5)).roots.empty());
}

TEST_CASE("roots of knot polynomials satisfy the residual and reconstruction oracles") {
  check_roots(cjones::testing::trefoil_jones());
  check_roots(cjones::testing::fig8_jones());
  check_roots(cjones::testing::trefoil_adjoint());
  check_roots(cjones::testing::fig8_adjoint());
  check_roots(jones(k0_word(), 2).polynomial);
  check_roots(jones(k0_word(), 3).polynomial);
}

TEST_CASE("roots of random polynomials") {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<int> deg(1, 30), co(-20, 20), low(-6, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = deg(rng), lo = low(rng);
    std::vector<std::pair<std::int64_t, BigInt>> raw;
    for (int k = 0; k <= d; ++k) raw.emplace_back(2 * (lo + k), BigInt(co(rng)));
    raw.emplace_back(2 * (lo + d), BigInt(trial % 2 ? 1 : -1) * 25);  // nonzero leading term
    auto p = LaurentPoly::from_terms(std::move(raw));
    if (p.is_zero() || p.is_monomial()) continue;
    check_roots(p);
  }
}

TEST_CASE("Jones polynomials never vanish at q = 1") {
  for (const auto& p : {cjones::testing::trefoil_jones(), cjones::testing::fig8_jones(), cjones::testing::fig8_adjoint(),
                        jones(k0_word(), 2).polynomial, jones(k0_word(), 3).polynomial})
    CHECK(std::abs(lp_eval(p, PhasePoint(0.0))) >= 1.0);
}

TEST_CASE("degree statistics") {
  KnotRecord a{"3_1", 3, BraidWord{2, {1, 1, 1}}, 0.0, cjones::testing::trefoil_jones(), std::nullopt, {}};
  KnotRecord b{"4_1", 4, BraidWord{3, {1, -2, 1, -2}}, 2.02988321282, cjones::testing::fig8_jones(), std::nullopt, {}};
  KnotRecord c{"K_0", 18, k0_word(), 3.474247, jones(k0_word(), 2).polynomial, std::nullopt, {}};
  const auto one = degree_stats({b}, 2);
  CHECK(one.min_fit.mean == -2);
  CHECK(one.min_fit.stddev == 0);
  CHECK(one.length_fit.mean == 5);

  const auto s = degree_stats({a, b, c}, 2);
  std::size_t total = 0;
  for (const auto& [bin, n] : s.min_hist) total += n;
  CHECK(total == 3);
  CHECK(s.by_crossing.size() == 3);
  CHECK(s.by_crossing[1].mean_volume == doctest::Approx(2.02988321282));

  const auto t = degree_stats({c, a, b}, 2);
  CHECK(t.min_fit.mean == s.min_fit.mean);
  CHECK(t.max_fit.stddev == s.max_fit.stddev);
  CHECK(t.length_slope == s.length_slope);
  CHECK(t.min_hist == s.min_hist);

  CHECK_THROWS_AS(degree_stats({a, b}, 3), EmptyInput);
}

TEST_CASE("quadratic relation between J_2(-1) and J_3(e^(2 pi i/3))") {
  KnotRecord f{"4_1", 4, BraidWord{3, {1, -2, 1, -2}}, 2.02988321282, cjones::testing::fig8_jones(),
               cjones::testing::fig8_adjoint(), {}};
  const auto q = quad_relation({f}, 0.0);
  REQUIRE(q.pairs.size() == 1);
  CHECK(q.pairs[0].first == doctest::Approx(5.0));
  CHECK(q.pairs[0].second == doctest::Approx(13.0));
  // the default threshold excludes this small knot
  CHECK_THROWS_AS(quad_relation({f}), EmptyInput);

  std::vector<std::pair<double, double>> synth;
  for (double x = 11; x < 5000; x *= 1.3) synth.emplace_back(x, x * x / std::pow(10.0, 1.155));
  const auto s = quad_relation(synth);
  CHECK(std::abs(s.C - 1.155) < 1e-9);
  CHECK(s.free_slope == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(s.free_C == doctest::Approx(1.155).epsilon(1e-9));
  CHECK(s.used == synth.size());
}

TEST_CASE("plot-ready CSV") {
  std::ostringstream os;
  write_roots_csv(os, roots(lp({{2, 1}, {0, -1}})));
  CHECK(os.str().rfind("re,im\n", 0) == 0);
  std::ostringstream hs;
  write_histogram_csv(hs, {{-2.0, 3}, {1.0, 4}});
  CHECK(hs.str() == "bin,count\n-2,3\n1,4\n");
  std::ostringstream ss;
  write_scatter_csv(ss, {{5, 13}});
  CHECK(ss.str() == "x,y\n5,13\n");
}
