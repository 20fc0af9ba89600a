#include "cjones/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace cjones {

namespace {

using cd = std::complex<double>;

// p(z) and p'(z) by Horner's rule, coefficients ascending.
std::pair<cd, cd> horner(const std::vector<cd>& c, cd z) {
  cd p = c.back(), dp = 0.0;
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[k];
  }
  return {p, dp};
}

// Positive root of |c_d| z^d = sum_{k<d} |c_k| z^k, an upper bound on |roots|.
double cauchy_bound(const std::vector<cd>& c) {
  const std::size_t d = c.size() - 1;
  const double lead = std::abs(c[d]);
  auto f = [&](double z) {
    double s = lead;
    for (std::size_t k = d; k-- > 0;) s = s * z - std::abs(c[k]);
    return s;
  };
  double hi = 1.0;
  while (f(hi) <= 0) hi *= 2.0;
  double lo = 0.0;
  for (int it = 0; it < 200 && hi - lo > 1e-12 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0 ? hi : lo) = mid;
  }
  return hi;
}

MomentFit moments(const std::map<double, std::size_t>& hist) {
  MomentFit m;
  double sum = 0;
  for (const auto& [v, n] : hist) {
    m.count += n;
    sum += v * static_cast<double>(n);
  }
  if (m.count == 0) return m;
  m.mean = sum / static_cast<double>(m.count);
  double var = 0;
  for (const auto& [v, n] : hist) var += (v - m.mean) * (v - m.mean) * static_cast<double>(n);
  m.stddev = std::sqrt(var / static_cast<double>(m.count));
  return m;
}

}  // namespace

RootSet polynomial_roots(const std::vector<cd>& coeffs, const RootOptions& opt) {
  std::vector<cd> c = coeffs;
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  if (c.empty()) throw ZeroPolynomial("roots of the zero polynomial");
  RootSet rs;
  std::size_t shift = 0;
  while (c[shift] == 0.0) ++shift;
  rs.roots.assign(shift, 0.0);
  c.erase(c.begin(), c.begin() + static_cast<long>(shift));
  const std::size_t d = c.size() - 1;
  if (d == 0) return rs;

  const double R = cauchy_bound(c);
  std::vector<cd> z(d);
  for (std::size_t k = 0; k < d; ++k)
    z[k] = std::polar(R, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d) + 0.4);

  rs.converged = false;
  for (int it = 1; it <= opt.max_iterations; ++it) {
    rs.iterations = it;
    bool done = true;
    for (std::size_t i = 0; i < d; ++i) {
      const auto [p, dp] = horner(c, z[i]);
      if (p == 0.0) continue;
      const cd ratio = p / dp;
      cd sum = 0.0;
      for (std::size_t j = 0; j < d; ++j)
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      const cd w = ratio / (1.0 - ratio * sum);
      if (std::isfinite(w.real()) && std::isfinite(w.imag())) z[i] -= w;
      if (!(std::abs(w) <= opt.tolerance * (1.0 + std::abs(z[i])))) done = false;
    }
    if (done) {
      rs.converged = true;
      break;
    }
  }

  const double deg = static_cast<double>(coeffs.size() - 1);
  for (const cd& r : z) {
    const cd p = horner(c, r).first * std::pow(r, static_cast<double>(shift));
    rs.residual_max = std::max(rs.residual_max, std::abs(p) / std::pow(1.0 + std::abs(r), deg));
    rs.roots.push_back(r);
  }
  if (!rs.converged && opt.throw_on_failure)
    throw NoConvergence("root finder stopped after " + std::to_string(rs.iterations) +
                        " iterations, residual " + std::to_string(rs.residual_max));
  return rs;
}

RootSet roots(const LaurentPoly& poly, const RootOptions& opt) {
  if (poly.is_zero()) throw ZeroPolynomial("roots of the zero polynomial");
  if (poly.has_half_integer_exponents())
    throw std::invalid_argument("root finding needs integer q-exponents");
  const std::int64_t lo = poly.min_exp() / 2;
  const std::int64_t base = std::min<std::int64_t>(lo, 0);
  const std::int64_t deg = poly.max_exp() / 2 - base;
  std::vector<cd> c(static_cast<std::size_t>(deg) + 1, 0.0);
  for (const auto& t : poly.terms()) c[static_cast<std::size_t>(t.exp / 2 - base)] = t.coef.get_d();
  RootSet rs = polynomial_roots(c, opt);
  rs.zero_at_origin_count = lo > 0 ? static_cast<int>(lo) : 0;
  return rs;
}

std::vector<cd> reconstruct(const std::vector<cd>& roots, cd lead) {
  std::vector<cd> c{lead};
  for (const cd& r : roots) {
    c.push_back(0.0);
    for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
    c[0] = -r * c[0];
  }
  return c;
}

DegreeStats degree_stats(const std::vector<KnotRecord>& records, int color) {
  DegreeStats s;
  s.color = color;
  std::map<int, std::map<double, std::size_t>> len_by_x;
  std::map<int, std::vector<double>> vol_by_x;
  for (const auto& r : records) {
    const auto& p = r.polynomial(color);
    if (!p || p->is_zero()) continue;
    const DegreeInfo d = lp_degrees(*p);
    ++s.min_hist[d.min_deg];
    ++s.max_hist[d.max_deg];
    ++s.length_hist[d.length];
    ++len_by_x[r.crossings][d.length];
    vol_by_x[r.crossings].push_back(r.volume);
  }
  if (s.min_hist.empty()) throw EmptyInput("no record carries a J_" + std::to_string(color) + " polynomial");
  s.min_fit = moments(s.min_hist);
  s.max_fit = moments(s.max_hist);
  s.length_fit = moments(s.length_hist);
  for (auto& [x, hist] : len_by_x) {
    CrossingRow row;
    row.crossings = x;
    row.length = moments(hist);
    row.count = row.length.count;
    auto& vols = vol_by_x[x];
    std::sort(vols.begin(), vols.end());
    double sum = 0;
    for (double v : vols) sum += v;
    row.mean_volume = sum / static_cast<double>(vols.size());
    s.by_crossing.push_back(row);
  }
  if (s.by_crossing.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(s.by_crossing.size());
    for (const auto& row : s.by_crossing) {
      sx += row.crossings;
      sy += row.length.mean;
      sxx += static_cast<double>(row.crossings) * row.crossings;
      sxy += row.crossings * row.length.mean;
    }
    s.length_slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    s.length_intercept = (sy - s.length_slope * sx) / n;
  }
  return s;
}

QuadRelation quad_relation(const std::vector<std::pair<double, double>>& pairs, double threshold) {
  QuadRelation q;
  q.pairs = pairs;
  std::vector<std::pair<double, double>> logs;
  for (const auto& [x, y] : pairs)
    if (std::abs(x) > threshold && y != 0.0) logs.emplace_back(std::log10(std::abs(x)), std::log10(std::abs(y)));
  std::sort(logs.begin(), logs.end());
  q.used = logs.size();
  if (logs.empty()) throw EmptyInput("no pairs with |J_2(-1)| above the threshold");
  double sc = 0;
  for (const auto& [lx, ly] : logs) sc += 2.0 * lx - ly;
  q.C = sc / static_cast<double>(logs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(logs.size());
  for (const auto& [lx, ly] : logs) {
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double den = n * sxx - sx * sx;
  if (logs.size() >= 2 && den > 0) {
    q.free_slope = (n * sxy - sx * sy) / den;
    q.free_C = -(sy - q.free_slope * sx) / n;
  } else {
    q.free_slope = q.free_C = std::numeric_limits<double>::quiet_NaN();
  }
  return q;
}

QuadRelation quad_relation(const std::vector<KnotRecord>& records, double threshold) {
  std::vector<std::pair<double, double>> pairs;
  const PhasePoint minus_one(Rational(1, 2)), cube_root(Rational(1, 3));
  for (const auto& r : records)
    if (r.j2 && r.j3) pairs.emplace_back(std::abs(lp_eval(*r.j2, minus_one)), std::abs(lp_eval(*r.j3, cube_root)));
  if (pairs.empty()) throw EmptyInput("no record carries both J_2 and J_3");
  return quad_relation(pairs, threshold);
}

void write_roots_csv(std::ostream& os, const RootSet& rs) {
  os << "re,im\n";
  os.precision(17);
  for (const auto& z : rs.roots) os << z.real() << ',' << z.imag() << '\n';
}

void write_histogram_csv(std::ostream& os, const std::map<double, std::size_t>& hist) {
  os << "bin,count\n";
  for (const auto& [b, n] : hist) os << b << ',' << n << '\n';
}

void write_scatter_csv(std::ostream& os, const std::vector<std::pair<double, double>>& pts) {
  os << "x,y\n";
  os.precision(17);
  for (const auto& [x, y] : pts) os << x << ',' << y << '\n';
}

}  // namespace cjones
