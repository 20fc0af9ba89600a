#include "cjones/volume_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

namespace cjones {

Rational phase_fraction(const PhaseRule& rule, int n) {
  if (n < 2) throw std::invalid_argument("color must be at least 2");
  switch (rule.kind) {
    case PhaseKind::Kashaev:
      return Rational(1, n);
    case PhaseKind::Improved:
      return Rational(n + 1, static_cast<std::int64_t>(n) * (n + 2));
    case PhaseKind::Fixed:
      return rule.fixed_x;
  }
  return Rational(0);
}

PhasePoint phase_of(const PhaseRule& rule, int n) { return PhasePoint(phase_fraction(rule, n)); }

LevelData level_of(int n) {
  if (n < 2) throw std::invalid_argument("color must be at least 2");
  LevelData d;
  d.n = n;
  d.k = Rational(static_cast<std::int64_t>(n) * n - 2, n + 1);
  d.gamma = Rational(n - 1) / d.k;
  d.x = Rational(1) / (d.k + Rational(2));
  return d;
}

VolumeEstimate v_of_n(KnotId knot, int n, const PhaseRule& rule) {
  const PhasePoint p = phase_of(rule, n);
  const std::complex<double> j = knot == KnotId::Fig8 ? jones_fig8(n, p).value : jones_K0(n, p).value;
  VolumeEstimate e;
  e.n = n;
  e.abs_j = std::abs(j);
  if (e.abs_j < 1e-12) {
    e.degenerate = true;
    e.v = -std::numeric_limits<double>::infinity();
  } else {
    e.v = 2.0 * std::numbers::pi / n * std::log(e.abs_j);
  }
  return e;
}

double predict_volume(double j3_abs) { return 3.25 * std::log(j3_abs + 36.97) - 1.72; }

double FitParams::operator()(double x) const { return a * std::log(b * x + c) + d; }

namespace {

using Vec = Eigen::VectorXd;

struct Problem {
  const std::vector<std::pair<double, double>>& data;
  bool fix_b;

  int dim() const { return fix_b ? 3 : 4; }

  FitParams unpack(const Vec& v) const {
    FitParams f;
    f.a = v[0];
    f.b = fix_b ? 1.0 : v[1];
    f.c = v[fix_b ? 1 : 2];
    f.d = v[fix_b ? 2 : 3];
    return f;
  }
  Vec pack(const FitParams& f) const {
    Vec v(dim());
    if (fix_b)
      v << f.a, f.c, f.d;
    else
      v << f.a, f.b, f.c, f.d;
    return v;
  }
  bool feasible(const FitParams& f) const {
    for (const auto& [x, y] : data)
      if (!(f.b * x + f.c > 0)) return false;
    return true;
  }
  double cost(const FitParams& f, Vec* r = nullptr) const {
    double s = 0;
    if (r) r->resize(static_cast<Eigen::Index>(data.size()));
    for (std::size_t i = 0; i < data.size(); ++i) {
      const double e = f(data[i].first) - data[i].second;
      if (r) (*r)[static_cast<Eigen::Index>(i)] = e;
      s += e * e;
    }
    return s;
  }
  Eigen::MatrixXd jacobian(const FitParams& f) const {
    Eigen::MatrixXd J(static_cast<Eigen::Index>(data.size()), dim());
    for (std::size_t i = 0; i < data.size(); ++i) {
      const double x = data[i].first;
      const double u = f.b * x + f.c;
      const auto row = static_cast<Eigen::Index>(i);
      int col = 0;
      J(row, col++) = std::log(u);
      if (!fix_b) J(row, col++) = f.a * x / u;
      J(row, col++) = f.a / u;
      J(row, col) = 1.0;
    }
    return J;
  }
};

// Closed-form a, d for fixed b and c.
FitParams linear_start(const Problem& pr, double b, double c) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(pr.data.size());
  for (const auto& [x, y] : pr.data) {
    const double u = std::log(b * x + c);
    sx += u;
    sy += y;
    sxx += u * u;
    sxy += u * y;
  }
  FitParams f;
  f.b = b;
  f.c = c;
  const double den = n * sxx - sx * sx;
  f.a = den != 0 ? (n * sxy - sx * sy) / den : 0.0;
  f.d = (sy - f.a * sx) / n;
  return f;
}

struct Outcome {
  FitParams fit;
  double cost = 0;
  bool converged = false;
};

Outcome levenberg_marquardt(const Problem& pr, FitParams start, const FitOptions& opt) {
  Outcome out;
  Vec p = pr.pack(start);
  FitParams f = start;
  Vec r;
  double cost = pr.cost(f, &r);
  double lambda = 1e-3;
  for (int it = 0; it < opt.max_iterations; ++it) {
    const Eigen::MatrixXd J = pr.jacobian(f);
    const Eigen::MatrixXd A = J.transpose() * J;
    const Vec g = J.transpose() * r;
    bool accepted = false;
    Vec step;
    for (int tries = 0; tries < 40 && !accepted; ++tries) {
      Eigen::MatrixXd damped = A;
      for (int k = 0; k < A.rows(); ++k) damped(k, k) += lambda * std::max(A(k, k), 1e-12);
      step = damped.ldlt().solve(-g);
      const FitParams trial = pr.unpack(p + step);
      if (pr.feasible(trial)) {
        Vec rt;
        const double ct = pr.cost(trial, &rt);
        if (ct <= cost) {
          p += step;
          f = trial;
          r = std::move(rt);
          cost = ct;
          lambda = std::max(lambda / 3.0, 1e-15);
          accepted = true;
          break;
        }
      }
      lambda *= 4.0;
    }
    out.fit = f;
    out.fit.iterations = it + 1;
    out.cost = cost;
    if (!accepted) {
      // no descent direction left: a stationary point
      out.converged = g.norm() <= 1e-8 * (1.0 + cost) || cost < 1e-28;
      return out;
    }
    if (step.norm() <= opt.step_tolerance * (1.0 + p.norm())) {
      out.converged = true;
      return out;
    }
  }
  out.converged = false;
  return out;
}

}  // namespace

FitParams fit_log_model(const std::vector<std::pair<double, double>>& data, const FitOptions& opt) {
  if (data.size() < 8) throw DegenerateData("at least eight data points are required");
  double xmin = data.front().first, xmax = xmin;
  for (const auto& [x, y] : data) {
    if (!(x >= 0) || !std::isfinite(y)) throw DegenerateData("data must have x >= 0 and finite values");
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
  }
  if (xmax == xmin) throw DegenerateData("all x values coincide");

  const Problem pr{data, opt.fix_b};
  std::vector<double> xs;
  for (const auto& pt : data) xs.push_back(pt.first);
  std::sort(xs.begin(), xs.end());
  const auto pct = [&](double q) { return xs[static_cast<std::size_t>(q * static_cast<double>(xs.size() - 1))]; };

  // c from percentiles of x (b = 1), plus a spread of scales
  std::vector<double> c_starts;
  for (double q : {0.05, 0.25, 0.5, 0.75}) c_starts.push_back(std::max(pct(q), 1e-6));
  const double span = xmax - xmin;
  for (double s : {1e-3, 1e-2, 0.1, 1.0, 10.0}) c_starts.push_back(s * span + 1e-9);
  c_starts.push_back(1.0);

  Outcome best;
  bool have = false;
  for (double c0 : c_starts) {
    const double c = c0 - std::min(0.0, xmin);
    const FitParams start = linear_start(pr, 1.0, c);
    if (!pr.feasible(start)) continue;
    Outcome o = levenberg_marquardt(pr, start, opt);
    if (!o.converged) continue;
    if (!have || o.cost < best.cost) {
      best = o;
      have = true;
    }
  }
  if (!have) throw NoConvergence("log-model fit did not converge from any start");

  FitParams f = best.fit;
  double mean = 0;
  for (const auto& pt : data) mean += pt.second;
  mean /= static_cast<double>(data.size());
  double tot = 0;
  for (const auto& pt : data) tot += (pt.second - mean) * (pt.second - mean);
  f.residual_norm = std::sqrt(best.cost);
  f.r_squared = tot > 0 ? 1.0 - best.cost / tot : 1.0;
  return f;
}

}  // namespace cjones
