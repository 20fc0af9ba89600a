#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cjones/laurent.hpp"
#include "cjones/qformulas.hpp"

namespace cjones {

inline constexpr double kVolumeFig8 = 2.02988321282;
inline constexpr double kVolumeK0 = 3.474247;

enum class PhaseKind { Kashaev, Improved, Fixed };

struct PhaseRule {
  PhaseKind kind = PhaseKind::Improved;
  Rational fixed_x{0};  // used when kind == Fixed

  static PhaseRule kashaev() { return {PhaseKind::Kashaev, 0}; }
  static PhaseRule improved() { return {PhaseKind::Improved, 0}; }
  static PhaseRule fixed(Rational x) { return {PhaseKind::Fixed, x}; }
};

/// Kashaev: x = 1/n. Improved: x = (n+1)/(n(n+2)). Fixed: the stored x.
PhasePoint phase_of(const PhaseRule& rule, int n);
Rational phase_fraction(const PhaseRule& rule, int n);

/// Fractional Chern-Simons level of the improved phase for color n.
struct LevelData {
  int n = 0;
  Rational k;      // (n^2 - 2)/(n + 1)
  Rational gamma;  // (n - 1)/k
  Rational x;      // 1/(k + 2)
};

LevelData level_of(int n);

struct VolumeEstimate {
  int n = 0;
  double v = 0;          // (2 pi / n) log |J_n|; -infinity when degenerate
  double abs_j = 0;
  bool degenerate = false;  // |J_n| < 1e-12
};

VolumeEstimate v_of_n(KnotId knot, int n, const PhaseRule& rule);

/// 3.25 log(j3_abs + 36.97) - 1.72, natural logarithm.
double predict_volume(double j3_abs);

struct FitParams {
  double a = 0, b = 1, c = 0, d = 0;
  double residual_norm = 0;
  double r_squared = 0;
  int iterations = 0;

  double operator()(double x) const;
};

struct FitOptions {
  bool fix_b = false;  // hold b = 1 (the model is invariant under (a, b, c) -> (a, tb, tc), d -> d - a log t)
  int max_iterations = 500;
  double step_tolerance = 1e-10;
};

/// Nonlinear least squares for a log(b x + c) + d by damped Gauss-Newton
/// with several deterministic starting points. Throws DegenerateData when
/// there are fewer than eight pairs or all x coincide, NoConvergence when no
/// start converges.
FitParams fit_log_model(const std::vector<std::pair<double, double>>& data, const FitOptions& opt = {});

}  // namespace cjones
