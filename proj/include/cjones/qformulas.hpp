#pragma once

#include <complex>
#include <optional>
#include <string>

#include "cjones/laurent.hpp"

namespace cjones {

/// Balanced quantum integer [m] = (q^(m/2) - q^(-m/2)) / (q^(1/2) - q^(-1/2)).
/// m may be any real; at q = 1 the classical value m is returned.
std::complex<double> qint(double m, const PhasePoint& p);
/// [m]! = [1][2]...[m]. Throws NonIntegerIndex unless m is a nonnegative integer.
std::complex<double> qfact(double m, const PhasePoint& p);
/// [a]! / ([b]! [a-b]!), zero when b < 0 or b > a.
std::complex<double> qbinom(double a, double b, const PhasePoint& p);

enum class KnotId { Fig8, K0 };

std::string knot_name(KnotId k);

struct ColoredJonesValue {
  KnotId knot = KnotId::Fig8;
  int color = 1;
  PhasePoint phase;
  std::complex<double> value;
  std::optional<LaurentPoly> symbolic;  // figure-eight only
  int digits = 0;                       // working precision used, decimal digits
};

/// J_n(4_1; q) = sum_{k=0}^{n-1} q^{-nk} prod_{l=1}^{k} (1 - q^{n+l})(1 - q^{n-l}).
ColoredJonesValue jones_fig8(int n, const PhasePoint& p, bool symbolic = false);
LaurentPoly jones_fig8_symbolic(int n);

struct K0Options {
  /// Decimal digits for the multiprecision sum; 0 picks 30 + n/2.
  int digits = 0;
  /// Nodes of the contour average used where a bracket in the sum vanishes.
  int contour_nodes = 24;
  double contour_radius = 1e-3;
};

/// Colored Jones polynomial of K_0 (the closure of b_1^2 (b_1 b_2)^8) from
/// its closed-form triple sum, in the orientation of the vertex engine.
ColoredJonesValue jones_K0(int color, const PhasePoint& p, const K0Options& opt = {});

}  // namespace cjones
