#pragma once

#include <complex>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include "cjones/datastore.hpp"
#include "cjones/laurent.hpp"

namespace cjones {

struct RootOptions {
  double tolerance = 1e-12;
  int max_iterations = 200;
  bool throw_on_failure = true;
};

/// Zeros of p(q) = q^{-min(min_deg, 0)} J(q), with multiplicity. Origin zeros
/// of J (positive minimum degree) are included as exact zeros.
struct RootSet {
  std::vector<std::complex<double>> roots;
  int zero_at_origin_count = 0;
  double residual_max = 0;  // max |p(z)| / (1 + |z|)^deg
  int iterations = 0;
  bool converged = true;
};

/// Aberth-Ehrlich simultaneous iteration for the roots of sum_k c_k z^k
/// (ascending coefficients, nonzero leading and constant terms not required).
RootSet polynomial_roots(const std::vector<std::complex<double>>& coeffs, const RootOptions& opt = {});
/// Roots of a Laurent polynomial with integer exponents. Throws
/// ZeroPolynomial on zero input and NoConvergence unless disabled.
RootSet roots(const LaurentPoly& poly, const RootOptions& opt = {});

/// Ascending coefficients of lead * prod (z - r).
std::vector<std::complex<double>> reconstruct(const std::vector<std::complex<double>>& roots,
                                              std::complex<double> lead);

struct MomentFit {
  double mean = 0;
  double stddev = 0;  // population standard deviation
  std::size_t count = 0;
};

struct CrossingRow {
  int crossings = 0;
  std::size_t count = 0;
  MomentFit length;
  double mean_volume = 0;
};

struct DegreeStats {
  int color = 2;
  std::map<double, std::size_t> min_hist, max_hist, length_hist;
  MomentFit min_fit, max_fit, length_fit;
  std::vector<CrossingRow> by_crossing;
  /// Least-squares mean length = slope * crossings + intercept over the rows.
  double length_slope = 0, length_intercept = 0;
};

/// Histograms and moment fits of the degrees of the stored J_color
/// polynomials. Throws EmptyInput when no record carries one.
DegreeStats degree_stats(const std::vector<KnotRecord>& records, int color);

struct QuadRelation {
  std::vector<std::pair<double, double>> pairs;  // (|J_2(-1)|, |J_3(e^(2 pi i/3))|)
  std::size_t used = 0;                          // pairs with |x| above the threshold
  double C = 0;                                  // log10|y| = 2 log10|x| - C
  double free_slope = 0, free_C = 0;             // log10|y| = s log10|x| - C'
};

/// Fits y = x^2 / 10^C over pairs with |x| > threshold; x and y must be nonzero.
QuadRelation quad_relation(const std::vector<std::pair<double, double>>& pairs, double threshold = 10.0);
QuadRelation quad_relation(const std::vector<KnotRecord>& records, double threshold = 10.0);

void write_roots_csv(std::ostream& os, const RootSet& rs);
void write_histogram_csv(std::ostream& os, const std::map<double, std::size_t>& hist);
void write_scatter_csv(std::ostream& os, const std::vector<std::pair<double, double>>& pts);

}  // namespace cjones
