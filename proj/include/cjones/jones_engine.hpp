#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "cjones/braid.hpp"
#include "cjones/laurent.hpp"
#include "cjones/vertex_models.hpp"

namespace cjones {

/// Basis of the N^m state strings grouped by total charge (sum of the
/// digits). State index s encodes the string (a_1, ..., a_m) as
/// sum_j a_j N^(m-j), so strand 1 is the most significant digit and the
/// ordering matches kron(R, I, ...).
class SectorBasis {
 public:
  SectorBasis(int N, int m);

  int N() const { return N_; }
  int strands() const { return m_; }
  int num_sectors() const { return static_cast<int>(states_.size()); }
  std::uint32_t num_states() const { return static_cast<std::uint32_t>(charge_.size()); }

  const std::vector<std::uint32_t>& states(int charge) const { return states_[static_cast<std::size_t>(charge)]; }
  std::uint32_t local_index(std::uint32_t state) const { return local_[state]; }
  int charge(std::uint32_t state) const { return charge_[state]; }
  /// Digit on strand `strand` (1-based).
  int digit(std::uint32_t state, int strand) const;
  std::uint32_t place_value(int strand) const { return pow_[static_cast<std::size_t>(m_ - strand)]; }
  std::size_t largest_sector() const;

 private:
  int N_;
  int m_;
  std::vector<std::uint32_t> pow_;
  std::vector<std::vector<std::uint32_t>> states_;
  std::vector<std::uint32_t> local_;
  std::vector<int> charge_;
};

/// Largest charge-sector dimension for N states on m strands, the central
/// coefficient of (1 + x + ... + x^(N-1))^m.
std::size_t largest_sector_dimension(int N, int m);

/// Block-diagonal operator over the charge sectors. Block c is a dense
/// row-major d_c x d_c matrix in the ordered basis SectorBasis::states(c).
template <class Scalar>
struct BlockedOperator {
  int N = 0;
  int strands = 0;
  std::vector<std::vector<Scalar>> blocks;
  std::vector<std::size_t> dims;

  const Scalar& at(int charge, std::size_t r, std::size_t c) const {
    return blocks[static_cast<std::size_t>(charge)][r * dims[static_cast<std::size_t>(charge)] + c];
  }
};

using SymbolicOperator = BlockedOperator<LaurentPoly>;
using NumericOperator = BlockedOperator<std::complex<double>>;

/// I^{(i-1)} x R^{sign} x I^{(m-i-1)} in sector-blocked form.
SymbolicOperator build_generator(const RMatrix& r, int m, int i, int sign);
SymbolicOperator build_generator(int N, int m, int i, int sign);
SymbolicOperator identity_operator(int N, int m);
SymbolicOperator multiply(const SymbolicOperator& a, const SymbolicOperator& b);
NumericOperator evaluate(const SymbolicOperator& a, const PhasePoint& p);
/// Scatter back to the unblocked N^m x N^m matrix.
PolyMatrix to_dense(const SymbolicOperator& a);

/// T(A) = Tr(D * G_{w_1} ... G_{w_L}) with D = diag(q^{charge}); equals the
/// Markov trace with the tau^m factor of H stripped.
LaurentPoly weighted_trace(const BraidWord& w, const RMatrix& r);
LaurentPoly weighted_trace(const BraidWord& w, int N);
std::complex<double> weighted_trace_eval(const BraidWord& w, const RMatrix& r, const PhasePoint& p);

enum class Framing { Auto, Raw };

struct JonesOptions {
  Framing framing = Framing::Auto;
  /// Exponent multipliers f_N of the q^{f_N (s - sigma)} framing prefactor
  /// applied in Auto mode.
  int framing_multiplier_n2 = 0;
  int framing_multiplier_n3 = 0;

  int framing_multiplier(int N) const;
};

struct JonesResult {
  LaurentPoly polynomial;
  int N = 0;
  std::int64_t framing_exponent_applied = 0;  // units of q^(1/2)
  int components = 1;

  bool multi_component() const { return components > 1; }
};

/// alpha(A) = q^{(N-1)(e-m+1)/2} T(A) / [N]_q, times the framing prefactor in
/// Auto mode. The division is exact; a remainder throws NonExactDivision.
JonesResult jones(const BraidWord& w, const RMatrix& r, const JonesOptions& opt = {});
JonesResult jones(const BraidWord& w, int N, const JonesOptions& opt = {});

/// Numeric pipeline: R, R^{-1} and the weights are evaluated at p before the
/// contraction. Where [N]_q vanishes at p the exact polynomial is evaluated
/// instead.
std::complex<double> jones_eval(const BraidWord& w, const RMatrix& r, const PhasePoint& p,
                                const JonesOptions& opt = {});
std::complex<double> jones_eval(const BraidWord& w, int N, const PhasePoint& p,
                                const JonesOptions& opt = {});

/// Total q^(1/2)-exponent applied on top of T(A)/[N]_q.
std::int64_t normalization_shift(const BraidWord& w, int N, const JonesOptions& opt);

}  // namespace cjones
