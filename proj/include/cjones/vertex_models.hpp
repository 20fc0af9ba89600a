#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "cjones/laurent.hpp"

namespace cjones {

/// Dense square matrix of Laurent polynomials, row-major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim) {}

  static PolyMatrix identity(int dim);

  int dim() const { return dim_; }
  LaurentPoly& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * dim_ + c]; }
  const LaurentPoly& operator()(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * dim_ + c];
  }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  int dim_ = 0;
  std::vector<LaurentPoly> a_;
};

PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b);

/// Braided R-matrix of an N-state vertex model together with its exact
/// inverse. Index i of the N^2 x N^2 matrix encodes the two-strand state
/// (i / N, i % N).
struct RMatrix {
  int N = 0;
  PolyMatrix R;
  PolyMatrix Rinv;

  int index(int a, int b) const { return a * N + b; }
  const LaurentPoly& entry(int a, int b, int c, int d) const { return R(index(a, b), index(c, d)); }
};

/// Attach an exact inverse, computed sector by sector. Throws Error when R
/// does not conserve charge or is not invertible over Laurent polynomials.
RMatrix make_r_matrix(int N, PolyMatrix R);

/// The built-in six-vertex (N = 2) and 19-vertex (N = 3) R-matrices.
/// Throws UnsupportedN otherwise.
const RMatrix& r_matrix(int N);

bool is_charge_conserving(int N, const PolyMatrix& R);

/// (R x I)(I x R)(R x I) == (I x R)(R x I)(I x R), exactly.
bool verify_yang_baxter(int N, const PolyMatrix& R);
bool verify_yang_baxter(int N);

/// Markov-trace weights for an N-state model. tau = 1/[N]_q,
/// tau_bar = q^{N-1}/[N]_q and h = tau * diag(1, q, ..., q^{N-1}); the
/// rational parts are kept as numerator data over the common [N]_q.
struct TraceWeights {
  int N = 0;
  LaurentPoly qint;                     // [N]_q = 1 + q + ... + q^{N-1}
  std::vector<LaurentPoly> h_numerator;  // diag(1, q, ..., q^{N-1})
  LaurentPoly tau_numerator;            // 1
  LaurentPoly tau_bar_numerator;        // q^{N-1}

  /// tau_bar / tau as a monomial.
  LaurentPoly tau_ratio() const;
};

TraceWeights trace_weights(int N);

/// Audit dump in the canonical polynomial JSON form.
nlohmann::json dump_json(const RMatrix& r);

}  // namespace cjones
