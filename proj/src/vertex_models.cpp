#include "cjones/vertex_models.hpp"

#include "cjones/json_forms.hpp"

namespace cjones {

namespace {

using LP = LaurentPoly;

// Half-unit exponents: t = q^(1/2).
LP t_pow(std::int64_t k, long c = 1) { return LP::monomial(k, c); }

PolyMatrix six_vertex() {
  PolyMatrix R(4);
  R(0, 0) = t_pow(0);
  R(1, 2) = t_pow(1, -1);
  R(2, 1) = t_pow(1, -1);
  R(2, 2) = LP::from_terms({{0, 1}, {2, -1}});
  R(3, 3) = t_pow(0);
  return R;
}

PolyMatrix nineteen_vertex() {
  PolyMatrix R(9);
  const LP mixed = LP::from_terms({{1, -1}, {5, 1}});  // -q^(1/2) + q^(5/2)
  R(0, 0) = t_pow(0);
  R(1, 3) = t_pow(2, -1);
  R(2, 6) = t_pow(4);
  R(3, 1) = t_pow(2, -1);
  R(3, 3) = LP::from_terms({{0, 1}, {4, -1}});
  R(4, 4) = t_pow(2);
  R(4, 6) = mixed;
  R(5, 7) = t_pow(2, -1);
  R(6, 2) = t_pow(4);
  R(6, 4) = mixed;
  R(6, 6) = LP::from_terms({{0, 1}, {2, -1}, {4, -1}, {6, 1}});
  R(7, 5) = t_pow(2, -1);
  R(7, 7) = LP::from_terms({{0, 1}, {4, -1}});
  R(8, 8) = t_pow(0);
  return R;
}

// Cofactor expansion; sector blocks are at most N x N.
LP determinant(const std::vector<std::vector<LP>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return LP::constant(1);
  if (n == 1) return m[0][0];
  LP det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<LP>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<LP> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    LP term = m[0][c] * determinant(minor);
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

}  // namespace

PolyMatrix PolyMatrix::identity(int dim) {
  PolyMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = LP::constant(1);
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  const int n = a.dim();
  PolyMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const LP& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        const LP& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  return out;
}

PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b) {
  const int na = a.dim();
  const int nb = b.dim();
  PolyMatrix out(na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      if (a(i, j).is_zero()) continue;
      for (int k = 0; k < nb; ++k)
        for (int l = 0; l < nb; ++l)
          if (!b(k, l).is_zero()) out(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
    }
  return out;
}

bool is_charge_conserving(int N, const PolyMatrix& R) {
  for (int r = 0; r < R.dim(); ++r)
    for (int c = 0; c < R.dim(); ++c)
      if (!R(r, c).is_zero() && (r / N + r % N) != (c / N + c % N)) return false;
  return true;
}

RMatrix make_r_matrix(int N, PolyMatrix R) {
  if (N < 2) throw UnsupportedN("vertex model needs N >= 2");
  if (R.dim() != N * N) throw Error("R-matrix must be N^2 x N^2");
  if (!is_charge_conserving(N, R)) throw Error("R-matrix does not conserve charge");

  PolyMatrix inv(N * N);
  for (int charge = 0; charge <= 2 * (N - 1); ++charge) {
    std::vector<int> idx;
    for (int a = 0; a < N; ++a) {
      const int b = charge - a;
      if (b >= 0 && b < N) idx.push_back(a * N + b);
    }
    const std::size_t d = idx.size();
    std::vector<std::vector<LP>> block(d, std::vector<LP>(d));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) block[r][c] = R(idx[r], idx[c]);
    const LP det = determinant(block);
    if (!det.is_monomial() || abs(det.terms().front().coef) != 1)
      throw Error("R-matrix sector " + std::to_string(charge) +
                  " is not invertible over Laurent polynomials");
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        // inverse(r, c) = cofactor(c, r) / det
        std::vector<std::vector<LP>> minor;
        for (std::size_t i = 0; i < d; ++i) {
          if (i == c) continue;
          std::vector<LP> row;
          for (std::size_t j = 0; j < d; ++j)
            if (j != r) row.push_back(block[i][j]);
          minor.push_back(std::move(row));
        }
        LP cof = determinant(minor);
        if ((r + c) % 2 == 1) cof = -cof;
        inv(idx[r], idx[c]) = lp_exact_div(cof, det);
      }
  }
  RMatrix out{N, std::move(R), std::move(inv)};
  if (!(out.R * out.Rinv == PolyMatrix::identity(N * N)))
    throw Error("R-matrix inverse failed the multiply-back check");
  return out;
}

const RMatrix& r_matrix(int N) {
  static const RMatrix r2 = make_r_matrix(2, six_vertex());
  static const RMatrix r3 = make_r_matrix(3, nineteen_vertex());
  if (N == 2) return r2;
  if (N == 3) return r3;
  throw UnsupportedN("built-in R-matrices exist only for N = 2, 3 (got " + std::to_string(N) + ")");
}

bool verify_yang_baxter(int N, const PolyMatrix& R) {
  const PolyMatrix I = PolyMatrix::identity(N);
  const PolyMatrix a = kron(R, I);
  const PolyMatrix b = kron(I, R);
  return a * b * a == b * a * b;
}

bool verify_yang_baxter(int N) { return verify_yang_baxter(N, r_matrix(N).R); }

LaurentPoly TraceWeights::tau_ratio() const { return LP::monomial(2 * (N - 1)); }

TraceWeights trace_weights(int N) {
  if (N < 2) throw UnsupportedN("trace weights need N >= 2");
  TraceWeights w;
  w.N = N;
  w.qint = LP::q_integer(N);
  for (int a = 0; a < N; ++a) w.h_numerator.push_back(LP::monomial(2 * a));
  w.tau_numerator = LP::constant(1);
  w.tau_bar_numerator = LP::monomial(2 * (N - 1));
  return w;
}

nlohmann::json dump_json(const RMatrix& r) {
  nlohmann::json j;
  j["N"] = r.N;
  auto dump = [](const PolyMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.dim(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int k = 0; k < m.dim(); ++k) row.push_back(lp_to_json(m(i, k)));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  j["R"] = dump(r.R);
  j["Rinv"] = dump(r.Rinv);
  return j;
}

}  // namespace cjones
