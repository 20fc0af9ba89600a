#include "cjones/jones_engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>

namespace cjones {

SectorBasis::SectorBasis(int N, int m) : N_(N), m_(m) {
  if (N < 2) throw UnsupportedN("need N >= 2");
  if (m < 1) throw InvalidGenerator("need at least one strand");
  double total = std::pow(static_cast<double>(N), m);
  if (total > 4.0e9) throw Error("state space too large");
  pow_.resize(static_cast<std::size_t>(m) + 1);
  pow_[0] = 1;
  for (int k = 1; k <= m; ++k) pow_[static_cast<std::size_t>(k)] = pow_[static_cast<std::size_t>(k - 1)] * static_cast<std::uint32_t>(N);
  const std::uint32_t n = pow_[static_cast<std::size_t>(m)];
  states_.resize(static_cast<std::size_t>(m * (N - 1) + 1));
  local_.resize(n);
  charge_.resize(n);
  for (std::uint32_t s = 0; s < n; ++s) {
    int c = 0;
    for (std::uint32_t v = s; v; v /= static_cast<std::uint32_t>(N)) c += static_cast<int>(v % static_cast<std::uint32_t>(N));
    auto& bucket = states_[static_cast<std::size_t>(c)];
    local_[s] = static_cast<std::uint32_t>(bucket.size());
    charge_[s] = c;
    bucket.push_back(s);
  }
}

int SectorBasis::digit(std::uint32_t state, int strand) const {
  return static_cast<int>((state / place_value(strand)) % static_cast<std::uint32_t>(N_));
}

std::size_t SectorBasis::largest_sector() const {
  std::size_t best = 0;
  for (const auto& s : states_) best = std::max(best, s.size());
  return best;
}

std::size_t largest_sector_dimension(int N, int m) {
  std::vector<std::size_t> c{1};
  for (int k = 0; k < m; ++k) {
    std::vector<std::size_t> next(c.size() + static_cast<std::size_t>(N - 1), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
      for (int a = 0; a < N; ++a) next[i + static_cast<std::size_t>(a)] += c[i];
    c = std::move(next);
  }
  return *std::max_element(c.begin(), c.end());
}

namespace {

// Sparse column structure of one generator restricted to one sector:
// column j has entries (row k, two-strand entry index) in cols[j].
struct SectorAction {
  std::vector<std::vector<std::pair<std::uint32_t, int>>> cols;
};

struct GeneratorAction {
  std::vector<SectorAction> sectors;
};

GeneratorAction build_action(const SectorBasis& basis, const PolyMatrix& M, int i) {
  const int N = basis.N();
  GeneratorAction g;
  g.sectors.resize(static_cast<std::size_t>(basis.num_sectors()));
  const std::uint32_t pv1 = basis.place_value(i);
  const std::uint32_t pv2 = basis.place_value(i + 1);
  for (int c = 0; c < basis.num_sectors(); ++c) {
    const auto& states = basis.states(c);
    auto& sa = g.sectors[static_cast<std::size_t>(c)];
    sa.cols.resize(states.size());
    for (std::size_t j = 0; j < states.size(); ++j) {
      const std::uint32_t s = states[j];
      const int a0 = basis.digit(s, i);
      const int b0 = basis.digit(s, i + 1);
      const int col = a0 * N + b0;
      const std::uint32_t rest = s - static_cast<std::uint32_t>(a0) * pv1 - static_cast<std::uint32_t>(b0) * pv2;
      for (int row = 0; row < N * N; ++row) {
        if (M(row, col).is_zero()) continue;
        const std::uint32_t t = rest + static_cast<std::uint32_t>(row / N) * pv1 + static_cast<std::uint32_t>(row % N) * pv2;
        sa.cols[j].emplace_back(basis.local_index(t), row * N * N + col);
      }
    }
  }
  return g;
}

struct Letter {
  int i;
  int sign;
  bool operator<(const Letter& o) const { return i != o.i ? i < o.i : sign < o.sign; }
};

// Small integer-coefficient polynomial entries of R or R^{-1}.
struct SmallEntry {
  std::vector<std::pair<std::int64_t, long>> terms;  // (half exp, coef)
};

struct LetterData {
  GeneratorAction action;
  std::vector<SmallEntry> entries;  // by two-strand index
  std::int64_t min_shift = 0;
  std::int64_t max_shift = 0;
  double log2_colsum = 0;
};

LetterData make_letter(const SectorBasis& basis, const RMatrix& r, Letter l) {
  const PolyMatrix& M = l.sign > 0 ? r.R : r.Rinv;
  LetterData d;
  d.action = build_action(basis, M, l.i);
  const int n2 = r.N * r.N;
  d.entries.resize(static_cast<std::size_t>(n2 * n2));
  bool first = true;
  double worst = 0;
  for (int col = 0; col < n2; ++col) {
    double colsum = 0;
    for (int row = 0; row < n2; ++row) {
      const LaurentPoly& e = M(row, col);
      auto& se = d.entries[static_cast<std::size_t>(row * n2 + col)];
      for (const auto& t : e.terms()) {
        if (!t.coef.fits_slong_p()) throw Error("R-matrix coefficient exceeds machine range");
        se.terms.emplace_back(t.exp, t.coef.get_si());
        colsum += std::abs(static_cast<double>(t.coef.get_si()));
        if (first) {
          d.min_shift = d.max_shift = t.exp;
          first = false;
        }
        d.min_shift = std::min(d.min_shift, t.exp);
        d.max_shift = std::max(d.max_shift, t.exp);
      }
    }
    worst = std::max(worst, colsum);
  }
  d.log2_colsum = std::log2(std::max(worst, 1.0));
  return d;
}

struct WordPlan {
  std::map<Letter, LetterData> letters;
  std::vector<const LetterData*> sequence;  // in word order
  std::int64_t base = 0;                    // lowest half-exponent reachable
  std::int64_t width = 1;
  double log2_bound = 0;
};

WordPlan plan_word(const BraidWord& w, const SectorBasis& basis, const RMatrix& r) {
  WordPlan plan;
  for (int l : w.letters) {
    Letter key{std::abs(l), l > 0 ? 1 : -1};
    if (!plan.letters.count(key)) plan.letters.emplace(key, make_letter(basis, r, key));
  }
  for (int l : w.letters) {
    const LetterData* ld = &plan.letters.at(Letter{std::abs(l), l > 0 ? 1 : -1});
    plan.sequence.push_back(ld);
    plan.log2_bound += ld->log2_colsum;
  }
  // Letters are applied last-to-first; the window must hold every partial range.
  std::int64_t lo = 0, hi = 0, lo_all = 0, hi_all = 0;
  for (auto it = plan.sequence.rbegin(); it != plan.sequence.rend(); ++it) {
    lo += (*it)->min_shift;
    hi += (*it)->max_shift;
    lo_all = std::min(lo_all, lo);
    hi_all = std::max(hi_all, hi);
  }
  plan.base = lo_all;
  plan.width = hi_all - lo_all + 1;
  return plan;
}

template <class Int>
inline void addmul(Int& dst, const Int& src, long c) {
  dst += src * static_cast<Int>(c);
}

template <>
inline void addmul<BigInt>(BigInt& dst, const BigInt& src, long c) {
  if (c >= 0)
    mpz_addmul_ui(dst.get_mpz_t(), src.get_mpz_t(), static_cast<unsigned long>(c));
  else
    mpz_submul_ui(dst.get_mpz_t(), src.get_mpz_t(), static_cast<unsigned long>(-c));
}

template <class Int>
inline bool nonzero(const Int& v) { return v != 0; }

template <class Int>
BigInt to_big(const Int& v) {
  if constexpr (std::is_same_v<Int, BigInt>) {
    return v;
  } else if constexpr (std::is_same_v<Int, __int128>) {
    // split into two 64-bit halves
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    BigInt hi = BigInt(static_cast<unsigned long>(u >> 64));
    BigInt lo = BigInt(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
    BigInt out = (hi << 64) + lo;
    return neg ? BigInt(-out) : out;
  } else {
    return BigInt(static_cast<long>(v));
  }
}

// Symbolic contraction with coefficient type Int, column by column per
// sector. Returns the trace of each sector block as a dense exponent window.
template <class Int>
LaurentPoly contract_symbolic(const SectorBasis& basis, const WordPlan& plan) {
  const std::int64_t W = plan.width;
  std::vector<std::pair<std::int64_t, BigInt>> out_terms;

  for (int c = 0; c < basis.num_sectors(); ++c) {
    const std::size_t d = basis.states(c).size();
    if (d == 0) continue;
    std::vector<Int> trace(static_cast<std::size_t>(W), Int(0));
    std::vector<Int> v(d * static_cast<std::size_t>(W)), next(d * static_cast<std::size_t>(W));
    std::vector<char> live(d), next_live(d);
    for (std::size_t j0 = 0; j0 < d; ++j0) {
      std::fill(v.begin(), v.end(), Int(0));
      std::fill(live.begin(), live.end(), 0);
      std::int64_t lo = -plan.base, hi = -plan.base;  // window indices
      v[j0 * static_cast<std::size_t>(W) + static_cast<std::size_t>(lo)] = Int(1);
      live[j0] = 1;
      for (auto it = plan.sequence.rbegin(); it != plan.sequence.rend(); ++it) {
        const LetterData& ld = **it;
        const auto& cols = ld.action.sectors[static_cast<std::size_t>(c)].cols;
        std::fill(next.begin(), next.end(), Int(0));
        std::fill(next_live.begin(), next_live.end(), 0);
        for (std::size_t j = 0; j < d; ++j) {
          if (!live[j]) continue;
          const Int* src = &v[j * static_cast<std::size_t>(W)];
          for (const auto& [k, eidx] : cols[j]) {
            Int* dst = &next[static_cast<std::size_t>(k) * static_cast<std::size_t>(W)];
            next_live[k] = 1;
            for (const auto& [sh, coef] : ld.entries[static_cast<std::size_t>(eidx)].terms)
              for (std::int64_t e = lo; e <= hi; ++e)
                addmul(dst[e + sh], src[e], coef);
          }
        }
        lo += ld.min_shift;
        hi += ld.max_shift;
        std::swap(v, next);
        std::swap(live, next_live);
      }
      const Int* diag = &v[j0 * static_cast<std::size_t>(W)];
      for (std::int64_t e = lo; e <= hi; ++e) trace[static_cast<std::size_t>(e)] += diag[e];
    }
    // D contributes q^c, i.e. 2c half units.
    for (std::int64_t e = 0; e < W; ++e)
      if (nonzero(trace[static_cast<std::size_t>(e)]))
        out_terms.emplace_back(e + plan.base + 2 * c, to_big(trace[static_cast<std::size_t>(e)]));
  }
  return LaurentPoly::from_terms(std::move(out_terms));
}

std::complex<double> contract_numeric(const SectorBasis& basis, const WordPlan& plan,
                                      const std::map<Letter, std::vector<std::complex<double>>>& vals,
                                      const BraidWord& w, const PhasePoint& p) {
  std::vector<const std::vector<std::complex<double>>*> seq_vals;
  for (int l : w.letters) seq_vals.push_back(&vals.at(Letter{std::abs(l), l > 0 ? 1 : -1}));
  std::complex<double> total = 0;
  for (int c = 0; c < basis.num_sectors(); ++c) {
    const std::size_t d = basis.states(c).size();
    if (d == 0) continue;
    std::complex<double> tr = 0;
    std::vector<std::complex<double>> v(d), next(d);
    for (std::size_t j0 = 0; j0 < d; ++j0) {
      std::fill(v.begin(), v.end(), 0.0);
      v[j0] = 1.0;
      for (std::size_t pos = plan.sequence.size(); pos-- > 0;) {
        const auto& cols = plan.sequence[pos]->action.sectors[static_cast<std::size_t>(c)].cols;
        const auto& ev = *seq_vals[pos];
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t j = 0; j < d; ++j) {
          if (v[j] == 0.0) continue;
          for (const auto& [k, eidx] : cols[j]) next[k] += ev[static_cast<std::size_t>(eidx)] * v[j];
        }
        std::swap(v, next);
      }
      tr += v[j0];
    }
    total += p.power_half(2 * c) * tr;
  }
  return total;
}

void check_word(const BraidWord& w, const RMatrix& r) {
  validate(w);
  if (r.N < 2) throw UnsupportedN("invalid R-matrix");
}

}  // namespace

SymbolicOperator build_generator(const RMatrix& r, int m, int i, int sign) {
  if (i < 1 || i > m - 1) throw InvalidGenerator("generator index out of range");
  if (sign != 1 && sign != -1) throw InvalidGenerator("generator sign must be +-1");
  SectorBasis basis(r.N, m);
  const PolyMatrix& M = sign > 0 ? r.R : r.Rinv;
  GeneratorAction g = build_action(basis, M, i);
  SymbolicOperator op;
  op.N = r.N;
  op.strands = m;
  for (int c = 0; c < basis.num_sectors(); ++c) {
    const std::size_t d = basis.states(c).size();
    op.dims.push_back(d);
    std::vector<LaurentPoly> block(d * d);
    const auto& cols = g.sectors[static_cast<std::size_t>(c)].cols;
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [k, eidx] : cols[j]) {
        const int n2 = r.N * r.N;
        block[k * d + j] = M(eidx / n2, eidx % n2);
      }
    op.blocks.push_back(std::move(block));
  }
  return op;
}

SymbolicOperator build_generator(int N, int m, int i, int sign) {
  return build_generator(r_matrix(N), m, i, sign);
}

SymbolicOperator identity_operator(int N, int m) {
  SectorBasis basis(N, m);
  SymbolicOperator op;
  op.N = N;
  op.strands = m;
  for (int c = 0; c < basis.num_sectors(); ++c) {
    const std::size_t d = basis.states(c).size();
    op.dims.push_back(d);
    std::vector<LaurentPoly> block(d * d);
    for (std::size_t j = 0; j < d; ++j) block[j * d + j] = LaurentPoly::constant(1);
    op.blocks.push_back(std::move(block));
  }
  return op;
}

SymbolicOperator multiply(const SymbolicOperator& a, const SymbolicOperator& b) {
  if (a.N != b.N || a.strands != b.strands) throw Error("operator shape mismatch");
  SymbolicOperator out;
  out.N = a.N;
  out.strands = a.strands;
  out.dims = a.dims;
  for (std::size_t c = 0; c < a.blocks.size(); ++c) {
    const std::size_t d = a.dims[c];
    std::vector<LaurentPoly> block(d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) {
        const LaurentPoly& aik = a.blocks[c][i * d + k];
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) {
          const LaurentPoly& bkj = b.blocks[c][k * d + j];
          if (!bkj.is_zero()) block[i * d + j] += aik * bkj;
        }
      }
    out.blocks.push_back(std::move(block));
  }
  return out;
}

NumericOperator evaluate(const SymbolicOperator& a, const PhasePoint& p) {
  NumericOperator out;
  out.N = a.N;
  out.strands = a.strands;
  out.dims = a.dims;
  for (const auto& block : a.blocks) {
    std::vector<std::complex<double>> vb(block.size());
    for (std::size_t k = 0; k < block.size(); ++k) vb[k] = lp_eval(block[k], p);
    out.blocks.push_back(std::move(vb));
  }
  return out;
}

PolyMatrix to_dense(const SymbolicOperator& a) {
  SectorBasis basis(a.N, a.strands);
  PolyMatrix out(static_cast<int>(basis.num_states()));
  for (int c = 0; c < basis.num_sectors(); ++c) {
    const auto& st = basis.states(c);
    const std::size_t d = st.size();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        out(static_cast<int>(st[i]), static_cast<int>(st[j])) = a.blocks[static_cast<std::size_t>(c)][i * d + j];
  }
  return out;
}

LaurentPoly weighted_trace(const BraidWord& w, const RMatrix& r) {
  check_word(w, r);
  SectorBasis basis(r.N, w.strands);
  WordPlan plan = plan_word(w, basis, r);
  const double bound = plan.log2_bound + std::log2(static_cast<double>(basis.largest_sector()) + 1.0) + 1.0;
  if (bound < 62.0) return contract_symbolic<std::int64_t>(basis, plan);
  if (bound < 126.0) return contract_symbolic<__int128>(basis, plan);
  return contract_symbolic<BigInt>(basis, plan);
}

LaurentPoly weighted_trace(const BraidWord& w, int N) { return weighted_trace(w, r_matrix(N)); }

std::complex<double> weighted_trace_eval(const BraidWord& w, const RMatrix& r, const PhasePoint& p) {
  check_word(w, r);
  SectorBasis basis(r.N, w.strands);
  WordPlan plan = plan_word(w, basis, r);
  std::map<Letter, std::vector<std::complex<double>>> vals;
  const int n2 = r.N * r.N;
  for (const auto& [key, ld] : plan.letters) {
    const PolyMatrix& M = key.sign > 0 ? r.R : r.Rinv;
    std::vector<std::complex<double>> ev(static_cast<std::size_t>(n2 * n2));
    for (int row = 0; row < n2; ++row)
      for (int col = 0; col < n2; ++col) ev[static_cast<std::size_t>(row * n2 + col)] = lp_eval(M(row, col), p);
    vals.emplace(key, std::move(ev));
  }
  return contract_numeric(basis, plan, vals, w, p);
}

int JonesOptions::framing_multiplier(int N) const {
  if (framing == Framing::Raw) return 0;
  if (N == 2) return framing_multiplier_n2;
  if (N == 3) return framing_multiplier_n3;
  return 0;
}

std::int64_t normalization_shift(const BraidWord& w, int N, const JonesOptions& opt) {
  const WordStats st = word_stats(w);
  // (tau tau_bar)^{-(m-1)/2} (tau_bar/tau)^{e/2} tau^m = q^{(N-1)(e-m+1)/2} / [N]_q
  const std::int64_t norm = static_cast<std::int64_t>(N - 1) * (st.e - w.strands + 1);
  const std::int64_t framing = 2 * static_cast<std::int64_t>(opt.framing_multiplier(N)) * (st.s - st.sigma);
  return norm + framing;
}

JonesResult jones(const BraidWord& w, const RMatrix& r, const JonesOptions& opt) {
  const LaurentPoly T = weighted_trace(w, r);
  const LaurentPoly reduced = lp_exact_div(T, LaurentPoly::q_integer(r.N));
  const WordStats st = word_stats(w);
  JonesResult res;
  res.N = r.N;
  res.framing_exponent_applied = 2 * static_cast<std::int64_t>(opt.framing_multiplier(r.N)) * (st.s - st.sigma);
  res.polynomial = reduced.shifted(normalization_shift(w, r.N, opt));
  res.components = closure_components(w);
  return res;
}

JonesResult jones(const BraidWord& w, int N, const JonesOptions& opt) { return jones(w, r_matrix(N), opt); }

std::complex<double> jones_eval(const BraidWord& w, const RMatrix& r, const PhasePoint& p,
                                const JonesOptions& opt) {
  const std::complex<double> qint = lp_eval(LaurentPoly::q_integer(r.N), p);
  if (std::abs(qint) < 1e-8) return lp_eval(jones(w, r, opt).polynomial, p);
  const std::complex<double> T = weighted_trace_eval(w, r, p);
  return p.power_half(normalization_shift(w, r.N, opt)) * T / qint;
}

std::complex<double> jones_eval(const BraidWord& w, int N, const PhasePoint& p, const JonesOptions& opt) {
  return jones_eval(w, r_matrix(N), p, opt);
}

}  // namespace cjones
