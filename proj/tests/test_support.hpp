#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "cjones/laurent.hpp"

namespace cjones::testing {

/// Polynomial from (integer q-exponent, coefficient) pairs.
inline LaurentPoly lp(std::initializer_list<std::pair<long, long>> terms) {
  std::vector<std::pair<std::int64_t, BigInt>> raw;
  for (const auto& [e, c] : terms) raw.emplace_back(2 * e, BigInt(c));
  return LaurentPoly::from_terms(std::move(raw));
}

/// Reference adjoint-colored figure-eight polynomial.
inline LaurentPoly fig8_adjoint() {
  return lp({{-6, 1}, {-5, -1}, {-4, -1}, {-3, 2}, {-2, -1}, {-1, -1}, {0, 3},
             {1, -1}, {2, -1}, {3, 2}, {4, -1}, {5, -1}, {6, 1}});
}

/// Reference adjoint-colored trefoil polynomial q^2(1 + q^3 - q^5 + q^6 - q^7 - q^8 + q^9).
inline LaurentPoly trefoil_adjoint() {
  return lp({{2, 1}, {5, 1}, {7, -1}, {8, 1}, {9, -1}, {10, -1}, {11, 1}});
}

inline LaurentPoly trefoil_jones() { return lp({{1, 1}, {3, 1}, {4, -1}}); }
inline LaurentPoly fig8_jones() { return lp({{-2, 1}, {-1, -1}, {0, 1}, {1, -1}, {2, 1}}); }

}  // namespace cjones::testing
