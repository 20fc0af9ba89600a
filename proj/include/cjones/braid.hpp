#pragma once

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cjones/errors.hpp"

namespace cjones {

/// A word in the Artin generators of the braid group on `strands` strands.
/// Letter +i is b_i, letter -i is b_i^{-1}.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Throws InvalidGenerator unless every |letter| lies in [1, strands-1].
void validate(const BraidWord& w);

/// Parse whitespace- or comma-separated signed integers. When `strands` is not
/// given it is inferred as max|w_j| + 1.
BraidWord parse_braid(std::string_view text, std::optional<int> strands = std::nullopt);
std::string format_braid(const BraidWord& w);

struct WordStats {
  int e = 0;      // exponent sum
  int s = 0;      // sum of signs (equal to e for words over b_i^{+-1})
  int sigma = 0;  // sum of the signed letters themselves
};

WordStats word_stats(const BraidWord& w);

/// g^{-1} w g.
BraidWord markov_conjugate(const BraidWord& w, int g);
/// w b_m^{sign} on m+1 strands.
BraidWord markov_stabilize(const BraidWord& w, int sign = +1);
/// Cyclic rotation AB -> BA moving the first `k` letters to the end.
BraidWord rotate(const BraidWord& w, std::size_t k);
/// Reverse and negate: the group inverse.
BraidWord inverse(const BraidWord& w);
BraidWord concat(const BraidWord& a, const BraidWord& b);

/// Number of components of the braid closure (cycles of the permutation).
int closure_components(const BraidWord& w);

/// Uniformly random word for property tests.
BraidWord random_word(std::mt19937_64& rng, int strands, int length);

}  // namespace cjones
