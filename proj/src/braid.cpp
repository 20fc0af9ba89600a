#include "cjones/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace cjones {

void validate(const BraidWord& w) {
  if (w.strands < 1) throw InvalidGenerator("braid must have at least one strand");
  for (int l : w.letters) {
    if (l == 0 || std::abs(l) > w.strands - 1) {
      throw InvalidGenerator("generator " + std::to_string(l) + " invalid on " +
                             std::to_string(w.strands) + " strands");
    }
  }
}

BraidWord parse_braid(std::string_view text, std::optional<int> strands) {
  BraidWord w;
  std::size_t i = 0;
  const auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == ',' || c == '\n' || c == '\r'; };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    std::string_view tok = text.substr(i, j - i);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty())
      throw ParseError("malformed braid letter '" + std::string(text.substr(i, j - i)) + "'");
    if (v == 0) throw InvalidGenerator("generator 0 is not allowed");
    w.letters.push_back(v);
    i = j;
  }
  if (strands) {
    w.strands = *strands;
  } else {
    int mx = 0;
    for (int l : w.letters) mx = std::max(mx, std::abs(l));
    w.strands = mx + 1;
  }
  validate(w);
  return w;
}

std::string format_braid(const BraidWord& w) {
  std::ostringstream os;
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    if (k) os << ' ';
    os << w.letters[k];
  }
  return os.str();
}

WordStats word_stats(const BraidWord& w) {
  WordStats st;
  for (int l : w.letters) {
    const int sign = l > 0 ? 1 : -1;
    st.e += sign;
    st.s += sign;
    st.sigma += l;
  }
  return st;
}

BraidWord markov_conjugate(const BraidWord& w, int g) {
  if (g == 0 || std::abs(g) > w.strands - 1)
    throw InvalidGenerator("conjugating generator " + std::to_string(g) + " out of range");
  BraidWord out{w.strands, {}};
  out.letters.reserve(w.letters.size() + 2);
  out.letters.push_back(-g);
  out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
  out.letters.push_back(g);
  return out;
}

BraidWord markov_stabilize(const BraidWord& w, int sign) {
  if (sign != 1 && sign != -1) throw InvalidGenerator("stabilization sign must be +-1");
  BraidWord out = w;
  out.letters.push_back(sign * w.strands);
  out.strands = w.strands + 1;
  return out;
}

BraidWord rotate(const BraidWord& w, std::size_t k) {
  BraidWord out = w;
  if (!out.letters.empty())
    std::rotate(out.letters.begin(), out.letters.begin() + static_cast<long>(k % out.letters.size()),
                out.letters.end());
  return out;
}

BraidWord inverse(const BraidWord& w) {
  BraidWord out{w.strands, {}};
  out.letters.assign(w.letters.rbegin(), w.letters.rend());
  for (int& l : out.letters) l = -l;
  return out;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  BraidWord out{std::max(a.strands, b.strands), a.letters};
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

int closure_components(const BraidWord& w) {
  std::vector<int> perm(static_cast<std::size_t>(w.strands));
  std::iota(perm.begin(), perm.end(), 0);
  for (int l : w.letters) {
    const int i = std::abs(l) - 1;
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i + 1)]);
  }
  std::vector<char> seen(perm.size(), 0);
  int cycles = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (std::size_t t = s; !seen[t]; t = static_cast<std::size_t>(perm[t])) seen[t] = 1;
  }
  return cycles;
}

BraidWord random_word(std::mt19937_64& rng, int strands, int length) {
  BraidWord w{strands, {}};
  if (strands < 2) return w;
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::bernoulli_distribution neg(0.5);
  for (int k = 0; k < length; ++k) {
    const int g = gen(rng);
    w.letters.push_back(neg(rng) ? -g : g);
  }
  return w;
}

}  // namespace cjones
