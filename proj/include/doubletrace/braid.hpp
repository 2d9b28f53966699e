#pragma once

// Braid words: parsing, algebraic combinations, and the underlying permutation
// of strand endpoints. Words are kept verbatim (no rewriting); every quantity
// computed downstream is invariant under the braid relations, which the tests
// exercise directly.

#include "doubletrace/common.hpp"
#include "doubletrace/permutation.hpp"

#include <cctype>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace doubletrace {

struct BraidWord {
  int strands = 2;  // n >= 2
  std::vector<std::pair<int, int>> letters;  // (index in [1, strands-1], sign +1/-1)

  bool operator==(const BraidWord&) const = default;
  int length() const { return static_cast<int>(letters.size()); }
};

inline BraidWord make_braid(int strands, std::vector<std::pair<int, int>> letters) {
  if (strands < 2) throw validation_error("a braid word needs at least 2 strands");
  for (const auto& [idx, sign] : letters) {
    if (idx < 1 || idx >= strands)
      throw validation_error("letter index " + std::to_string(idx) + " outside [1, " +
                             std::to_string(strands - 1) + "]");
    if (sign != 1 && sign != -1) throw validation_error("letter sign must be +1 or -1");
  }
  BraidWord b;
  b.strands = strands;
  b.letters = std::move(letters);
  return b;
}

// Tokens s<i> or s<i>^-1, whitespace-separated. With strands = 0 the strand
// count defaults to (largest index) + 1, or 2 for the empty word.
inline BraidWord parse_braid(const std::string& text, int strands = 0) {
  std::vector<std::pair<int, int>> letters;
  int max_index = 0;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    const auto fail = [&] { throw parse_error("malformed braid token '" + tok + "'"); };
    if (tok.size() < 2 || tok[0] != 's') fail();
    std::size_t pos = 1;
    if (!std::isdigit(static_cast<unsigned char>(tok[pos]))) fail();
    int idx = 0;
    while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) {
      idx = idx * 10 + (tok[pos] - '0');
      ++pos;
    }
    int sign = 1;
    if (pos < tok.size()) {
      if (tok.substr(pos) != "^-1") fail();
      sign = -1;
    }
    if (idx < 1) throw parse_error("braid index must be at least 1 in token '" + tok + "'");
    letters.emplace_back(idx, sign);
    max_index = std::max(max_index, idx);
  }
  if (strands == 0) strands = std::max(2, max_index + 1);
  if (max_index >= strands)
    throw parse_error("letter index " + std::to_string(max_index) + " needs at least " +
                      std::to_string(max_index + 1) + " strands, got " + std::to_string(strands));
  return make_braid(strands, std::move(letters));
}

inline std::string serialize_braid(const BraidWord& b) {
  std::string out;
  for (const auto& [idx, sign] : b.letters) {
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(idx);
    if (sign < 0) out += "^-1";
  }
  return out;
}

// b_n = s_n s_(n-1) ... s_1 on n+1 strands; its closure is a single circle.
inline BraidWord lens_braid(int n) {
  if (n < 1) throw validation_error("lens braid parameter must be at least 1");
  std::vector<std::pair<int, int>> letters;
  letters.reserve(static_cast<std::size_t>(n));
  for (int i = n; i >= 1; --i) letters.emplace_back(i, 1);
  return make_braid(n + 1, std::move(letters));
}

inline BraidWord compose(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands)
    throw validation_error("cannot compose braids on " + std::to_string(a.strands) + " and " +
                           std::to_string(b.strands) + " strands");
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

inline BraidWord inverse(const BraidWord& b) {
  BraidWord out;
  out.strands = b.strands;
  out.letters.reserve(b.letters.size());
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it)
    out.letters.emplace_back(it->first, -it->second);
  return out;
}

// Side-by-side juxtaposition: b's letters act on strands shifted past a's.
inline BraidWord tensor(const BraidWord& a, const BraidWord& b) {
  BraidWord out;
  out.strands = a.strands + b.strands;
  out.letters = a.letters;
  for (const auto& [idx, sign] : b.letters) out.letters.emplace_back(idx + a.strands, sign);
  return out;
}

// Composite of the adjacent transpositions (i-1, i), applied left to right;
// crossing sign does not matter at this level.
inline Permutation underlying_permutation(const BraidWord& b) {
  Permutation p = Permutation::identity(b.strands);
  for (const auto& [idx, sign] : b.letters) {
    (void)sign;
    std::swap(p.images[static_cast<std::size_t>(idx - 1)], p.images[static_cast<std::size_t>(idx)]);
  }
  // letters were applied to positions; the accumulated images array built this
  // way is the inverse of left-to-right functional composition, so invert once.
  return p.inverse();
}

inline int closure_component_count(const BraidWord& b) {
  return static_cast<int>(underlying_permutation(b).cycles().size());
}

}  // namespace doubletrace
