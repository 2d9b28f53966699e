#pragma once

// Shared helpers for the test suite: a deterministic RNG wrapper so frozen
// expectations stay valid across platforms, and small word generators.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace testsupport {

// mt19937_64 output is specified by the standard, so raw draws mod n are
// portable (unlike std::uniform_int_distribution, which is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return eng_() % n; }

  int int_in(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 eng_;
};

// Random braid letters on the given strand count: (index in [1, strands-1], sign).
inline std::vector<std::pair<int, int>> random_letters(Rng& rng, int strands, int length) {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i)
    out.emplace_back(rng.int_in(1, strands - 1), rng.below(2) == 0 ? 1 : -1);
  return out;
}

inline std::string letters_to_text(const std::vector<std::pair<int, int>>& letters) {
  std::string s;
  for (const auto& [idx, sign] : letters) {
    if (!s.empty()) s += ' ';
    s += 's' + std::to_string(idx);
    if (sign < 0) s += "^-1";
  }
  return s;
}

}  // namespace testsupport
