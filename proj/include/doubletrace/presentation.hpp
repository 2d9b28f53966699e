#pragma once

// Finitely presented groups as relator lists, and brute-force counting of
// homomorphisms into a finite group. The count is a fully independent oracle:
// it never touches the braid machinery, so agreement between the two sides is
// meaningful evidence.

#include "doubletrace/common.hpp"
#include "doubletrace/group.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace doubletrace {

// A word is a sequence of (generator index, sign) letters; exponents are
// expanded at parse time so evaluation is a flat left-to-right fold.
using Word = std::vector<std::pair<int, int>>;

struct GroupPresentation {
  int generator_count = 0;
  std::vector<Word> relators;
};

inline void validate_presentation(const GroupPresentation& p) {
  if (p.generator_count < 1) throw validation_error("presentation needs at least one generator");
  for (const auto& rel : p.relators)
    for (const auto& [idx, sign] : rel) {
      if (idx < 0 || idx >= p.generator_count)
        throw validation_error("relator uses generator index " + std::to_string(idx) +
                               " but only " + std::to_string(p.generator_count) + " exist");
      if (sign != 1 && sign != -1)
        throw validation_error("relator letter sign must be +1 or -1");
    }
}

// Tokens: g<k>, g<k>^-1, g<k>^<e> (any integer exponent; 0 contributes nothing),
// separated by whitespace.
inline Word parse_word(const std::string& text, int generator_count) {
  Word out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    const auto fail = [&] { throw parse_error("malformed word token '" + tok + "'"); };
    if (tok.size() < 2 || tok[0] != 'g') fail();
    std::size_t pos = 1;
    if (!std::isdigit(static_cast<unsigned char>(tok[pos]))) fail();
    int idx = 0;
    while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) {
      idx = idx * 10 + (tok[pos] - '0');
      ++pos;
    }
    long long exp = 1;
    if (pos < tok.size()) {
      if (tok[pos] != '^') fail();
      ++pos;
      bool neg = false;
      if (pos < tok.size() && tok[pos] == '-') {
        neg = true;
        ++pos;
      }
      if (pos >= tok.size()) fail();
      exp = 0;
      while (pos < tok.size()) {
        if (!std::isdigit(static_cast<unsigned char>(tok[pos]))) fail();
        exp = exp * 10 + (tok[pos] - '0');
        ++pos;
      }
      if (neg) exp = -exp;
    }
    if (idx >= generator_count)
      throw parse_error("bad generator index in token '" + tok + "': only " +
                        std::to_string(generator_count) + " generators");
    const int sign = exp < 0 ? -1 : 1;
    for (long long i = 0; i < (exp < 0 ? -exp : exp); ++i) out.emplace_back(idx, sign);
  }
  return out;
}

inline int evaluate_word(const FiniteGroup& g, const Word& word, const std::vector<int>& assignment) {
  int acc = FiniteGroup::identity;
  for (const auto& [idx, sign] : word) {
    const int e = assignment[static_cast<std::size_t>(idx)];
    acc = g.mul(acc, sign > 0 ? e : g.inv(e));
  }
  return acc;
}

// Number of generator assignments under which every relator evaluates to the
// identity, by exhaustive enumeration of all |G|^generator_count tuples.
// Enumeration is partitioned across workers by first-generator image; the
// result is the same for every worker count.
inline long long count_homomorphisms(const GroupPresentation& p, const FiniteGroup& g,
                                     int threads = 1) {
  validate_presentation(p);
  const int k = p.generator_count;
  const int n = g.order;

  const auto count_range = [&](std::int64_t lo, std::int64_t hi) -> BigInt {
    long long local = 0;
    std::vector<int> assign(static_cast<std::size_t>(k), 0);
    for (std::int64_t first = lo; first < hi; ++first) {
      assign[0] = static_cast<int>(first);
      std::fill(assign.begin() + 1, assign.end(), 0);
      while (true) {
        bool ok = true;
        for (const auto& rel : p.relators)
          if (evaluate_word(g, rel, assign) != FiniteGroup::identity) {
            ok = false;
            break;
          }
        if (ok) ++local;
        int pos = k - 1;
        while (pos >= 1) {
          if (++assign[static_cast<std::size_t>(pos)] < n) break;
          assign[static_cast<std::size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 1) break;
      }
    }
    return BigInt(local);
  };

  return parallel_sum(n, threads, count_range).convert_to<long long>();
}

// <g, h | g^-1 h g h, g h^-1 g h>
inline GroupPresentation preset_q8() {
  GroupPresentation p;
  p.generator_count = 2;
  p.relators = {
      {{0, -1}, {1, 1}, {0, 1}, {1, 1}},
      {{0, 1}, {1, -1}, {0, 1}, {1, 1}},
  };
  return p;
}

// <a | a^n>
inline GroupPresentation preset_cyclic(int n) {
  if (n < 1) throw validation_error("cyclic presentation needs n >= 1");
  GroupPresentation p;
  p.generator_count = 1;
  p.relators.emplace_back();
  for (int i = 0; i < n; ++i) p.relators[0].emplace_back(0, 1);
  return p;
}

// <x, y | x^(2m), y^2 x^-m, y x y^-1 x>
inline GroupPresentation preset_generalized_quaternion(int m) {
  if (m < 2) throw validation_error("generalized quaternion presentation needs m >= 2");
  GroupPresentation p;
  p.generator_count = 2;
  Word r1, r2, r3;
  for (int i = 0; i < 2 * m; ++i) r1.emplace_back(0, 1);
  r2 = {{1, 1}, {1, 1}};
  for (int i = 0; i < m; ++i) r2.emplace_back(0, -1);
  r3 = {{1, 1}, {0, 1}, {1, -1}, {0, 1}};
  p.relators = {r1, r2, r3};
  return p;
}

// Named lookup used by the command-line tool: "q8", "cyclic:<n>", "quaternion:<m>".
inline GroupPresentation preset_presentation(const std::string& name) {
  if (name == "q8") return preset_q8();
  const auto colon = name.find(':');
  if (colon != std::string::npos) {
    const std::string head = name.substr(0, colon);
    const std::string arg = name.substr(colon + 1);
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(arg, &used);
      if (used != arg.size()) throw std::invalid_argument(arg);
    } catch (const std::exception&) {
      throw parse_error("bad preset parameter '" + arg + "' in '" + name + "'");
    }
    if (head == "cyclic") return preset_cyclic(v);
    if (head == "quaternion") return preset_generalized_quaternion(v);
  }
  throw parse_error("unknown presentation preset '" + name +
                    "' (expected q8, cyclic:<n>, or quaternion:<m>)");
}

}  // namespace doubletrace
