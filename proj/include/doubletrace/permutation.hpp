#pragma once

// Permutations of {0, ..., n-1} stored as image vectors.

#include "doubletrace/common.hpp"

#include <algorithm>
#include <vector>

namespace doubletrace {

struct Permutation {
  // images[x] is where x is sent
  std::vector<int> images;

  int size() const { return static_cast<int>(images.size()); }
  int apply(int x) const { return images[static_cast<std::size_t>(x)]; }
  bool operator==(const Permutation&) const = default;

  static Permutation identity(int n) {
    Permutation p;
    p.images.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p.images[static_cast<std::size_t>(i)] = i;
    return p;
  }

  // Left-to-right composition: (a.then(b))(x) = b(a(x)).
  Permutation then(const Permutation& b) const {
    if (size() != b.size()) throw validation_error("composed permutations must have equal degree");
    Permutation r;
    r.images.resize(images.size());
    for (int x = 0; x < size(); ++x) r.images[static_cast<std::size_t>(x)] = b.apply(apply(x));
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.images.resize(images.size());
    for (int x = 0; x < size(); ++x) r.images[static_cast<std::size_t>(apply(x))] = x;
    return r;
  }

  Permutation power(long long e) const {
    if (e < 0) return inverse().power(-e);
    Permutation acc = identity(size());
    Permutation base = *this;
    while (e > 0) {
      if (e & 1) acc = acc.then(base);
      base = base.then(base);
      e >>= 1;
    }
    return acc;
  }

  bool is_identity() const {
    for (int x = 0; x < size(); ++x)
      if (apply(x) != x) return false;
    return true;
  }

  // Cycle decomposition including fixed points; each cycle starts at its least
  // element and cycles are ordered by that element.
  std::vector<std::vector<int>> cycles() const {
    std::vector<char> seen(images.size(), 0);
    std::vector<std::vector<int>> out;
    for (int x = 0; x < size(); ++x) {
      if (seen[static_cast<std::size_t>(x)]) continue;
      std::vector<int> cyc;
      int y = x;
      while (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        cyc.push_back(y);
        y = apply(y);
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }
};

// Validated constructor for untrusted image vectors.
inline Permutation make_permutation(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    const int v = images[static_cast<std::size_t>(x)];
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      throw validation_error("image vector is not a permutation: witness position " + std::to_string(x));
    seen[static_cast<std::size_t>(v)] = 1;
  }
  Permutation p;
  p.images = std::move(images);
  return p;
}

}  // namespace doubletrace
