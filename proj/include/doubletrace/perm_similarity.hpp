#pragma once

// Permutation matrices up to similarity: cycle types decide everything in
// characteristic 0, and both directions are made effective here. A positive
// answer carries an explicit conjugator, a negative one carries a power whose
// fixed-point counts (= traces of matrix powers) separate the two.
// Also: the gcd matrix with Smith's determinant, and the orbit combinatorics
// of the diagonal shift on Z_n x Z_m.

#include "doubletrace/common.hpp"
#include "doubletrace/permutation.hpp"

#include <cctype>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace doubletrace {

struct CycleType {
  std::map<int, int> counts;  // cycle length -> number of cycles
  bool operator==(const CycleType&) const = default;
};

inline CycleType cycle_type(const Permutation& p) {
  CycleType t;
  for (const auto& cyc : p.cycles()) ++t.counts[static_cast<int>(cyc.size())];
  return t;
}

inline int fixed_points(const Permutation& p) {
  int n = 0;
  for (int x = 0; x < p.size(); ++x)
    if (p.apply(x) == x) ++n;
  return n;
}

struct SimilarityResult {
  bool similar = false;
  // when similar: w with w p w^-1 = q (as functions: w(p(w^-1(x))) = q(x))
  Permutation conjugator;
  // when not similar: least d >= 1 with fixed_points(p^d) != fixed_points(q^d)
  int witness_exponent = 0;
};

// Permutation matrices P_p, P_q are similar over a characteristic-0 field iff
// the permutations are conjugate, iff their cycle types agree.
inline SimilarityResult similar_as_matrices(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size())
    throw validation_error("cannot compare permutations of sizes " + std::to_string(p.size()) +
                           " and " + std::to_string(q.size()));
  SimilarityResult res;
  if (cycle_type(p) == cycle_type(q)) {
    res.similar = true;
    // align the j-th p-cycle of each length with the j-th q-cycle elementwise
    std::map<int, std::vector<std::vector<int>>> by_len_p, by_len_q;
    for (const auto& c : p.cycles()) by_len_p[static_cast<int>(c.size())].push_back(c);
    for (const auto& c : q.cycles()) by_len_q[static_cast<int>(c.size())].push_back(c);
    std::vector<int> w(static_cast<std::size_t>(p.size()), -1);
    for (const auto& [len, pcycles] : by_len_p) {
      const auto& qcycles = by_len_q[len];
      for (std::size_t j = 0; j < pcycles.size(); ++j)
        for (std::size_t k = 0; k < pcycles[j].size(); ++k)
          w[static_cast<std::size_t>(pcycles[j][k])] = qcycles[j][k];
    }
    res.conjugator = make_permutation(std::move(w));
    return res;
  }
  // traces of powers must already differ at some exponent <= size
  Permutation pp = Permutation::identity(p.size());
  Permutation qq = pp;
  for (int d = 1; d <= p.size(); ++d) {
    pp = pp.then(p);
    qq = qq.then(q);
    if (fixed_points(pp) != fixed_points(qq)) {
      res.witness_exponent = d;
      return res;
    }
  }
  throw std::logic_error("distinct cycle types must differ in some power's fixed points");
}

// Entry (i, j) = gcd(i, j) with 1-based indices.
inline std::vector<std::vector<long long>> gcd_matrix(int m) {
  if (m < 1) throw validation_error("gcd matrix size must be at least 1");
  std::vector<std::vector<long long>> a(static_cast<std::size_t>(m),
                                        std::vector<long long>(static_cast<std::size_t>(m)));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = std::gcd(i, j);
  return a;
}

// Exact determinant by Bareiss fraction-free elimination; every division in
// the recurrence is exact over the integers.
inline BigInt integer_determinant(std::vector<std::vector<BigInt>> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(swap_row)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                 a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
             a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                 a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) /
            prev;
      }
    prev = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
  }
  return sign * a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
}

struct SmithCheck {
  BigInt determinant;
  BigInt totient_product;
  bool equal = false;
};

// det of the gcd matrix equals phi(1) * ... * phi(m) (Smith's determinant).
inline SmithCheck smith_determinant_check(int m) {
  const auto g = gcd_matrix(m);
  std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(m),
                                     std::vector<BigInt>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  SmithCheck out;
  out.determinant = integer_determinant(std::move(a));
  out.totient_product = 1;
  for (int i = 1; i <= m; ++i) out.totient_product *= euler_phi(i);
  out.equal = out.determinant == out.totient_product;
  return out;
}

struct OrbitData {
  long long orbit_count = 0;
  long long orbit_size = 0;
};

// Orbits of (i, j) -> (i+1 mod n, j+1 mod m) on Z_n x Z_m: gcd(n, m) orbits,
// each of size lcm(n, m). Computed by honest iteration, not by the formula.
inline OrbitData cyclic_tensor_orbits(int n, int m) {
  if (n < 1 || m < 1) throw validation_error("orbit parameters must be at least 1");
  std::vector<char> seen(static_cast<std::size_t>(n) * static_cast<std::size_t>(m), 0);
  OrbitData out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      if (seen[static_cast<std::size_t>(i) * static_cast<std::size_t>(m) + static_cast<std::size_t>(j)]) continue;
      long long size = 0;
      int a = i, b = j;
      while (!seen[static_cast<std::size_t>(a) * static_cast<std::size_t>(m) + static_cast<std::size_t>(b)]) {
        seen[static_cast<std::size_t>(a) * static_cast<std::size_t>(m) + static_cast<std::size_t>(b)] = 1;
        ++size;
        a = (a + 1) % n;
        b = (b + 1) % m;
      }
      if (out.orbit_count == 0) out.orbit_size = size;
      else if (out.orbit_size != size)
        throw std::logic_error("diagonal shift produced orbits of unequal size");
      ++out.orbit_count;
    }
  return out;
}

// dim Hom(M(n), M(m)) = gcd(n, m), realized as the orbit count above.
inline long long hom_dimension(int n, int m) { return cyclic_tensor_orbits(n, m).orbit_count; }

// Cycle notation with 1-based points: "(1 2 3)(4 5)". With size = 0 the degree
// is inferred from the largest point mentioned.
inline Permutation parse_cycles(const std::string& text, int size = 0) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  int max_point = 0;
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw parse_error("expected '(' in cycle notation");
    ++pos;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (pos >= text.size()) throw parse_error("unclosed cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw parse_error("expected a point number in cycle notation");
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        ++pos;
      }
      if (v < 1) throw parse_error("points are 1-based in cycle notation");
      cyc.push_back(v);
      max_point = std::max(max_point, v);
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  if (size == 0) size = max_point;
  if (size < max_point)
    throw parse_error("cycle mentions point " + std::to_string(max_point) + " beyond size " +
                      std::to_string(size));
  if (size < 1) throw parse_error("cannot infer permutation size from empty input");
  std::vector<int> images(static_cast<std::size_t>(size));
  for (int x = 0; x < size; ++x) images[static_cast<std::size_t>(x)] = x;
  std::vector<char> used(static_cast<std::size_t>(size), 0);
  for (const auto& cyc : cycles) {
    for (const int v : cyc) {
      if (used[static_cast<std::size_t>(v - 1)])
        throw parse_error("point " + std::to_string(v) + " appears twice");
      used[static_cast<std::size_t>(v - 1)] = 1;
    }
    for (std::size_t k = 0; k < cyc.size(); ++k)
      images[static_cast<std::size_t>(cyc[k] - 1)] = cyc[(k + 1) % cyc.size()] - 1;
  }
  return make_permutation(std::move(images));
}

}  // namespace doubletrace
