#pragma once

// Finite groups as index-addressed Cayley tables, plus the constructors and
// element-level queries (orders, profiles, conjugation, abelianization) the
// rest of the library is built on.

#include "doubletrace/common.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace doubletrace {

// Multiplication tables are materialized, so construction cost and memory grow
// with order^2. Everything here targets desk scale (order around 100 or less);
// the hard cap just keeps accidental huge requests from thrashing.
inline constexpr int kMaxGroupOrder = 2048;

// A finite group on elements {0, ..., order-1}. Index 0 is the identity in
// every group; constructors permute their natural enumeration to guarantee it.
// Immutable after construction, safe to share across threads.
struct FiniteGroup {
  static constexpr int identity = 0;

  int order = 1;
  std::vector<int> table;           // row-major, table[a*order + b] = a*b
  std::vector<int> inverse;         // a * inverse[a] = inverse[a] * a = identity
  std::vector<std::string> names;   // optional display labels, empty or one per element
  std::string label;                // construction label, e.g. "quaternion:2"

  int mul(int a, int b) const {
    return table[static_cast<std::size_t>(a) * static_cast<std::size_t>(order) + static_cast<std::size_t>(b)];
  }
  int inv(int a) const { return inverse[static_cast<std::size_t>(a)]; }

  int power(int g, long long e) const {
    if (e < 0) return power(inv(g), -e);
    int acc = identity;
    for (long long i = 0; i < e; ++i) acc = mul(acc, g);
    return acc;
  }
};

// Element-order counts. counts[n] = number of elements of exact order n.
struct OrderProfile {
  std::map<int, int> counts;
  bool operator==(const OrderProfile&) const = default;
};

namespace detail {

// Validates the four table invariants and fills in the inverse table.
// Associativity is exhaustive up to order 64 and deterministically sampled
// above that (constructed groups are associative by construction; the sampled
// check guards hand-written tables of larger orders).
inline FiniteGroup validate_group(int order, std::vector<int> table,
                                  std::vector<std::string> names, std::string label) {
  if (order < 1) throw validation_error("group order must be at least 1");
  if (order > kMaxGroupOrder)
    throw validation_error("group order " + std::to_string(order) + " exceeds the supported cap " +
                           std::to_string(kMaxGroupOrder));
  if (table.size() != static_cast<std::size_t>(order) * static_cast<std::size_t>(order))
    throw validation_error("multiplication table size does not match order " + std::to_string(order));
  if (!names.empty() && names.size() != static_cast<std::size_t>(order))
    throw validation_error("element name list does not match order " + std::to_string(order));

  const auto at = [&](int a, int b) {
    return table[static_cast<std::size_t>(a) * static_cast<std::size_t>(order) + static_cast<std::size_t>(b)];
  };

  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      const int v = at(a, b);
      if (v < 0 || v >= order)
        throw validation_error("non-closure: entry (" + std::to_string(a) + "," + std::to_string(b) +
                               ") = " + std::to_string(v) + " is out of range");
    }

  for (int a = 0; a < order; ++a) {
    if (at(0, a) != a || at(a, 0) != a)
      throw validation_error("no identity at index 0: witness element " + std::to_string(a));
  }

  std::vector<int> inverse(static_cast<std::size_t>(order), -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      if (at(a, b) == 0 && at(b, a) == 0) {
        inverse[static_cast<std::size_t>(a)] = b;
        break;
      }
    }
    if (inverse[static_cast<std::size_t>(a)] < 0)
      throw validation_error("missing inverse: witness element " + std::to_string(a));
  }

  const auto check_triple = [&](int a, int b, int c) {
    if (at(at(a, b), c) != at(a, at(b, c)))
      throw validation_error("non-associativity: witness triple (" + std::to_string(a) + "," +
                             std::to_string(b) + "," + std::to_string(c) + ")");
  };
  if (order <= 64) {
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b)
        for (int c = 0; c < order; ++c) check_triple(a, b, c);
  } else {
    std::uint64_t s = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(order);
    const auto next = [&s] {
      s = s * 6364136223846793005ull + 1442695040888963407ull;
      return s >> 16;
    };
    for (int i = 0; i < (1 << 18); ++i) {
      const int a = static_cast<int>(next() % static_cast<std::uint64_t>(order));
      const int b = static_cast<int>(next() % static_cast<std::uint64_t>(order));
      const int c = static_cast<int>(next() % static_cast<std::uint64_t>(order));
      check_triple(a, b, c);
    }
  }

  FiniteGroup g;
  g.order = order;
  g.table = std::move(table);
  g.inverse = std::move(inverse);
  g.names = std::move(names);
  g.label = std::move(label);
  return g;
}

}  // namespace detail

inline FiniteGroup build_cyclic(int n) {
  if (n < 1) throw validation_error("cyclic order must be at least 1");
  std::vector<int> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  std::vector<std::string> names(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    names[static_cast<std::size_t>(a)] = std::to_string(a);
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)] = (a + b) % n;
  }
  return detail::validate_group(n, std::move(table), std::move(names), "cyclic:" + std::to_string(n));
}

// Q_{4m} = <x, y | x^(2m) = 1, y^2 = x^m, y x y^-1 = x^-1>, elements x^a y^b
// with a in [0, 2m), b in {0, 1}, indexed as a + 2m*b.
inline FiniteGroup build_generalized_quaternion(int m) {
  if (m < 2) throw validation_error("generalized quaternion parameter must be at least 2");
  const int n = 4 * m;
  const int r = 2 * m;
  std::vector<int> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  std::vector<std::string> names(static_cast<std::size_t>(n));
  const auto idx = [&](int a, int b) { return a + r * b; };
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < 2; ++b) {
      std::string nm = (a == 0) ? "" : (a == 1 ? "x" : "x^" + std::to_string(a));
      if (b == 1) nm += nm.empty() ? "y" : " y";
      if (nm.empty()) nm = "1";
      names[static_cast<std::size_t>(idx(a, b))] = nm;
    }
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < r; ++c)
        for (int d = 0; d < 2; ++d) {
          int out;
          if (b == 0) {
            out = idx((a + c) % r, d);
          } else if (d == 0) {
            out = idx(((a - c) % r + r) % r, 1);
          } else {
            out = idx(((a - c + m) % r + r) % r, 0);
          }
          table[static_cast<std::size_t>(idx(a, b)) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(idx(c, d))] = out;
        }
  return detail::validate_group(n, std::move(table), std::move(names), "quaternion:" + std::to_string(m));
}

// Dihedral group of order 2m: <x, y | x^m = y^2 = 1, y x y^-1 = x^-1>,
// elements x^a y^b indexed as a + m*b.
inline FiniteGroup build_dihedral(int m) {
  if (m < 1) throw validation_error("dihedral parameter must be at least 1");
  const int n = 2 * m;
  std::vector<int> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  std::vector<std::string> names(static_cast<std::size_t>(n));
  const auto idx = [&](int a, int b) { return a + m * b; };
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < 2; ++b) {
      std::string nm = (a == 0) ? "" : (a == 1 ? "x" : "x^" + std::to_string(a));
      if (b == 1) nm += nm.empty() ? "y" : " y";
      if (nm.empty()) nm = "1";
      names[static_cast<std::size_t>(idx(a, b))] = nm;
    }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < 2; ++d) {
          const int aa = (b == 0) ? (a + c) % m : ((a - c) % m + m) % m;
          const int bb = b ^ d;
          table[static_cast<std::size_t>(idx(a, b)) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(idx(c, d))] = idx(aa, bb);
        }
  return detail::validate_group(n, std::move(table), std::move(names), "dihedral:" + std::to_string(m));
}

// Symmetric group on n points; elements are the n! image vectors in
// lexicographic order, so index 0 is the identity.
inline FiniteGroup build_symmetric(int n) {
  if (n < 1) throw validation_error("symmetric parameter must be at least 1");
  if (n > 6)
    throw validation_error("symmetric groups are supported up to n = 6 (order 720)");
  std::vector<std::vector<int>> perms;
  std::vector<int> base(static_cast<std::size_t>(n));
  std::iota(base.begin(), base.end(), 0);
  do {
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));

  std::map<std::vector<int>, int> rank;
  for (int i = 0; i < static_cast<int>(perms.size()); ++i) rank[perms[static_cast<std::size_t>(i)]] = i;

  const int order = static_cast<int>(perms.size());
  std::vector<int> table(static_cast<std::size_t>(order) * static_cast<std::size_t>(order));
  std::vector<std::string> names(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) {
    std::ostringstream nm;
    nm << "[";
    for (int p = 0; p < n; ++p) nm << (p ? " " : "") << perms[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)];
    nm << "]";
    names[static_cast<std::size_t>(i)] = nm.str();
  }
  std::vector<int> comp(static_cast<std::size_t>(n));
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) {
      // (p*q)(t) = p(q(t)): the product acts by q first. Any fixed convention
      // works; this one makes the table match composing image vectors inside out.
      for (int t = 0; t < n; ++t)
        comp[static_cast<std::size_t>(t)] =
            perms[static_cast<std::size_t>(i)][static_cast<std::size_t>(perms[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)])];
      table[static_cast<std::size_t>(i) * static_cast<std::size_t>(order) + static_cast<std::size_t>(j)] = rank[comp];
    }
  return detail::validate_group(order, std::move(table), std::move(names), "symmetric:" + std::to_string(n));
}

// Pairs (g, h) indexed as g*|H| + h.
inline FiniteGroup build_direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int n = g.order * h.order;
  if (n > kMaxGroupOrder)
    throw validation_error("direct product order " + std::to_string(n) + " exceeds the supported cap");
  std::vector<int> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  const auto idx = [&](int a, int b) { return a * h.order + b; };
  for (int a1 = 0; a1 < g.order; ++a1)
    for (int b1 = 0; b1 < h.order; ++b1)
      for (int a2 = 0; a2 < g.order; ++a2)
        for (int b2 = 0; b2 < h.order; ++b2)
          table[static_cast<std::size_t>(idx(a1, b1)) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(idx(a2, b2))] = idx(g.mul(a1, a2), h.mul(b1, b2));
  std::vector<std::string> names;
  if (!g.names.empty() && !h.names.empty()) {
    names.resize(static_cast<std::size_t>(n));
    for (int a = 0; a < g.order; ++a)
      for (int b = 0; b < h.order; ++b)
        names[static_cast<std::size_t>(idx(a, b))] =
            "(" + g.names[static_cast<std::size_t>(a)] + "," + h.names[static_cast<std::size_t>(b)] + ")";
  }
  return detail::validate_group(n, std::move(table), std::move(names),
                                "product:(" + g.label + "," + h.label + ")");
}

// Semidirect product N x| H. The action maps every H element to a permutation
// of N's elements (an automorphism); it is validated as a homomorphism
// H -> Aut(N) before any multiplication is built. Pairs (n, h) are indexed as
// n*|H| + h and multiply as (n1, h1)(n2, h2) = (n1 * action[h1](n2), h1 h2).
inline FiniteGroup build_semidirect(const FiniteGroup& n_grp, const FiniteGroup& h_grp,
                                    const std::vector<std::vector<int>>& action,
                                    std::string label = "") {
  const int N = n_grp.order, H = h_grp.order;
  if (static_cast<int>(action.size()) != H)
    throw validation_error("semidirect action must assign one automorphism per H element");
  for (int h = 0; h < H; ++h) {
    const auto& f = action[static_cast<std::size_t>(h)];
    if (static_cast<int>(f.size()) != N)
      throw validation_error("semidirect action[" + std::to_string(h) + "] has wrong domain size");
    std::vector<char> seen(static_cast<std::size_t>(N), 0);
    for (int a = 0; a < N; ++a) {
      const int v = f[static_cast<std::size_t>(a)];
      if (v < 0 || v >= N || seen[static_cast<std::size_t>(v)])
        throw validation_error("semidirect action[" + std::to_string(h) + "] is not a bijection: witness " +
                               std::to_string(a));
      seen[static_cast<std::size_t>(v)] = 1;
    }
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        if (f[static_cast<std::size_t>(n_grp.mul(a, b))] !=
            n_grp.mul(f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)]))
          throw validation_error("semidirect action[" + std::to_string(h) +
                                 "] is not multiplicative: witness pair (" + std::to_string(a) + "," +
                                 std::to_string(b) + ")");
  }
  for (int a = 0; a < N; ++a)
    if (action[0][static_cast<std::size_t>(a)] != a)
      throw validation_error("semidirect action of the identity must be the identity map: witness " +
                             std::to_string(a));
  for (int h1 = 0; h1 < H; ++h1)
    for (int h2 = 0; h2 < H; ++h2)
      for (int a = 0; a < N; ++a)
        if (action[static_cast<std::size_t>(h_grp.mul(h1, h2))][static_cast<std::size_t>(a)] !=
            action[static_cast<std::size_t>(h1)]
                  [static_cast<std::size_t>(action[static_cast<std::size_t>(h2)][static_cast<std::size_t>(a)])])
          throw validation_error("semidirect action is not a homomorphism: witness (" + std::to_string(h1) +
                                 "," + std::to_string(h2) + "," + std::to_string(a) + ")");

  const int n = N * H;
  if (n > kMaxGroupOrder)
    throw validation_error("semidirect product order " + std::to_string(n) + " exceeds the supported cap");
  std::vector<int> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  const auto idx = [&](int a, int b) { return a * H + b; };
  for (int n1 = 0; n1 < N; ++n1)
    for (int h1 = 0; h1 < H; ++h1)
      for (int n2 = 0; n2 < N; ++n2)
        for (int h2 = 0; h2 < H; ++h2)
          table[static_cast<std::size_t>(idx(n1, h1)) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(idx(n2, h2))] =
              idx(n_grp.mul(n1, action[static_cast<std::size_t>(h1)][static_cast<std::size_t>(n2)]),
                  h_grp.mul(h1, h2));
  if (label.empty()) label = "semidirect:(" + n_grp.label + "," + h_grp.label + ")";
  return detail::validate_group(n, std::move(table), {}, std::move(label));
}

// Accepts a raw square table (plus optional names), runs full validation and
// returns the group. Rejections carry a witness in the message.
inline FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& rows,
                                     std::vector<std::string> names = {},
                                     std::string label = "table") {
  const int n = static_cast<int>(rows.size());
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw validation_error("Cayley table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return detail::validate_group(n, std::move(flat), std::move(names), std::move(label));
}

inline int element_order(const FiniteGroup& g, int a) {
  int acc = a;
  int k = 1;
  while (acc != FiniteGroup::identity) {
    acc = g.mul(acc, a);
    ++k;
  }
  return k;
}

inline OrderProfile order_profile(const FiniteGroup& g) {
  OrderProfile p;
  for (int a = 0; a < g.order; ++a) ++p.counts[element_order(g, a)];
  return p;
}

inline int exponent(const FiniteGroup& g) {
  long long e = 1;
  for (int a = 0; a < g.order; ++a) e = std::lcm(e, static_cast<long long>(element_order(g, a)));
  return static_cast<int>(e);
}

// h g h^-1
inline int conjugate(const FiniteGroup& grp, int h, int g) {
  return grp.mul(grp.mul(h, g), grp.inv(h));
}

namespace detail {

// Multiplicative closure of a generating set that already contains the
// identity and is closed under inverses (commutators are: [a,b]^-1 = [b,a]).
inline std::vector<int> subgroup_closure(const FiniteGroup& g, std::vector<int> members,
                                         std::vector<char>& in) {
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j) {
      const int p = g.mul(members[i], members[j]);
      if (!in[static_cast<std::size_t>(p)]) {
        in[static_cast<std::size_t>(p)] = 1;
        members.push_back(p);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

inline FiniteGroup quotient_by_normal(const FiniteGroup& g, const std::vector<char>& in_subgroup,
                                      std::string label) {
  std::vector<int> rep_of(static_cast<std::size_t>(g.order), -1);
  std::vector<int> reps;
  for (int a = 0; a < g.order; ++a) {
    if (rep_of[static_cast<std::size_t>(a)] >= 0) continue;
    // Scanning ascending makes a the minimal element of its own coset.
    for (int s = 0; s < g.order; ++s)
      if (in_subgroup[static_cast<std::size_t>(s)]) rep_of[static_cast<std::size_t>(g.mul(a, s))] = a;
    reps.push_back(a);
  }
  std::vector<int> qindex(static_cast<std::size_t>(g.order), -1);
  for (int i = 0; i < static_cast<int>(reps.size()); ++i) qindex[static_cast<std::size_t>(reps[static_cast<std::size_t>(i)])] = i;

  const int q = static_cast<int>(reps.size());
  std::vector<int> table(static_cast<std::size_t>(q) * static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      const int prod = g.mul(reps[static_cast<std::size_t>(i)], reps[static_cast<std::size_t>(j)]);
      table[static_cast<std::size_t>(i) * static_cast<std::size_t>(q) + static_cast<std::size_t>(j)] =
          qindex[static_cast<std::size_t>(rep_of[static_cast<std::size_t>(prod)])];
    }
  return validate_group(q, std::move(table), {}, std::move(label));
}

// Invariant factors d_1 | d_2 | ... of a finite abelian group, read off its
// order profile: for each prime p, the count of elements killed by p^j
// determines how many cyclic factors have p-exponent at least j.
inline std::vector<int> invariant_factors_from_profile(const FiniteGroup& abelian) {
  const int q = abelian.order;
  if (q == 1) return {};
  const OrderProfile prof = order_profile(abelian);

  std::vector<int> primes;
  int t = q;
  for (int p = 2; p * p <= t; ++p)
    if (t % p == 0) {
      primes.push_back(p);
      while (t % p == 0) t /= p;
    }
  if (t > 1) primes.push_back(t);

  // per prime, r[j] = number of cyclic factors with p-exponent >= j+1
  std::map<int, std::vector<int>> r;
  int factor_count = 0;
  for (const int p : primes) {
    long long pj = 1;
    long long prev = 1;  // elements of order dividing p^0
    std::vector<int> rs;
    while (true) {
      pj *= p;
      long long count = 0;
      for (const auto& [ord, c] : prof.counts)
        if (pj % ord == 0) count += c;
      if (count == prev) break;
      int rj = 0;
      long long ratio = count / prev;
      if (prev * ratio != count) throw std::logic_error("order profile is not that of an abelian group");
      while (ratio > 1) {
        if (ratio % p != 0) throw std::logic_error("order profile is not that of an abelian group");
        ratio /= p;
        ++rj;
      }
      rs.push_back(rj);
      prev = count;
    }
    // r is non-increasing across j for abelian groups
    r[p] = rs;
    factor_count = std::max(factor_count, rs.empty() ? 0 : rs[0]);
  }

  std::vector<int> factors;  // largest first
  for (int i = 1; i <= factor_count; ++i) {
    long long d = 1;
    for (const int p : primes) {
      int e = 0;
      for (const int rj : r[p])
        if (rj >= i) ++e;
      for (int k = 0; k < e; ++k) d *= p;
    }
    factors.push_back(static_cast<int>(d));
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

}  // namespace detail

// Cyclic-factor orders d_1 | d_2 | ... | d_k of G/[G,G], sorted ascending.
// The commutator subgroup is the multiplicative closure of all commutators.
inline std::vector<int> abelianization_invariants(const FiniteGroup& g) {
  std::vector<char> in(static_cast<std::size_t>(g.order), 0);
  std::vector<int> members;
  in[FiniteGroup::identity] = 1;
  members.push_back(FiniteGroup::identity);
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b) {
      const int c = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
      if (!in[static_cast<std::size_t>(c)]) {
        in[static_cast<std::size_t>(c)] = 1;
        members.push_back(c);
      }
    }
  members = detail::subgroup_closure(g, std::move(members), in);
  const FiniteGroup quotient = detail::quotient_by_normal(g, in, g.label + "_ab");
  return detail::invariant_factors_from_profile(quotient);
}

}  // namespace doubletrace
