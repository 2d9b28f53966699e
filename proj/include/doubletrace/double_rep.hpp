#pragma once

// The braid-group action on tensor powers of the group double, acting on the
// distinguished basis by permutation, with two independent evaluators for the
// fixed-point count tau:
//   tau_brute  walks every basis state (|G|^(2n) of them),
//   tau_fast   walks only g-tuples (|G|^n) and resolves the x-part by holonomy.
// Their agreement is one of the suite's central cross-checks.

#include "doubletrace/braid.hpp"
#include "doubletrace/common.hpp"
#include "doubletrace/group.hpp"
#include "doubletrace/permutation.hpp"

#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace doubletrace {

// Basis vector of the n-fold tensor power: position p holds (g_p, x_p).
struct DoubleState {
  std::vector<std::pair<int, int>> pairs;
  bool operator==(const DoubleState&) const = default;
};

// The x-components transform affinely along a word: the final x at position p
// is multipliers[p] times the initial x at position position_permutation^-1(p).
struct HolonomyData {
  Permutation position_permutation;
  std::vector<int> multipliers;
};

inline constexpr std::int64_t kDefaultStateBudget = 100'000'000;

// One crossing. Positive sign sends positions (i, i+1) holding
// ((g,x),(h,y)) to ((h,y),(h g h^-1, h x)); negative is its inverse:
// ((p,u),(q,v)) to ((p^-1 q p, p^-1 v),(p,u)). Other positions are untouched.
inline DoubleState apply_generator(const FiniteGroup& grp, DoubleState s, int i, int sign) {
  const int n = static_cast<int>(s.pairs.size());
  if (i < 1 || i >= n)
    throw validation_error("generator index " + std::to_string(i) + " outside [1, " +
                           std::to_string(n - 1) + "]");
  auto& a = s.pairs[static_cast<std::size_t>(i - 1)];
  auto& b = s.pairs[static_cast<std::size_t>(i)];
  if (sign > 0) {
    const auto [g, x] = a;
    const auto [h, y] = b;
    a = {h, y};
    b = {conjugate(grp, h, g), grp.mul(h, x)};
  } else {
    const auto [p, u] = a;
    const auto [q, v] = b;
    a = {conjugate(grp, grp.inv(p), q), grp.mul(grp.inv(p), v)};
    b = {p, u};
  }
  return s;
}

inline DoubleState apply_braid(const FiniteGroup& grp, DoubleState s, const BraidWord& b) {
  if (static_cast<int>(s.pairs.size()) != b.strands)
    throw validation_error("state has " + std::to_string(s.pairs.size()) + " pairs but the braid has " +
                           std::to_string(b.strands) + " strands");
  for (const auto& [idx, sign] : b.letters) s = apply_generator(grp, std::move(s), idx, sign);
  return s;
}

// The g-components evolve independently of the x-components; this is their
// marginal: + sends (g_i, g_{i+1}) to (g_{i+1}, g_{i+1} g_i g_{i+1}^-1),
// - sends (g_i, g_{i+1}) to (g_i^-1 g_{i+1} g_i, g_i).
inline std::vector<int> hurwitz_apply(const FiniteGroup& grp, std::vector<int> gtuple,
                                      const BraidWord& b) {
  if (static_cast<int>(gtuple.size()) != b.strands)
    throw validation_error("tuple length does not match strand count");
  for (const auto& [idx, sign] : b.letters) {
    int& a = gtuple[static_cast<std::size_t>(idx - 1)];
    int& c = gtuple[static_cast<std::size_t>(idx)];
    if (sign > 0) {
      const int g = a, h = c;
      a = h;
      c = conjugate(grp, h, g);
    } else {
      const int p = a, q = c;
      a = conjugate(grp, grp.inv(p), q);
      c = p;
    }
  }
  return gtuple;
}

namespace detail {

// Walks one word over a fixed g-tuple, tracking for each position p the source
// position src[p] whose initial x now sits at p and the accumulated left
// multiplier mult[p]. Also evolves the g-tuple itself in place.
struct HolonomyWalk {
  std::vector<int> g;     // current g-tuple
  std::vector<int> src;   // src[p] = initial position feeding position p
  std::vector<int> mult;  // x at p = mult[p] * initial_x[src[p]]

  explicit HolonomyWalk(std::vector<int> gtuple)
      : g(std::move(gtuple)), src(g.size()), mult(g.size(), FiniteGroup::identity) {
    for (std::size_t p = 0; p < src.size(); ++p) src[p] = static_cast<int>(p);
  }

  void step(const FiniteGroup& grp, int idx, int sign) {
    const std::size_t i = static_cast<std::size_t>(idx - 1);
    if (sign > 0) {
      const int gg = g[i], h = g[i + 1];
      g[i] = h;
      g[i + 1] = conjugate(grp, h, gg);
      const int si = src[i], mi = mult[i];
      src[i] = src[i + 1];
      mult[i] = mult[i + 1];
      src[i + 1] = si;
      mult[i + 1] = grp.mul(h, mi);
    } else {
      const int p = g[i], q = g[i + 1];
      g[i] = conjugate(grp, grp.inv(p), q);
      g[i + 1] = p;
      const int si = src[i], mi = mult[i];
      src[i] = src[i + 1];
      mult[i] = grp.mul(grp.inv(p), mult[i + 1]);
      src[i + 1] = si;
      mult[i + 1] = mi;
    }
  }

  void run(const FiniteGroup& grp, const BraidWord& b) {
    for (const auto& [idx, sign] : b.letters) step(grp, idx, sign);
  }
};

}  // namespace detail

inline HolonomyData holonomy(const FiniteGroup& grp, const std::vector<int>& gtuple,
                             const BraidWord& b) {
  if (static_cast<int>(gtuple.size()) != b.strands)
    throw validation_error("tuple length does not match strand count");
  detail::HolonomyWalk walk(gtuple);
  walk.run(grp, b);
  // src maps each final position to its source, so the forward permutation
  // (source -> final position) is its inverse.
  Permutation src_perm;
  src_perm.images = walk.src;
  HolonomyData out;
  out.position_permutation = src_perm.inverse();
  out.multipliers = std::move(walk.mult);
  return out;
}

namespace detail {

inline std::int64_t checked_state_count(const FiniteGroup& grp, int copies, std::int64_t budget,
                                        const char* what) {
  BigInt total = pow_bigint(BigInt(grp.order), copies);
  if (total > BigInt(budget))
    throw budget_error(std::string(what) + " needs " + total.str() + " states but the budget is " +
                       std::to_string(budget));
  return total.convert_to<std::int64_t>();
}

}  // namespace detail

// Number of basis states fixed by the word's action: the trace of the
// (never materialized) permutation matrix. Enumerates all |G|^(2n) states.
inline BigInt tau_brute(const FiniteGroup& grp, const BraidWord& b,
                        std::int64_t budget = kDefaultStateBudget, int threads = 1) {
  const int n = b.strands;
  const std::int64_t total = detail::checked_state_count(grp, 2 * n, budget, "tau_brute");
  const int order = grp.order;

  const auto count_range = [&](std::int64_t lo, std::int64_t hi) -> BigInt {
    long long local = 0;
    DoubleState s;
    s.pairs.resize(static_cast<std::size_t>(n));
    for (std::int64_t code = lo; code < hi; ++code) {
      std::int64_t rest = code;
      for (int p = n - 1; p >= 0; --p) {
        const int x = static_cast<int>(rest % order);
        rest /= order;
        const int g = static_cast<int>(rest % order);
        rest /= order;
        s.pairs[static_cast<std::size_t>(p)] = {g, x};
      }
      if (apply_braid(grp, s, b) == s) ++local;
    }
    return BigInt(local);
  };

  return parallel_sum(total, threads, count_range);
}

// Same count via the g-tuple factorization: a state is fixed iff its g-tuple
// is Hurwitz-fixed and every cycle of the position permutation has identity
// holonomy, in which case the x-part contributes one free choice per cycle.
inline BigInt tau_fast(const FiniteGroup& grp, const BraidWord& b,
                       std::int64_t budget = kDefaultStateBudget, int threads = 1) {
  const int n = b.strands;
  const std::int64_t total = detail::checked_state_count(grp, n, budget, "tau_fast");
  const int order = grp.order;
  const BigInt big_order(order);

  const auto sum_range = [&](std::int64_t lo, std::int64_t hi) -> BigInt {
    BigInt local = 0;
    std::vector<int> gtuple(static_cast<std::size_t>(n));
    for (std::int64_t code = lo; code < hi; ++code) {
      std::int64_t rest = code;
      for (int p = n - 1; p >= 0; --p) {
        gtuple[static_cast<std::size_t>(p)] = static_cast<int>(rest % order);
        rest /= order;
      }
      detail::HolonomyWalk walk(gtuple);
      walk.run(grp, b);
      if (walk.g != gtuple) continue;

      int cycles = 0;
      bool all_trivial = true;
      std::vector<char> seen(static_cast<std::size_t>(n), 0);
      for (int p0 = 0; p0 < n && all_trivial; ++p0) {
        if (seen[static_cast<std::size_t>(p0)]) continue;
        ++cycles;
        seen[static_cast<std::size_t>(p0)] = 1;
        int prod = walk.mult[static_cast<std::size_t>(p0)];
        int q = walk.src[static_cast<std::size_t>(p0)];
        while (q != p0) {
          seen[static_cast<std::size_t>(q)] = 1;
          prod = grp.mul(prod, walk.mult[static_cast<std::size_t>(q)]);
          q = walk.src[static_cast<std::size_t>(q)];
        }
        if (prod != FiniteGroup::identity) all_trivial = false;
      }
      if (all_trivial) local += pow_bigint(big_order, cycles);
    }
    return local;
  };

  return parallel_sum(total, threads, sum_range);
}

// |G| * #{g in G : g^n = 1}: the closed form for the trace of the n-letter
// staircase word whose closure is a single circle.
inline BigInt lens_tau_closed_form(const FiniteGroup& grp, int n) {
  if (n < 1) throw validation_error("lens parameter must be at least 1");
  long long roots = 0;
  for (int g = 0; g < grp.order; ++g)
    if (grp.power(g, n) == FiniteGroup::identity) ++roots;
  return BigInt(grp.order) * BigInt(roots);
}

// Multiplicative order of the full-twist action on two-strand states. For
// group doubles this equals the group exponent, which the tests verify
// against the lcm-of-element-orders computation.
inline long long exponent_via_monodromy(const FiniteGroup& grp,
                                        std::int64_t budget = kDefaultStateBudget) {
  const std::int64_t total = detail::checked_state_count(grp, 4, budget, "exponent_via_monodromy");
  const int order = grp.order;
  const BraidWord twist = parse_braid("s1 s1", 2);

  std::vector<std::int64_t> image(static_cast<std::size_t>(total));
  DoubleState s;
  s.pairs.resize(2);
  for (std::int64_t code = 0; code < total; ++code) {
    std::int64_t rest = code;
    const int x1 = static_cast<int>(rest % order);
    rest /= order;
    const int g1 = static_cast<int>(rest % order);
    rest /= order;
    const int x0 = static_cast<int>(rest % order);
    rest /= order;
    const int g0 = static_cast<int>(rest % order);
    s.pairs[0] = {g0, x0};
    s.pairs[1] = {g1, x1};
    const DoubleState t = apply_braid(grp, s, twist);
    image[static_cast<std::size_t>(code)] =
        ((static_cast<std::int64_t>(t.pairs[0].first) * order + t.pairs[0].second) * order +
         t.pairs[1].first) *
            order +
        t.pairs[1].second;
  }

  long long result = 1;
  std::vector<char> seen(static_cast<std::size_t>(total), 0);
  for (std::int64_t start = 0; start < total; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    long long len = 0;
    std::int64_t q = start;
    while (!seen[static_cast<std::size_t>(q)]) {
      seen[static_cast<std::size_t>(q)] = 1;
      ++len;
      q = image[static_cast<std::size_t>(q)];
    }
    result = std::lcm(result, len);
  }
  return result;
}

}  // namespace doubletrace
