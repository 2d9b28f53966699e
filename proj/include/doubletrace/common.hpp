#pragma once

// Shared scalar types, error categories and small number-theoretic helpers.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace doubletrace {

// Trace values grow like |G|^(2n); everything countable is kept exact.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Malformed user-facing text: braid words, group specs, presentation words,
// cycle notation, JSON payloads.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A Cayley table, permutation or semidirect-product action failed validation.
struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumeration would exceed the caller-supplied state budget.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline BigInt pow_bigint(const BigInt& base, int exp) {
  BigInt out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

inline long long euler_phi(long long n) {
  long long result = n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

// Moebius function; 0 on non-squarefree arguments.
inline int moebius(int n) {
  int sign = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

inline std::vector<int> divisors_of(int n) {
  std::vector<int> small, large;
  for (int d = 1; static_cast<long long>(d) * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Splits [0, total) into contiguous chunks and sums fn(lo, hi) over them,
// running chunks on separate threads. Every index is processed exactly once
// and the partials are added in chunk order, so the result is identical for
// any worker count.
inline BigInt parallel_sum(std::int64_t total, int threads,
                           const std::function<BigInt(std::int64_t, std::int64_t)>& fn) {
  if (total <= 0) return 0;
  int chunks = resolve_thread_count(threads);
  if (static_cast<std::int64_t>(chunks) > total) chunks = static_cast<int>(total);
  if (chunks <= 1) return fn(0, total);

  std::vector<BigInt> partial(static_cast<std::size_t>(chunks));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(chunks));
  const std::int64_t step = total / chunks;
  const std::int64_t rem = total % chunks;
  std::int64_t lo = 0;
  for (int c = 0; c < chunks; ++c) {
    const std::int64_t hi = lo + step + (c < rem ? 1 : 0);
    pool.emplace_back([&partial, &fn, c, lo, hi] { partial[static_cast<std::size_t>(c)] = fn(lo, hi); });
    lo = hi;
  }
  for (auto& t : pool) t.join();

  BigInt out = 0;
  for (const auto& p : partial) out += p;
  return out;
}

}  // namespace doubletrace
