#pragma once

// Derived quantities on top of the fixed-point counts: exact-order counts by
// Moebius inversion, indicator sums, the normalized closure values, and the
// pairwise screening report that bundles every obstruction this library can
// compute. The screen reports obstructions only; it never certifies that two
// groups are equivalent.

#include "doubletrace/braid.hpp"
#include "doubletrace/common.hpp"
#include "doubletrace/double_rep.hpp"
#include "doubletrace/group.hpp"
#include "doubletrace/presentation.hpp"

#include <string>
#include <utility>
#include <vector>

namespace doubletrace {

// o_n(G) = #{g of exact order n} = (1/|G|) * sum over d | n of
// mu(n/d) * tau(staircase word of length d). Division must be exact; anything
// else indicates a bug upstream, not bad input.
inline BigInt order_count_via_mobius(const FiniteGroup& g, int n) {
  if (n < 1) throw validation_error("order parameter must be at least 1");
  BigInt acc = 0;
  for (const int d : divisors_of(n)) {
    const int mu = moebius(n / d);
    if (mu == 0) continue;
    acc += BigInt(mu) * lens_tau_closed_form(g, d);
  }
  const BigInt order(g.order);
  if (acc % order != 0)
    throw std::logic_error("Moebius inversion produced a non-integer count for n = " +
                           std::to_string(n));
  return acc / order;
}

// Indicator sum of the regular character: #{g : g^m = 1}.
inline long long fs_indicator(const FiniteGroup& g, int m) {
  if (m < 1) throw validation_error("indicator parameter must be at least 1");
  long long count = 0;
  for (int a = 0; a < g.order; ++a)
    if (g.power(a, m) == FiniteGroup::identity) ++count;
  return count;
}

// Normalized trace of the r-th power of the ribbon-type element: for group
// doubles this collapses to #{g : g^|r| = 1}, and to |G| at r = 0. Always 1
// when gcd(r, |G|) = 1.
inline Rational omega(const FiniteGroup& g, long long r) {
  if (r == 0) return Rational(g.order);
  const long long a = r < 0 ? -r : r;
  // indicator parameters stay within int range because |g| caps element orders
  const int m = static_cast<int>(a % static_cast<long long>(exponent(g)));
  return Rational(fs_indicator(g, m == 0 ? exponent(g) : m));
}

// tau(b) / |G|^(m+1) with m the closure's component count: the normalization
// under which the staircase value equals #{g : g^n = 1} / |G|.
inline Rational rt_value(const FiniteGroup& g, const BraidWord& b,
                         std::int64_t budget = kDefaultStateBudget, int threads = 1) {
  const int m = closure_component_count(b);
  const BigInt tau = tau_fast(g, b, budget, threads);
  return Rational(tau, pow_bigint(BigInt(g.order), m + 1));
}

// One battery test: a braid word evaluated on both groups.
struct BatteryEntry {
  std::string name;       // "lens:2", "quad", "double", "user:0", ...
  std::string word;       // braid text, reparseable
  int strands = 2;
  BigInt left_tau;
  BigInt right_tau;
  bool equal = false;
};

struct HomEntry {
  std::string preset;  // name understood by preset_presentation()
  long long left_count = 0;
  long long right_count = 0;
  bool equal = false;
};

struct ScreenConfig {
  int lens_max = 4;                     // staircase words of length 1..lens_max
  std::vector<BraidWord> user_words;    // appended to the default battery
  std::vector<std::string> presets = {"q8"};
  std::int64_t budget = kDefaultStateBudget;
  int threads = 1;
};

struct InvariantReport {
  std::string left_label;
  std::string right_label;
  OrderProfile left_profile;
  OrderProfile right_profile;
  bool profiles_equal = false;
  std::vector<BatteryEntry> battery;
  std::vector<HomEntry> hom_counts;
  std::vector<int> left_abelianization;
  std::vector<int> right_abelianization;
  bool abelianization_equal = false;
  // name of the first test, in execution order, whose two sides differ;
  // empty when the whole battery agrees
  std::string first_distinguishing;
  std::string verdict;
  std::int64_t budget = kDefaultStateBudget;  // echoed configuration
  int threads = 1;
};

// Runs, in order: order profiles, the braid battery, homomorphism counts per
// preset, abelianization. Records every result and names the first
// distinguishing test. A fully agreeing battery yields "not distinguished by
// this battery" -- deliberately never an equivalence claim.
inline InvariantReport screening_report(const FiniteGroup& left, const FiniteGroup& right,
                                        const ScreenConfig& config = {}) {
  InvariantReport rep;
  rep.left_label = left.label;
  rep.right_label = right.label;
  rep.budget = config.budget;
  rep.threads = config.threads;

  const auto note_difference = [&rep](const std::string& name, const std::string& lhs,
                                      const std::string& rhs) {
    if (rep.first_distinguishing.empty()) {
      rep.first_distinguishing = name;
      rep.verdict = "distinguished by " + name + ": " + lhs + " vs " + rhs;
    }
  };

  rep.left_profile = order_profile(left);
  rep.right_profile = order_profile(right);
  rep.profiles_equal = rep.left_profile == rep.right_profile;
  if (!rep.profiles_equal) {
    const auto render = [](const OrderProfile& p) {
      std::string s = "{";
      for (const auto& [k, v] : p.counts) s += " " + std::to_string(k) + ":" + std::to_string(v);
      return s + " }";
    };
    note_difference("order-profile", render(rep.left_profile), render(rep.right_profile));
  }

  std::vector<std::pair<std::string, BraidWord>> words;
  for (int n = 1; n <= config.lens_max; ++n)
    words.emplace_back("lens:" + std::to_string(n), lens_braid(n));
  words.emplace_back("quad", parse_braid("s1 s1 s1 s1", 2));
  words.emplace_back("double", parse_braid("s1 s1", 2));
  for (std::size_t i = 0; i < config.user_words.size(); ++i)
    words.emplace_back("user:" + std::to_string(i), config.user_words[i]);

  for (const auto& [name, w] : words) {
    BatteryEntry e;
    e.name = name;
    e.word = serialize_braid(w);
    e.strands = w.strands;
    e.left_tau = tau_fast(left, w, config.budget, config.threads);
    e.right_tau = tau_fast(right, w, config.budget, config.threads);
    e.equal = e.left_tau == e.right_tau;
    if (!e.equal) note_difference("tau:" + name, e.left_tau.str(), e.right_tau.str());
    rep.battery.push_back(std::move(e));
  }

  for (const std::string& preset : config.presets) {
    HomEntry h;
    h.preset = preset;
    const GroupPresentation p = preset_presentation(preset);
    h.left_count = count_homomorphisms(p, left, config.threads);
    h.right_count = count_homomorphisms(p, right, config.threads);
    h.equal = h.left_count == h.right_count;
    if (!h.equal)
      note_difference("hom:" + preset, std::to_string(h.left_count), std::to_string(h.right_count));
    rep.hom_counts.push_back(std::move(h));
  }

  rep.left_abelianization = abelianization_invariants(left);
  rep.right_abelianization = abelianization_invariants(right);
  rep.abelianization_equal = rep.left_abelianization == rep.right_abelianization;
  if (!rep.abelianization_equal) {
    const auto render = [](const std::vector<int>& v) {
      std::string s = "[";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
      return s + "]";
    };
    note_difference("abelianization", render(rep.left_abelianization),
                    render(rep.right_abelianization));
  }

  if (rep.first_distinguishing.empty()) rep.verdict = "not distinguished by this battery";
  return rep;
}

}  // namespace doubletrace
