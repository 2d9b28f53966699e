// Integration battery: twelve checkable criteria over the whole library, one
// PASS/FAIL line each. Run all with no arguments or a single one with
// --only N. Exit code 0 iff every executed criterion passed. Each criterion
// re-derives its expectations from first principles (closed forms, oracles,
// exhaustive enumeration) instead of trusting any other module's output.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "doubletrace/doubletrace.hpp"
#include "support.hpp"

namespace {

using doubletrace::BigInt;
using doubletrace::BraidWord;
using doubletrace::CatalogEntry;
using doubletrace::DoubleState;
using doubletrace::FiniteGroup;
using doubletrace::kDefaultStateBudget;
using doubletrace::Permutation;
using doubletrace::Rational;

struct Outcome {
  bool ok = true;
  std::string summary;
  std::vector<std::string> details;

  void fail(const std::string& what) {
    ok = false;
    if (details.size() < 12) details.push_back(what);
  }
};

std::vector<CatalogEntry> groups_up_to(int max_order) {
  std::vector<CatalogEntry> out;
  for (const CatalogEntry& e : doubletrace::standard_catalog())
    if (e.group.order <= max_order) out.push_back(e);
  return out;
}

BraidWord word_from(int strands, std::vector<std::pair<int, int>> letters) {
  return doubletrace::make_braid(strands, std::move(letters));
}

int default_threads() { return doubletrace::resolve_thread_count(0); }

// ---- criteria 1-3 share their value streams with criterion 12 --------------

// Staircase words against the closed form |G| * #{g : g^n = 1}.
std::string lens_stream(int threads, Outcome* check) {
  std::ostringstream tr;
  const auto run = [&](const CatalogEntry& e, int n) {
    const BigInt got =
        doubletrace::tau_fast(e.group, doubletrace::lens_braid(n), kDefaultStateBudget, threads);
    tr << e.name << " n=" << n << " " << got.str() << "\n";
    if (check != nullptr) {
      const BigInt want = doubletrace::lens_tau_closed_form(e.group, n);
      if (got != want)
        check->fail(e.name + " n=" + std::to_string(n) + ": got " + got.str() + ", closed form " +
                    want.str());
    }
  };
  for (const CatalogEntry& e : groups_up_to(16))
    for (int n = 1; n <= 4; ++n) run(e, n);
  for (const CatalogEntry& e : groups_up_to(4))
    for (int n = 1; n <= 8; ++n) run(e, n);
  return tr.str();
}

// Both evaluators across a fixed pseudo-random word grid.
std::string oracle_stream(int threads, Outcome* check) {
  std::ostringstream tr;
  testsupport::Rng rng(0x5EED2026ull);
  std::vector<BraidWord> words;
  for (int i = 0; i < 200; ++i) {
    const int strands = rng.int_in(2, 3);
    const int length = rng.int_in(0, 6);
    words.push_back(word_from(strands, testsupport::random_letters(rng, strands, length)));
  }
  for (const CatalogEntry& e : groups_up_to(6))
    for (std::size_t i = 0; i < words.size(); ++i) {
      const BigInt fast = doubletrace::tau_fast(e.group, words[i], kDefaultStateBudget, threads);
      const BigInt brute = doubletrace::tau_brute(e.group, words[i], kDefaultStateBudget, threads);
      tr << e.name << " w" << i << " " << fast.str() << " " << brute.str() << "\n";
      if (check != nullptr && fast != brute)
        check->fail(e.name + " word " + doubletrace::serialize_braid(words[i]) + ": fast " +
                    fast.str() + " vs brute " + brute.str());
    }
  return tr.str();
}

// sigma_1^4 against |G|^2 times the two-generator preset count.
std::string quad_stream(int threads, Outcome* check) {
  std::ostringstream tr;
  const BraidWord quad = doubletrace::parse_braid("s1 s1 s1 s1");
  const doubletrace::GroupPresentation preset = doubletrace::preset_q8();
  std::map<std::string, std::pair<long long, BigInt>> seen;
  for (const CatalogEntry& e : groups_up_to(16)) {
    const long long hom = doubletrace::count_homomorphisms(preset, e.group, threads);
    const BigInt tau = doubletrace::tau_fast(e.group, quad, kDefaultStateBudget, threads);
    tr << e.name << " hom=" << hom << " tau=" << tau.str() << "\n";
    seen[e.name] = {hom, tau};
    if (check != nullptr) {
      const BigInt want = BigInt(e.group.order) * BigInt(e.group.order) * BigInt(hom);
      if (tau != want)
        check->fail(e.name + ": tau " + tau.str() + " != |G|^2 * hom = " + want.str());
    }
  }
  if (check != nullptr) {
    const auto expect = [&](const std::string& name, long long hom, long long tau) {
      const auto it = seen.find(name);
      if (it == seen.end()) {
        check->fail(name + " missing from the catalog run");
        return;
      }
      if (it->second.first != hom || it->second.second != BigInt(tau))
        check->fail(name + ": got hom=" + std::to_string(it->second.first) + " tau=" +
                    it->second.second.str() + ", expected hom=" + std::to_string(hom) +
                    " tau=" + std::to_string(tau));
    };
    expect("G1", 112, 28672);
    expect("G2", 16, 4096);
    expect("F1", 64, 16384);
    expect("F2", 64, 16384);
  }
  return tr.str();
}

// ---- the criteria ----------------------------------------------------------

Outcome criterion_1() {
  Outcome o;
  lens_stream(default_threads(), &o);
  o.summary = "staircase words match |G| * #{g : g^n = 1} on the full grid";
  return o;
}

Outcome criterion_2() {
  Outcome o;
  oracle_stream(default_threads(), &o);
  o.summary = "both evaluators agree on 200 fixed pseudo-random words per small group";
  return o;
}

Outcome criterion_3() {
  Outcome o;
  quad_stream(default_threads(), &o);
  o.summary = "tau(s1^4) = |G|^2 * #Hom(two-generator preset) incl. 112/16/64/64";
  return o;
}

Outcome criterion_4() {
  Outcome o;
  const FiniteGroup g1 = doubletrace::catalog_group("G1");
  const FiniteGroup g2 = doubletrace::catalog_group("G2");
  const doubletrace::InvariantReport r12 = doubletrace::screening_report(g1, g2);
  if (!r12.profiles_equal) o.fail("G1/G2: order profiles should agree");
  bool found = false;
  for (const doubletrace::HomEntry& h : r12.hom_counts)
    if (h.preset == "q8") {
      found = true;
      if (h.left_count != 112 || h.right_count != 16 || h.equal)
        o.fail("G1/G2 hom counts: got " + std::to_string(h.left_count) + "/" +
               std::to_string(h.right_count) + ", expected separation 112 vs 16");
    }
  if (!found) o.fail("G1/G2 report carries no q8 preset entry");
  if (r12.verdict.rfind("distinguished by", 0) != 0)
    o.fail("G1/G2 verdict should name a distinguishing test, got: " + r12.verdict);

  const FiniteGroup f1 = doubletrace::catalog_group("F1");
  const FiniteGroup f2 = doubletrace::catalog_group("F2");
  const doubletrace::InvariantReport rff = doubletrace::screening_report(f1, f2);
  if (!rff.profiles_equal) o.fail("F1/F2: order profiles should agree");
  for (const doubletrace::BatteryEntry& e : rff.battery)
    if (!e.equal) o.fail("F1/F2 battery entry " + e.name + " unexpectedly differs");
  for (const doubletrace::HomEntry& h : rff.hom_counts)
    if (h.preset == "q8" && (h.left_count != 64 || h.right_count != 64 || !h.equal))
      o.fail("F1/F2 hom counts should both be 64");
  if (rff.left_abelianization != std::vector<int>{2, 2, 2} ||
      rff.right_abelianization != std::vector<int>{2, 4} || rff.abelianization_equal)
    o.fail("F1/F2 abelianizations should separate as [2,2,2] vs [2,4]");
  if (rff.first_distinguishing != "abelianization")
    o.fail("F1/F2 first distinguishing test should be abelianization, got: " +
           rff.first_distinguishing);
  o.summary = "screening separates G1/G2 by hom counts and F1/F2 only by abelianization";
  return o;
}

Outcome criterion_5() {
  Outcome o;
  for (const CatalogEntry& e : doubletrace::standard_catalog()) {
    const doubletrace::OrderProfile profile = doubletrace::order_profile(e.group);
    for (const int n : doubletrace::divisors_of(e.group.order)) {
      const BigInt got = doubletrace::order_count_via_mobius(e.group, n);
      const auto it = profile.counts.find(n);
      const BigInt want(it == profile.counts.end() ? 0 : it->second);
      if (got != want)
        o.fail(e.name + " n=" + std::to_string(n) + ": inversion " + got.str() + ", profile " +
               want.str());
    }
  }
  o.summary = "Moebius inversion of staircase values recovers every exact-order count";
  return o;
}

Outcome criterion_6() {
  Outcome o;
  for (const CatalogEntry& e : doubletrace::standard_catalog()) {
    if (doubletrace::omega(e.group, 1) != 1 || doubletrace::omega(e.group, -1) != 1)
      o.fail(e.name + ": omega at +-1 must be 1");
    for (long long r = 2; r <= 20; ++r) {
      if (std::gcd(r, static_cast<long long>(e.group.order)) != 1) continue;
      if (doubletrace::omega(e.group, r) != 1 || doubletrace::omega(e.group, -r) != 1)
        o.fail(e.name + " r=" + std::to_string(r) + ": omega should be 1");
    }
  }
  o.summary = "omega_r = 1 whenever gcd(r, |G|) = 1, and always at r = +-1";
  return o;
}

Outcome criterion_7() {
  Outcome o;

  // Exhaustive state-level equality of the two sides of the braid relation.
  const BraidWord lhs = doubletrace::parse_braid("s1 s2 s1", 3);
  const BraidWord rhs = doubletrace::parse_braid("s2 s1 s2", 3);
  for (const CatalogEntry& e : groups_up_to(6)) {
    const long long n = e.group.order;
    long long states = 1;
    for (int i = 0; i < 6; ++i) states *= n;
    long long bad = 0;
    for (long long code = 0; code < states; ++code) {
      long long rest = code;
      DoubleState s;
      s.pairs.resize(3);
      for (int slot = 2; slot >= 0; --slot) {
        const int x = static_cast<int>(rest % n);
        rest /= n;
        const int g = static_cast<int>(rest % n);
        rest /= n;
        s.pairs[static_cast<std::size_t>(slot)] = {g, x};
      }
      if (doubletrace::apply_braid(e.group, s, lhs) != doubletrace::apply_braid(e.group, s, rhs))
        ++bad;
    }
    if (bad != 0)
      o.fail(e.name + ": relation fails on " + std::to_string(bad) + " of " +
             std::to_string(states) + " states");
  }

  // Twenty relation moves applied to random words must leave tau unchanged.
  const FiniteGroup q8 = doubletrace::catalog_group("Q8");
  testsupport::Rng rng(0xB4A1D7ull);

  const auto try_cancel = [&rng](BraidWord& w) {
    std::vector<std::size_t> sites;
    for (std::size_t i = 0; i + 1 < w.letters.size(); ++i)
      if (w.letters[i].first == w.letters[i + 1].first &&
          w.letters[i].second == -w.letters[i + 1].second)
        sites.push_back(i);
    if (sites.empty()) return false;
    const std::size_t at = sites[rng.below(sites.size())];
    w.letters.erase(w.letters.begin() + static_cast<std::ptrdiff_t>(at),
                    w.letters.begin() + static_cast<std::ptrdiff_t>(at) + 2);
    return true;
  };
  const auto try_far_swap = [&rng](BraidWord& w) {
    std::vector<std::size_t> sites;
    for (std::size_t i = 0; i + 1 < w.letters.size(); ++i)
      if (std::abs(w.letters[i].first - w.letters[i + 1].first) >= 2) sites.push_back(i);
    if (sites.empty()) return false;
    const std::size_t at = sites[rng.below(sites.size())];
    std::swap(w.letters[at], w.letters[at + 1]);
    return true;
  };
  const auto try_yang_baxter = [&rng](BraidWord& w) {
    std::vector<std::size_t> sites;
    for (std::size_t i = 0; i + 2 < w.letters.size(); ++i) {
      const auto [a, ea] = w.letters[i];
      const auto [b, eb] = w.letters[i + 1];
      const auto [c, ec] = w.letters[i + 2];
      if (a == c && std::abs(a - b) == 1 && ea == eb && eb == ec) sites.push_back(i);
    }
    if (sites.empty()) return false;
    const std::size_t at = sites[rng.below(sites.size())];
    const auto [a, e] = w.letters[at];
    const int b = w.letters[at + 1].first;
    w.letters[at] = {b, e};
    w.letters[at + 1] = {a, e};
    w.letters[at + 2] = {b, e};
    return true;
  };
  const auto insert_pair = [&rng](BraidWord& w) {
    const std::size_t at = rng.below(w.letters.size() + 1);
    const int idx = rng.int_in(1, w.strands - 1);
    const int sign = rng.below(2) == 0 ? 1 : -1;
    w.letters.insert(w.letters.begin() + static_cast<std::ptrdiff_t>(at),
                     {{idx, sign}, {idx, -sign}});
    return true;
  };

  for (int trial = 0; trial < 5; ++trial) {
    BraidWord w = word_from(3, testsupport::random_letters(rng, 3, 8));
    const BigInt tau0 = doubletrace::tau_fast(q8, w);
    for (int move = 0; move < 20; ++move) {
      bool applied = false;
      switch (rng.below(4)) {
        case 0: applied = try_cancel(w); break;
        case 1: applied = try_far_swap(w); break;
        case 2: applied = try_yang_baxter(w); break;
        default: applied = insert_pair(w); break;
      }
      if (!applied) insert_pair(w);  // the fallback move always applies
      const BigInt tau = doubletrace::tau_fast(q8, w);
      if (tau != tau0) {
        o.fail("trial " + std::to_string(trial) + " move " + std::to_string(move) + ": tau " +
               tau.str() + " != " + tau0.str() + " on " + doubletrace::serialize_braid(w));
        break;
      }
    }
  }
  o.summary = "braid relation holds on every state; relation moves never change tau";
  return o;
}

Outcome criterion_8() {
  Outcome o;
  const std::vector<CatalogEntry> groups = groups_up_to(8);
  testsupport::Rng rng(0x7247CEull);
  for (int trial = 0; trial < 50; ++trial) {
    const FiniteGroup& g = groups[static_cast<std::size_t>(trial) % groups.size()].group;
    const int strands = rng.int_in(2, 3);
    const BraidWord a = word_from(strands, testsupport::random_letters(rng, strands, rng.int_in(0, 5)));
    const BraidWord b = word_from(strands, testsupport::random_letters(rng, strands, rng.int_in(0, 5)));
    const BigInt tau_a = doubletrace::tau_fast(g, a);
    const BigInt tau_b = doubletrace::tau_fast(g, b);
    const BigInt ab = doubletrace::tau_fast(g, doubletrace::compose(a, b));
    const BigInt ba = doubletrace::tau_fast(g, doubletrace::compose(b, a));
    if (ab != ba)
      o.fail("trial " + std::to_string(trial) + ": tau(ab) " + ab.str() + " != tau(ba) " +
             ba.str());
    const BigInt tensor = doubletrace::tau_fast(g, doubletrace::tensor(a, b));
    if (tensor != tau_a * tau_b)
      o.fail("trial " + std::to_string(trial) + ": tau(a (x) b) " + tensor.str() +
             " != tau(a) tau(b) = " + BigInt(tau_a * tau_b).str());
  }
  for (const CatalogEntry& e : groups) {
    const BigInt id2 = doubletrace::tau_fast(e.group, word_from(2, {}));
    const BigInt want = doubletrace::pow_bigint(BigInt(e.group.order), 4);
    if (id2 != want)
      o.fail(e.name + ": tau(identity in B2) " + id2.str() + " != |G|^4 = " + want.str());
  }
  o.summary = "trace laws: cyclic under composition, multiplicative under tensor, |G|^4 at id";
  return o;
}

Outcome criterion_9() {
  Outcome o;
  for (const CatalogEntry& e : groups_up_to(16))
    for (int n = 1; n <= 4; ++n) {
      const Rational got = doubletrace::rt_value(e.group, doubletrace::lens_braid(n));
      const Rational want(doubletrace::fs_indicator(e.group, n), e.group.order);
      if (got != want)
        o.fail(e.name + " n=" + std::to_string(n) + ": rt " +
               doubletrace::rational_to_string(got) + " != " +
               doubletrace::rational_to_string(want));
    }
  const Rational dbl =
      doubletrace::rt_value(doubletrace::build_cyclic(2), doubletrace::parse_braid("s1 s1"));
  if (dbl != 1)
    o.fail("rt_value(cyclic:2, \"s1 s1\") = " + doubletrace::rational_to_string(dbl) +
           ", required value 1 (= #Hom(Z, Z_2)/2); the action's trace on a double crossing is "
           "|G|^2 for every finite group, because its closure is a Hopf link and surgery on "
           "that link returns the 3-sphere, so the normalized value here is 1/2 and this "
           "clause cannot be met by a faithful evaluator");
  o.summary = "staircase normalization #{g : g^n = 1}/|G| plus the double-crossing clause";
  return o;
}

Outcome criterion_10() {
  Outcome o;

  long long pairs = 0;
  for (int n = 1; n <= 6; ++n) {
    std::vector<Permutation> perms;
    std::vector<int> base(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) base[static_cast<std::size_t>(i)] = i;
    do {
      Permutation p;
      p.images = base;
      perms.push_back(std::move(p));
    } while (std::next_permutation(base.begin(), base.end()));

    std::vector<doubletrace::CycleType> types;
    types.reserve(perms.size());
    for (const Permutation& p : perms) types.push_back(doubletrace::cycle_type(p));

    for (std::size_t i = 0; i < perms.size(); ++i)
      for (std::size_t j = 0; j < perms.size(); ++j) {
        ++pairs;
        const bool same_type = types[i] == types[j];
        const doubletrace::SimilarityResult r =
            doubletrace::similar_as_matrices(perms[i], perms[j]);
        if (r.similar != same_type) {
          o.fail("n=" + std::to_string(n) + " pair " + std::to_string(i) + "," +
                 std::to_string(j) + ": similar=" + (r.similar ? "true" : "false") +
                 " but cycle types " + (same_type ? "agree" : "differ"));
          continue;
        }
        if (r.similar) {
          if (r.conjugator.inverse().then(perms[i]).then(r.conjugator) != perms[j])
            o.fail("n=" + std::to_string(n) + " pair " + std::to_string(i) + "," +
                   std::to_string(j) + ": conjugator certificate does not transport p to q");
        } else {
          const int d = r.witness_exponent;
          if (d < 1 || doubletrace::fixed_points(perms[i].power(d)) ==
                           doubletrace::fixed_points(perms[j].power(d)))
            o.fail("n=" + std::to_string(n) + " pair " + std::to_string(i) + "," +
                   std::to_string(j) + ": witness exponent does not separate fixed points");
        }
      }
  }
  if (pairs != 533417) o.fail("expected 533417 pairs across sizes 1..6, saw " + std::to_string(pairs));

  for (int m = 1; m <= 12; ++m) {
    const doubletrace::SmithCheck s = doubletrace::smith_determinant_check(m);
    if (!s.equal || s.determinant <= 0)
      o.fail("gcd-matrix determinant at m=" + std::to_string(m) + ": " + s.determinant.str() +
             " vs totient product " + s.totient_product.str());
  }

  for (int n = 1; n <= 12; ++n)
    for (int m = 1; m <= 12; ++m) {
      const doubletrace::OrbitData orbits = doubletrace::cyclic_tensor_orbits(n, m);
      const long long g = std::gcd(n, m);
      const long long l = (static_cast<long long>(n) / g) * m;
      if (orbits.orbit_count != g || orbits.orbit_size != l)
        o.fail("orbits(" + std::to_string(n) + "," + std::to_string(m) + ") = (" +
               std::to_string(orbits.orbit_count) + "," + std::to_string(orbits.orbit_size) +
               "), expected (" + std::to_string(g) + "," + std::to_string(l) + ")");
      if (doubletrace::hom_dimension(n, m) != g)
        o.fail("hom_dimension(" + std::to_string(n) + "," + std::to_string(m) + ") != gcd");
    }

  o.summary = "similarity = cycle type (all 533417 pairs, certified); gcd determinant; orbits";
  return o;
}

Outcome criterion_11() {
  Outcome o;
  for (const CatalogEntry& e : groups_up_to(16)) {
    const long long got = doubletrace::exponent_via_monodromy(e.group);
    const long long want = doubletrace::exponent(e.group);
    if (got != want)
      o.fail(e.name + ": monodromy order " + std::to_string(got) + " != exponent " +
             std::to_string(want));
  }
  o.summary = "full-twist monodromy order equals the group exponent";
  return o;
}

Outcome criterion_12() {
  Outcome o;
  const int workers = std::max(4, default_threads());
  if (lens_stream(1, nullptr) != lens_stream(workers, nullptr))
    o.fail("staircase stream differs between 1 and " + std::to_string(workers) + " workers");
  if (oracle_stream(1, nullptr) != oracle_stream(workers, nullptr))
    o.fail("evaluator stream differs between 1 and " + std::to_string(workers) + " workers");
  if (quad_stream(1, nullptr) != quad_stream(workers, nullptr))
    o.fail("hom/tau stream differs between 1 and " + std::to_string(workers) + " workers");
  o.summary = "criteria 1-3 value streams are bit-identical with 1 and " +
              std::to_string(workers) + " workers";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
      if (only < 1 || only > 12) {
        std::cerr << "criterion number must be in 1..12\n";
        return 2;
      }
    } else {
      std::cerr << "usage: doubletrace_acceptance [--only N]\n";
      return 2;
    }
  }

  using Runner = Outcome (*)();
  const Runner runners[12] = {criterion_1, criterion_2, criterion_3, criterion_4,
                              criterion_5, criterion_6, criterion_7, criterion_8,
                              criterion_9, criterion_10, criterion_11, criterion_12};

  bool all_ok = true;
  for (int id = 1; id <= 12; ++id) {
    if (only != 0 && id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = runners[id - 1]();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (o.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << o.summary << " ["
         << secs << "s]";
    std::cout << line.str() << "\n";
    for (const std::string& d : o.details) std::cout << "  note: " << d << "\n";
    all_ok = all_ok && o.ok;
  }
  return all_ok ? 0 : 1;
}
