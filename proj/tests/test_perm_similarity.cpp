#include "doubletrace/perm_similarity.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "doubletrace/braid.hpp"
#include "support.hpp"

using namespace doubletrace;

namespace {

Permutation random_perm(testsupport::Rng& rng, int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  for (int i = n - 1; i > 0; --i)
    std::swap(im[static_cast<std::size_t>(i)], im[rng.below(static_cast<std::uint64_t>(i + 1))]);
  return make_permutation(std::move(im));
}

Permutation conj(const Permutation& w, const Permutation& p) {
  // w p w^-1 as functions: x -> w(p(w^-1(x)))
  return w.inverse().then(p).then(w);
}

}  // namespace

TEST_CASE("cycle types and fixed points", "[perm]") {
  const Permutation id5 = Permutation::identity(5);
  CHECK(cycle_type(id5).counts == std::map<int, int>{{1, 5}});
  CHECK(fixed_points(id5) == 5);

  const Permutation three = parse_cycles("(1 2 3)", 5);
  CHECK(cycle_type(three).counts == std::map<int, int>{{1, 2}, {3, 1}});
  CHECK(fixed_points(three) == 2);

  CHECK(cycle_type(underlying_permutation(lens_braid(3))).counts == std::map<int, int>{{4, 1}});
}

TEST_CASE("cycle notation parsing", "[perm]") {
  CHECK(parse_cycles("(1 2 3)(4 5)", 5).images == std::vector<int>{1, 2, 0, 4, 3});
  CHECK(parse_cycles("(1 2)", 4).images == std::vector<int>{1, 0, 2, 3});
  CHECK(parse_cycles("(2 1)").images == std::vector<int>{1, 0});  // size inferred
  CHECK(parse_cycles("", 3).is_identity());

  CHECK_THROWS_AS(parse_cycles("(1 2", 3), parse_error);
  CHECK_THROWS_AS(parse_cycles("(0 1)", 3), parse_error);
  CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)", 3), parse_error);
  CHECK_THROWS_AS(parse_cycles("(1 5)", 3), parse_error);
  CHECK_THROWS_AS(parse_cycles("1 2", 3), parse_error);
  CHECK_THROWS_AS(parse_cycles("", 0), parse_error);
}

TEST_CASE("similarity with certificates", "[perm]") {
  SECTION("equal cycle types: explicit conjugator") {
    const Permutation p = parse_cycles("(1 2)", 4);
    const Permutation q = parse_cycles("(3 4)", 4);
    const SimilarityResult r = similar_as_matrices(p, q);
    REQUIRE(r.similar);
    CHECK(conj(r.conjugator, p) == q);
  }

  SECTION("reflexivity gives a valid certificate") {
    const Permutation p = parse_cycles("(1 2 3)(4 5)", 6);
    const SimilarityResult r = similar_as_matrices(p, p);
    REQUIRE(r.similar);
    CHECK(conj(r.conjugator, p) == p);
  }

  SECTION("different types: witness power separates fixed-point counts") {
    const Permutation four = parse_cycles("(1 2 3 4)", 4);
    const Permutation pairs = parse_cycles("(1 2)(3 4)", 4);
    const SimilarityResult r = similar_as_matrices(four, pairs);
    REQUIRE_FALSE(r.similar);
    CHECK(r.witness_exponent == 2);
    CHECK(fixed_points(four.power(2)) == 0);
    CHECK(fixed_points(pairs.power(2)) == 4);
  }

  SECTION("witness always certifies") {
    testsupport::Rng rng(1357);
    for (int t = 0; t < 200; ++t) {
      const int n = rng.int_in(2, 8);
      const Permutation p = random_perm(rng, n);
      const Permutation q = random_perm(rng, n);
      const SimilarityResult r = similar_as_matrices(p, q);
      if (r.similar) {
        CHECK(conj(r.conjugator, p) == q);
      } else {
        const int d = r.witness_exponent;
        CHECK(d >= 1);
        CHECK(fixed_points(p.power(d)) != fixed_points(q.power(d)));
      }
    }
  }

  SECTION("size mismatch is an error") {
    CHECK_THROWS_AS(similar_as_matrices(Permutation::identity(3), Permutation::identity(4)),
                    validation_error);
  }
}

TEST_CASE("similarity is an equivalence relation on samples", "[perm]") {
  testsupport::Rng rng(2468);
  for (int t = 0; t < 60; ++t) {
    const int n = rng.int_in(2, 8);
    const Permutation a = random_perm(rng, n);
    const Permutation b = random_perm(rng, n);
    const Permutation c = random_perm(rng, n);
    CHECK(similar_as_matrices(a, a).similar);
    CHECK(similar_as_matrices(a, b).similar == similar_as_matrices(b, a).similar);
    if (similar_as_matrices(a, b).similar && similar_as_matrices(b, c).similar)
      CHECK(similar_as_matrices(a, c).similar);
  }
}

TEST_CASE("fixed points are conjugation invariant", "[perm]") {
  testsupport::Rng rng(97531);
  for (int t = 0; t < 200; ++t) {
    const int n = rng.int_in(1, 9);
    const Permutation p = random_perm(rng, n);
    const Permutation w = random_perm(rng, n);
    CHECK(fixed_points(conj(w, p)) == fixed_points(p));
    CHECK(cycle_type(conj(w, p)) == cycle_type(p));
  }
}

TEST_CASE("gcd matrix and Smith determinant", "[perm]") {
  CHECK(gcd_matrix(3) == std::vector<std::vector<long long>>{{1, 1, 1}, {1, 2, 1}, {1, 1, 3}});

  const SmithCheck m1 = smith_determinant_check(1);
  CHECK(m1.determinant == 1);
  CHECK(m1.equal);

  const SmithCheck m3 = smith_determinant_check(3);
  CHECK(m3.determinant == 2);
  CHECK(m3.equal);

  const SmithCheck m6 = smith_determinant_check(6);
  CHECK(m6.determinant == 32);
  CHECK(m6.totient_product == 32);
  CHECK(m6.equal);

  for (int m = 1; m <= 12; ++m) {
    const SmithCheck s = smith_determinant_check(m);
    CAPTURE(m);
    CHECK(s.equal);
    CHECK(s.determinant != 0);
  }
  CHECK_THROWS_AS(gcd_matrix(0), validation_error);
}

TEST_CASE("fraction-free determinant handles degenerate cases", "[perm]") {
  // zero pivot requiring a row swap
  std::vector<std::vector<BigInt>> a = {{0, 1}, {1, 0}};
  CHECK(integer_determinant(a) == -1);
  // singular matrix
  std::vector<std::vector<BigInt>> b = {{1, 2}, {2, 4}};
  CHECK(integer_determinant(b) == 0);
  std::vector<std::vector<BigInt>> c = {{0, 0}, {0, 5}};
  CHECK(integer_determinant(c) == 0);
  CHECK(integer_determinant({}) == 1);
  CHECK(integer_determinant({{7}}) == 7);
}

TEST_CASE("diagonal shift orbits", "[perm]") {
  const OrbitData o11 = cyclic_tensor_orbits(1, 1);
  CHECK(o11.orbit_count == 1);
  CHECK(o11.orbit_size == 1);

  const OrbitData o24 = cyclic_tensor_orbits(2, 4);
  CHECK(o24.orbit_count == 2);
  CHECK(o24.orbit_size == 4);

  const OrbitData o64 = cyclic_tensor_orbits(6, 4);
  CHECK(o64.orbit_count == 2);
  CHECK(o64.orbit_size == 12);

  for (int n = 1; n <= 12; ++n)
    for (int m = 1; m <= 12; ++m) {
      const OrbitData o = cyclic_tensor_orbits(n, m);
      CAPTURE(n, m);
      CHECK(o.orbit_count == std::gcd(n, m));
      CHECK(o.orbit_size == std::lcm(n, m));
      CHECK(o.orbit_count * o.orbit_size == static_cast<long long>(n) * m);
    }
}

TEST_CASE("hom dimensions reduce to gcd", "[perm]") {
  for (int m = 1; m <= 20; ++m) CHECK(hom_dimension(1, m) == 1);
  CHECK(hom_dimension(4, 6) == 2);
  for (int n = 1; n <= 12; ++n)
    for (int m = 1; m <= 12; ++m) {
      CAPTURE(n, m);
      CHECK(hom_dimension(n, m) == std::gcd(n, m));
      CHECK(hom_dimension(n, m) == hom_dimension(m, n));
    }
}
