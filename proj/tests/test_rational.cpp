#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "moveq/rational.hpp"
#include "moveq/symplectic.hpp"
#include "support/builders.hpp"

using namespace moveq;
using namespace testsupport;

namespace {

RationalTangleSpec spec(std::vector<std::int64_t> v) { return RationalTangleSpec(std::move(v)); }

std::vector<std::int64_t> random_conway(std::mt19937& rng, int max_len = 4,
                                        int max_mag = 3) {
  const int n = 1 + static_cast<int>(rng() % max_len);
  std::vector<std::int64_t> v(n);
  for (auto& a : v)
    a = static_cast<std::int64_t>(rng() % (2 * max_mag + 1)) - max_mag;
  return v;
}

// continuant-matrix evaluation of the continued fraction, as an independent
// left-to-right route: M(a_n) ... M(a_1) with M(a) = [[a,1],[1,0]] carries
// the slope in its first column; building it by left-multiplying M(a_i) in
// input order puts a_n leftmost
Fraction matrix_slope(const std::vector<std::int64_t>& v) {
  std::int64_t m00 = 1, m01 = 0, m10 = 0, m11 = 1;
  for (const std::int64_t a : v) {
    const std::int64_t n00 = a * m00 + m10, n01 = a * m01 + m11;
    m10 = m00;
    m11 = m01;
    m00 = n00;
    m01 = n01;
  }
  if (m10 == 0) return Fraction::infinity();
  return Fraction(m00, m10);
}

}  // namespace

TEST_CASE("slope fixed values") {
  CHECK(slope({3}) == Fraction(3, 1));
  CHECK(slope({2, 2}) == Fraction(5, 2));
  // exact arithmetic oracle: 2 + 1/(3 + 1/2) = 2 + 2/7
  CHECK(slope({2, 3, 2}) == Fraction(16, 7));
  CHECK(slope({0}) == Fraction(0, 1));
  CHECK(slope({0, 0}) == Fraction::infinity());
  CHECK(slope({-2, -2}) == Fraction(-5, 2));
  CHECK_THROWS_AS(slope({}), std::invalid_argument);
}

TEST_CASE("slope agrees with the continuant-matrix route") {
  std::mt19937 rng(21);
  for (int t = 0; t < 300; ++t) {
    auto v = random_conway(rng, 5, 4);
    CHECK(slope(v) == matrix_slope(v));
  }
}

TEST_CASE("slope_to_conway round-trips") {
  std::mt19937 rng(22);
  CHECK(slope(slope_to_conway(Fraction(5, 2))) == Fraction(5, 2));
  CHECK(slope(slope_to_conway(Fraction(13, 5))) == Fraction(13, 5));
  CHECK(slope(slope_to_conway(Fraction::infinity())) == Fraction::infinity());
  for (int t = 0; t < 200; ++t) {
    auto f = slope(random_conway(rng, 5, 4));
    CHECK(slope(slope_to_conway(f)) == f);
  }
}

TEST_CASE("build_tangle basics") {
  SECTION("T(0) is the 0-tangle") {
    auto t = build_tangle(spec({0}));
    CHECK(t.crossings.empty());
    CHECK(canonical_code(t) ==
          canonical_code(Diagram::parse("tangle z 4\nB 1 1\nB 2 1\nB 3 2\nB 4 2\n")));
  }
  SECTION("T(0,0) is the infinity tangle") {
    auto t = build_tangle(spec({0, 0}));
    CHECK(canonical_code(t) ==
          canonical_code(Diagram::parse("tangle i 4\nB 1 1\nB 2 2\nB 3 2\nB 4 1\n")));
  }
  SECTION("T(1) and T(-1) are the two one-crossing tangles") {
    auto tp = build_tangle(spec({1}));
    auto tm = build_tangle(spec({-1}));
    CHECK(tp.crossings.size() == 1);
    CHECK(tm.crossings.size() == 1);
    CHECK(canonical_code(tp) != canonical_code(tm));
  }
  SECTION("crossing count is the sum of the twist magnitudes") {
    std::mt19937 rng(23);
    for (int t = 0; t < 100; ++t) {
      auto v = random_conway(rng);
      std::size_t total = 0;
      for (auto a : v) total += static_cast<std::size_t>(a < 0 ? -a : a);
      CHECK(build_tangle(spec(v)).crossings.size() == total);
    }
  }
  SECTION("T(2,2) has a nontrivial coloring mod 5") {
    auto t = build_tangle(spec({2, 2}));
    CHECK(col_count(t, 5) == 25);
    CHECK(brute_col(t, 5) == 25);
  }
  SECTION("boundary image always two-dimensional") {
    std::mt19937 rng(24);
    for (int t = 0; t < 60; ++t) {
      auto d = build_tangle(spec(random_conway(rng)));
      for (std::int64_t r : {3, 5}) CHECK(boundary_image(d, r).dim() == 2);
    }
  }
}

TEST_CASE("mq_to_slope") {
  CHECK(mq_to_slope(2, 2) == Fraction(5, 2));
  CHECK(mq_to_slope(2, 3) == Fraction(7, 3));
  CHECK(mq_to_slope(1, 1) == Fraction(2, 1));
  CHECK(mq_to_slope(-3, -2) == Fraction(7, 2).negated());
  CHECK_THROWS_AS(mq_to_slope(2, 0), std::invalid_argument);
  SECTION("formula over the small grid") {
    for (std::int64_t m = -5; m <= 5; ++m)
      for (std::int64_t q = -5; q <= 5; ++q) {
        if (q == 0) continue;
        CHECK(mq_to_slope(m, q) == Fraction(m * q + 1, q));
      }
  }
}

TEST_CASE("slope relations on boundary colorings") {
  CHECK(slope_relation_check(spec({0}), 3));
  CHECK(slope_relation_check(spec({0}), 7));
  CHECK(slope_relation_check(spec({2, 2}), 5));
  CHECK(slope_relation_check(spec({2, 3, 2}), 7));  // 16 = 2, 7 = 0 mod 7
  SECTION("random Conway vectors across primes") {
    std::mt19937 rng(25);
    for (int t = 0; t < 100; ++t) {
      auto v = random_conway(rng);
      for (std::int64_t r : {2, 3, 5, 7, 11, 13}) {
        INFO("conway " << spec(v).str() << " mod " << r);
        REQUIRE(slope_relation_check(spec(v), r));
      }
    }
  }
}

TEST_CASE("equal slopes give equal boundary lagrangians") {
  std::mt19937 rng(26);
  int done = 0;
  while (done < 60) {
    auto v = random_conway(rng);
    auto f = slope(v);
    auto w = slope_to_conway(f);
    if (w == v) continue;
    ++done;
    auto a = build_tangle(spec(v));
    auto b = build_tangle(spec(w));
    for (std::int64_t r : {3, 5, 7, 11, 13})
      CHECK(subspace_equal(tangle_lagrangian(a, r), tangle_lagrangian(b, r)));
  }
}
