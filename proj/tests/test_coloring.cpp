#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "moveq/coloring.hpp"
#include "support/builders.hpp"

using namespace moveq;
using namespace testsupport;

namespace {

Diagram plus_one_tangle() {
  // single positive crossing, corners wired straight out
  return Diagram::make("t+1", {Crossing(1, 2, 3, 4)}, {}, {1, 2, 3, 4});
}

}  // namespace

TEST_CASE("coloring space on trivial links") {
  for (int n = 1; n <= 5; ++n) {
    auto cs = coloring_space(trivial_link(n), 3);
    CHECK(cs.dim() == n);
    CHECK(cs.count() == static_cast<std::uint64_t>(std::pow(3, n)));
  }
}

TEST_CASE("coloring space fixed examples") {
  SECTION("trefoil mod 3") {
    CHECK(col_count(Diagram::parse("link t\nX 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3\n"), 3) == 9);
    CHECK(col_count(trefoil(), 3) == 9);
    CHECK(tri(trefoil()) == 9);
  }
  SECTION("figure-eight mod 5, against brute force") {
    CHECK(col_count(figure8(), 5) == 25);
    CHECK(brute_col(figure8(), 5) == 25);
  }
  SECTION("figure-eight has only trivial 3-colorings") {
    CHECK(tri(figure8()) == 3);
    CHECK(brute_col(figure8(), 3) == 3);
  }
  SECTION("trefoil mod 2") {
    CHECK(col_count(trefoil(), 2) == 2);
    CHECK(brute_col(trefoil(), 2) == 2);
  }
  SECTION("tri of trivial links") {
    CHECK(tri(trivial_link(1)) == 3);
    CHECK(tri(trivial_link(2)) == 9);
    CHECK(tri(trivial_link(3)) == 27);
  }
  SECTION("modulus below two rejected") {
    CHECK_THROWS_AS(col_count(trefoil(), 1), std::invalid_argument);
  }
}

TEST_CASE("trivial coloring always present") {
  std::mt19937 rng(31);
  for (int t = 0; t < 50; ++t) {
    auto d = random_link(rng, 8);
    auto cs = coloring_space(d, 5);
    std::vector<std::int64_t> ones(cs.arc_index.size(), 1);
    CHECK(cs.basis->contains(ones));
    CHECK(cs.count() >= 5);
  }
}

TEST_CASE("basis vectors satisfy the crossing relations") {
  std::mt19937 rng(32);
  for (int t = 0; t < 50; ++t) {
    auto d = random_link(rng, 8);
    for (std::int64_t k : {2, 3, 7}) {
      auto cs = coloring_space(d, k);
      auto rel = crossing_relations(d, cs.arc_index);
      for (const auto& v : cs.basis->vectors)
        for (const auto& row : rel) {
          std::int64_t acc = 0;
          for (std::size_t i = 0; i < row.size(); ++i) acc += row[i] * v[i];
          CHECK(mod_reduce(acc, k) == 0);
        }
    }
  }
}

TEST_CASE("composite moduli agree with brute force and factor over prime powers") {
  std::mt19937 rng(33);
  int done = 0;
  while (done < 40) {
    auto d = random_link(rng, 5);
    if (arcs(d).size() > 6) continue;
    ++done;
    for (std::int64_t k : {4, 6, 9, 10, 12}) {
      const auto n = col_count(d, k);
      CHECK(n == static_cast<std::uint64_t>(brute_col(d, k)));
    }
    // CRT: col_12 = col_4 * col_3, col_6 = col_2 * col_3
    CHECK(col_count(d, 12) == col_count(d, 4) * col_count(d, 3));
    CHECK(col_count(d, 6) == col_count(d, 2) * col_count(d, 3));
  }
}

TEST_CASE("composite group structure of the trefoil") {
  auto cs = coloring_space(trefoil(), 4);
  CHECK(cs.count() == 4);
  CHECK(cs.group_string() == "Z_4");
  auto cs9 = coloring_space(trefoil(), 9);
  CHECK(cs9.count() == static_cast<std::uint64_t>(brute_col(trefoil(), 9)));
}

TEST_CASE("boundary image") {
  SECTION("0-tangle") {
    auto t = Diagram::parse("tangle zero 4\nB 1 1\nB 2 1\nB 3 2\nB 4 2\n");
    auto b = boundary_image(t, 3);
    CHECK(b.dim() == 2);
    CHECK(b.vectors == std::vector<std::vector<std::int64_t>>{{1, 1, 0, 0}, {0, 0, 1, 1}});
  }
  SECTION("identity infinity-tangle") {
    auto t = Diagram::parse("tangle inf 4\nB 1 1\nB 2 2\nB 3 2\nB 4 1\n");
    auto b = boundary_image(t, 3);
    CHECK(b.dim() == 2);
    CHECK(b.vectors == std::vector<std::vector<std::int64_t>>{{1, 0, 0, 1}, {0, 1, 1, 0}});
  }
  SECTION("+1 crossing tangle, against brute force") {
    auto t = plus_one_tangle();
    auto b = boundary_image(t, 3);
    CHECK(b.dim() == 2);
    CHECK(b.contains({1, 1, 1, 1}));
    // brute-force oracle over all 3^3 arc colorings
    auto part = arcs(t);
    REQUIRE(part.size() == 3);
    std::set<std::vector<std::int64_t>> seen;
    for (std::int64_t a = 0; a < 3; ++a)
      for (std::int64_t b2 = 0; b2 < 3; ++b2)
        for (std::int64_t c = 0; c < 3; ++c) {
          std::vector<std::int64_t> col{a, b2, c};
          const auto& x = t.crossings[0];
          auto v = [&](int slot) { return col[part.arc_of.at(x.s[slot])]; };
          if (mod_reduce(v(0) + v(2) - 2 * v(1), 3) != 0) continue;
          std::vector<std::int64_t> w(4);
          for (int i = 0; i < 4; ++i) w[i] = col[part.arc_of.at(t.boundary[i])];
          seen.insert(w);
        }
    CHECK(seen.size() == 9);  // 3^dim
    for (const auto& w : seen) CHECK(b.contains(w));
  }
  SECTION("non-tangle input rejected") {
    CHECK_THROWS_AS(boundary_image(trefoil(), 3), std::invalid_argument);
  }
}

TEST_CASE("col_k invariant under random Reidemeister moves") {
  std::mt19937 rng(34);
  int trials = 0;
  while (trials < 300) {
    auto d = random_link(rng, 6);
    std::array<std::uint64_t, 4> before{col_count(d, 2), col_count(d, 3), col_count(d, 5),
                                        col_count(d, 7)};
    for (int step = 0; step < 4; ++step) {
      auto next = random_reidemeister(d, rng);
      if (!next) continue;
      d = *next;
      ++trials;
      std::array<std::uint64_t, 4> after{col_count(d, 2), col_count(d, 3), col_count(d, 5),
                                         col_count(d, 7)};
      REQUIRE(before == after);
    }
  }
}
