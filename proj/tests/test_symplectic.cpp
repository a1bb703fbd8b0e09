#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "moveq/symplectic.hpp"
#include "support/builders.hpp"

using namespace moveq;
using namespace testsupport;

namespace {

FVector fv(std::int64_t p, std::vector<std::int64_t> c) { return FVector{p, std::move(c)}; }

Diagram tangle_zero() {
  return Diagram::parse("tangle zero 4\nB 1 1\nB 2 1\nB 3 2\nB 4 2\n");
}
Diagram tangle_inf() {
  return Diagram::parse("tangle inf 4\nB 1 1\nB 2 2\nB 3 2\nB 4 1\n");
}
Diagram tangle_plus() {
  return Diagram::make("t+1", {Crossing(1, 2, 3, 4)}, {}, {1, 2, 3, 4});
}
Diagram tangle_minus() {
  return Diagram::make("t-1", {Crossing(2, 3, 4, 1)}, {}, {1, 2, 3, 4});
}

}  // namespace

TEST_CASE("alternating condition") {
  CHECK(alternating_check({1, 1, 0, 0}, 3));
  CHECK_FALSE(alternating_check({1, 0, 0, 0}, 3));
  CHECK(alternating_check({1, 1, 1, 1}, 3));
  CHECK(alternating_check({1, 1, 1, 1}, 7));
}

TEST_CASE("f-coordinates") {
  CHECK(to_f_coords({1, 1, 0, 0}, 3).c == std::vector<std::int64_t>{1, 0, 0});
  CHECK(to_f_coords({0, 1, 1, 0}, 3).c == std::vector<std::int64_t>{0, 1, 0});
  CHECK(to_f_coords({1, 1, 1, 1}, 3).c == std::vector<std::int64_t>{1, 0, 1});
  CHECK_THROWS_AS(to_f_coords({1, 0, 0, 0}, 3), std::invalid_argument);

  SECTION("round-trip on random alternating vectors") {
    std::mt19937 rng(11);
    for (int t = 0; t < 200; ++t) {
      const std::int64_t p = std::array<std::int64_t, 3>{3, 5, 7}[t % 3];
      const int n = 2 + static_cast<int>(rng() % 3);
      std::vector<std::int64_t> v(2 * n);
      std::int64_t acc = 0;
      for (int i = 0; i < 2 * n - 1; ++i) {
        v[i] = static_cast<std::int64_t>(rng() % p);
        acc += (i % 2 == 0) ? -v[i] : v[i];
      }
      // free last even-position entry to satisfy the signed-sum condition
      v[2 * n - 1] = mod_reduce(-acc, p);
      REQUIRE(alternating_check(v, p));
      CHECK(from_f_coords(to_f_coords(v, p)) == v);
    }
  }
}

TEST_CASE("form values") {
  CHECK(form_eval(fv(5, {1, 0, 0}), fv(5, {0, 1, 0})) == 1);
  CHECK(form_eval(fv(5, {0, 1, 0}), fv(5, {1, 0, 0})) == 4);  // -1 mod 5
  CHECK(form_eval(fv(5, {1, 0, 0}), fv(5, {0, 0, 1})) == 0);

  SECTION("antisymmetric and bilinear") {
    std::mt19937 rng(12);
    const std::int64_t p = 7;
    for (int t = 0; t < 200; ++t) {
      const int m = 3 + static_cast<int>(rng() % 3);
      auto rnd = [&] {
        std::vector<std::int64_t> c(m);
        for (auto& x : c) x = static_cast<std::int64_t>(rng() % p);
        return fv(p, c);
      };
      auto u = rnd(), v = rnd(), w = rnd();
      CHECK(mod_reduce(form_eval(u, v) + form_eval(v, u), p) == 0);
      auto vw = v;
      for (int i = 0; i < m; ++i) vw.c[i] = mod_reduce(v.c[i] + w.c[i], p);
      CHECK(form_eval(u, vw) == mod_reduce(form_eval(u, v) + form_eval(u, w), p));
    }
  }
}

TEST_CASE("radical vector") {
  CHECK(radical_vector(SymplecticSpace{3, 2}).c == std::vector<std::int64_t>{1, 0, 1});
  CHECK(radical_vector(SymplecticSpace{3, 3}).c == std::vector<std::int64_t>{1, 0, 1, 0, 1});
  SECTION("pairs to zero with every basis vector") {
    for (int n : {2, 3, 4}) {
      SymplecticSpace sp{5, n};
      auto rad = radical_vector(sp);
      for (int i = 0; i < sp.alt_dim(); ++i) {
        FVector e{5, std::vector<std::int64_t>(sp.alt_dim(), 0)};
        e.c[i] = 1;
        CHECK(form_eval(rad, e) == 0);
      }
    }
  }
  SECTION("phi(radical, f_2) = 0 at n=2") {
    CHECK(form_eval(radical_vector(SymplecticSpace{3, 2}), fv(3, {0, 1, 0})) == 0);
  }
}

TEST_CASE("quotient reduction") {
  SECTION("0-tangle image drops to one dimension") {
    auto img = boundary_image(tangle_zero(), 3);
    auto q = quotient_reduce(img);
    CHECK(q.ambient_dim == 2);
    CHECK(q.dim() == 1);
  }
  SECTION("span of all-ones drops to zero") {
    auto s = SubspaceBasis::span_of(4, 3, {{1, 1, 1, 1}});
    CHECK(quotient_reduce(s).dim() == 0);
  }
  SECTION("full alternating space at n=2 drops to two dimensions") {
    std::vector<std::vector<std::int64_t>> gens;
    for (std::int64_t a = 0; a < 3; ++a)
      for (std::int64_t b = 0; b < 3; ++b)
        for (std::int64_t c = 0; c < 3; ++c)
          for (std::int64_t d = 0; d < 3; ++d)
            if (alternating_check({a, b, c, d}, 3)) gens.push_back({a, b, c, d});
    auto s = SubspaceBasis::span_of(4, 3, gens);
    REQUIRE(s.dim() == 3);
    CHECK(quotient_reduce(s).dim() == 2);
  }
  SECTION("missing trivial colorings rejected") {
    auto s = SubspaceBasis::span_of(4, 3, {{1, 1, 0, 0}});
    CHECK_THROWS_WITH(quotient_reduce(s), "trivial colorings missing");
  }
}

TEST_CASE("lagrangian predicate") {
  SymplecticSpace sp{3, 2};
  SECTION("quotient image of the 0-tangle") {
    auto q = quotient_reduce(boundary_image(tangle_zero(), 3));
    CHECK(is_lagrangian(q, sp));
  }
  SECTION("whole quotient space is too big") {
    auto s = SubspaceBasis::span_of(2, 3, {{1, 0}, {0, 1}});
    CHECK_FALSE(is_lagrangian(s, sp));
  }
  SECTION("zero subspace is too small") {
    SubspaceBasis z;
    z.ambient_dim = 2;
    z.modulus = 3;
    CHECK_FALSE(is_lagrangian(z, sp));
  }
}

TEST_CASE("lagrangian count formula") {
  CHECK(lagrangian_count(3, 2) == 4);
  CHECK(lagrangian_count(3, 3) == 40);
  CHECK(lagrangian_count(3, 4) == 1120);
  CHECK(lagrangian_count(5, 2) == 6);
  CHECK(lagrangian_count(2, 3) == 15);
  CHECK(lagrangian_count(7, 2) == 8);
  CHECK(lagrangian_count(2, 2) == 3);
}

TEST_CASE("lagrangian enumeration") {
  SECTION("(3,2): the four lines") {
    auto ls = enumerate_lagrangians(3, 2);
    CHECK(ls.size() == 4);
    for (const auto& l : ls) CHECK(is_lagrangian(l, SymplecticSpace{3, 2}));
  }
  SECTION("(2,2): brute-force line count") {
    auto ls = enumerate_lagrangians(2, 2);
    CHECK(ls.size() == 3);
    // oracle: all nonzero vectors of Z_2^2 up to scale, every line isotropic
    std::set<std::vector<std::int64_t>> lines;
    for (std::int64_t a = 0; a < 2; ++a)
      for (std::int64_t b = 0; b < 2; ++b)
        if (a || b) lines.insert({a, b});
    CHECK(lines.size() == 3);
  }
  SECTION("counts match the closed form") {
    for (auto [p, n] : std::vector<std::pair<std::int64_t, int>>{
             {2, 2}, {2, 3}, {3, 2}, {3, 3}, {5, 2}}) {
      auto ls = enumerate_lagrangians(p, n);
      CHECK(ls.size() == lagrangian_count(p, n));
      for (const auto& l : ls) CHECK(is_lagrangian(l, SymplecticSpace{p, n}));
      CHECK(std::is_sorted(ls.begin(), ls.end(), [](const auto& a, const auto& b) {
        return a.vectors < b.vectors;
      }));
    }
  }
  SECTION("budget produces a resource error") {
    CHECK_THROWS_AS(enumerate_lagrangians(3, 3, 100), ResourceError);
  }
}

TEST_CASE("tangle lagrangians") {
  SECTION("the four one-crossing-or-less 2-tangles realize all four") {
    std::set<std::vector<std::vector<std::int64_t>>> distinct;
    for (const auto& t : {tangle_zero(), tangle_inf(), tangle_plus(), tangle_minus()}) {
      auto l = tangle_lagrangian(t, 3);
      CHECK(is_lagrangian(l, SymplecticSpace{3, 2}));
      distinct.insert(l.vectors);
    }
    CHECK(distinct.size() == 4);
  }
  SECTION("0-tangle and +1 tangle differ") {
    CHECK_FALSE(subspace_equal(tangle_lagrangian(tangle_zero(), 3),
                               tangle_lagrangian(tangle_plus(), 3)));
  }
  SECTION("boundary image is n-dimensional, quotient is (n-1)-dimensional") {
    for (const auto& t : {tangle_zero(), tangle_inf(), tangle_plus(), tangle_minus()})
      for (std::int64_t p : {3, 5, 7}) {
        CHECK(boundary_image(t, p).dim() == 2);
        CHECK(tangle_lagrangian(t, p).dim() == 1);
      }
  }
}
