#pragma once

// Conway-algebraic tangles: rotation by one boundary step, horizontal
// composition gluing the east side of one tangle to the west side of the
// next, full or partial planar closures, and bounded generation of the
// n-algebraic family from its 0- and 1-crossing leaves.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "moveq/coloring.hpp"
#include "moveq/diagram.hpp"
#include "moveq/rational.hpp"
#include "moveq/symplectic.hpp"

namespace moveq {

// rotate the tangle counterclockwise by `steps` endpoint positions
inline Diagram rotate(const Diagram& t, int steps, const std::string& name = "") {
  if (!t.is_tangle()) throw std::invalid_argument("tangle required");
  const int m = t.endpoints();
  std::vector<int> bnd(m);
  for (int i = 0; i < m; ++i) bnd[((i + steps) % m + m) % m] = t.boundary[i];
  return Diagram::make(name.empty() ? t.name : name, t.crossings, t.loops, bnd);
}

namespace detail {

// west endpoints bottom-to-top: 1, 2n, 2n-1, ..., n+2 (1-based)
inline std::vector<int> west_side(int n) {
  std::vector<int> v{1};
  for (int i = 2 * n; i >= n + 2; --i) v.push_back(i);
  return v;
}
// east endpoints bottom-to-top: 2, ..., n+1
inline std::vector<int> east_side(int n) {
  std::vector<int> v;
  for (int i = 2; i <= n + 1; ++i) v.push_back(i);
  return v;
}

}  // namespace detail

// horizontal composition: glue a's east side to b's west side, height by height
inline Diagram compose(const Diagram& a, const Diagram& b, const std::string& name = "") {
  if (!a.is_tangle() || !b.is_tangle()) throw std::invalid_argument("tangle required");
  if (a.endpoints() != b.endpoints()) throw std::invalid_argument("arity mismatch");
  const int n = a.endpoints() / 2;

  detail::Rewriter rw(a);
  std::map<int, int> bmap;
  auto fresh_of = [&](int e) {
    auto it = bmap.find(e);
    if (it != bmap.end()) return it->second;
    const int nl = rw.fresh();
    bmap[e] = nl;
    return nl;
  };
  for (const auto& c : b.crossings)
    rw.d.crossings.push_back(
        Crossing(fresh_of(c.s[0]), fresh_of(c.s[1]), fresh_of(c.s[2]), fresh_of(c.s[3])));
  for (int e : b.loops) rw.d.loops.push_back(fresh_of(e));

  const auto west = detail::west_side(n), east = detail::east_side(n);
  std::vector<std::pair<int, int>> glue;  // labels to fuse
  for (int k = 0; k < n; ++k)
    glue.emplace_back(a.boundary[east[k] - 1], fresh_of(b.boundary[west[k] - 1]));

  // surviving boundary: a's west endpoint 1, b's east side, a's upper west
  std::vector<int> bnd(2 * n);
  bnd[0] = a.boundary[0];
  for (int i = 1; i <= n; ++i) bnd[i] = fresh_of(b.boundary[i]);
  for (int i = n + 1; i < 2 * n; ++i) bnd[i] = a.boundary[i];
  rw.d.boundary = bnd;

  for (auto [x, y] : glue) rw.fuse(x, y);
  return rw.finish(name.empty() ? a.name + "*" + b.name : name);
}

enum class ClosurePattern { Numerator, Denominator };

// cap endpoint pairs with crossing-free arcs; a full pairing yields a link,
// a partial one an m-tangle (remaining endpoints renumbered in cyclic order)
inline Diagram close(const Diagram& t, const std::vector<std::pair<int, int>>& pairs,
                     const std::string& name = "") {
  if (!t.is_tangle()) throw std::invalid_argument("tangle required");
  const int m = t.endpoints();
  std::vector<char> used(m + 1, 0);
  for (auto [i, j] : pairs) {
    if (i < 1 || j < 1 || i > m || j > m || i == j || used[i] || used[j])
      throw std::invalid_argument("ill-formed closure pairing");
    used[i] = used[j] = 1;
  }
  // closing arcs run outside the circle; interleaved chords are non-planar
  for (auto [a, b] : pairs)
    for (auto [c, d] : pairs) {
      if (a == c && b == d) continue;
      auto between = [&](int lo, int hi, int x) {
        if (lo > hi) std::swap(lo, hi);
        return lo < x && x < hi;
      };
      if (between(a, b, c) != between(a, b, d))
        throw std::invalid_argument("non-planar pairing");
    }

  detail::Rewriter rw(t);
  std::vector<int> remaining;
  for (int i = 1; i <= m; ++i)
    if (!used[i]) remaining.push_back(t.boundary[i - 1]);
  rw.d.boundary = remaining;  // cyclic order kept, numbering restarts
  for (auto [i, j] : pairs) rw.fuse(t.boundary[i - 1], t.boundary[j - 1]);
  return rw.finish(name.empty() ? t.name : name);
}

inline Diagram close(const Diagram& t, ClosurePattern pattern, const std::string& name = "") {
  if (t.endpoints() != 4) throw std::invalid_argument("numerator/denominator closures are for 2-tangles");
  if (pattern == ClosurePattern::Numerator) return close(t, {{1, 4}, {2, 3}}, name);
  return close(t, {{1, 2}, {3, 4}}, name);
}

// 0-crossing leaves: non-crossing perfect matchings of the 2n endpoints
inline std::vector<Diagram> planar_matchings(int n) {
  std::vector<Diagram> out;
  std::vector<std::pair<int, int>> chords;
  std::vector<char> used(2 * n + 1, 0);
  auto crosses = [](int a, int b, int c, int d) {
    if (a > b) std::swap(a, b);
    return (a < c && c < b) != (a < d && d < b);
  };
  std::function<void()> rec = [&]() {
    int first = 0;
    for (int i = 1; i <= 2 * n; ++i)
      if (!used[i]) { first = i; break; }
    if (first == 0) {
      std::vector<int> bnd(2 * n);
      int label = 1;
      for (auto [a, b] : chords) {
        bnd[a - 1] = bnd[b - 1] = label;
        ++label;
      }
      out.push_back(Diagram::make("m" + std::to_string(out.size()), {}, {}, bnd));
      return;
    }
    used[first] = 1;
    for (int j = first + 1; j <= 2 * n; ++j) {
      if (used[j] || (j - first) % 2 == 0) continue;
      bool ok = true;
      for (auto [a, b] : chords) ok = ok && !crosses(first, j, a, b);
      if (!ok) continue;
      used[j] = 1;
      chords.emplace_back(first, j);
      rec();
      chords.pop_back();
      used[j] = 0;
    }
    used[first] = 0;
  };
  rec();
  return out;
}

// all 0- and 1-crossing n-tangles
inline std::vector<Diagram> algebraic_leaves(int n) {
  std::vector<Diagram> out = planar_matchings(n);
  std::set<std::string> seen;
  for (const auto& d : out) seen.insert(canonical_code(d));
  // one crossing on four chosen endpoints, the rest matched without crossings
  const int m = 2 * n;
  std::vector<int> pos(4);
  for (pos[0] = 1; pos[0] <= m; ++pos[0])
    for (pos[1] = pos[0] + 1; pos[1] <= m; ++pos[1])
      for (pos[2] = pos[1] + 1; pos[2] <= m; ++pos[2])
        for (pos[3] = pos[2] + 1; pos[3] <= m; ++pos[3]) {
          std::vector<int> rest;
          {
            std::set<int> taken(pos.begin(), pos.end());
            for (int i = 1; i <= m; ++i)
              if (!taken.count(i)) rest.push_back(i);
          }
          // non-crossing matchings of the rest that avoid the crossing chords
          std::vector<std::vector<std::pair<int, int>>> matchings;
          std::vector<std::pair<int, int>> cur;
          std::vector<char> used(m + 1, 0);
          auto crosses = [](int a, int b, int c, int d) {
            if (a > b) std::swap(a, b);
            return (a < c && c < b) != (a < d && d < b);
          };
          std::function<void()> rec = [&]() {
            int first = 0;
            for (int i : rest)
              if (!used[i]) { first = i; break; }
            if (first == 0) {
              matchings.push_back(cur);
              return;
            }
            used[first] = 1;
            for (int j : rest) {
              if (used[j] || j <= first) continue;
              if (crosses(first, j, pos[0], pos[2]) || crosses(first, j, pos[1], pos[3]))
                continue;
              bool ok = true;
              for (auto [a, b] : cur) ok = ok && !crosses(first, j, a, b);
              if (!ok) continue;
              used[j] = 1;
              cur.emplace_back(first, j);
              rec();
              cur.pop_back();
              used[j] = 0;
            }
            used[first] = 0;
          };
          rec();
          for (const auto& match : matchings)
            for (int over = 0; over < 2; ++over) {
              std::vector<int> bnd(m, 0);
              int label = 1;
              std::array<int, 4> stub{};
              for (int k = 0; k < 4; ++k) {
                stub[k] = label++;
                bnd[pos[k] - 1] = stub[k];
              }
              for (auto [a, b] : match) {
                bnd[a - 1] = bnd[b - 1] = label;
                ++label;
              }
              // stubs leave the crossing ccw toward pos[0..3]; under-pair is
              // (stub0, stub2) or rotated for the other over choice
              Crossing c = over == 0 ? Crossing(stub[0], stub[1], stub[2], stub[3])
                                     : Crossing(stub[1], stub[2], stub[3], stub[0]);
              try {
                auto d = Diagram::make("x", {c}, {}, bnd);
                if (seen.insert(canonical_code(d)).second) out.push_back(d);
              } catch (const ParseError&) {
              }
            }
        }
  return out;
}

// dedup key per the generation contract: canonical code plus col_2..col_13
inline std::string generation_key(const Diagram& d) {
  std::string key = canonical_code(d);
  for (std::int64_t k = 2; k <= 13; ++k)
    key += ":" + std::to_string(col_count(d, k));
  return key;
}

struct GenerationOptions {
  int max_crossings = 5;
  int b_crossing_bound = -1;      // (n,k)-algebraic restriction on the right factor
  std::uint64_t max_states = 200000;
};

// Closure of the leaves under r^i(A) * r^j(B) within the crossing budget.
// Distinct diagrams are recognized by canonical code first; the col-vector
// part of the key is computed once per fresh code.
inline std::vector<Diagram> generate_n_algebraic(int n, const GenerationOptions& opt) {
  std::vector<Diagram> pool;
  std::set<std::string> codes;
  std::set<std::string> keys;
  auto add = [&](const Diagram& d0) {
    if (codes.size() > opt.max_states)
      throw ResourceError("algebraic generation budget exceeded");
    // trivial components are allowed alongside the basic tangles, so the
    // pool keeps loop-free representatives only
    Diagram d = d0;
    if (!d.loops.empty())
      d = Diagram::make(d.name, d.crossings, {}, d.boundary);
    if (!codes.insert(canonical_code(d)).second) return false;
    keys.insert(generation_key(d));
    pool.push_back(d);
    return true;
  };
  for (const auto& l : algebraic_leaves(n)) add(simplify(l));

  const int steps = 2 * n;
  std::size_t fresh_from = 0;
  while (fresh_from < pool.size()) {
    const std::size_t fresh_to = pool.size();
    for (std::size_t ia = 0; ia < fresh_to; ++ia) {
      // at least one factor from the fresh band
      const std::size_t jb_lo = ia >= fresh_from ? 0 : fresh_from;
      for (std::size_t ib = jb_lo; ib < fresh_to; ++ib) {
        // adding to the pool reallocates it, so take copies
        const Diagram a = pool[ia];
        const Diagram b = pool[ib];
        if (static_cast<int>(a.crossings.size() + b.crossings.size()) > opt.max_crossings)
          continue;
        if (opt.b_crossing_bound >= 0 &&
            static_cast<int>(b.crossings.size()) > opt.b_crossing_bound)
          continue;
        for (int i = 0; i < steps; ++i)
          for (int j = 0; j < steps; ++j) {
            auto c = simplify(compose(rotate(a, i), rotate(b, j), "g"));
            if (static_cast<int>(c.crossings.size()) > opt.max_crossings) continue;
            add(c);
          }
      }
    }
    fresh_from = fresh_to;
  }
  return pool;
}

inline std::vector<Diagram> generate_2_algebraic(int max_crossings) {
  GenerationOptions opt;
  opt.max_crossings = max_crossings;
  return generate_n_algebraic(2, opt);
}

}  // namespace moveq
