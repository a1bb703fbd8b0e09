#pragma once

// The symplectic structure on tangle boundary colorings: the alternating
// subspace Z_p^(2n-1) of Z_p^(2n) with basis f_k = e_k + e_{k+1}, the skew
// form phi of nullity 1, its quotient by the radical (the monochromatic
// colorings), Lagrangian subspaces, their closed-form count, and the
// enumeration used by the census.

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "moveq/coloring.hpp"
#include "moveq/diagram.hpp"
#include "moveq/zk.hpp"

namespace moveq {

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SymplecticSpace {
  std::int64_t p = 3;  // prime
  int n = 2;           // tangle arity; quotient dimension is 2n-2

  int ambient() const { return 2 * n; }
  int alt_dim() const { return 2 * n - 1; }
  int quotient_dim() const { return 2 * n - 2; }
};

// sum of (-1)^i a_i over 1-based positions
inline bool alternating_check(const std::vector<std::int64_t>& v, std::int64_t p) {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < v.size(); ++i) acc += (i % 2 == 0) ? -v[i] : v[i];
  return mod_reduce(acc, p) == 0;
}

struct FVector {
  std::int64_t p = 3;
  std::vector<std::int64_t> c;  // coordinates over f_1 .. f_{2n-1}

  bool operator==(const FVector&) const = default;
};

// unique f-coordinates of an alternating vector: v_j = c_{j-1} + c_j
inline FVector to_f_coords(const std::vector<std::int64_t>& v, std::int64_t p) {
  if (v.size() < 2 || v.size() % 2)
    throw std::invalid_argument("e-vector must have even length");
  if (!alternating_check(v, p))
    throw std::invalid_argument("alternating condition violated");
  FVector f;
  f.p = p;
  f.c.resize(v.size() - 1);
  std::int64_t prev = 0;
  for (std::size_t j = 0; j + 1 < v.size(); ++j) {
    f.c[j] = mod_reduce(v[j] - prev, p);
    prev = f.c[j];
  }
  return f;
}

inline std::vector<std::int64_t> from_f_coords(const FVector& f) {
  std::vector<std::int64_t> v(f.c.size() + 1);
  std::int64_t prev = 0;
  for (std::size_t j = 0; j < f.c.size(); ++j) {
    v[j] = mod_reduce(prev + f.c[j], f.p);
    prev = f.c[j];
  }
  v.back() = mod_reduce(prev, f.p);
  return v;
}

// phi(f_i, f_j) = 0 unless |i-j| = 1; +1 for j = i+1, -1 for j = i-1
inline std::int64_t form_eval(const FVector& u, const FVector& v) {
  if (u.c.size() != v.c.size() || u.p != v.p)
    throw std::invalid_argument("form_eval: mismatched spaces");
  std::int64_t acc = 0;
  const int n = static_cast<int>(u.c.size());
  for (int i = 0; i < n; ++i) {
    const std::int64_t right = i + 1 < n ? v.c[i + 1] : 0;
    const std::int64_t left = i > 0 ? v.c[i - 1] : 0;
    acc = mod_reduce(acc + u.c[i] * mod_reduce(right - left, u.p), u.p);
  }
  return acc;
}

inline FVector radical_vector(const SymplecticSpace& sp) {
  FVector f;
  f.p = sp.p;
  f.c.assign(sp.alt_dim(), 0);
  for (int i = 0; i < sp.alt_dim(); i += 2) f.c[i] = 1;
  return f;
}

// the same form on quotient coordinates (f-coordinates with the last dropped)
inline std::int64_t quotient_form(const std::vector<std::int64_t>& u,
                                  const std::vector<std::int64_t>& v, std::int64_t p) {
  FVector fu{p, u}, fv{p, v};
  fu.c.push_back(0);
  fv.c.push_back(0);
  return form_eval(fu, fv);
}

// image of an alternating subspace of Z_p^(2n) in the quotient Z_p^(2n-2):
// convert to f-coordinates, project along the radical, drop the last entry
inline SubspaceBasis quotient_reduce(const SubspaceBasis& s) {
  const int n2 = s.ambient_dim;
  if (n2 < 2 || n2 % 2) throw std::invalid_argument("even ambient dimension required");
  std::vector<std::int64_t> ones(n2, 1);
  if (!s.contains(ones)) throw std::invalid_argument("trivial colorings missing");
  std::vector<std::vector<std::int64_t>> gens;
  for (const auto& v : s.vectors) {
    auto f = to_f_coords(v, s.modulus);
    const std::int64_t last = f.c.back();
    for (std::size_t i = 0; i < f.c.size(); i += 2)
      f.c[i] = mod_reduce(f.c[i] - last, s.modulus);
    f.c.pop_back();
    gens.push_back(std::move(f.c));
  }
  return SubspaceBasis::span_of(n2 - 2, s.modulus, gens);
}

inline bool is_lagrangian(const SubspaceBasis& s, const SymplecticSpace& sp) {
  if (s.ambient_dim != sp.quotient_dim() || s.modulus != sp.p)
    throw std::invalid_argument("subspace not in the quotient space");
  if (s.dim() != sp.n - 1) return false;
  for (const auto& u : s.vectors)
    for (const auto& v : s.vectors)
      if (quotient_form(u, v, sp.p) != 0) return false;
  return true;
}

inline std::uint64_t lagrangian_count(std::int64_t p, int n) {
  std::uint64_t total = 1;
  std::uint64_t pw = 1;
  for (int i = 1; i <= n - 1; ++i) {
    pw *= static_cast<std::uint64_t>(p);
    const std::uint64_t factor = pw + 1;
    if (total > std::numeric_limits<std::uint64_t>::max() / factor)
      throw std::overflow_error("lagrangian count exceeds 64 bits");
    total *= factor;
  }
  return total;
}

// every maximal isotropic subspace of (Z_p^(2n-2), quotient form), canonical
// and sorted; depth-first extension of isotropic flags with duplicate pruning
inline std::vector<SubspaceBasis> enumerate_lagrangians(std::int64_t p, int n,
                                                        std::uint64_t max_states = 1u << 26) {
  if (!is_prime(p)) throw std::domain_error("prime required");
  if (n < 1) throw std::invalid_argument("arity must be positive");
  SymplecticSpace sp{p, n};
  const int dim = sp.quotient_dim();
  const int target = n - 1;

  SubspaceBasis zero;
  zero.ambient_dim = dim;
  zero.modulus = p;
  if (target == 0) return {zero};

  std::uint64_t states = 0;
  std::vector<SubspaceBasis> level{zero};
  std::set<std::vector<std::vector<std::int64_t>>> seen;
  for (int depth = 0; depth < target; ++depth) {
    std::vector<SubspaceBasis> next;
    seen.clear();
    for (const auto& s : level) {
      // phi-perp of the current subspace
      ZkMatrix m(s.dim(), dim, p);
      for (int r = 0; r < s.dim(); ++r)
        for (int c = 0; c < dim; ++c) {
          std::vector<std::int64_t> ec(dim, 0);
          ec[c] = 1;
          m.set(r, c, quotient_form(s.vectors[r], ec, p));
        }
      auto perp = kernel(m);
      const int q = perp.dim();
      std::vector<std::int64_t> coef(q, 0);
      while (true) {
        // next combination
        int i = 0;
        while (i < q && ++coef[i] == p) coef[i++] = 0;
        if (i == q) break;
        if (++states > max_states)
          throw ResourceError("lagrangian enumeration budget exceeded");
        std::vector<std::int64_t> w(dim, 0);
        for (int j = 0; j < q; ++j) {
          if (coef[j] == 0) continue;
          for (int c = 0; c < dim; ++c)
            w[c] = mod_reduce(w[c] + coef[j] * perp.vectors[j][c], p);
        }
        if (s.contains(w)) continue;
        auto gens = s.vectors;
        gens.push_back(w);
        auto ext = SubspaceBasis::span_of(dim, p, gens);
        if (seen.insert(ext.vectors).second) next.push_back(std::move(ext));
      }
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end(),
            [](const SubspaceBasis& a, const SubspaceBasis& b) { return a.vectors < b.vectors; });
  return level;
}

// the Lagrangian realized by a tangle's boundary colorings
inline SubspaceBasis tangle_lagrangian(const Diagram& t, std::int64_t p) {
  const int n = t.endpoints() / 2;
  auto q = quotient_reduce(boundary_image(t, p));
  if (!is_lagrangian(q, SymplecticSpace{p, n}))
    throw std::logic_error("tangle boundary image failed the Lagrangian check");
  return q;
}

}  // namespace moveq
