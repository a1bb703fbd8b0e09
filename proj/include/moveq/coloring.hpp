#pragma once

// Fox k-coloring spaces.  One variable per arc, one relation per crossing:
// the two undercrossing colors sum to twice the overcrossing color mod k.
// Prime moduli get an explicit kernel basis; composite moduli go through the
// Smith normal form of the integer relation matrix.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "moveq/diagram.hpp"
#include "moveq/zk.hpp"

namespace moveq {

inline IntMatrix crossing_relations(const Diagram& d, const ArcPartition& p) {
  IntMatrix m;
  for (const auto& c : d.crossings) {
    std::vector<std::int64_t> row(p.size(), 0);
    row[p.arc_of.at(c.s[0])] += 1;
    row[p.arc_of.at(c.s[2])] += 1;
    row[p.arc_of.at(c.s[1])] -= 2;
    m.push_back(std::move(row));
  }
  return m;
}

struct ColoringSpace {
  std::int64_t k = 3;
  ArcPartition arc_index;
  std::optional<SubspaceBasis> basis;   // prime k only
  std::vector<std::int64_t> factors;    // invariant factors > 1 of Col_k

  int dim() const { return basis ? basis->dim() : static_cast<int>(factors.size()); }

  std::uint64_t count() const {
    std::uint64_t n = 1;
    for (std::int64_t f : factors) {
      if (n > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(f))
        throw std::overflow_error("coloring count exceeds 64 bits");
      n *= static_cast<std::uint64_t>(f);
    }
    return n;
  }

  std::string group_string() const {
    if (factors.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) s += " x ";
      s += "Z_" + std::to_string(factors[i]);
    }
    return s;
  }
};

inline ColoringSpace coloring_space(const Diagram& d, std::int64_t k) {
  if (k < 2) throw std::invalid_argument("modulus must be >= 2");
  ColoringSpace cs;
  cs.k = k;
  cs.arc_index = arcs(d);
  const int cols = cs.arc_index.size();
  auto rel = crossing_relations(d, cs.arc_index);
  if (is_prime(k)) {
    ZkMatrix m(static_cast<int>(rel.size()), cols, k);
    for (int r = 0; r < m.rows; ++r)
      for (int c = 0; c < cols; ++c) m.set(r, c, rel[r][c]);
    cs.basis = kernel(m);
    cs.factors.assign(cs.basis->dim(), k);
  } else {
    cs.factors = solution_group_factors(rel, cols, k);
  }
  return cs;
}

inline std::uint64_t col_count(const Diagram& d, std::int64_t k) {
  return coloring_space(d, k).count();
}

inline std::uint64_t tri(const Diagram& d) { return col_count(d, 3); }

// psi: restriction of a tangle coloring to its boundary endpoints, as a
// canonical subspace of Z_p^(2n)
inline SubspaceBasis boundary_image(const Diagram& t, std::int64_t p) {
  if (!t.is_tangle()) throw std::invalid_argument("tangle required");
  if (!is_prime(p)) throw std::domain_error("prime required");
  auto cs = coloring_space(t, p);
  const int n2 = t.endpoints();
  std::vector<std::vector<std::int64_t>> gens;
  for (const auto& v : cs.basis->vectors) {
    std::vector<std::int64_t> w(n2);
    for (int i = 0; i < n2; ++i) w[i] = v[cs.arc_index.arc_of.at(t.boundary[i])];
    gens.push_back(std::move(w));
  }
  return SubspaceBasis::span_of(n2, p, gens);
}

}  // namespace moveq
