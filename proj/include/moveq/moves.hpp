#pragma once

// The non-isotopy moves: signed n-moves, (p,q)-moves, and general rational
// p/q-moves, all realized as splices of the corresponding rational tangle
// across a move site.  An n-move inserts n horizontal half-twists; a (p,q)
// move inserts the two-block q-vertical/p-horizontal tangle of slope
// (pq+1)/q; a rational move splices an arbitrary built tangle.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "moveq/diagram.hpp"
#include "moveq/fraction.hpp"
#include "moveq/rational.hpp"

namespace moveq {

struct MoveSpec {
  enum class Kind { N, PQ, Rational };
  Kind kind = Kind::N;
  std::int64_t n = 0;                // N
  std::int64_t p = 0, q = 0;         // PQ
  std::vector<std::int64_t> conway;  // Rational
  MoveSite site;

  static MoveSpec n_move(std::int64_t n, MoveSite s = {}) {
    if (n == 0) throw std::invalid_argument("n-move with n = 0");
    MoveSpec m;
    m.kind = Kind::N;
    m.n = n;
    m.site = s;
    return m;
  }
  static MoveSpec pq_move(std::int64_t p, std::int64_t q, MoveSite s = {}) {
    if (q == 0) throw std::invalid_argument("(m,0) is a plain m-move; use an n-move instead");
    MoveSpec m;
    m.kind = Kind::PQ;
    m.p = p;
    m.q = q;
    m.site = s;
    return m;
  }
  static MoveSpec rational_move(std::vector<std::int64_t> conway, MoveSite s = {}) {
    MoveSpec m;
    m.kind = Kind::Rational;
    m.conway = std::move(conway);
    if (slope(m.conway) == Fraction(0, 1))
      throw std::invalid_argument("slope 0 is the identity substitution");
    m.site = s;
    return m;
  }

  Fraction move_slope() const {
    switch (kind) {
      case Kind::N: return Fraction(n, 1);
      case Kind::PQ: return mq_to_slope(p, q);
      default: return slope(conway);
    }
  }

  // colorings guaranteed preserved: the numerator of the slope
  std::int64_t preserved_modulus() const {
    const auto f = move_slope();
    return f.num < 0 ? -f.num : f.num;
  }

  std::string params_str() const {
    switch (kind) {
      case Kind::N: return std::to_string(n);
      case Kind::PQ: return std::to_string(p) + "," + std::to_string(q);
      default: {
        std::string s;
        for (std::size_t i = 0; i < conway.size(); ++i) {
          if (i) s += ",";
          s += std::to_string(conway[i]);
        }
        return s;
      }
    }
  }

  // one-line replayable trace record
  std::string str() const {
    const char* k = kind == Kind::N ? "n" : kind == Kind::PQ ? "pq" : "rat";
    std::ostringstream out;
    out << "M " << k << ' ' << params_str() << " @ " << site.face << ',' << site.edge_a
        << ',' << site.edge_b;
    return out.str();
  }
};

inline MoveSpec move_inverse(const MoveSpec& m) {
  MoveSpec r = m;
  switch (m.kind) {
    case MoveSpec::Kind::N:
      r.n = -m.n;
      break;
    case MoveSpec::Kind::PQ:
      r.p = -m.p;
      r.q = -m.q;
      break;
    case MoveSpec::Kind::Rational:
      r.conway = slope_to_conway(slope(m.conway).negated());
      break;
  }
  return r;
}

// the tangle a move substitutes for the two parallel strands
inline Diagram move_pattern(const MoveSpec& m) {
  switch (m.kind) {
    case MoveSpec::Kind::N:
      return build_tangle(RationalTangleSpec({m.n}), "nmove");
    case MoveSpec::Kind::PQ: {
      // raw two-block form of Fig 1.13: q vertical then p horizontal twists
      detail::TangleBuilder tb;
      tb.start_infinity();
      for (std::int64_t t = 0; t < (m.q < 0 ? -m.q : m.q); ++t) tb.v_twist(m.q > 0 ? 1 : -1);
      for (std::int64_t t = 0; t < (m.p < 0 ? -m.p : m.p); ++t) tb.h_twist(m.p > 0 ? 1 : -1);
      return tb.finish("pqmove");
    }
    default:
      return build_tangle(RationalTangleSpec(m.conway), "ratmove");
  }
}

struct MoveResult {
  Diagram diagram;
  std::array<int, 4> attached{};  // final labels at the pattern's endpoints
};

inline MoveResult apply_move(const Diagram& d, const MoveSpec& m) {
  MoveResult out;
  out.diagram = splice(d, m.site, move_pattern(m), d.name, &out.attached);
  return out;
}

// All ordered pairs of distinct co-facial edges, via their face-walk
// positions; crossing-free loops float, so they pair with every edge and
// with each other at synthetic sites (face -1).
inline std::vector<MoveSite> enumerate_sites(const Diagram& d) {
  std::vector<MoveSite> sites;
  auto fs = faces(d);
  for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f) {
    if (fs.faces[f].component < 0) continue;  // loop interiors
    const auto& walk = fs.faces[f].walk;
    for (int i = 0; i < static_cast<int>(walk.size()); ++i) {
      if (walk[i].boundary_arc || d.is_loop_edge(walk[i].edge)) continue;
      for (int j = 0; j < static_cast<int>(walk.size()); ++j) {
        if (i == j || walk[j].boundary_arc || d.is_loop_edge(walk[j].edge)) continue;
        if (walk[i].edge == walk[j].edge) continue;
        sites.push_back(MoveSite{walk[i].edge, walk[j].edge, f, i, j});
      }
    }
  }
  std::vector<int> strand_edges;
  {
    std::set<int> es;
    for (const auto& c : d.crossings)
      for (int e : c.s) es.insert(e);
    for (int e : d.boundary) es.insert(e);
    strand_edges.assign(es.begin(), es.end());
  }
  for (int l : d.loops) {
    for (int e : strand_edges) {
      sites.push_back(MoveSite{l, e, -1, -1, -1});
      sites.push_back(MoveSite{e, l, -1, -1, -1});
    }
  }
  for (int l1 : d.loops)
    for (int l2 : d.loops)
      if (l1 != l2) sites.push_back(MoveSite{l1, l2, -1, -1, -1});
  return sites;
}

// parse a trace record "M <kind> <params> @ <face>,<edge_a>,<edge_b>";
// positions inside the face resolve to the first matching ordered pair
inline MoveSpec parse_move(const std::string& line, const Diagram& context) {
  std::istringstream in(line);
  std::string tag, kind, params, at, where;
  if (!(in >> tag >> kind >> params >> at >> where) || tag != "M" || at != "@")
    throw std::invalid_argument("ill-formed move record");
  auto parse_ints = [](const std::string& s) {
    std::vector<std::int64_t> v;
    std::istringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(std::stoll(tok));
    return v;
  };
  auto loc = parse_ints(where);
  if (loc.size() != 3) throw std::invalid_argument("ill-formed move record");
  MoveSite site;
  site.face = static_cast<int>(loc[0]);
  site.edge_a = static_cast<int>(loc[1]);
  site.edge_b = static_cast<int>(loc[2]);
  if (site.face >= 0) {
    auto fs = faces(context);
    if (site.face >= static_cast<int>(fs.faces.size()))
      throw std::invalid_argument("invalid site");
    const auto& walk = fs.faces[site.face].walk;
    for (int i = 0; site.pos_a < 0 && i < static_cast<int>(walk.size()); ++i) {
      if (walk[i].boundary_arc || walk[i].edge != site.edge_a) continue;
      for (int j = 0; j < static_cast<int>(walk.size()); ++j) {
        if (j == i || walk[j].boundary_arc || walk[j].edge != site.edge_b) continue;
        site.pos_a = i;
        site.pos_b = j;
        break;
      }
    }
    if (site.pos_a < 0) throw std::invalid_argument("invalid site");
  }
  auto nums = parse_ints(params);
  if (kind == "n") {
    if (nums.size() != 1) throw std::invalid_argument("ill-formed move record");
    return MoveSpec::n_move(nums[0], site);
  }
  if (kind == "pq") {
    if (nums.size() != 2) throw std::invalid_argument("ill-formed move record");
    return MoveSpec::pq_move(nums[0], nums[1], site);
  }
  if (kind == "rat") return MoveSpec::rational_move(nums, site);
  throw std::invalid_argument("unknown move kind '" + kind + "'");
}

}  // namespace moveq
