#pragma once

// Bounded breadth-first search for move-equivalence reductions.  States are
// simplify-normalized diagrams keyed by canonical code; R3 slides are
// explored as free edges within a depth layer (they change no crossing
// count, only expose new cancellations and sites).  Every returned path
// replays from the start diagram step by step.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "moveq/algebraic.hpp"
#include "moveq/coloring.hpp"
#include "moveq/diagram.hpp"
#include "moveq/moves.hpp"
#include "moveq/rational.hpp"
#include "moveq/symplectic.hpp"

namespace moveq {

struct MoveFamily {
  std::string name;
  std::vector<MoveSpec> generators;  // closed under move_inverse

  static MoveFamily n_move(std::int64_t n) {
    MoveFamily f;
    f.name = "n:" + std::to_string(n);
    f.generators.push_back(MoveSpec::n_move(n));
    f.generators.push_back(MoveSpec::n_move(-n));
    return f;
  }
  static MoveFamily pq(std::int64_t p, std::int64_t q) {
    MoveFamily f;
    f.name = "pq:" + std::to_string(p) + "," + std::to_string(q);
    f.generators.push_back(MoveSpec::pq_move(p, q));
    if (p != q) f.generators.push_back(MoveSpec::pq_move(q, p));
    f.generators.push_back(MoveSpec::pq_move(-p, -q));
    if (p != q) f.generators.push_back(MoveSpec::pq_move(-q, -p));
    return f;
  }
  static MoveFamily rational(const std::vector<std::int64_t>& conway) {
    MoveFamily f;
    auto s = slope(conway);
    f.name = "rat:" + s.str();
    f.generators.push_back(MoveSpec::rational_move(conway));
    f.generators.push_back(MoveSpec::rational_move(slope_to_conway(s.negated())));
    return f;
  }

  // "n:3", "pq:2,3", "rat:13/5"
  static MoveFamily parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("ill-formed family '" + text + "'");
    const std::string kind = text.substr(0, colon);
    const std::string rest = text.substr(colon + 1);
    auto ints = [](const std::string& s) {
      std::vector<std::int64_t> v;
      std::istringstream in(s);
      std::string tok;
      while (std::getline(in, tok, ',')) v.push_back(std::stoll(tok));
      return v;
    };
    if (kind == "n") {
      auto v = ints(rest);
      if (v.size() != 1) throw std::invalid_argument("ill-formed family '" + text + "'");
      return n_move(v[0]);
    }
    if (kind == "pq") {
      auto v = ints(rest);
      if (v.size() != 2) throw std::invalid_argument("ill-formed family '" + text + "'");
      return pq(v[0], v[1]);
    }
    if (kind == "rat") {
      auto slash = rest.find('/');
      if (slash == std::string::npos) return rational(ints(rest));
      const std::int64_t p = std::stoll(rest.substr(0, slash));
      const std::int64_t q = std::stoll(rest.substr(slash + 1));
      return rational(slope_to_conway(Fraction(p, q)));
    }
    throw std::invalid_argument("unknown family kind '" + kind + "'");
  }

  // gcd of the slopes' numerators: colorings every generator preserves
  std::int64_t preserved_modulus() const {
    std::int64_t g = 0;
    for (const auto& m : generators) g = std::gcd(g, m.preserved_modulus());
    return g;
  }

  // smallest prime factor of the preserved modulus, 0 when none
  std::int64_t preserved_prime() const {
    std::int64_t m = preserved_modulus();
    for (std::int64_t d = 2; d * d <= m; ++d)
      if (m % d == 0) return d;
    return m >= 2 ? m : 0;
  }
};

struct Budget {
  std::uint64_t max_nodes = 100000;  // distinct states
  int max_depth = 6;                 // family moves along a path
  int max_crossings = -1;            // -1: start + 6
  std::int64_t time_ms = 120000;
  int r3_sweeps = 1;                 // greedy descent passes in normalize
  int workers = 1;
};

struct PathStep {
  bool is_move = true;
  MoveSpec move;
  ReidemeisterMove reid;

  static PathStep of(const MoveSpec& m) {
    PathStep s;
    s.is_move = true;
    s.move = m;
    return s;
  }
  static PathStep of(const ReidemeisterMove& r) {
    PathStep s;
    s.is_move = false;
    s.reid = r;
    return s;
  }
};

enum class Outcome { Reduced, Exhausted };

struct SearchStats {
  std::uint64_t nodes = 0;         // distinct states created
  std::uint64_t expansions = 0;    // states expanded
  std::uint64_t guard_checks = 0;  // parent-child coloring comparisons made
  std::uint64_t pruned = 0;        // children rejected by the coloring guard
  int depth_reached = 0;
  double elapsed_ms = 0.0;
  std::string limit;              // which budget stopped the search
  std::vector<std::string> frontier;  // resumable boundary states (hex codes)
};

struct ReductionPath {
  std::string start_code;
  std::vector<PathStep> steps;
  Diagram end;
  int trivial_components = 0;  // reduce: the c of U_c
  int basis_index = -1;        // classify: matched basis element
  int extra_loops = 0;         // classify: trivial components alongside
};

struct SearchResult {
  Outcome outcome = Outcome::Exhausted;
  std::optional<ReductionPath> path;
  SearchStats stats;
};

inline Diagram replay_path(const Diagram& start, const ReductionPath& p) {
  Diagram d = start;
  for (const auto& s : p.steps)
    d = s.is_move ? apply_move(d, s.move).diagram : apply_reidemeister(d, s.reid);
  return d;
}

namespace detail {

// greedy normalization: exhaust R1-/R2-, then adopt R3 slides that expose
// further reductions, up to the configured number of sweeps
inline std::pair<Diagram, std::vector<PathStep>> normalize(const Diagram& d0, int r3_sweeps) {
  std::vector<PathStep> trace;
  auto [d, simp] = simplify_traced(d0);
  for (const auto& r : simp) trace.push_back(PathStep::of(r));
  for (int sweep = 0; sweep < r3_sweeps; ++sweep) {
    bool improved = false;
    bool scan_again = true;
    while (scan_again) {
      scan_again = false;
      auto fs = faces(d);
      for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f) {
        ReidemeisterMove m;
        m.kind = ReidKind::R3;
        m.face = f;
        Diagram slid;
        try {
          slid = apply_reidemeister(d, m);
        } catch (const std::invalid_argument&) {
          continue;
        }
        auto [red, simp2] = simplify_traced(slid);
        if (red.crossings.size() < d.crossings.size()) {
          trace.push_back(PathStep::of(m));
          for (const auto& r : simp2) trace.push_back(PathStep::of(r));
          d = red;
          improved = true;
          scan_again = true;
          break;
        }
      }
    }
    if (!improved) break;
  }
  return {d, trace};
}

struct NodeMeta {
  int parent = -1;
  int depth = 0;
  std::vector<PathStep> steps;  // from parent to this state
};

struct Frontier {
  std::vector<std::pair<int, Diagram>> items;  // node id + diagram
};

}  // namespace detail

namespace detail {

struct SearchCore {
  const MoveFamily& family;
  const Budget& budget;
  std::int64_t guard_modulus = 0;     // coloring invariant used as a soundness guard
  std::uint64_t guard_value = 0;
  int crossing_cap = 0;
  std::chrono::steady_clock::time_point t0;

  std::map<std::string, int> seen;    // canonical code -> node id
  std::vector<NodeMeta> nodes;
  SearchStats stats;

  explicit SearchCore(const MoveFamily& f, const Budget& b) : family(f), budget(b) {
    t0 = std::chrono::steady_clock::now();
  }

  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  }

  bool over_time() { return elapsed_ms() > static_cast<double>(budget.time_ms); }

  // record a state; returns node id or -1 when already known
  int intern(const std::string& code, int parent, int depth, std::vector<PathStep> steps) {
    auto it = seen.find(code);
    if (it != seen.end()) return -1;
    const int id = static_cast<int>(nodes.size());
    seen.emplace(code, id);
    NodeMeta m;
    m.parent = parent;
    m.depth = depth;
    m.steps = std::move(steps);
    nodes.push_back(std::move(m));
    stats.nodes = nodes.size();
    return id;
  }

  ReductionPath build_path(int id, const Diagram& end, const std::string& start_code) const {
    ReductionPath p;
    p.start_code = start_code;
    p.end = end;
    std::vector<int> chain;
    for (int at = id; at >= 0; at = nodes[at].parent) chain.push_back(at);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
      for (const auto& s : nodes[*it].steps) p.steps.push_back(s);
    return p;
  }
};

}  // namespace detail

// Breadth-first reduction of a link diagram to a trivial link under a move
// family.  Layers count family moves; within a layer the R3 orbit of each
// state is explored freely.  Pruning: every generator preserves col_m for
// the family modulus m, so any child whose count differs is discarded (and
// counted; soundness tests expect zero).
inline SearchResult reduce(const Diagram& start, const MoveFamily& family,
                           const Budget& budget) {
  if (start.is_tangle()) throw std::invalid_argument("reduce expects a link diagram");
  detail::SearchCore core(family, budget);
  core.crossing_cap = budget.max_crossings >= 0
                          ? budget.max_crossings
                          : static_cast<int>(start.crossings.size()) + 6;
  core.guard_modulus = family.preserved_modulus();
  if (core.guard_modulus >= 2) core.guard_value = col_count(start, core.guard_modulus);

  SearchResult result;
  auto [d0, trace0] = detail::normalize(start, budget.r3_sweeps);
  const std::string start_code = canonical_code(d0);
  core.intern(start_code, -1, 0, std::move(trace0));

  auto finish = [&](Outcome oc, std::optional<ReductionPath> path,
                    const std::string& limit) {
    result.outcome = oc;
    result.path = std::move(path);
    result.stats = core.stats;
    result.stats.limit = limit;
    result.stats.elapsed_ms = core.elapsed_ms();
    return result;
  };

  if (d0.crossings.empty()) {
    auto p = core.build_path(0, d0, start_code);
    p.trivial_components = static_cast<int>(d0.loops.size());
    return finish(Outcome::Reduced, std::move(p), "");
  }

  std::deque<std::pair<int, Diagram>> layer{{0, d0}};
  int depth = 0;
  while (!layer.empty()) {
    core.stats.depth_reached = depth;
    // close the layer under R3 slides, collecting move children as we go
    std::deque<std::pair<int, Diagram>> work = std::move(layer);
    layer.clear();
    std::vector<std::pair<int, Diagram>> members;  // this layer, R3 closure included
    while (!work.empty()) {
      auto [id, d] = work.front();
      work.pop_front();
      members.emplace_back(id, d);
      if (core.over_time())
        return finish(Outcome::Exhausted, std::nullopt, "time");
      auto fs = faces(d);
      for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f) {
        ReidemeisterMove m;
        m.kind = ReidKind::R3;
        m.face = f;
        Diagram slid;
        try {
          slid = apply_reidemeister(d, m);
        } catch (const std::invalid_argument&) {
          continue;
        }
        auto [red, simp] = detail::normalize(slid, 0);
        std::vector<PathStep> steps{PathStep::of(m)};
        for (auto& s : simp) steps.push_back(s);
        auto code = canonical_code(red);
        const int nid = core.intern(code, id, depth, std::move(steps));
        if (nid < 0) continue;
        if (core.nodes.size() > budget.max_nodes)
          return finish(Outcome::Exhausted, std::nullopt, "nodes");
        if (red.crossings.empty()) {
          auto p = core.build_path(nid, red, start_code);
          p.trivial_components = static_cast<int>(red.loops.size());
          return finish(Outcome::Reduced, std::move(p), "");
        }
        work.emplace_back(nid, red);
      }
    }
    if (depth >= budget.max_depth) {
      for (const auto& [id, d] : members) {
        if (core.stats.frontier.size() >= 50) break;
        core.stats.frontier.push_back(code_hex(canonical_code(d)));
      }
      return finish(Outcome::Exhausted, std::nullopt, "depth");
    }

    // family moves out of every member of the closed layer
    struct Cand {
      std::string code;
      Diagram d;
      int parent;
      std::vector<PathStep> steps;
    };
    auto expand_member = [&](const std::pair<int, Diagram>& member, std::vector<Cand>& out,
                             std::uint64_t& pruned, std::uint64_t& checks) {
      const auto& [id, d] = member;
      auto sites = enumerate_sites(d);
      for (const auto& site : sites)
        for (const auto& gen : family.generators) {
          MoveSpec m = gen;
          m.site = site;
          MoveResult moved;
          try {
            moved = apply_move(d, m);
          } catch (const std::exception&) {
            continue;
          }
          auto [red, simp] = detail::normalize(moved.diagram, budget.r3_sweeps);
          if (static_cast<int>(red.crossings.size()) > core.crossing_cap) continue;
          if (core.guard_modulus >= 2) {
            ++checks;
            if (col_count(red, core.guard_modulus) != core.guard_value) {
              ++pruned;
              continue;
            }
          }
          Cand c;
          c.code = canonical_code(red);
          c.d = red;
          c.parent = id;
          c.steps.push_back(PathStep::of(m));
          for (auto& s : simp) c.steps.push_back(s);
          out.push_back(std::move(c));
        }
    };

    std::vector<Cand> cands;
    const int workers = std::max(1, budget.workers);
    if (workers == 1 || members.size() < 2) {
      for (const auto& mem : members) {
        if (core.over_time()) return finish(Outcome::Exhausted, std::nullopt, "time");
        core.stats.expansions++;
        expand_member(mem, cands, core.stats.pruned, core.stats.guard_checks);
      }
    } else {
      // depth-synchronized rounds: workers fill per-member buckets that are
      // merged in member order, so the result is interleaving-independent
      std::vector<std::vector<Cand>> buckets(members.size());
      std::vector<std::uint64_t> pruned(members.size(), 0);
      std::vector<std::uint64_t> checks(members.size(), 0);
      std::vector<std::thread> pool;
      std::atomic<std::size_t> next{0};
      for (int w = 0; w < workers; ++w)
        pool.emplace_back([&]() {
          while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= members.size()) break;
            expand_member(members[i], buckets[i], pruned[i], checks[i]);
          }
        });
      for (auto& th : pool) th.join();
      core.stats.expansions += members.size();
      for (std::size_t i = 0; i < members.size(); ++i) {
        core.stats.pruned += pruned[i];
        core.stats.guard_checks += checks[i];
        for (auto& c : buckets[i]) cands.push_back(std::move(c));
      }
      if (core.over_time()) return finish(Outcome::Exhausted, std::nullopt, "time");
    }

    for (auto& c : cands) {
      const int nid = core.intern(c.code, c.parent, depth + 1, std::move(c.steps));
      if (nid < 0) continue;
      if (core.nodes.size() > budget.max_nodes) {
        for (const auto& [id, d] : layer) {
          if (core.stats.frontier.size() >= 50) break;
          core.stats.frontier.push_back(code_hex(canonical_code(d)));
        }
        return finish(Outcome::Exhausted, std::nullopt, "nodes");
      }
      if (c.d.crossings.empty()) {
        auto p = core.build_path(nid, c.d, start_code);
        p.trivial_components = static_cast<int>(c.d.loops.size());
        return finish(Outcome::Reduced, std::move(p), "");
      }
      layer.emplace_back(nid, c.d);
    }
    ++depth;
  }
  return finish(Outcome::Exhausted, std::nullopt, "space");
}

// classify a tangle against basis elements under a move family; extra
// crossing-free loops are tolerated and reported
inline SearchResult classify_tangle(const Diagram& start, const MoveFamily& family,
                                    const std::vector<Diagram>& basis, const Budget& budget) {
  if (!start.is_tangle()) throw std::invalid_argument("classify expects a tangle");
  for (const auto& b : basis)
    if (b.endpoints() != start.endpoints())
      throw std::invalid_argument("basis arity mismatch");

  detail::SearchCore core(family, budget);
  core.crossing_cap = budget.max_crossings >= 0
                          ? budget.max_crossings
                          : static_cast<int>(start.crossings.size()) + 6;
  core.guard_modulus = family.preserved_modulus();
  if (core.guard_modulus >= 2) core.guard_value = col_count(start, core.guard_modulus);

  // Lagrangian pruning: only basis elements with the start's boundary
  // Lagrangian are reachable
  std::map<std::string, int> targets;
  {
    const std::int64_t p = family.preserved_prime();
    std::optional<SubspaceBasis> start_lag;
    if (p >= 2) start_lag = tangle_lagrangian(start, p);
    for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
      Diagram stripped = Diagram::make(basis[i].name, basis[i].crossings, {}, basis[i].boundary);
      if (start_lag && !(tangle_lagrangian(stripped, p).vectors == start_lag->vectors))
        continue;
      targets.emplace(canonical_code(stripped), i);
    }
  }

  SearchResult result;
  auto [d0, trace0] = detail::normalize(start, budget.r3_sweeps);
  const std::string start_code = canonical_code(d0);
  core.intern(start_code, -1, 0, std::move(trace0));

  auto finish = [&](Outcome oc, std::optional<ReductionPath> path, const std::string& limit) {
    result.outcome = oc;
    result.path = std::move(path);
    result.stats = core.stats;
    result.stats.limit = limit;
    result.stats.elapsed_ms = core.elapsed_ms();
    return result;
  };

  auto match = [&](int id, const Diagram& d) -> std::optional<ReductionPath> {
    Diagram stripped = d.loops.empty() ? d : Diagram::make(d.name, d.crossings, {}, d.boundary);
    auto it = targets.find(canonical_code(stripped));
    if (it == targets.end()) return std::nullopt;
    auto p = core.build_path(id, d, start_code);
    p.basis_index = it->second;
    p.extra_loops = static_cast<int>(d.loops.size());
    return p;
  };

  if (auto p = match(0, d0)) return finish(Outcome::Reduced, std::move(p), "");

  std::deque<std::pair<int, Diagram>> layer{{0, d0}};
  int depth = 0;
  while (!layer.empty()) {
    core.stats.depth_reached = depth;
    std::deque<std::pair<int, Diagram>> work = std::move(layer);
    layer.clear();
    std::vector<std::pair<int, Diagram>> members;
    while (!work.empty()) {
      auto [id, d] = work.front();
      work.pop_front();
      members.emplace_back(id, d);
      if (core.over_time()) return finish(Outcome::Exhausted, std::nullopt, "time");
      auto fs = faces(d);
      for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f) {
        ReidemeisterMove m;
        m.kind = ReidKind::R3;
        m.face = f;
        Diagram slid;
        try {
          slid = apply_reidemeister(d, m);
        } catch (const std::invalid_argument&) {
          continue;
        }
        auto [red, simp] = detail::normalize(slid, 0);
        std::vector<PathStep> steps{PathStep::of(m)};
        for (auto& s : simp) steps.push_back(s);
        const int nid = core.intern(canonical_code(red), id, depth, std::move(steps));
        if (nid < 0) continue;
        if (core.nodes.size() > budget.max_nodes)
          return finish(Outcome::Exhausted, std::nullopt, "nodes");
        if (auto p = match(nid, red)) return finish(Outcome::Reduced, std::move(p), "");
        work.emplace_back(nid, red);
      }
    }
    if (depth >= budget.max_depth) {
      for (const auto& [id, d] : members) {
        if (core.stats.frontier.size() >= 50) break;
        core.stats.frontier.push_back(code_hex(canonical_code(d)));
      }
      return finish(Outcome::Exhausted, std::nullopt, "depth");
    }

    for (const auto& [id, d] : members) {
      if (core.over_time()) return finish(Outcome::Exhausted, std::nullopt, "time");
      core.stats.expansions++;
      for (const auto& site : enumerate_sites(d))
        for (const auto& gen : family.generators) {
          MoveSpec m = gen;
          m.site = site;
          MoveResult moved;
          try {
            moved = apply_move(d, m);
          } catch (const std::exception&) {
            continue;
          }
          auto [red, simp] = detail::normalize(moved.diagram, budget.r3_sweeps);
          if (static_cast<int>(red.crossings.size()) > core.crossing_cap) continue;
          if (core.guard_modulus >= 2) {
            ++core.stats.guard_checks;
            if (col_count(red, core.guard_modulus) != core.guard_value) {
              ++core.stats.pruned;
              continue;
            }
          }
          std::vector<PathStep> steps{PathStep::of(m)};
          for (auto& s : simp) steps.push_back(s);
          const int nid = core.intern(canonical_code(red), id, depth + 1, std::move(steps));
          if (nid < 0) continue;
          if (core.nodes.size() > budget.max_nodes)
            return finish(Outcome::Exhausted, std::nullopt, "nodes");
          if (auto p = match(nid, red)) return finish(Outcome::Reduced, std::move(p), "");
          layer.emplace_back(nid, red);
        }
    }
    ++depth;
  }
  return finish(Outcome::Exhausted, std::nullopt, "space");
}

struct CensusResult {
  int distinct = 0;
  std::uint64_t expected = 0;
  std::uint64_t tangles_tried = 0;
  bool complete = false;
  double elapsed_ms = 0.0;
};

// Distinct boundary Lagrangians realized by n-tangles: sweep the algebraic
// closure within the crossing budget, topped up with seeded random rational
// insertions, stopping at full coverage.
inline CensusResult census_boundary_subspaces(int n, std::int64_t p, int max_crossings,
                                              const Budget& budget, std::uint64_t seed = 1) {
  const auto t0 = std::chrono::steady_clock::now();
  CensusResult out;
  out.expected = lagrangian_count(p, n);
  std::set<std::vector<std::vector<std::int64_t>>> seen_lags;
  std::set<std::string> codes;
  std::vector<Diagram> pool;
  auto elapsed = [&]() {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  };
  auto visit = [&](const Diagram& t0d) {
    Diagram t = t0d.loops.empty()
                    ? t0d
                    : Diagram::make(t0d.name, t0d.crossings, {}, t0d.boundary);
    if (!codes.insert(canonical_code(t)).second) return;
    pool.push_back(t);
    ++out.tangles_tried;
    seen_lags.insert(tangle_lagrangian(t, p).vectors);
  };
  auto done = [&]() {
    return seen_lags.size() >= out.expected || codes.size() > budget.max_nodes ||
           elapsed() > static_cast<double>(budget.time_ms);
  };

  for (const auto& l : algebraic_leaves(n)) {
    visit(simplify(l));
    if (done()) goto finish;
  }
  {
    std::size_t fresh_from = 0;
    while (fresh_from < pool.size() && !done()) {
      const std::size_t fresh_to = pool.size();
      for (std::size_t ia = 0; ia < fresh_to && !done(); ++ia) {
        const std::size_t jb_lo = ia >= fresh_from ? 0 : fresh_from;
        for (std::size_t ib = jb_lo; ib < fresh_to && !done(); ++ib) {
          const Diagram a = pool[ia];
          const Diagram b = pool[ib];
          if (static_cast<int>(a.crossings.size() + b.crossings.size()) > max_crossings)
            continue;
          for (int i = 0; i < 2 * n && !done(); ++i)
            for (int j = 0; j < 2 * n && !done(); ++j)
              visit(simplify(compose(rotate(a, i), rotate(b, j), "c")));
        }
      }
      fresh_from = fresh_to;
    }
  }
  // randomized top-up: twist insertions at random sites of pool members
  {
    std::mt19937_64 rng(seed);
    std::uint64_t rounds = 0;
    while (!done() && !pool.empty() && rounds < 4 * budget.max_nodes) {
      ++rounds;
      const Diagram& base = pool[rng() % pool.size()];
      auto sites = enumerate_sites(base);
      if (sites.empty()) continue;
      const auto& site = sites[rng() % sites.size()];
      const std::int64_t twists = 1 + static_cast<std::int64_t>(rng() % 3);
      MoveSpec m = MoveSpec::n_move(rng() % 2 ? twists : -twists, site);
      try {
        auto t = simplify(apply_move(base, m).diagram);
        if (static_cast<int>(t.crossings.size()) <= max_crossings) visit(t);
      } catch (const std::exception&) {
      }
    }
  }
finish:
  out.distinct = static_cast<int>(seen_lags.size());
  out.complete = seen_lags.size() >= out.expected;
  out.elapsed_ms = elapsed();
  return out;
}

}  // namespace moveq
