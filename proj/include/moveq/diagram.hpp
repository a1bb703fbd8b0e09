#pragma once

// Combinatorial model of unoriented link and tangle diagrams.
//
// A diagram is a list of crossings, each holding four edge labels in
// counterclockwise order with the under-strand in slots 0 and 2, plus a list
// of crossing-free loops and, for tangles, an assignment of edge labels to
// the 2n boundary endpoints (numbered counterclockwise from bottom-left).
// Faces come from the rotation system; planarity is enforced at construction
// through the Euler characteristic of every connected component.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace moveq {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what) : std::runtime_error(what), line(line_) {}
};

struct Crossing {
  std::array<int, 4> s{};  // ccw slots; under-pair (s[0], s[2]), over-pair (s[1], s[3])

  Crossing() = default;
  Crossing(int a, int b, int c, int d) : s{a, b, c, d} { normalize(); }

  // rotating by two slots is the same crossing; store the lex-smaller reading
  void normalize() {
    std::array<int, 4> alt{s[2], s[3], s[0], s[1]};
    if (alt < s) s = alt;
  }
  bool operator==(const Crossing&) const = default;
  auto operator<=>(const Crossing&) const = default;
};

// one end of an edge: a crossing slot or a tangle boundary endpoint
struct End {
  int kind = -1;  // 0 = crossing slot, 1 = boundary endpoint
  int x = -1;     // crossing index / endpoint index (0-based)
  int slot = -1;  // slot for crossings
  bool operator==(const End&) const = default;
};

struct Diagram {
  std::string name;
  std::vector<Crossing> crossings;
  std::vector<int> loops;     // labels of crossing-free circles, kept sorted
  std::vector<int> boundary;  // endpoint i (1-based) holds edge boundary[i-1]

  bool is_tangle() const { return !boundary.empty(); }
  int endpoints() const { return static_cast<int>(boundary.size()); }

  bool operator==(const Diagram&) const = default;

  int max_label() const {
    int m = 0;
    for (const auto& c : crossings)
      for (int e : c.s) m = std::max(m, e);
    for (int e : loops) m = std::max(m, e);
    for (int e : boundary) m = std::max(m, e);
    return m;
  }

  bool is_loop_edge(int e) const {
    return std::find(loops.begin(), loops.end(), e) != loops.end();
  }

  // label -> its (exactly two) ends; loop labels are absent
  std::map<int, std::vector<End>> end_map() const {
    std::map<int, std::vector<End>> m;
    for (int x = 0; x < static_cast<int>(crossings.size()); ++x)
      for (int s = 0; s < 4; ++s)
        m[crossings[x].s[s]].push_back(End{0, x, s});
    for (int i = 0; i < static_cast<int>(boundary.size()); ++i)
      m[boundary[i]].push_back(End{1, i, -1});
    return m;
  }

  static Diagram make(std::string name, std::vector<Crossing> crossings,
                      std::vector<int> loops, std::vector<int> boundary);
  static Diagram parse(const std::string& text);
  std::string emit() const;

  void validate(const std::map<int, int>* label_line = nullptr) const;
};

namespace detail {

inline int occurrence_line(const std::map<int, int>* label_line, int label) {
  if (!label_line) return 0;
  auto it = label_line->find(label);
  return it == label_line->end() ? 0 : it->second;
}

// Port graph of the rotation system.  Crossing x owns ports 4x..4x+3; tangle
// endpoint i owns three ports (strand, arc-to-next, arc-to-prev) so that the
// boundary circle takes part in face tracing.
struct PortGraph {
  int n_cross = 0, n_bnd = 0;
  std::vector<int> opposite;    // port -> port across the edge
  std::vector<int> rot_next;    // port -> ccw-next port at the same node
  std::vector<int> port_edge;   // port -> edge label, or -1 for boundary arcs
  std::vector<int> port_node;   // port -> node id (crossings, then endpoints)

  int ports() const { return static_cast<int>(opposite.size()); }
  int bnd_port(int i, int j) const { return 4 * n_cross + 3 * i + j; }  // j: 0 strand, 1 next, 2 prev

  End end_of(int port) const {
    if (port < 4 * n_cross) return End{0, port / 4, port % 4};
    return End{1, (port - 4 * n_cross) / 3, -1};
  }
};

inline PortGraph build_port_graph(const Diagram& d) {
  PortGraph g;
  g.n_cross = static_cast<int>(d.crossings.size());
  g.n_bnd = static_cast<int>(d.boundary.size());
  const int np = 4 * g.n_cross + 3 * g.n_bnd;
  g.opposite.assign(np, -1);
  g.rot_next.assign(np, -1);
  g.port_edge.assign(np, -1);
  g.port_node.assign(np, -1);

  for (int x = 0; x < g.n_cross; ++x)
    for (int s = 0; s < 4; ++s) {
      g.rot_next[4 * x + s] = 4 * x + (s + 1) % 4;
      g.port_edge[4 * x + s] = d.crossings[x].s[s];
      g.port_node[4 * x + s] = x;
    }
  for (int i = 0; i < g.n_bnd; ++i) {
    const int ps = g.bnd_port(i, 0), pn = g.bnd_port(i, 1), pp = g.bnd_port(i, 2);
    // ccw around an endpoint seen from inside the disk: arc-to-next, strand, arc-to-prev
    g.rot_next[pn] = ps;
    g.rot_next[ps] = pp;
    g.rot_next[pp] = pn;
    g.port_edge[ps] = d.boundary[i];
    g.port_node[ps] = g.port_node[pn] = g.port_node[pp] = g.n_cross + i;
    const int nx = (i + 1) % g.n_bnd;
    g.opposite[pn] = g.bnd_port(nx, 2);
    g.opposite[g.bnd_port(nx, 2)] = pn;
  }
  // strand edges
  std::map<int, std::vector<int>> by_label;
  for (int p = 0; p < np; ++p)
    if (g.port_edge[p] >= 0) by_label[g.port_edge[p]].push_back(p);
  for (auto& [label, ps] : by_label) {
    if (ps.size() != 2) throw std::invalid_argument("ill-formed edge");
    g.opposite[ps[0]] = ps[1];
    g.opposite[ps[1]] = ps[0];
  }
  return g;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { for (int i = 0; i < n; ++i) parent[i] = i; }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace detail

struct FaceStep {
  int edge = -1;             // edge label, or -1 for a boundary arc
  bool boundary_arc = false;
  End tail, head;            // traversal direction of this step
};

struct Face {
  std::vector<FaceStep> walk;
  int component = 0;  // graph component (crossings + boundary circle)
};

struct FaceSet {
  std::vector<Face> faces;
  bool connected = true;
};

inline FaceSet faces(const Diagram& d) {
  FaceSet out;
  auto g = detail::build_port_graph(d);
  const int np = g.ports();

  detail::UnionFind uf(std::max(1, np));
  for (int p = 0; p < np; ++p) {
    uf.unite(p, g.rot_next[p]);
    if (g.opposite[p] >= 0) uf.unite(p, g.opposite[p]);
  }
  std::map<int, int> comp_id;
  for (int p = 0; p < np; ++p) {
    int r = uf.find(p);
    if (!comp_id.count(r)) comp_id[r] = static_cast<int>(comp_id.size());
  }
  out.connected = comp_id.size() <= 1 && (np > 0 || d.loops.size() <= 1);
  if (!d.loops.empty() && np > 0) out.connected = false;
  if (d.loops.size() > 1) out.connected = false;

  std::vector<char> seen(np, 0);
  for (int p0 = 0; p0 < np; ++p0) {
    if (seen[p0]) continue;
    Face f;
    f.component = comp_id[uf.find(p0)];
    int p = p0;
    do {
      seen[p] = 1;
      FaceStep st;
      st.edge = g.port_edge[p];
      st.boundary_arc = st.edge < 0;
      st.tail = g.end_of(p);
      st.head = g.end_of(g.opposite[p]);
      f.walk.push_back(st);
      p = g.rot_next[g.opposite[p]];
    } while (p != p0);
    out.faces.push_back(std::move(f));
  }

  // crossing-free loops: each adds its interior face; its other side sits on
  // the first face (an implicit one when nothing else exists)
  if (!d.loops.empty()) {
    if (out.faces.empty()) out.faces.push_back(Face{});
    for (int e : d.loops) {
      FaceStep st;
      st.edge = e;
      out.faces.front().walk.push_back(st);
      Face inner;
      inner.component = -1;
      inner.walk.push_back(st);
      out.faces.push_back(std::move(inner));
    }
  }
  return out;
}

inline void Diagram::validate(const std::map<int, int>* label_line) const {
  auto ends = end_map();
  for (const auto& [label, es] : ends) {
    if (label <= 0)
      throw ParseError(detail::occurrence_line(label_line, label), "ill-formed edge");
    if (es.size() != 2)
      throw ParseError(detail::occurrence_line(label_line, label), "ill-formed edge");
    if (is_loop_edge(label))
      throw ParseError(detail::occurrence_line(label_line, label), "ill-formed edge");
  }
  {
    std::set<int> seen;
    for (int e : loops) {
      if (e <= 0 || !seen.insert(e).second)
        throw ParseError(detail::occurrence_line(label_line, e), "ill-formed edge");
    }
  }

  // Euler characteristic 2 for every connected component of the rotation system
  auto g = detail::build_port_graph(*this);
  const int np = g.ports();
  if (np == 0) return;
  detail::UnionFind uf(np);
  for (int p = 0; p < np; ++p) {
    uf.unite(p, g.rot_next[p]);
    uf.unite(p, g.opposite[p]);
  }
  std::map<int, std::array<long, 3>> vef;  // component -> {V, E, F}
  for (int x = 0; x < g.n_cross; ++x) vef[uf.find(4 * x)][0]++;
  for (int i = 0; i < g.n_bnd; ++i) vef[uf.find(g.bnd_port(i, 0))][0]++;
  for (int p = 0; p < np; ++p)
    if (g.opposite[p] > p) vef[uf.find(p)][1]++;
  std::vector<char> seen(np, 0);
  for (int p0 = 0; p0 < np; ++p0) {
    if (seen[p0]) continue;
    vef[uf.find(p0)][2]++;
    int p = p0;
    do {
      seen[p] = 1;
      p = g.rot_next[g.opposite[p]];
    } while (p != p0);
  }
  for (const auto& [comp, c] : vef)
    if (c[0] - c[1] + c[2] != 2) throw ParseError(0, "non-planar diagram");
}

inline Diagram Diagram::make(std::string name, std::vector<Crossing> crossings,
                             std::vector<int> loops, std::vector<int> boundary) {
  Diagram d;
  d.name = std::move(name);
  d.crossings = std::move(crossings);
  for (auto& c : d.crossings) c.normalize();
  d.loops = std::move(loops);
  std::sort(d.loops.begin(), d.loops.end());
  d.boundary = std::move(boundary);
  d.validate();
  return d;
}

inline Diagram Diagram::parse(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool have_header = false;
  Diagram d;
  int want_endpoints = 0;
  std::vector<std::pair<int, int>> bnd;  // (endpoint index 1-based, edge)
  std::map<int, int> label_line;
  std::map<int, int> bnd_line;

  auto note = [&](int label) {
    if (!label_line.count(label)) label_line[label] = lineno;
  };

  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (!have_header) {
      if (tok == "link") {
        if (!(ls >> d.name)) throw ParseError(lineno, "missing link name");
      } else if (tok == "tangle") {
        if (!(ls >> d.name >> want_endpoints) || want_endpoints <= 0 || want_endpoints % 2)
          throw ParseError(lineno, "ill-formed boundary");
      } else {
        throw ParseError(lineno, "expected 'link' or 'tangle' header");
      }
      std::string extra;
      if (ls >> extra) throw ParseError(lineno, "trailing tokens after header");
      have_header = true;
      continue;
    }
    if (tok == "X") {
      int a, b, c, e;
      if (!(ls >> a >> b >> c >> e)) throw ParseError(lineno, "ill-formed edge");
      if (a <= 0 || b <= 0 || c <= 0 || e <= 0) throw ParseError(lineno, "ill-formed edge");
      note(a); note(b); note(c); note(e);
      d.crossings.emplace_back(a, b, c, e);
    } else if (tok == "O") {
      int e;
      if (!(ls >> e) || e <= 0) throw ParseError(lineno, "ill-formed edge");
      note(e);
      d.loops.push_back(e);
    } else if (tok == "B") {
      int i, e;
      if (!(ls >> i >> e) || e <= 0) throw ParseError(lineno, "ill-formed boundary");
      if (i < 1 || i > want_endpoints) throw ParseError(lineno, "ill-formed boundary");
      for (auto& [j, _] : bnd)
        if (j == i) throw ParseError(lineno, "ill-formed boundary");
      note(e);
      bnd.emplace_back(i, e);
      bnd_line[i] = lineno;
    } else {
      throw ParseError(lineno, "unknown record '" + tok + "'");
    }
    std::string extra;
    if (ls >> extra) throw ParseError(lineno, "trailing tokens");
  }
  if (!have_header) throw ParseError(lineno, "empty input");
  if (static_cast<int>(bnd.size()) != want_endpoints)
    throw ParseError(lineno, "ill-formed boundary");
  d.boundary.assign(want_endpoints, 0);
  for (auto [i, e] : bnd) d.boundary[i - 1] = e;
  for (auto& c : d.crossings) c.normalize();
  std::sort(d.loops.begin(), d.loops.end());
  d.validate(&label_line);
  return d;
}

inline std::string Diagram::emit() const {
  std::ostringstream out;
  if (is_tangle())
    out << "tangle " << name << ' ' << boundary.size() << '\n';
  else
    out << "link " << name << '\n';
  for (const auto& c : crossings)
    out << "X " << c.s[0] << ' ' << c.s[1] << ' ' << c.s[2] << ' ' << c.s[3] << '\n';
  for (int e : loops) out << "O " << e << '\n';
  for (int i = 0; i < static_cast<int>(boundary.size()); ++i)
    out << "B " << i + 1 << ' ' << boundary[i] << '\n';
  return out.str();
}

// ---- arcs and components ----

struct ArcPartition {
  std::vector<std::vector<int>> arcs;  // sorted groups of edge labels
  std::map<int, int> arc_of;           // edge label -> arc index

  int size() const { return static_cast<int>(arcs.size()); }
};

// arcs are maximal overpasses: edges glued across the over-pair of each crossing
inline ArcPartition arcs(const Diagram& d) {
  std::vector<int> labels;
  for (const auto& c : d.crossings)
    for (int e : c.s) labels.push_back(e);
  for (int e : d.loops) labels.push_back(e);
  for (int e : d.boundary) labels.push_back(e);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::map<int, int> idx;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) idx[labels[i]] = i;

  detail::UnionFind uf(static_cast<int>(labels.size()));
  for (const auto& c : d.crossings) uf.unite(idx[c.s[1]], idx[c.s[3]]);

  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i)
    groups[uf.find(i)].push_back(labels[i]);
  ArcPartition p;
  for (auto& [root, g] : groups) {
    std::sort(g.begin(), g.end());
    p.arcs.push_back(g);
  }
  std::sort(p.arcs.begin(), p.arcs.end());
  for (int a = 0; a < static_cast<int>(p.arcs.size()); ++a)
    for (int e : p.arcs[a]) p.arc_of[e] = a;
  return p;
}

struct Components {
  int closed = 0;                                 // closed link components, loops included
  std::vector<std::pair<int, int>> open_strands;  // endpoint pairs (1-based, lo < hi)
};

// strand traversal passes straight through every crossing (slot s to s+2)
inline Components components(const Diagram& d) {
  std::vector<int> labels;
  for (const auto& c : d.crossings)
    for (int e : c.s) labels.push_back(e);
  for (int e : d.boundary) labels.push_back(e);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::map<int, int> idx;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) idx[labels[i]] = i;

  detail::UnionFind uf(std::max<std::size_t>(1, labels.size()));
  for (const auto& c : d.crossings) {
    uf.unite(idx[c.s[0]], idx[c.s[2]]);
    uf.unite(idx[c.s[1]], idx[c.s[3]]);
  }
  std::map<int, std::vector<int>> endpoints_of;  // component root -> endpoint list
  for (int i = 0; i < static_cast<int>(d.boundary.size()); ++i)
    endpoints_of[uf.find(idx[d.boundary[i]])].push_back(i + 1);

  Components out;
  std::set<int> open_roots;
  for (auto& [root, eps] : endpoints_of) {
    open_roots.insert(root);
    std::sort(eps.begin(), eps.end());
    if (eps.size() != 2) throw std::invalid_argument("strand with bad endpoint count");
    out.open_strands.emplace_back(eps[0], eps[1]);
  }
  std::set<int> roots;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) roots.insert(uf.find(i));
  out.closed = static_cast<int>(roots.size()) - static_cast<int>(open_roots.size()) +
               static_cast<int>(d.loops.size());
  std::sort(out.open_strands.begin(), out.open_strands.end());
  return out;
}

// ---- move sites and pattern splicing ----

// Two edges co-bounding a face, ordered: edge_a becomes the bottom strand of
// an inserted 2-tangle (endpoints 1-2), edge_b the top strand (4-3).  A site
// with face < 0 involves crossing-free loops, which float freely.
struct MoveSite {
  int edge_a = 0;
  int edge_b = 0;
  int face = -1;
  int pos_a = -1;
  int pos_b = -1;

  bool operator==(const MoveSite&) const = default;
};

namespace detail {

// Rewrite workspace: cut edges leave dangling half-edge labels that are then
// fused pairwise; a fuse of a label with itself closes a crossing-free loop.
struct Rewriter {
  Diagram d;
  std::map<int, int> alias;  // label -> representative after fusions
  int next_label;

  explicit Rewriter(const Diagram& src) : d(src), next_label(src.max_label() + 1) {}

  int fresh() { return next_label++; }

  int resolve(int e) {
    while (alias.count(e)) e = alias[e];
    return e;
  }

  void relabel(int from, int to) {
    for (auto& c : d.crossings)
      for (int& e : c.s)
        if (e == from) e = to;
    for (int& e : d.boundary)
      if (e == from) e = to;
    alias[from] = to;
  }

  void fuse(int a, int b) {
    a = resolve(a);
    b = resolve(b);
    if (a == b) {
      d.loops.push_back(a);  // both dangling ends met: a closed circle
      alias[a] = -a;         // retire the label
      return;
    }
    relabel(b, a);
  }

  // replace the label at one specific end with a fresh one; returns it
  int cut_at(const End& at) {
    const int nl = fresh();
    if (at.kind == 0)
      d.crossings[at.x].s[at.slot] = nl;
    else
      d.boundary[at.x] = nl;
    return nl;
  }

  Diagram finish(const std::string& name) {
    std::vector<int> lp;
    for (int e : d.loops) lp.push_back(e < 0 ? -e : e);
    return Diagram::make(name, d.crossings, std::move(lp), d.boundary);
  }
};

}  // namespace detail

// Splice `pattern` (a 4-endpoint tangle) across the two strands of a site.
// The site's edge_a is cut and rewired through pattern endpoints 1-2 in its
// face-walk direction, edge_b through endpoints 3-4; a loop edge is cut into
// a single segment joining its two pattern endpoints.  `attached_out`, when
// given, receives the final labels of the four edges glued to the pattern.
inline Diagram splice(const Diagram& d, const MoveSite& site, const Diagram& pattern,
                      const std::string& name = "",
                      std::array<int, 4>* attached_out = nullptr) {
  if (pattern.endpoints() != 4) throw std::invalid_argument("pattern must be a 2-tangle");
  if (site.edge_a == site.edge_b) throw std::invalid_argument("invalid site");

  const bool loop_a = d.is_loop_edge(site.edge_a);
  const bool loop_b = d.is_loop_edge(site.edge_b);

  // traversal direction of an embedded edge: from the face walk when the site
  // names one, otherwise the canonical end order
  End tail_a, head_a, tail_b, head_b;
  if (!loop_a || !loop_b) {
    auto ends = d.end_map();
    auto dir_from_walk = [&](int edge, int pos, End& tail, End& head) {
      if (site.face >= 0 && pos >= 0) {
        auto fs = faces(d);
        if (site.face >= static_cast<int>(fs.faces.size()))
          throw std::invalid_argument("invalid site");
        const auto& walk = fs.faces[site.face].walk;
        if (pos >= static_cast<int>(walk.size()) || walk[pos].edge != edge)
          throw std::invalid_argument("invalid site");
        tail = walk[pos].tail;
        head = walk[pos].head;
      } else {
        auto it = ends.find(edge);
        if (it == ends.end()) throw std::invalid_argument("invalid site");
        tail = it->second[0];
        head = it->second[1];
      }
    };
    if (!loop_a) dir_from_walk(site.edge_a, site.pos_a, tail_a, head_a);
    if (!loop_b) dir_from_walk(site.edge_b, site.pos_b, tail_b, head_b);
  }

  detail::Rewriter rw(d);

  // instantiate the pattern with fresh labels
  std::map<int, int> pmap;
  auto fresh_of = [&](int e) {
    auto it = pmap.find(e);
    if (it != pmap.end()) return it->second;
    int nl = rw.fresh();
    pmap[e] = nl;
    return nl;
  };
  for (const auto& c : pattern.crossings)
    rw.d.crossings.push_back(Crossing(fresh_of(c.s[0]), fresh_of(c.s[1]),
                                      fresh_of(c.s[2]), fresh_of(c.s[3])));
  for (int e : pattern.loops) rw.d.loops.push_back(fresh_of(e));
  std::array<int, 4> q{};  // pattern edge at endpoints 1..4
  for (int i = 0; i < 4; ++i) q[i] = fresh_of(pattern.boundary[i]);

  // cut the site edges
  int a_tail = site.edge_a, a_head = site.edge_a;
  int b_tail = site.edge_b, b_head = site.edge_b;
  if (loop_a) {
    rw.d.loops.erase(std::find(rw.d.loops.begin(), rw.d.loops.end(), site.edge_a));
  } else {
    a_head = rw.cut_at(head_a);
  }
  if (loop_b) {
    rw.d.loops.erase(std::find(rw.d.loops.begin(), rw.d.loops.end(), site.edge_b));
  } else {
    b_head = rw.cut_at(head_b);
  }

  // the face trace keeps its region on the right of each dart, so a walk
  // dart runs endpoint 2 -> 1 along the bottom of the inserted box and
  // endpoint 4 -> 3 along the top
  rw.fuse(a_tail, q[1]);
  rw.fuse(a_head, q[0]);
  rw.fuse(b_tail, q[3]);
  rw.fuse(b_head, q[2]);

  if (attached_out)
    for (int i = 0; i < 4; ++i) {
      int e = q[i];
      while (rw.alias.count(e)) e = rw.alias[e];
      (*attached_out)[i] = e < 0 ? -e : e;
    }
  return rw.finish(name.empty() ? d.name : name);
}

// ---- Reidemeister moves ----

enum class ReidKind { R1Plus, R1Minus, R2Plus, R2Minus, R3 };

struct ReidemeisterMove {
  ReidKind kind;
  // R1-: crossing index; R1+: edge + variant 0..3 (side/sign)
  // R2-: the two crossing indices; R2+: a MoveSite + over flag
  // R3: triangle face index
  int crossing = -1;
  int crossing2 = -1;
  int edge = 0;
  int variant = 0;
  MoveSite site;
  bool over_b = true;  // R2+: the top strand bridges over
  int face = -1;       // R3
};

namespace detail {

struct Monogon {
  int crossing;
  int slot;  // slots (slot, slot+1) carry the kink edge
};

inline std::optional<Monogon> find_monogon(const Diagram& d, int from_crossing = 0) {
  for (int x = from_crossing; x < static_cast<int>(d.crossings.size()); ++x)
    for (int s = 0; s < 4; ++s)
      if (d.crossings[x].s[s] == d.crossings[x].s[(s + 1) % 4]) return Monogon{x, s};
  return std::nullopt;
}

struct Bigon {
  int x, y;        // the two crossings
  int se, te;      // over edge slots at x and y
  int sf, tf;      // under edge slots
  int e, f;        // over and under edge labels
};

// R2-reducible bigons: edges e (over at both ends) and f (under at both ends)
// between distinct crossings, adjacent so that they bound a two-sided face
inline std::vector<Bigon> find_bigons(const Diagram& d) {
  std::vector<Bigon> out;
  const int n = static_cast<int>(d.crossings.size());
  std::map<int, std::vector<End>> ends;
  for (int x = 0; x < n; ++x)
    for (int s = 0; s < 4; ++s) ends[d.crossings[x].s[s]].push_back(End{0, x, s});
  for (int x = 0; x < n; ++x) {
    for (int s = 0; s < 4; ++s) {
      // candidate face corner at (x, s): the walk traverses the edge at slot
      // (s+1) away from x and comes back along the edge at slot s
      const int e1 = d.crossings[x].s[s];
      const int e2 = d.crossings[x].s[(s + 1) % 4];
      if (e1 == e2) continue;
      const auto& E1 = ends[e1];
      const auto& E2 = ends[e2];
      if (E1.size() != 2 || E2.size() != 2) continue;
      for (const auto& a : E1) {
        if (a.kind != 0 || (a.x == x && a.slot == s)) continue;
        for (const auto& b : E2) {
          if (b.kind != 0 || (b.x == x && b.slot == (s + 1) % 4)) continue;
          if (a.x != b.x || a.x == x) continue;
          const int y = a.x;
          if ((b.slot + 1) % 4 != a.slot) continue;  // walk continues b then a
          // parity: one edge over-over, the other under-under
          const bool e1_over_x = s % 2 == 1;
          const bool e1_over_y = a.slot % 2 == 1;
          const bool e2_over_x = (s + 1) % 2 == 1;
          const bool e2_over_y = b.slot % 2 == 1;
          if (e1_over_x != e1_over_y || e2_over_x != e2_over_y) continue;
          if (x > y) continue;  // each bigon found once, from its lower crossing
          Bigon bg;
          bg.x = x;
          bg.y = y;
          if (e1_over_x) {
            bg.e = e1; bg.se = s; bg.te = a.slot;
            bg.f = e2; bg.sf = (s + 1) % 4; bg.tf = b.slot;
          } else {
            bg.e = e2; bg.se = (s + 1) % 4; bg.te = b.slot;
            bg.f = e1; bg.sf = s; bg.tf = a.slot;
          }
          out.push_back(bg);
        }
      }
    }
  }
  return out;
}

inline std::optional<Bigon> find_bigon(const Diagram& d) {
  auto all = find_bigons(d);
  if (all.empty()) return std::nullopt;
  return all.front();
}

inline Diagram remove_monogon(const Diagram& d, const Monogon& m) {
  Rewriter rw(d);
  const auto& c = d.crossings[m.crossing];
  const int f = c.s[(m.slot + 2) % 4];
  const int g = c.s[(m.slot + 3) % 4];
  rw.d.crossings.erase(rw.d.crossings.begin() + m.crossing);
  rw.fuse(f, g);
  return rw.finish(d.name);
}

inline Diagram remove_bigon(const Diagram& d, const Bigon& bg) {
  Rewriter rw(d);
  const auto& cx = d.crossings[bg.x];
  const auto& cy = d.crossings[bg.y];
  const int a1 = cx.s[(bg.se + 2) % 4], a2 = cy.s[(bg.te + 2) % 4];  // over strand stubs
  const int b1 = cx.s[(bg.sf + 2) % 4], b2 = cy.s[(bg.tf + 2) % 4];  // under strand stubs
  const int hi = std::max(bg.x, bg.y), lo = std::min(bg.x, bg.y);
  rw.d.crossings.erase(rw.d.crossings.begin() + hi);
  rw.d.crossings.erase(rw.d.crossings.begin() + lo);
  rw.fuse(a1, a2);
  rw.fuse(b1, b2);
  return rw.finish(d.name);
}

}  // namespace detail

inline Diagram apply_reidemeister(const Diagram& d, const ReidemeisterMove& m) {
  switch (m.kind) {
    case ReidKind::R1Minus: {
      if (m.crossing < 0 || m.crossing >= static_cast<int>(d.crossings.size()))
        throw std::invalid_argument("site does not match move kind");
      const auto& c = d.crossings[m.crossing];
      int slot = -1;
      for (int s = 0; s < 4; ++s)
        if (c.s[s] == c.s[(s + 1) % 4]) { slot = s; break; }
      if (slot < 0) throw std::invalid_argument("site does not match move kind");
      return detail::remove_monogon(d, detail::Monogon{m.crossing, slot});
    }
    case ReidKind::R1Plus: {
      detail::Rewriter rw(d);
      const int e = m.edge;
      int e1 = e, e2 = e;
      if (d.is_loop_edge(e)) {
        rw.d.loops.erase(std::find(rw.d.loops.begin(), rw.d.loops.end(), e));
        e2 = rw.fresh();
      } else {
        auto ends = d.end_map();
        auto it = ends.find(e);
        if (it == ends.end()) throw std::invalid_argument("site does not match move kind");
        e2 = rw.cut_at(it->second[1]);
      }
      const int l = rw.fresh();
      switch (m.variant & 3) {
        case 0: rw.d.crossings.push_back(Crossing(e1, l, l, e2)); break;
        case 1: rw.d.crossings.push_back(Crossing(e2, l, l, e1)); break;
        case 2: rw.d.crossings.push_back(Crossing(l, e1, e2, l)); break;
        case 3: rw.d.crossings.push_back(Crossing(l, e2, e1, l)); break;
      }
      if (d.is_loop_edge(e)) rw.fuse(e1, e2);
      return rw.finish(d.name);
    }
    case ReidKind::R2Minus: {
      auto all = detail::find_bigons(d);
      if (m.crossing >= 0) {
        for (const auto& bg : all)
          if ((bg.x == m.crossing && bg.y == m.crossing2) ||
              (bg.y == m.crossing && bg.x == m.crossing2))
            return detail::remove_bigon(d, bg);
        throw std::invalid_argument("site does not match move kind");
      }
      if (all.empty()) throw std::invalid_argument("site does not match move kind");
      return detail::remove_bigon(d, all.front());
    }
    case ReidKind::R2Plus: {
      // pattern: bottom strand through endpoints 1-2, top through 4-3,
      // bridge strand crossing twice
      const int q1 = 1, q2 = 2, q3 = 3, q4 = 4, ma = 5, mb = 6;
      std::vector<Crossing> cs;
      if (m.over_b) {
        cs.push_back(Crossing(q1, mb, ma, q4));
        cs.push_back(Crossing(q2, q3, ma, mb));
      } else {
        cs.push_back(Crossing(mb, ma, q4, q1));
        cs.push_back(Crossing(q3, ma, mb, q2));
      }
      Diagram pat = Diagram::make("r2", std::move(cs), {}, {q1, q2, q3, q4});
      return splice(d, m.site, pat);
    }
    case ReidKind::R3:
      break;  // handled below
  }

  // R3: slide the strand bridging a triangle face across the opposite crossing
  auto fs = faces(d);
  if (m.face < 0 || m.face >= static_cast<int>(fs.faces.size()))
    throw std::invalid_argument("site does not match move kind");
  const auto& walk = fs.faces[m.face].walk;
  if (walk.size() != 3) throw std::invalid_argument("site does not match move kind");
  for (const auto& st : walk)
    if (st.boundary_arc || st.tail.kind != 0 || st.head.kind != 0)
      throw std::invalid_argument("site does not match move kind");
  // classify edges by over/under at their two triangle corners
  int ti = -1, bi = -1, mi = -1;
  for (int i = 0; i < 3; ++i) {
    const bool over_tail = walk[i].tail.slot % 2 == 1;
    const bool over_head = walk[i].head.slot % 2 == 1;
    if (over_tail && over_head) ti = i;
    else if (!over_tail && !over_head) bi = i;
    else mi = i;
  }
  if (ti < 0 || bi < 0 || mi < 0) throw std::invalid_argument("site does not match move kind");
  const int xT = walk[ti].tail.x, xT2 = walk[ti].head.x;
  const int xB = walk[bi].tail.x, xB2 = walk[bi].head.x;
  if (xT == xT2 || xB == xB2) throw std::invalid_argument("site does not match move kind");
  // corners: c_tm shared by T and M, c_tb by T and B, c_mb by M and B
  auto shares = [&](int i, int j) -> int {
    std::array<int, 2> ci{walk[i].tail.x, walk[i].head.x};
    std::array<int, 2> cj{walk[j].tail.x, walk[j].head.x};
    for (int a : ci)
      for (int b : cj)
        if (a == b) return a;
    return -1;
  };
  const int c_tm = shares(ti, mi), c_tb = shares(ti, bi), c_mb = shares(mi, bi);
  if (c_tm < 0 || c_tb < 0 || c_mb < 0 || c_tm == c_tb || c_tb == c_mb || c_tm == c_mb)
    throw std::invalid_argument("site does not match move kind");
  // the middle strand must be over B at c_mb and under T at c_tm
  auto slot_of = [&](int i, int x) {
    return walk[i].tail.x == x ? walk[i].tail.slot : walk[i].head.slot;
  };
  if (slot_of(mi, c_mb) % 2 != 1 || slot_of(mi, c_tm) % 2 != 0)
    throw std::invalid_argument("site does not match move kind");

  const int eT = walk[ti].edge, eM = walk[mi].edge, eB = walk[bi].edge;
  const auto& C = d.crossings;
  auto stub = [&](int x, int slot) { return C[x].s[(slot + 2) % 4]; };
  const int t1 = stub(c_tm, slot_of(ti, c_tm));
  const int t2 = stub(c_tb, slot_of(ti, c_tb));
  const int m1 = stub(c_tm, slot_of(mi, c_tm));
  const int m2 = stub(c_mb, slot_of(mi, c_mb));
  const int b1 = stub(c_mb, slot_of(bi, c_mb));
  const int b2 = stub(c_tb, slot_of(bi, c_tb));

  detail::Rewriter rw(d);
  const int eT2 = rw.fresh(), eM2 = rw.fresh(), eB2 = rw.fresh();
  // orientation: order of the triangle edges along the face walk fixes the
  // chirality of the rebuilt corner crossings
  int order = (mi + 1) % 3 == ti ? 0 : 1;  // 0: walk reads M, T, B
  std::vector<int> del{c_tm, c_tb, c_mb};
  std::sort(del.rbegin(), del.rend());
  for (int x : del) rw.d.crossings.erase(rw.d.crossings.begin() + x);
  if (order == 0) {
    rw.d.crossings.push_back(Crossing(b1, eT2, eB2, t1));
    rw.d.crossings.push_back(Crossing(m2, t2, eM2, eT2));
    rw.d.crossings.push_back(Crossing(eB2, eM2, b2, m1));
  } else {
    rw.d.crossings.push_back(Crossing(m2, eT2, eM2, t2));
    rw.d.crossings.push_back(Crossing(b1, t1, eB2, eT2));
    rw.d.crossings.push_back(Crossing(eB2, m1, b2, eM2));
  }
  (void)eT; (void)eM; (void)eB;
  return rw.finish(d.name);
}

inline std::pair<Diagram, std::vector<ReidemeisterMove>> simplify_traced(const Diagram& d0) {
  Diagram d = d0;
  std::vector<ReidemeisterMove> trace;
  while (true) {
    if (auto m = detail::find_monogon(d)) {
      ReidemeisterMove mv;
      mv.kind = ReidKind::R1Minus;
      mv.crossing = m->crossing;
      d = detail::remove_monogon(d, *m);
      trace.push_back(mv);
      continue;
    }
    if (auto bg = detail::find_bigon(d)) {
      ReidemeisterMove mv;
      mv.kind = ReidKind::R2Minus;
      mv.crossing = bg->x;
      mv.crossing2 = bg->y;
      d = detail::remove_bigon(d, *bg);
      trace.push_back(mv);
      continue;
    }
    break;
  }
  return {d, trace};
}

inline Diagram simplify(const Diagram& d) { return simplify_traced(d).first; }

// ---- canonical code ----

namespace detail {

// flat scratch space for code traversals; stamped so resets are O(1)
struct CodeScratch {
  std::vector<int> edge_id, edge_stamp;
  std::vector<int> cross_seen, cross_stamp;
  std::vector<std::array<End, 2>> ends;  // label -> its two ends
  std::vector<int> end_count;
  int stamp = 0;

  void prepare(const Diagram& d) {
    const int hi = d.max_label() + 1;
    edge_id.assign(hi, 0);
    edge_stamp.assign(hi, 0);
    cross_seen.assign(d.crossings.size() + 1, 0);
    cross_stamp.assign(d.crossings.size() + 1, 0);
    ends.assign(hi, {});
    end_count.assign(hi, 0);
    stamp = 0;
    for (int x = 0; x < static_cast<int>(d.crossings.size()); ++x)
      for (int s = 0; s < 4; ++s) {
        const int e = d.crossings[x].s[s];
        ends[e][end_count[e]++ & 1] = End{0, x, s};
      }
    for (int i = 0; i < static_cast<int>(d.boundary.size()); ++i) {
      const int e = d.boundary[i];
      ends[e][end_count[e]++ & 1] = End{1, i, -1};
    }
  }
};

// breadth-first slot table of one crossing component, abandoning the walk as
// soon as it exceeds the incumbent best; `reflect` reads the diagram turned
// over (rotations reversed, over and under exchanged)
inline bool component_code(const Diagram& d, int comp_size, int start, int start_slot,
                           bool reflect, CodeScratch& sc, std::string& out,
                           const std::string* best) {
  out.clear();
  ++sc.stamp;
  int next_edge_id = 1;
  bool strictly_better = best == nullptr || best->empty();
  std::size_t pos = 0;
  auto emit = [&](char b) {
    if (!strictly_better) {
      const char incumbent = (*best)[pos];
      if (b > incumbent) return false;
      if (b < incumbent) strictly_better = true;
    }
    out.push_back(b);
    ++pos;
    return true;
  };
  std::vector<std::pair<int, int>> queue;
  queue.reserve(comp_size);
  queue.emplace_back(start, start_slot);
  sc.cross_stamp[start] = sc.stamp;
  std::size_t qi = 0;
  while (qi < queue.size()) {
    auto [x, s0] = queue[qi++];
    if (!emit(static_cast<char>(((reflect ? s0 + 1 : s0) & 1) + 1))) return false;
    for (int k = 0; k < 4; ++k) {
      const int s = reflect ? ((s0 - k) % 4 + 4) % 4 : (s0 + k) % 4;
      const int e = d.crossings[x].s[s];
      int id;
      if (sc.edge_stamp[e] == sc.stamp) {
        id = sc.edge_id[e];
      } else {
        sc.edge_stamp[e] = sc.stamp;
        id = sc.edge_id[e] = next_edge_id++;
        if (id > 250) throw std::length_error("diagram too large for canonical code");
        for (const auto& other : sc.ends[e]) {
          if (other.kind != 0) continue;
          if (other.x == x && other.slot == s) continue;
          if (sc.cross_stamp[other.x] != sc.stamp) {
            sc.cross_stamp[other.x] = sc.stamp;
            queue.emplace_back(other.x, other.slot);
          }
        }
      }
      if (!emit(static_cast<char>(id))) return false;
    }
  }
  return static_cast<int>(queue.size()) == comp_size;
}

}  // namespace detail

// Relabeling-invariant identity of a diagram.  Links are additionally
// identified with themselves turned over (all rotations reversed, over and
// under exchanged); tangles keep their rigid boundary.
inline std::string canonical_code(const Diagram& d) {
  std::string head;
  head += "c" + std::to_string(d.crossings.size());
  head += "l" + std::to_string(d.loops.size());
  head += "b" + std::to_string(d.boundary.size());
  head += ";";

  auto ends = d.end_map();
  const int nc = static_cast<int>(d.crossings.size());

  if (d.is_tangle()) {
    // deterministic traversal seeded by the rigid boundary
    std::string body;
    std::map<int, int> edge_id;
    std::map<int, int> cross_id;
    std::vector<std::pair<int, int>> queue;
    for (int i = 0; i < d.endpoints(); ++i) {
      const int e = d.boundary[i];
      auto [it, fresh] = edge_id.emplace(e, static_cast<int>(edge_id.size()) + 1);
      body.push_back(static_cast<char>(it->second));
      if (fresh)
        for (const auto& other : ends.at(e))
          if (other.kind == 0 && !cross_id.count(other.x)) {
            cross_id[other.x] = static_cast<int>(cross_id.size());
            queue.emplace_back(other.x, other.slot);
          }
    }
    body += ";";
    std::size_t qi = 0;
    std::set<int> visited;
    while (qi < queue.size()) {
      auto [x, s0] = queue[qi++];
      visited.insert(x);
      body.push_back(static_cast<char>((s0 & 1) + 1));
      for (int k = 0; k < 4; ++k) {
        const int s = (s0 + k) % 4;
        const int e = d.crossings[x].s[s];
        auto [it, fresh] = edge_id.emplace(e, static_cast<int>(edge_id.size()) + 1);
        if (it->second > 250) throw std::length_error("diagram too large for canonical code");
        body.push_back(static_cast<char>(it->second));
        if (fresh)
          for (const auto& other : ends.at(e))
            if (other.kind == 0 && !cross_id.count(other.x)) {
              cross_id[other.x] = static_cast<int>(cross_id.size());
              queue.emplace_back(other.x, other.slot);
            }
      }
    }
    // closed sublink components unreachable from the boundary
    std::vector<std::string> rest;
    std::vector<char> used(nc, 0);
    for (int x : visited) used[x] = 1;
    Diagram sub;  // fake holder reusing the link path below
    for (int x0 = 0; x0 < nc; ++x0) {
      if (used[x0]) continue;
      // gather this component
      std::vector<int> comp;
      std::vector<int> stack{x0};
      used[x0] = 1;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        comp.push_back(x);
        for (int s = 0; s < 4; ++s)
          for (const auto& other : ends.at(d.crossings[x].s[s]))
            if (other.kind == 0 && !used[other.x]) {
              used[other.x] = 1;
              stack.push_back(other.x);
            }
      }
      std::string best, cand;
      detail::CodeScratch sc;
      sc.prepare(d);
      for (int x : comp)
        for (int s = 0; s < 4; ++s)
          if (detail::component_code(d, static_cast<int>(comp.size()), x, s, false, sc,
                                     cand, best.empty() ? nullptr : &best))
            best = cand;
      rest.push_back(best);
    }
    std::sort(rest.begin(), rest.end());
    for (auto& r : rest) body += ";" + r;
    return head + body;
  }

  // link: per-component minima, sorted, best of the two global readings
  std::vector<std::vector<int>> comps;
  {
    std::vector<char> used(nc, 0);
    for (int x0 = 0; x0 < nc; ++x0) {
      if (used[x0]) continue;
      std::vector<int> comp, stack{x0};
      used[x0] = 1;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        comp.push_back(x);
        for (int s = 0; s < 4; ++s)
          for (const auto& other : ends.at(d.crossings[x].s[s]))
            if (other.kind == 0 && !used[other.x]) {
              used[other.x] = 1;
              stack.push_back(other.x);
            }
      }
      comps.push_back(std::move(comp));
    }
  }
  std::string best_total;
  detail::CodeScratch sc;
  sc.prepare(d);
  std::string cand;
  for (bool reflect : {false, true}) {
    std::vector<std::string> parts;
    for (const auto& comp : comps) {
      std::string best;
      for (int x : comp)
        for (int s = 0; s < 4; ++s)
          if (detail::component_code(d, static_cast<int>(comp.size()), x, s, reflect, sc,
                                     cand, best.empty() ? nullptr : &best))
            best = cand;
      parts.push_back(best);
    }
    std::sort(parts.begin(), parts.end());
    std::string total;
    for (auto& p : parts) total += p + ";";
    if (best_total.empty() || total < best_total) best_total = total;
  }
  return head + best_total;
}

inline std::string code_hex(const std::string& code) {
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned char c : code) {
    out.push_back(hex[c >> 4]);
    out.push_back(hex[c & 15]);
  }
  return out;
}

}  // namespace moveq
