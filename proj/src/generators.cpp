#include "wallcheck/generators.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <tuple>

#include "wallcheck/embedding.hpp"
#include "wallcheck/util.hpp"

namespace wallcheck {

VertexId CondensedWall::zvert(int i) const {
  if (i < 0 || i > size) throw InputError("bottleneck index out of range");
  return z[i];
}

VertexId CondensedWall::u(int layer, int pos) const {
  if (layer < 1 || layer > size) throw InputError("layer out of range");
  int w = width();
  if (pos < 0) pos = w + 1 + pos;
  if (pos < 1 || pos > w) throw InputError("row position out of range");
  return rows[layer - 1][pos - 1];
}

std::vector<Edge> CondensedWall::jump_edge_list() const {
  std::vector<Edge> out;
  for (int i = 1; i <= size; ++i) out.emplace_back(z[i - 1], z[i]);
  return out;
}

std::vector<VertexId> CondensedWall::layer_vertices(int layer) const {
  if (layer < 1 || layer > size) throw InputError("layer out of range");
  std::vector<VertexId> out = rows[layer - 1];
  out.push_back(z[layer - 1]);
  out.push_back(z[layer]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> CondensedWall::layer_edges(int layer) const {
  auto verts = layer_vertices(layer);
  std::set<VertexId> inside(verts.begin(), verts.end());
  std::vector<Edge> out;
  for (VertexId v : verts)
    for (VertexId w : graph.neighbors(v))
      if (v < w && inside.count(w)) out.emplace_back(v, w);
  return out;
}

CondensedWall gen_condensed_wall(const CondensedWallSpec& spec) {
  int r = spec.size;
  if (r < 1) throw InputError("condensed wall size must be >= 1");
  CondensedWall w;
  w.size = r;
  w.jumps = spec.jump_edges;
  LabeledGraph g(std::string(spec.jump_edges ? "condensed-wall-" : "modified-condensed-wall-") + std::to_string(r));

  w.a = g.add_vertex(Role::terminal(TerminalName::A));
  w.b = g.add_vertex(Role::terminal(TerminalName::B));
  for (int i = 0; i <= r; ++i) w.z.push_back(g.add_vertex(Role::bottleneck(i)));
  w.rows.resize(r);
  for (int j = 1; j <= r; ++j)
    for (int k = 1; k <= 2 * r; ++k)
      w.rows[j - 1].push_back(g.add_vertex(Role::row(j, k)));

  for (int j = 1; j <= r; ++j) {
    const auto& row = w.rows[j - 1];
    for (int k = 1; k < 2 * r; ++k) g.add_edge(row[k - 1], row[k]);
    for (int i = 1; i <= r; ++i) {
      g.add_edge(w.z[j - 1], row[2 * i - 2]);  // odd positions to z_{j-1}
      g.add_edge(w.z[j], row[2 * i - 1]);      // even positions to z_j
    }
    g.add_edge(w.a, row.front(), EdgeClass::TerminalAttachment);
    g.add_edge(w.b, row.back(), EdgeClass::TerminalAttachment);
  }
  if (spec.jump_edges)
    for (int i = 1; i <= r; ++i)
      g.add_edge(w.z[i - 1], w.z[i], EdgeClass::JumpEdge);

  w.graph = std::move(g);
  return w;
}

// ---------------------------------------------------------------------------

LabeledGraph gen_elementary_grid(int m, int n) {
  if (m < 1 || n < 1) throw InputError("grid dimensions must be >= 1");
  LabeledGraph g("grid-" + std::to_string(m) + "x" + std::to_string(n));
  auto id = [&](int i, int j) { return VertexId((i - 1) * n + (j - 1)); };
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) g.add_vertex(id(i, j));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i < m) g.add_edge(id(i, j), id(i + 1, j));
      if (j < n) g.add_edge(id(i, j), id(i, j + 1));
    }
  return g;
}

namespace {

void compute_brick_adjacency(BrickCertificate& cert) {
  std::size_t nb = cert.bricks.size();
  std::vector<std::set<VertexId>> vsets(nb);
  for (std::size_t i = 0; i < nb; ++i)
    vsets[i] = {cert.bricks[i].cycle.begin(), cert.bricks[i].cycle.end()};
  cert.adjacent.assign(nb, {});
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = i + 1; j < nb; ++j) {
      bool share = std::any_of(vsets[i].begin(), vsets[i].end(),
                               [&](VertexId v) { return vsets[j].count(v); });
      if (share) {
        cert.adjacent[i].push_back((int)j);
        cert.adjacent[j].push_back((int)i);
      }
    }
}

}  // namespace

Wall gen_elementary_wall(int m, int n) {
  if (m < 1 || n < 1) throw InputError("wall dimensions must be >= 1");
  Wall w;
  w.rows = m;
  w.cols = n;
  int gm = m + 1, gn = 2 * n + 2;
  LabeledGraph g("wall-" + std::to_string(m) + "x" + std::to_string(n));
  auto id = [&](int i, int j) { return VertexId((i - 1) * gn + (j - 1)); };
  for (int i = 1; i <= gm; ++i)
    for (int j = 1; j <= gn; ++j) g.add_vertex(id(i, j));
  for (int i = 1; i <= gm; ++i)
    for (int j = 1; j < gn; ++j) g.add_edge(id(i, j), id(i, j + 1));
  // Keep the vertical edge between rows i,i+1 at column j only when the
  // column parity matches the gap parity.
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= gn; ++j)
      if ((i + j) % 2 == 0) g.add_edge(id(i, j), id(i + 1, j));

  // Degree-1 cleanup runs to a fixpoint; tiny sizes can cascade.
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v : g.vertices())
      if (g.degree(v) <= 1) {
        g.remove_vertex(v);
        changed = true;
      }
  }

  for (int i = 1; i <= gm; ++i)
    for (int j = 1; j <= gn; ++j)
      if (g.has_vertex(id(i, j))) w.at[{i, j}] = id(i, j);

  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      int c = (i % 2 == 1) ? 2 * j - 1 : 2 * j;
      Brick b;
      b.gap = i;
      b.index = j;
      b.cycle = {id(i, c),     id(i, c + 1),     id(i, c + 2),
                 id(i + 1, c + 2), id(i + 1, c + 1), id(i + 1, c)};
      b.outer = (i == 1 || i == m || j == 1 || j == n);
      w.cert.bricks.push_back(std::move(b));
    }
  compute_brick_adjacency(w.cert);
  for (Edge e : g.edges()) w.expansion[e] = Path({e.u, e.v});
  w.graph = std::move(g);
  return w;
}

Wall gen_wall(const WallSpec& spec) {
  Wall w = gen_elementary_wall(spec.rows, spec.cols);
  for (const auto& [e, t] : spec.subdivision) {
    if (t < 0) throw InputError("subdivision count must be >= 0");
    if (!w.graph.has_edge(e)) throw InputError("subdivision plan names unknown edge");
  }
  for (const auto& [e, t] : spec.subdivision) {
    if (t == 0) continue;
    VertexId before = w.graph.next_id();
    w.graph = subdivide_edge(w.graph, e, t);
    std::vector<VertexId> mids;
    for (VertexId v = before; v < w.graph.next_id(); ++v) mids.push_back(v);
    std::vector<VertexId> pathv{e.u};
    pathv.insert(pathv.end(), mids.begin(), mids.end());
    pathv.push_back(e.v);
    w.expansion[e] = Path(pathv);
  }
  // Rebuild brick cycles with subdivided edges spliced in.
  for (Brick& b : w.cert.bricks) {
    std::vector<VertexId> cyc;
    for (std::size_t i = 0; i < b.cycle.size(); ++i) {
      VertexId u = b.cycle[i], v = b.cycle[(i + 1) % b.cycle.size()];
      const Path& p = w.expansion.at(Edge(u, v));
      std::vector<VertexId> seg = p.verts;
      if (seg.front() != u) std::reverse(seg.begin(), seg.end());
      cyc.insert(cyc.end(), seg.begin(), seg.end() - 1);
    }
    b.cycle = std::move(cyc);
  }
  compute_brick_adjacency(w.cert);
  return w;
}

Wall body(const Wall& wall) {
  std::vector<int> keep;
  for (std::size_t i = 0; i < wall.cert.bricks.size(); ++i)
    if (wall.cert.adjacent[i].size() >= 3) keep.push_back((int)i);

  Wall out;
  out.rows = wall.rows;
  out.cols = wall.cols;
  LabeledGraph g(wall.graph.name() + "-body");
  std::set<VertexId> verts;
  std::set<Edge> edges;
  for (int i : keep) {
    const auto& cyc = wall.cert.bricks[i].cycle;
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      verts.insert(cyc[k]);
      edges.insert(Edge(cyc[k], cyc[(k + 1) % cyc.size()]));
    }
  }
  for (VertexId v : verts) g.add_vertex(v, wall.graph.role(v));
  for (Edge e : edges) g.add_edge(e.u, e.v, wall.graph.edge_class(e));
  for (int i : keep) out.cert.bricks.push_back(wall.cert.bricks[i]);
  compute_brick_adjacency(out.cert);
  for (const auto& [pos, v] : wall.at)
    if (verts.count(v)) out.at[pos] = v;
  for (const auto& [e, p] : wall.expansion) {
    bool inside = true;
    for (VertexId v : p.verts) inside &= verts.count(v) != 0;
    if (inside && p.verts.size() >= 2) {
      bool all_edges = true;
      for (Edge pe : p.edges()) all_edges &= edges.count(pe) != 0;
      if (all_edges) out.expansion[e] = p;
    }
  }
  out.graph = std::move(g);
  return out;
}

// ---------------------------------------------------------------------------
// Brick walls

std::optional<BrickWallId> brick_wall_from_name(const std::string& name) {
  static const std::map<std::string, BrickWallId> m = {
      {"B1", BrickWallId::B1},   {"B2", BrickWallId::B2},
      {"B3", BrickWallId::B3},   {"B4", BrickWallId::B4},
      {"B5", BrickWallId::B5},   {"B6", BrickWallId::B6},
      {"B7", BrickWallId::B7},   {"B8", BrickWallId::B8},
      {"B9", BrickWallId::B9},   {"B10", BrickWallId::B10},
      {"B1sq", BrickWallId::B1Sq}};
  auto it = m.find(name);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

std::string brick_wall_name(BrickWallId id) {
  switch (id) {
    case BrickWallId::B1: return "B1";
    case BrickWallId::B2: return "B2";
    case BrickWallId::B3: return "B3";
    case BrickWallId::B4: return "B4";
    case BrickWallId::B5: return "B5";
    case BrickWallId::B6: return "B6";
    case BrickWallId::B7: return "B7";
    case BrickWallId::B8: return "B8";
    case BrickWallId::B9: return "B9";
    case BrickWallId::B10: return "B10";
    case BrickWallId::B1Sq: return "B1sq";
  }
  return "?";
}

int brick_wall_count(BrickWallId id) {
  switch (id) {
    case BrickWallId::B1: return 1;
    case BrickWallId::B2: return 2;
    case BrickWallId::B3: return 3;
    case BrickWallId::B4: return 4;
    case BrickWallId::B5: return 5;
    case BrickWallId::B6: return 6;
    case BrickWallId::B7: return 7;
    case BrickWallId::B8: return 8;
    case BrickWallId::B9: return 9;
    case BrickWallId::B10: return 10;
    case BrickWallId::B1Sq: return 2;
  }
  return 0;
}

namespace {

/// Hexagon centers in honeycomb coordinates: x in half-width units, y in
/// half-height units. The hexagon at (cx,cy) has corners (cx,cy), (cx,cy+2),
/// (cx+1,cy+3), (cx+2,cy+2), (cx+2,cy), (cx+1,cy-1) in cyclic order.
std::vector<std::pair<int, int>> hex_centers(BrickWallId id) {
  std::vector<std::pair<int, int>> c = {{0, 0}};
  auto upto = [&](int n) {
    const std::pair<int, int> extra[] = {{-2, 0}, {-1, 3}, {-1, -3}, {1, -3},
                                         {1, 3},  {2, 0},  {3, -3},  {3, 3},
                                         {4, 0}};
    for (int i = 0; i + 1 < n; ++i) c.push_back(extra[i]);
  };
  upto(brick_wall_count(id));
  return c;
}

std::array<std::pair<int, int>, 6> hex_corners(std::pair<int, int> c) {
  auto [x, y] = c;
  return {{{x, y}, {x, y + 2}, {x + 1, y + 3}, {x + 2, y + 2}, {x + 2, y}, {x + 1, y - 1}}};
}

}  // namespace

BrickWall gen_brick_wall(BrickWallId id, const std::map<Edge, int>& plan,
                         int p1_len, int p2_len) {
  BrickWall bw;
  LabeledGraph g(brick_wall_name(id));

  if (id == BrickWallId::B1Sq) {
    if (p1_len < 1 || p2_len < 1) throw InputError("connecting path lengths must be >= 1");
    // Two disjoint hexagons joined by paths at antipodal corners 0 and 3.
    std::array<std::vector<VertexId>, 2> hex;
    for (int h = 0; h < 2; ++h) {
      for (int k = 0; k < 6; ++k) hex[h].push_back(g.add_vertex());
      for (int k = 0; k < 6; ++k) g.add_edge(hex[h][k], hex[h][(k + 1) % 6]);
    }
    auto join = [&](VertexId from, VertexId to, int len) {
      VertexId prev = from;
      for (int i = 0; i + 1 < len; ++i) {
        VertexId m = g.add_vertex();
        g.add_edge(prev, m);
        prev = m;
      }
      g.add_edge(prev, to);
    };
    join(hex[0][0], hex[1][0], p1_len);
    join(hex[0][3], hex[1][3], p2_len);
    for (int h = 0; h < 2; ++h) {
      Brick b;
      b.gap = 1;
      b.index = h + 1;
      b.cycle = hex[h];
      b.outer = true;
      bw.cert.bricks.push_back(b);
    }
    compute_brick_adjacency(bw.cert);
    for (Edge e : g.edges()) bw.expansion[e] = Path({e.u, e.v});
    bw.graph = std::move(g);
    return bw;
  }

  auto centers = hex_centers(id);
  std::set<std::pair<int, int>> coordset;
  for (auto c : centers)
    for (auto p : hex_corners(c)) coordset.insert(p);
  for (auto p : coordset) {
    VertexId v = g.add_vertex();
    bw.coords[v] = p;
    bw.at[p] = v;
  }
  std::set<Edge> edgeset;
  for (auto c : centers) {
    auto corners = hex_corners(c);
    for (int k = 0; k < 6; ++k)
      edgeset.insert(Edge(bw.at[corners[k]], bw.at[corners[(k + 1) % 6]]));
  }
  for (Edge e : edgeset) g.add_edge(e.u, e.v);

  std::map<Edge, int> edge_brick_count;
  for (std::size_t i = 0; i < centers.size(); ++i) {
    auto corners = hex_corners(centers[i]);
    Brick b;
    b.gap = 1;
    b.index = (int)i + 1;
    for (auto p : corners) b.cycle.push_back(bw.at[p]);
    for (int k = 0; k < 6; ++k)
      edge_brick_count[Edge(b.cycle[k], b.cycle[(k + 1) % 6])]++;
    bw.cert.bricks.push_back(std::move(b));
  }
  for (Brick& b : bw.cert.bricks) {
    b.outer = false;
    for (int k = 0; k < 6; ++k)
      if (edge_brick_count[Edge(b.cycle[k], b.cycle[(k + 1) % 6])] == 1)
        b.outer = true;
  }
  compute_brick_adjacency(bw.cert);
  for (Edge e : g.edges()) bw.expansion[e] = Path({e.u, e.v});

  for (const auto& [e, t] : plan) {
    if (!g.has_edge(e)) throw InputError("subdivision plan names unknown edge");
    if (t == 0) continue;
    VertexId before = g.next_id();
    g = subdivide_edge(g, e, t);
    std::vector<VertexId> pathv{e.u};
    for (VertexId v = before; v < g.next_id(); ++v) pathv.push_back(v);
    pathv.push_back(e.v);
    bw.expansion[e] = Path(pathv);
  }
  for (Brick& b : bw.cert.bricks) {
    std::vector<VertexId> cyc;
    for (std::size_t i = 0; i < b.cycle.size(); ++i) {
      VertexId u = b.cycle[i], v = b.cycle[(i + 1) % b.cycle.size()];
      std::vector<VertexId> seg = bw.expansion.at(Edge(u, v)).verts;
      if (seg.front() != u) std::reverse(seg.begin(), seg.end());
      cyc.insert(cyc.end(), seg.begin(), seg.end() - 1);
    }
    b.cycle = std::move(cyc);
  }
  compute_brick_adjacency(bw.cert);
  bw.graph = std::move(g);
  return bw;
}

// ---------------------------------------------------------------------------
// Terminal edges

namespace {

struct BrickIncidence {
  // For each vertex (and edge) the set of bricks it lies on, as bit indices.
  std::map<VertexId, std::vector<int>> by_vertex;
  std::map<Edge, std::vector<int>> by_edge;

  explicit BrickIncidence(const Wall& w) {
    for (std::size_t i = 0; i < w.cert.bricks.size(); ++i) {
      const auto& cyc = w.cert.bricks[i].cycle;
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        by_vertex[cyc[k]].push_back((int)i);
        by_edge[Edge(cyc[k], cyc[(k + 1) % cyc.size()])].push_back((int)i);
      }
    }
  }
};

}  // namespace

int min_bricks_between(const Wall& wall, Edge e1, Edge e2,
                       std::uint64_t budget, bool edge_incidence) {
  if (!wall.graph.has_edge(e1) || !wall.graph.has_edge(e2))
    throw InputError("terminal edge not in wall");
  BrickIncidence inc(wall);
  std::set<int> excluded;
  for (int b : inc.by_edge.at(e1)) excluded.insert(b);
  for (int b : inc.by_edge.at(e2)) excluded.insert(b);

  const int cap = 7;  // anything >= 7 is equivalent for the condition
  int best = cap;
  std::uint64_t nodes = 0;
  std::set<VertexId> targets{e2.u, e2.v};
  std::set<VertexId> onpath;

  auto bricks_of = [&](VertexId v, VertexId prev, bool first) {
    std::set<int> bs;
    if (edge_incidence) {
      if (!first) {
        auto it = inc.by_edge.find(Edge(prev, v));
        if (it != inc.by_edge.end()) bs.insert(it->second.begin(), it->second.end());
      }
    } else {
      auto it = inc.by_vertex.find(v);
      if (it != inc.by_vertex.end()) bs.insert(it->second.begin(), it->second.end());
    }
    return bs;
  };

  std::function<void(VertexId, VertexId, bool, std::set<int>)> dfs =
      [&](VertexId v, VertexId prev, bool first, std::set<int> touched) {
        if (++nodes > budget) throw BudgetError("min_bricks_between: node budget exceeded");
        for (int b : bricks_of(v, prev, first))
          if (!excluded.count(b)) touched.insert(b);
        if ((int)touched.size() >= best) return;
        if (targets.count(v)) {
          best = std::min(best, (int)touched.size());
          return;
        }
        onpath.insert(v);
        for (VertexId w : wall.graph.neighbors(v)) {
          if (onpath.count(w)) continue;
          dfs(w, v, false, touched);
        }
        onpath.erase(v);
      };

  for (VertexId s : {e1.u, e1.v}) {
    onpath.clear();
    dfs(s, s, true, {});
  }
  return best;
}

namespace {

std::pair<int, int> coord_of(const Wall& w, VertexId v) {
  for (const auto& [pos, id] : w.at)
    if (id == v) return pos;
  throw InputError("vertex has no grid coordinate");
}

}  // namespace

TerminalEdges pick_terminal_edges(const Wall& wall, std::uint64_t budget) {
  if (wall.rows < 4 || wall.cols < 4 || std::max(wall.rows, wall.cols) < 6)
    throw InputError("wall must have size at least 6x4");
  Wall b = body(wall);

  // Outer-face edges of the body: edges lying on exactly one retained brick.
  std::map<Edge, int> count;
  for (const auto& brick : b.cert.bricks)
    for (std::size_t k = 0; k < brick.cycle.size(); ++k)
      count[Edge(brick.cycle[k], brick.cycle[(k + 1) % brick.cycle.size()])]++;
  std::vector<Edge> outer;
  for (const auto& [e, c] : count)
    if (c == 1) outer.push_back(e);
  if (outer.empty()) throw InputError("body has no outer-face edges");

  auto key = [&](Edge e) {
    auto [r1, c1] = coord_of(b, e.u);
    auto [r2, c2] = coord_of(b, e.v);
    return std::tuple<int, int, int, int, int>(r1 + c1 + r2 + c2, r1, c1, r2, c2);
  };
  Edge e1 = *std::min_element(outer.begin(), outer.end(),
                              [&](Edge x, Edge y) { return key(x) < key(y); });
  Edge e2 = *std::max_element(outer.begin(), outer.end(),
                              [&](Edge x, Edge y) { return key(x) < key(y); });

  int m = min_bricks_between(wall, e1, e2, budget);
  if (m < 7)
    throw InputError("canonical terminal edges fail the seven-brick condition");
  return {e1, e2};
}

// ---------------------------------------------------------------------------
// Orientation and G*

namespace {

/// Linkage-existence preserving reduction: drop degree-0/1 non-terminals and
/// suppress degree-2 non-terminals (dropping the chord when its endpoints
/// are already adjacent).
LabeledGraph reduce_for_linkage(const LabeledGraph& g,
                                const std::set<VertexId>& keep) {
  LabeledGraph out = g;
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v : out.vertices()) {
      if (keep.count(v)) continue;
      std::size_t d = out.degree(v);
      if (d <= 1) {
        out.remove_vertex(v);
        changed = true;
      } else if (d == 2) {
        auto nb = out.neighbors(v);
        VertexId x = nb[0], y = nb[1];
        out.remove_vertex(v);
        if (!out.has_edge(Edge(x, y))) out.add_edge(x, y);
        changed = true;
      }
    }
  }
  return out;
}

}  // namespace

bool check_terminal_orientation(const LabeledGraph& exterior,
                                std::uint64_t budget) {
  VertexId a = require_terminal(exterior, TerminalName::A);
  VertexId b = require_terminal(exterior, TerminalName::B);
  VertexId c = require_terminal(exterior, TerminalName::C);
  VertexId d = require_terminal(exterior, TerminalName::D);
  LabeledGraph red = reduce_for_linkage(exterior, {a, b, c, d});
  // Every a-c path separates b from d iff there is no vertex-disjoint
  // (a-c, b-d) pair.
  auto res = find_disjoint_pair(red, a, c, b, d, budget);
  if (res.outcome == SearchOutcome::BudgetExceeded)
    throw BudgetError("check_terminal_orientation: node budget exceeded");
  return res.outcome == SearchOutcome::None;
}

LabeledGraph shift_ids(const LabeledGraph& g, VertexId offset) {
  LabeledGraph out(g.name());
  for (VertexId v : g.vertices()) {
    Role r = g.role(v);
    if (r.kind == RoleKind::SubdivisionVertex)
      r.origin = Edge(r.origin.u + offset, r.origin.v + offset);
    out.add_vertex(v + offset, r);
  }
  for (Edge e : g.edges())
    out.add_edge(e.u + offset, e.v + offset, g.edge_class(e));
  return out;
}

LabeledGraph disjoint_union(const LabeledGraph& a, const LabeledGraph& b) {
  LabeledGraph out = a;
  for (VertexId v : b.vertices()) out.add_vertex(v, b.role(v));
  for (Edge e : b.edges()) out.add_edge(e.u, e.v, b.edge_class(e));
  return out;
}

GStar build_gstar(const GStarSpec& spec) {
  if (spec.fold < 1) throw InputError("fold must be >= 1");
  GStar gs;
  gs.fold = spec.fold;
  gs.base = gen_wall(spec.wall);
  TerminalEdges te = spec.terminal_edges ? *spec.terminal_edges
                                         : pick_terminal_edges(gs.base, spec.budget);
  gs.e1 = te.e1;
  gs.e2 = te.e2;

  LabeledGraph h = delete_edges(gs.base.graph, {gs.e1, gs.e2});
  gs.a = std::min(gs.e1.u, gs.e1.v);
  gs.b = std::max(gs.e1.u, gs.e1.v);

  // Decide the c/d pairing on the un-folded exterior; linkage existence is
  // unchanged by replacing each edge with a bundle of length-2 paths.
  auto oriented = [&](VertexId c, VertexId d) {
    LabeledGraph probe = h;
    probe.set_role(gs.a, Role::terminal(TerminalName::A));
    probe.set_role(gs.b, Role::terminal(TerminalName::B));
    probe.set_role(c, Role::terminal(TerminalName::C));
    probe.set_role(d, Role::terminal(TerminalName::D));
    return std::pair(probe, check_terminal_orientation(probe, spec.budget));
  };
  VertexId c = std::min(gs.e2.u, gs.e2.v), d = std::max(gs.e2.u, gs.e2.v);
  auto [probe, ok] = oriented(c, d);
  if (!ok) {
    std::swap(c, d);
    std::tie(probe, ok) = oriented(c, d);
    if (!ok) throw InputError("no terminal orientation satisfies the separation rule");
  }
  gs.c = c;
  gs.d = d;
  gs.exterior_base = probe;

  LabeledGraph folded = r_fold(gs.exterior_base, spec.fold);
  CondensedWall cw = gen_condensed_wall({spec.fold, true});
  VertexId off = folded.next_id();
  LabeledGraph g = disjoint_union(folded, shift_ids(cw.graph, off));

  // Merge wall terminals into the exterior's endpoints; the exterior ids
  // survive and keep their Terminal roles.
  struct Pair { VertexId ext, wallv; };
  const Pair pairs[] = {{gs.a, cw.a + off},
                        {gs.b, cw.b + off},
                        {gs.c, cw.z.front() + off},
                        {gs.d, cw.z.back() + off}};
  for (auto [ext, wallv] : pairs) {
    LabeledGraph merged = identify_vertices(g, ext, wallv);
    g = std::move(merged);
  }

  gs.wall_part.size = cw.size;
  gs.wall_part.jumps = cw.jumps;
  gs.wall_part.a = gs.a;
  gs.wall_part.b = gs.b;
  for (std::size_t i = 0; i < cw.z.size(); ++i) {
    VertexId zv = cw.z[i] + off;
    if (i == 0) zv = gs.c;
    if (i + 1 == cw.z.size()) zv = gs.d;
    gs.wall_part.z.push_back(zv);
  }
  gs.wall_part.rows.resize(cw.size);
  for (int j = 0; j < cw.size; ++j)
    for (VertexId u : cw.rows[j]) gs.wall_part.rows[j].push_back(u + off);
  gs.wall_part.graph = g;  // address map shares the full graph
  gs.graph = std::move(g);
  return gs;
}

// ---------------------------------------------------------------------------
// Exterior hosts

CdPathHost gen_wall_with_cd_paths(int size, int count, bool jumps) {
  if (count < 0) throw InputError("path count must be >= 0");
  CdPathHost host;
  host.wall = gen_condensed_wall({size, jumps});
  LabeledGraph g = host.wall.graph;
  g.set_name(g.name() + "-cd" + std::to_string(count));
  for (int k = 0; k < count; ++k) {
    VertexId p = g.add_vertex();
    g.add_edge(host.wall.c(), p);
    g.add_edge(p, host.wall.d());
    host.cd_paths.push_back({host.wall.c(), p, host.wall.d()});
  }
  host.graph = std::move(g);
  host.wall.graph = host.graph;
  return host;
}

namespace {

/// Adds `fold` midpoints between u and v, tagged as subdivision vertices of
/// the uv "bundle".
std::vector<VertexId> add_bundle(LabeledGraph& g, VertexId u, VertexId v, int fold) {
  std::vector<VertexId> mids;
  for (int k = 0; k < fold; ++k) {
    VertexId m = g.add_vertex(Role::subdivision(Edge(u, v)));
    g.add_edge(u, m);
    g.add_edge(m, v);
    mids.push_back(m);
  }
  return mids;
}

}  // namespace

ExteriorBrickHost gen_wall_with_exterior_brick(int size, int fold) {
  if (fold < 1) throw InputError("fold must be >= 1");
  ExteriorBrickHost host;
  host.fold = fold;
  host.wall = gen_condensed_wall({size, false});
  LabeledGraph g = host.wall.graph;
  g.set_name(g.name() + "-xbrick" + std::to_string(fold));
  for (int k = 0; k < 6; ++k) host.hex.push_back(g.add_vertex());
  for (int k = 0; k < 6; ++k)
    add_bundle(g, host.hex[k], host.hex[(k + 1) % 6], fold);
  add_bundle(g, host.hex[0], host.wall.d(), fold);
  add_bundle(g, host.hex[1], host.wall.b, fold);
  add_bundle(g, host.hex[2], host.wall.c(), fold);
  host.graph = std::move(g);
  host.wall.graph = host.graph;
  return host;
}

VertexId ExteriorBrickHost::hex_mid(int i, int k) const {
  auto mids = fold_midpoints(graph, Edge(hex[i], hex[(i + 1) % 6]));
  return mids.at(k);
}

VertexId ExteriorBrickHost::attach_mid(int corner, int k) const {
  VertexId t = corner == 0 ? wall.d() : corner == 1 ? wall.b : wall.c();
  auto mids = fold_midpoints(graph, Edge(hex[corner], t));
  return mids.at(k);
}

ExteriorB2Host gen_wall_with_exterior_b2(int size, int fold) {
  if (fold < 1) throw InputError("fold must be >= 1");
  ExteriorB2Host host;
  host.fold = fold;
  host.wall = gen_condensed_wall({size, false});
  LabeledGraph g = host.wall.graph;
  g.set_name(g.name() + "-xb2-" + std::to_string(fold));
  for (int k = 0; k < 6; ++k) host.ring.push_back(g.add_vertex());
  for (int k = 0; k < 4; ++k) host.tail.push_back(g.add_vertex());
  for (int k = 0; k < 6; ++k)
    add_bundle(g, host.ring[k], host.ring[(k + 1) % 6], fold);
  std::vector<VertexId> second{host.ring[5], host.tail[0], host.tail[1],
                               host.tail[2], host.tail[3], host.ring[0]};
  for (int k = 0; k + 1 < (int)second.size(); ++k)
    add_bundle(g, second[k], second[k + 1], fold);
  add_bundle(g, host.ring[1], host.wall.c(), fold);
  add_bundle(g, host.ring[2], host.wall.b, fold);
  add_bundle(g, host.tail[3], host.wall.a, fold);
  add_bundle(g, host.tail[2], host.wall.d(), fold);
  host.graph = std::move(g);
  host.wall.graph = host.graph;
  return host;
}

VertexId ExteriorB2Host::ring_mid(int i, int k) const {
  auto mids = fold_midpoints(graph, Edge(ring[i], ring[(i + 1) % 6]));
  return mids.at(k);
}

VertexId ExteriorB2Host::tail_mid(int i, int k) const {
  std::vector<VertexId> second{ring[5], tail[0], tail[1], tail[2], tail[3], ring[0]};
  auto mids = fold_midpoints(graph, Edge(second[i], second[i + 1]));
  return mids.at(k);
}

VertexId ExteriorB2Host::attach_mid(TerminalName t, int k) const {
  VertexId from, to;
  switch (t) {
    case TerminalName::C: from = ring[1]; to = wall.c(); break;
    case TerminalName::B: from = ring[2]; to = wall.b; break;
    case TerminalName::A: from = tail[3]; to = wall.a; break;
    case TerminalName::D: from = tail[2]; to = wall.d(); break;
    default: throw InputError("bad attachment terminal");
  }
  auto mids = fold_midpoints(graph, Edge(from, to));
  return mids.at(k);
}

}  // namespace wallcheck
