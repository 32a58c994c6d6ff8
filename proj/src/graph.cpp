#include "wallcheck/graph.hpp"

#include <algorithm>
#include <set>

namespace wallcheck {

char terminal_letter(TerminalName t) {
  switch (t) {
    case TerminalName::A: return 'a';
    case TerminalName::B: return 'b';
    case TerminalName::C: return 'c';
    case TerminalName::D: return 'd';
  }
  return '?';
}

std::optional<TerminalName> terminal_from_letter(char c) {
  switch (c) {
    case 'a': return TerminalName::A;
    case 'b': return TerminalName::B;
    case 'c': return TerminalName::C;
    case 'd': return TerminalName::D;
  }
  return std::nullopt;
}

Role Role::terminal(TerminalName t) {
  Role r;
  r.kind = RoleKind::Terminal;
  r.which = t;
  return r;
}

Role Role::bottleneck(int index) {
  Role r;
  r.kind = RoleKind::Bottleneck;
  r.index = index;
  return r;
}

Role Role::row(int layer, int position) {
  Role r;
  r.kind = RoleKind::RowVertex;
  r.layer = layer;
  r.position = position;
  return r;
}

Role Role::subdivision(Edge origin) {
  Role r;
  r.kind = RoleKind::SubdivisionVertex;
  r.origin = origin;
  return r;
}

Role Role::branch() {
  Role r;
  r.kind = RoleKind::BranchVertex;
  return r;
}

VertexId LabeledGraph::add_vertex(Role role) {
  VertexId id = next_;
  add_vertex(id, role);
  return id;
}

void LabeledGraph::add_vertex(VertexId id, Role role) {
  if (adj_.count(id)) throw InputError("vertex already present: " + std::to_string(id));
  adj_[id] = {};
  if (role.kind != RoleKind::Plain) roles_[id] = role;
  if (id >= next_) next_ = id + 1;
}

void LabeledGraph::add_edge(VertexId u, VertexId v, EdgeClass cls) {
  if (u == v) throw InputError("loop edge rejected at vertex " + std::to_string(u));
  if (!has_vertex(u) || !has_vertex(v)) throw InputError("edge endpoint not in graph");
  Edge e(u, v);
  if (has_edge(e)) throw InputError("parallel edge rejected");
  auto insert_sorted = [](std::vector<VertexId>& vec, VertexId x) {
    vec.insert(std::lower_bound(vec.begin(), vec.end(), x), x);
  };
  insert_sorted(adj_[u], v);
  insert_sorted(adj_[v], u);
  ++edge_count_;
  if (cls != EdgeClass::Plain) classes_[e] = cls;
}

void LabeledGraph::remove_edge(Edge e) {
  if (!has_edge(e)) throw InputError("unknown edge");
  auto erase_from = [](std::vector<VertexId>& vec, VertexId x) {
    vec.erase(std::lower_bound(vec.begin(), vec.end(), x));
  };
  erase_from(adj_[e.u], e.v);
  erase_from(adj_[e.v], e.u);
  --edge_count_;
  classes_.erase(e);
}

void LabeledGraph::remove_vertex(VertexId v) {
  if (!has_vertex(v)) throw InputError("unknown vertex: " + std::to_string(v));
  auto nbrs = adj_[v];
  for (VertexId w : nbrs) remove_edge(Edge(v, w));
  adj_.erase(v);
  roles_.erase(v);
}

void LabeledGraph::set_role(VertexId v, Role role) {
  if (!has_vertex(v)) throw InputError("unknown vertex: " + std::to_string(v));
  if (role.kind == RoleKind::Plain)
    roles_.erase(v);
  else
    roles_[v] = role;
}

void LabeledGraph::set_edge_class(Edge e, EdgeClass cls) {
  if (!has_edge(e)) throw InputError("unknown edge");
  if (cls == EdgeClass::Plain)
    classes_.erase(e);
  else
    classes_[e] = cls;
}

bool LabeledGraph::has_edge(Edge e) const {
  auto it = adj_.find(e.u);
  if (it == adj_.end()) return false;
  return std::binary_search(it->second.begin(), it->second.end(), e.v);
}

std::vector<VertexId> LabeledGraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(adj_.size());
  for (const auto& [v, _] : adj_) out.push_back(v);
  return out;
}

std::vector<Edge> LabeledGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (const auto& [v, nbrs] : adj_)
    for (VertexId w : nbrs)
      if (v < w) out.emplace_back(v, w);
  return out;
}

const std::vector<VertexId>& LabeledGraph::neighbors(VertexId v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw InputError("unknown vertex: " + std::to_string(v));
  return it->second;
}

std::size_t LabeledGraph::max_degree() const {
  std::size_t d = 0;
  for (const auto& [_, nbrs] : adj_) d = std::max(d, nbrs.size());
  return d;
}

Role LabeledGraph::role(VertexId v) const {
  auto it = roles_.find(v);
  return it == roles_.end() ? Role{} : it->second;
}

EdgeClass LabeledGraph::edge_class(Edge e) const {
  auto it = classes_.find(e);
  return it == classes_.end() ? EdgeClass::Plain : it->second;
}

std::optional<VertexId> LabeledGraph::find_terminal(TerminalName t) const {
  for (const auto& [v, r] : roles_)
    if (r.kind == RoleKind::Terminal && r.which == t) return v;
  return std::nullopt;
}

bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
  return a.name_ == b.name_ && a.adj_ == b.adj_ && a.roles_ == b.roles_ &&
         a.classes_ == b.classes_;
}

bool Path::valid_in(const LabeledGraph& g) const {
  if (verts.size() < 2) return false;
  std::set<VertexId> seen;
  for (VertexId v : verts)
    if (!seen.insert(v).second) return false;
  for (std::size_t i = 0; i + 1 < verts.size(); ++i)
    if (!g.has_edge(Edge(verts[i], verts[i + 1]))) return false;
  return true;
}

std::vector<Edge> Path::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < verts.size(); ++i)
    out.emplace_back(verts[i], verts[i + 1]);
  return out;
}

LabeledGraph subdivide_edge(const LabeledGraph& g, Edge e, int inner) {
  if (!g.has_edge(e)) throw InputError("subdivide_edge: unknown edge");
  if (inner < 0) throw InputError("subdivide_edge: negative inner count");
  LabeledGraph out = g;
  if (inner == 0) return out;
  out.remove_edge(e);
  VertexId prev = e.u;
  for (int i = 0; i < inner; ++i) {
    VertexId m = out.add_vertex(Role::subdivision(e));
    out.add_edge(prev, m);
    prev = m;
  }
  out.add_edge(prev, e.v);
  return out;
}

LabeledGraph r_fold(const LabeledGraph& g, int r) {
  if (r < 1) throw InputError("r_fold: multiplicity must be >= 1");
  LabeledGraph out(g.name());
  for (VertexId v : g.vertices()) out.add_vertex(v, g.role(v));
  for (Edge e : g.edges()) {
    for (int i = 0; i < r; ++i) {
      VertexId m = out.add_vertex(Role::subdivision(e));
      out.add_edge(e.u, m);
      out.add_edge(m, e.v);
    }
  }
  return out;
}

LabeledGraph identify_vertices(const LabeledGraph& g, VertexId u, VertexId v) {
  if (u == v) throw InputError("identify_vertices: vertices must differ");
  if (!g.has_vertex(u) || !g.has_vertex(v))
    throw InputError("identify_vertices: unknown vertex");
  Role ru = g.role(u), rv = g.role(v);
  Role merged = ru;
  if (ru.kind == RoleKind::Plain)
    merged = rv;
  else if (rv.kind != RoleKind::Plain && !(ru == rv))
    throw InputError("identify_vertices: role conflict");

  LabeledGraph out(g.name());
  for (VertexId w : g.vertices())
    if (w != v) out.add_vertex(w, w == u ? merged : g.role(w));
  auto side = [&](VertexId w) { return w == v ? u : w; };
  for (Edge e : g.edges()) {
    VertexId a = side(e.u), b = side(e.v);
    if (a == b) continue;  // the uv edge itself vanishes
    Edge ne(a, b);
    EdgeClass cls = g.edge_class(e);
    if (!out.has_edge(ne))
      out.add_edge(a, b, cls);
    else if (cls != EdgeClass::Plain && out.edge_class(ne) == EdgeClass::Plain)
      out.set_edge_class(ne, cls);
  }
  return out;
}

LabeledGraph delete_edges(const LabeledGraph& g, const std::vector<Edge>& es) {
  LabeledGraph out = g;
  for (Edge e : es) out.remove_edge(e);
  return out;
}

LabeledGraph delete_vertices(const LabeledGraph& g,
                             const std::vector<VertexId>& vs) {
  LabeledGraph out = g;
  for (VertexId v : vs) out.remove_vertex(v);
  return out;
}

std::vector<VertexId> fold_midpoints(const LabeledGraph& folded, Edge e) {
  std::vector<VertexId> out;
  for (VertexId v : folded.vertices()) {
    Role r = folded.role(v);
    if (r.kind == RoleKind::SubdivisionVertex && r.origin == e) out.push_back(v);
  }
  return out;
}

VertexId require_terminal(const LabeledGraph& g, TerminalName t) {
  if (auto v = g.find_terminal(t)) return *v;
  if (t == TerminalName::C || t == TerminalName::D) {
    std::optional<VertexId> best;
    int best_idx = 0;
    for (VertexId v : g.vertices()) {
      Role r = g.role(v);
      if (r.kind != RoleKind::Bottleneck) continue;
      bool better = !best || (t == TerminalName::C ? r.index < best_idx
                                                   : r.index > best_idx);
      if (better) {
        best = v;
        best_idx = r.index;
      }
    }
    if (best) return *best;
  }
  throw InputError(std::string("missing terminal ") + terminal_letter(t));
}

}  // namespace wallcheck
