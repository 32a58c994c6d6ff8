#include "wallcheck/embedding.hpp"

#include <algorithm>
#include <cassert>

#include "wallcheck/util.hpp"

namespace wallcheck {

std::set<VertexId> Embedding::image_vertices() const {
  std::set<VertexId> out;
  for (const auto& [_, h] : branch_map) out.insert(h);
  for (const auto& [_, p] : path_map)
    for (VertexId v : p.verts) out.insert(v);
  return out;
}

std::set<Edge> Embedding::image_edges() const {
  std::set<Edge> out;
  for (const auto& [_, p] : path_map)
    for (Edge e : p.edges()) out.insert(e);
  return out;
}

bool verify_embedding(const LabeledGraph& host, const Embedding& emb,
                      const LabeledGraph& pattern) {
  for (VertexId pv : pattern.vertices())
    if (!emb.branch_map.count(pv))
      throw CertificateError("branch map misses a pattern vertex");
  for (const auto& [pv, hv] : emb.branch_map) {
    if (!pattern.has_vertex(pv))
      throw CertificateError("branch map names unknown pattern vertex");
    if (!host.has_vertex(hv))
      throw CertificateError("branch map names unknown host vertex");
  }
  auto pedges = pattern.edges();
  for (Edge pe : pedges)
    if (!emb.path_map.count(pe))
      throw CertificateError("path map misses a pattern edge");
  for (const auto& [pe, p] : emb.path_map) {
    if (!pattern.has_edge(pe))
      throw CertificateError("path map names unknown pattern edge");
    for (VertexId v : p.verts)
      if (!host.has_vertex(v))
        throw CertificateError("path names unknown host vertex");
  }

  // Injectivity of the branch map.
  std::set<VertexId> images;
  for (const auto& [_, hv] : emb.branch_map)
    if (!images.insert(hv).second) return false;

  std::set<VertexId> interiors;
  std::set<Edge> used_edges;
  for (Edge pe : pedges) {
    const Path& p = emb.path_map.at(pe);
    if (!p.valid_in(host)) return false;
    VertexId iu = emb.branch_map.at(pe.u), iv = emb.branch_map.at(pe.v);
    bool fwd = p.front() == iu && p.back() == iv;
    bool bwd = p.front() == iv && p.back() == iu;
    if (!fwd && !bwd) return false;
    for (std::size_t i = 1; i + 1 < p.verts.size(); ++i) {
      VertexId v = p.verts[i];
      if (images.count(v)) return false;          // interior hits a branch image
      if (!interiors.insert(v).second) return false;  // two paths share interior
    }
    for (Edge e : p.edges())
      if (!used_edges.insert(e).second) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Pattern analysis

namespace {

struct Chain {
  VertexId pu, pv;                 // endpoints (core pattern vertices)
  std::vector<VertexId> inner;     // degree-2 chain, pu side first
  int minlen = 1;
};

struct PatternInfo {
  bool cycle = false;
  std::vector<VertexId> cycle_verts;  // cyclic order, starts at min id
  std::vector<VertexId> core;         // ascending
  std::map<VertexId, int> core_idx;
  std::vector<int> core_deg;
  std::vector<Chain> chains;
  std::vector<int> order;                       // assignment order
  std::vector<std::vector<int>> route_after;    // chains routable per step
};

PatternInfo analyze_pattern(const LabeledGraph& p) {
  if (p.vertex_count() == 0) throw InputError("empty pattern");
  if (!is_connected(p)) throw InputError("pattern must be connected");

  PatternInfo info;
  for (VertexId v : p.vertices())
    if (p.degree(v) != 2) info.core.push_back(v);

  if (info.core.empty()) {
    // Connected, all degrees two: a single cycle.
    info.cycle = true;
    VertexId start = p.vertices().front();
    info.cycle_verts.push_back(start);
    VertexId prev = start, cur = p.neighbors(start)[0];
    while (cur != start) {
      info.cycle_verts.push_back(cur);
      auto nb = p.neighbors(cur);
      VertexId nxt = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = nxt;
    }
    return info;
  }

  for (std::size_t i = 0; i < info.core.size(); ++i)
    info.core_idx[info.core[i]] = (int)i;

  std::set<std::pair<VertexId, VertexId>> consumed;  // directed chain ends
  for (VertexId a : info.core) {
    for (VertexId w : p.neighbors(a)) {
      if (consumed.count({a, w})) continue;
      Chain c;
      c.pu = a;
      VertexId prev = a, cur = w;
      while (p.degree(cur) == 2) {
        c.inner.push_back(cur);
        auto nb = p.neighbors(cur);
        VertexId nxt = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = nxt;
      }
      c.pv = cur;
      c.minlen = (int)c.inner.size() + 1;
      consumed.insert({a, w});
      consumed.insert({cur, prev});
      info.chains.push_back(std::move(c));
    }
  }

  info.core_deg.assign(info.core.size(), 0);
  for (const Chain& c : info.chains) {
    info.core_deg[info.core_idx[c.pu]]++;
    info.core_deg[info.core_idx[c.pv]]++;
  }

  info.order.resize(info.core.size());
  for (std::size_t i = 0; i < info.core.size(); ++i) info.order[i] = (int)i;
  std::sort(info.order.begin(), info.order.end(), [&](int x, int y) {
    if (info.core_deg[x] != info.core_deg[y])
      return info.core_deg[x] > info.core_deg[y];
    return info.core[x] < info.core[y];
  });

  std::vector<int> pos(info.core.size());
  for (std::size_t k = 0; k < info.order.size(); ++k) pos[info.order[k]] = (int)k;
  info.route_after.assign(info.core.size(), {});
  for (std::size_t ci = 0; ci < info.chains.size(); ++ci) {
    const Chain& c = info.chains[ci];
    int at = std::max(pos[info.core_idx.at(c.pu)], pos[info.core_idx.at(c.pv)]);
    info.route_after[at].push_back((int)ci);
  }
  return info;
}

// ---------------------------------------------------------------------------
// Compiled host

struct HostView {
  std::vector<VertexId> ids;  // dense -> id, ascending
  std::map<VertexId, int> idx;
  int n = 0;
  std::vector<std::vector<int>> adj;
  std::vector<std::vector<char>> edge_ok;
  std::vector<char> allowed;
  std::vector<int> free_deg;

  HostView(const LabeledGraph& g, const SearchConstraints& c) {
    ids = g.vertices();
    n = (int)ids.size();
    for (int i = 0; i < n; ++i) idx[ids[i]] = i;
    adj.assign(n, {});
    edge_ok.assign(n, std::vector<char>(n, 0));
    allowed.assign(n, 1);
    for (VertexId v : c.forbidden) {
      auto it = idx.find(v);
      if (it != idx.end()) allowed[it->second] = 0;
    }
    for (Edge e : g.edges()) {
      if (c.allowed_edges && !c.allowed_edges->count(e)) continue;
      int a = idx.at(e.u), b = idx.at(e.v);
      if (!allowed[a] || !allowed[b]) continue;
      adj[a].push_back(b);
      adj[b].push_back(a);
      edge_ok[a][b] = edge_ok[b][a] = 1;
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    free_deg.assign(n, 0);
    for (int i = 0; i < n; ++i) free_deg[i] = (int)adj[i].size();
  }
};

// ---------------------------------------------------------------------------
// Core search

struct CoreSearch {
  const HostView& H;
  const PatternInfo& P;
  const SearchConstraints& C;
  std::function<bool(const CoreWitness&)> sink;

  std::vector<int> img;                 // core idx -> dense host or -1
  std::vector<char> used;
  std::vector<std::vector<char>> eused;
  std::vector<std::vector<int>> chain_paths;  // per chain, dense indices
  std::vector<std::vector<int>> domains;      // per core idx, dense candidates
  std::vector<char> chain_routed;
  long long free_left = 0;   // allowed host vertices not yet used
  long long demand = 0;      // unassigned cores + pending chain interiors
  std::uint64_t nodes = 0;
  std::uint64_t budget;
  std::uint64_t emitted = 0;
  bool aborted = false;
  bool stopped = false;

  std::vector<int> order;                       // assignment order
  std::vector<std::vector<int>> route_after;    // chains routable per step

  CoreSearch(const HostView& h, const PatternInfo& p, const SearchConstraints& c,
             std::function<bool(const CoreWitness&)> s)
      : H(h), P(p), C(c), sink(std::move(s)), budget(c.node_budget) {
    // Constrained vertices go first so forced structure prunes early.
    order = P.order;
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
      auto constrained = [&](int i) {
        VertexId pv = P.core[i];
        return C.pins.count(pv) || C.domains.count(pv);
      };
      return constrained(x) > constrained(y);
    });
    std::vector<int> pos(P.core.size());
    for (std::size_t k2 = 0; k2 < order.size(); ++k2) pos[order[k2]] = (int)k2;
    route_after.assign(P.core.size(), {});
    for (std::size_t ci = 0; ci < P.chains.size(); ++ci) {
      const Chain& ch = P.chains[ci];
      int at = std::max(pos[P.core_idx.at(ch.pu)], pos[P.core_idx.at(ch.pv)]);
      route_after[at].push_back((int)ci);
    }
    img.assign(P.core.size(), -1);
    used.assign(H.n, 0);
    eused.assign(H.n, std::vector<char>(H.n, 0));
    chain_paths.assign(P.chains.size(), {});
    chain_routed.assign(P.chains.size(), 0);
    for (int h2 = 0; h2 < H.n; ++h2) free_left += H.allowed[h2] ? 1 : 0;
    demand = (long long)P.core.size();
    for (const Chain& ch : P.chains) demand += ch.minlen - 1;
    domains.resize(P.core.size());
    for (std::size_t i = 0; i < P.core.size(); ++i) {
      VertexId pv = P.core[i];
      auto pin = C.pins.find(pv);
      auto dom = C.domains.find(pv);
      for (int h2 = 0; h2 < H.n; ++h2) {
        if (!H.allowed[h2]) continue;
        VertexId hid = H.ids[h2];
        if (pin != C.pins.end() && pin->second != hid) continue;
        if (dom != C.domains.end() &&
            std::find(dom->second.begin(), dom->second.end(), hid) ==
                dom->second.end())
          continue;
        domains[i].push_back(h2);
      }
      if (pin != C.pins.end() && C.forbidden.count(pin->second))
        throw InputError("pin targets a forbidden vertex");
    }
  }

  bool tick() {
    if (++nodes > budget) aborted = true;
    return !aborted && !stopped;
  }

  bool reachable(int from, int to) const {
    if (from == to) return true;
    std::vector<char> seen(H.n, 0);
    std::vector<int> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : H.adj[v]) {
        if (eused[v][w]) continue;
        if (w == to) return true;
        if (used[w] || seen[w]) continue;
        seen[w] = 1;
        stack.push_back(w);
      }
    }
    return false;
  }

  void emit() {
    CoreWitness w;
    for (std::size_t i = 0; i < P.core.size(); ++i)
      w.images[P.core[i]] = H.ids[img[i]];
    for (std::size_t ci = 0; ci < P.chains.size(); ++ci) {
      CoreWitness::ChainPath cp;
      cp.pu = P.chains[ci].pu;
      cp.pv = P.chains[ci].pv;
      cp.inner = P.chains[ci].inner;
      std::vector<VertexId> verts;
      for (int d : chain_paths[ci]) verts.push_back(H.ids[d]);
      cp.host_path = Path(std::move(verts));
      w.chains.push_back(std::move(cp));
    }
    ++emitted;
    if (!sink(w)) stopped = true;
    if (C.witness_cap && emitted >= *C.witness_cap) stopped = true;
  }

  void route(const std::vector<int>& list, std::size_t i, std::size_t k) {
    if (aborted || stopped) return;
    if (i == list.size()) {
      assign(k + 1);
      return;
    }
    int ci = list[i];
    const Chain& c = P.chains[ci];
    int src = img[P.core_idx.at(c.pu)];
    int dst = img[P.core_idx.at(c.pv)];
    bool loop = c.pu == c.pv;

    std::vector<int> path{src};
    auto walk = [&](auto&& self, int cur, int len) -> void {
      if (aborted || stopped) return;
      for (int w : H.adj[cur]) {
        if (aborted || stopped) return;
        if (eused[cur][w]) continue;
        if (!tick()) return;
        if (w == dst && len + 1 >= c.minlen && (!loop || len + 1 >= 3)) {
          // Interior vertices are already held by the enclosing frames;
          // only the edges need reserving for the nested routes.
          path.push_back(w);
          chain_paths[ci] = path;
          for (std::size_t t = 0; t + 1 < path.size(); ++t) {
            eused[path[t]][path[t + 1]] = 1;
            eused[path[t + 1]][path[t]] = 1;
          }
          demand -= c.minlen - 1;
          chain_routed[ci] = 1;
          route(list, i + 1, k);
          chain_routed[ci] = 0;
          demand += c.minlen - 1;
          for (std::size_t t = 0; t + 1 < path.size(); ++t) {
            eused[path[t]][path[t + 1]] = 0;
            eused[path[t + 1]][path[t]] = 0;
          }
          path.pop_back();
        }
        if (used[w] || w == dst) continue;
        // Every extension spends a host vertex; the outstanding minimum is
        // one per unassigned core plus the pending chain interiors (of
        // which this chain still owes minlen-1-(len+1) after the step).
        long long owed = demand - (c.minlen - 1) +
                         std::max(0, c.minlen - 1 - (len + 1));
        if (free_left - 1 < owed) continue;
        if (!reachable(w, dst)) continue;
        path.push_back(w);
        used[w] = 1;
        free_left -= 1;
        self(self, w, len + 1);
        free_left += 1;
        used[w] = 0;
        path.pop_back();
      }
    };
    walk(walk, src, 0);
    chain_paths[ci].clear();
  }

  void assign(std::size_t k) {
    if (aborted || stopped) return;
    if (k == order.size()) {
      emit();
      return;
    }
    int u = order[k];
    for (int h : domains[u]) {
      if (aborted || stopped) return;
      if (used[h]) continue;
      if (H.free_deg[h] < P.core_deg[u]) continue;
      if (free_left - 1 < demand - 1) continue;
      if (!tick()) return;
      img[u] = h;
      used[h] = 1;
      free_left -= 1;
      demand -= 1;
      route(route_after[k], 0, k);
      demand += 1;
      free_left += 1;
      img[u] = -1;
      used[h] = 0;
    }
  }

  void run() {
    if (P.core.empty()) return;
    assign(0);
  }
};

// Cycle patterns: enumerate host cycles of length >= L, each once (minimum
// vertex first, canonical direction).
struct CycleSearch {
  const HostView& H;
  int L;
  std::function<bool(const std::vector<int>&)> sink;  // dense cycle, start at min
  std::uint64_t nodes = 0, budget;
  bool aborted = false, stopped = false;
  std::vector<char> used;
  std::vector<int> path;

  CycleSearch(const HostView& h, int len, std::uint64_t b,
              std::function<bool(const std::vector<int>&)> s)
      : H(h), L(len), sink(std::move(s)), budget(b), used(h.n, 0) {}

  bool tick() {
    if (++nodes > budget) aborted = true;
    return !aborted && !stopped;
  }

  void extend(int start, int cur) {
    if (aborted || stopped) return;
    for (int w : H.adj[cur]) {
      if (aborted || stopped) return;
      if (!tick()) return;
      if (w == start) {
        if ((int)path.size() >= L && (int)path.size() >= 3 &&
            path[1] < path.back())
          if (!sink(path)) stopped = true;
        continue;
      }
      if (w < start || used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      extend(start, w);
      path.pop_back();
      used[w] = 0;
    }
  }

  void run() {
    for (int s = 0; s < H.n && !aborted && !stopped; ++s) {
      if (!H.allowed[s]) continue;
      std::fill(used.begin(), used.end(), 0);
      used[s] = 1;
      path = {s};
      extend(s, s);
    }
  }
};

}  // namespace

// ---------------------------------------------------------------------------

namespace {

SearchStats enumerate_core_witnesses_one_block(
    const LabeledGraph& host, const LabeledGraph& pattern,
    const PatternInfo& info, const SearchConstraints& c,
    const std::function<bool(const CoreWitness&)>& sink);

/// A subdivision of a 2-connected pattern is itself 2-connected, so it lies
/// inside a single block of the constrained host. Searching block by block
/// cuts off everything that would otherwise wander across cut vertices.
SearchStats enumerate_blockwise(
    const LabeledGraph& host, const LabeledGraph& pattern,
    const PatternInfo& info, const SearchConstraints& c,
    const std::function<bool(const CoreWitness&)>& sink) {
  LabeledGraph filtered;
  for (VertexId v : host.vertices())
    if (!c.forbidden.count(v)) filtered.add_vertex(v, host.role(v));
  for (Edge e : host.edges()) {
    if (c.forbidden.count(e.u) || c.forbidden.count(e.v)) continue;
    if (c.allowed_edges && !c.allowed_edges->count(e)) continue;
    filtered.add_edge(e.u, e.v, host.edge_class(e));
  }
  SearchStats total;
  total.exhausted = true;
  bool stopped = false;
  for (const auto& block : blocks(filtered)) {
    if (stopped) break;
    if (block.size() < pattern.vertex_count()) continue;
    std::set<VertexId> inside(block.begin(), block.end());
    SearchConstraints cb = c;
    std::set<Edge> allow;
    for (Edge e : filtered.edges())
      if (inside.count(e.u) && inside.count(e.v)) allow.insert(e);
    cb.allowed_edges = std::move(allow);
    cb.node_budget = c.node_budget > total.nodes ? c.node_budget - total.nodes : 0;
    SearchStats st = enumerate_core_witnesses_one_block(
        host, pattern, info, cb, [&](const CoreWitness& w) {
          ++total.witnesses;
          if (!sink(w)) {
            stopped = true;
            return false;
          }
          if (c.witness_cap && total.witnesses >= *c.witness_cap) {
            stopped = true;
            return false;
          }
          return true;
        });
    total.nodes += st.nodes;
    if (!st.exhausted && !stopped) total.exhausted = false;
  }
  if (stopped) total.exhausted = false;
  return total;
}

SearchStats enumerate_core_witnesses_one_block(
    const LabeledGraph& host, const LabeledGraph&,
    const PatternInfo& info, const SearchConstraints& c,
    const std::function<bool(const CoreWitness&)>& sink) {
  HostView hv(host, c);
  SearchStats stats;

  if (info.cycle) {
    int L = (int)info.cycle_verts.size();
    CycleSearch cs(hv, L, c.node_budget, [&](const std::vector<int>& cyc) {
      CoreWitness w;
      CoreWitness::ChainPath cp;
      cp.pu = cp.pv = info.cycle_verts.front();
      cp.inner = {info.cycle_verts.begin() + 1, info.cycle_verts.end()};
      std::vector<VertexId> verts;
      for (int d : cyc) verts.push_back(hv.ids[d]);
      cp.host_path = Path(std::move(verts));  // closed: back joins front
      w.chains.push_back(std::move(cp));
      ++stats.witnesses;
      return sink(w);
    });
    cs.run();
    stats.nodes = cs.nodes;
    stats.exhausted = !cs.aborted && !cs.stopped;
    return stats;
  }

  CoreSearch search(hv, info, c, sink);
  search.run();
  stats.nodes = search.nodes;
  stats.witnesses = search.emitted;
  stats.exhausted = !search.aborted && !search.stopped;
  return stats;
}

}  // namespace

SearchStats enumerate_core_witnesses(
    const LabeledGraph& host, const LabeledGraph& pattern,
    const SearchConstraints& c,
    const std::function<bool(const CoreWitness&)>& sink) {
  PatternInfo info = analyze_pattern(pattern);
  bool block_restrict =
      pattern.vertex_count() >= 3 &&
      (info.cycle || is_biconnected(pattern));
  if (block_restrict) {
    SearchStats st = enumerate_blockwise(host, pattern, info, c, sink);
    // Witness-cap stops are reported as non-exhausted by the block loop;
    // the caller distinguishes via the stop it requested.
    return st;
  }
  return enumerate_core_witnesses_one_block(host, pattern, info, c, sink);
}

namespace {

/// Splits a chain's host path at the given interior designation positions.
void add_chain_to_embedding(Embedding& emb, const CoreWitness::ChainPath& cp,
                            const std::vector<std::size_t>& positions) {
  std::vector<VertexId> stops{cp.host_path.verts.front()};
  for (std::size_t p : positions) stops.push_back(cp.host_path.verts[p]);
  stops.push_back(cp.host_path.verts.back());
  std::vector<VertexId> pverts{cp.pu};
  pverts.insert(pverts.end(), cp.inner.begin(), cp.inner.end());
  pverts.push_back(cp.pv);
  std::size_t seg_start = 0;
  for (std::size_t s = 0; s + 1 < pverts.size(); ++s) {
    std::size_t seg_end = seg_start;
    while (cp.host_path.verts[seg_end] != stops[s + 1]) ++seg_end;
    Path piece(std::vector<VertexId>(cp.host_path.verts.begin() + seg_start,
                                     cp.host_path.verts.begin() + seg_end + 1));
    emb.path_map[Edge(pverts[s], pverts[s + 1])] = std::move(piece);
    for (std::size_t t = 0; t < cp.inner.size(); ++t)
      emb.branch_map[cp.inner[t]] = cp.host_path.verts[positions[t]];
    seg_start = seg_end;
  }
}

/// Enumerates all designations of a core witness, i.e. all ways to place the
/// degree-2 pattern vertices on the chain paths. Returns false if the sink
/// stopped.
bool enumerate_expansions(const CoreWitness& w, const LabeledGraph&,
                          const std::string& pattern_name,
                          const SearchConstraints& c, std::uint64_t& nodes,
                          std::uint64_t budget, bool& aborted,
                          const std::function<bool(const Embedding&)>& sink) {
  // Position choices per chain: strictly increasing interior indices.
  std::vector<std::vector<std::vector<std::size_t>>> options(w.chains.size());
  for (std::size_t ci = 0; ci < w.chains.size(); ++ci) {
    const auto& cp = w.chains[ci];
    std::size_t t = cp.inner.size();
    std::size_t len = cp.host_path.verts.size() - 1;
    std::vector<std::size_t> cur(t);
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                            std::size_t lo) {
      if (++nodes > budget) {
        aborted = true;
        return false;
      }
      if (i == t) {
        options[ci].push_back(cur);
        return true;
      }
      for (std::size_t p = lo; p + (t - i - 1) < len; ++p) {
        // Honor pins on inner pattern vertices.
        auto pin = c.pins.find(cp.inner[i]);
        if (pin != c.pins.end() && cp.host_path.verts[p] != pin->second) continue;
        cur[i] = p;
        if (!rec(i + 1, p + 1)) return false;
      }
      return true;
    };
    if (!rec(0, 1)) return false;
    if (options[ci].empty()) return true;  // pinned inner vertex unreachable
  }

  std::vector<std::size_t> pick(w.chains.size(), 0);
  while (true) {
    Embedding emb;
    emb.pattern = pattern_name;
    for (const auto& [pv, hvx] : w.images) emb.branch_map[pv] = hvx;
    for (std::size_t ci = 0; ci < w.chains.size(); ++ci)
      add_chain_to_embedding(emb, w.chains[ci], options[ci][pick[ci]]);
    if (!sink(emb)) return false;
    // odometer
    std::size_t ci = 0;
    while (ci < pick.size() && ++pick[ci] == options[ci].size()) {
      pick[ci] = 0;
      ++ci;
    }
    if (ci == pick.size()) return true;
    if (++nodes > budget) {
      aborted = true;
      return false;
    }
  }
}

}  // namespace

Embedding expand_core_witness(const CoreWitness& w, const LabeledGraph&,
                              const std::string& pattern_name) {
  Embedding emb;
  emb.pattern = pattern_name;
  for (const auto& [pv, hvx] : w.images) emb.branch_map[pv] = hvx;
  for (const auto& cp : w.chains) {
    std::vector<std::size_t> firsts(cp.inner.size());
    for (std::size_t i = 0; i < firsts.size(); ++i) firsts[i] = i + 1;
    add_chain_to_embedding(emb, cp, firsts);
  }
  return emb;
}

namespace {

/// Expansion of a cycle-pattern witness: all order-preserving designations
/// of the pattern cycle onto the host cycle.
bool enumerate_cycle_expansions(const CoreWitness& w,
                                const std::string& pattern_name,
                                const SearchConstraints& c,
                                std::uint64_t& nodes, std::uint64_t budget,
                                bool& aborted,
                                const std::function<bool(const Embedding&)>& sink) {
  const auto& cyc = w.chains.front().host_path.verts;  // closed walk
  std::vector<VertexId> pv{w.chains.front().pu};
  pv.insert(pv.end(), w.chains.front().inner.begin(),
            w.chains.front().inner.end());
  std::size_t M = cyc.size(), L = pv.size();
  if (M < L) return true;

  std::vector<std::size_t> pos(L);
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                          std::size_t lo) {
    if (++nodes > budget) {
      aborted = true;
      return false;
    }
    if (i == L) {
      for (int dir : {+1, -1}) {
        for (std::size_t rot = 0; rot < L; ++rot) {
          Embedding emb;
          emb.pattern = pattern_name;
          // pattern vertex pv[j] -> cycle position pos[(rot +/- j) mod L]
          std::vector<std::size_t> where(L);
          for (std::size_t j = 0; j < L; ++j) {
            std::size_t slot = (rot + (dir > 0 ? j : L - j)) % L;
            where[j] = pos[slot];
            emb.branch_map[pv[j]] = cyc[pos[slot]];
          }
          bool ok = true;
          for (std::size_t j = 0; j < L && ok; ++j) {
            auto pin = c.pins.find(pv[j]);
            if (pin != c.pins.end() && emb.branch_map[pv[j]] != pin->second)
              ok = false;
          }
          if (!ok) continue;
          for (std::size_t j = 0; j < L; ++j) {
            std::size_t a = where[j], b = where[(j + 1) % L];
            std::vector<VertexId> seg;
            std::size_t steps = (dir > 0 ? (b + M - a) : (a + M - b)) % M;
            if (steps == 0) steps = M;
            for (std::size_t s2 = 0; s2 <= steps; ++s2) {
              std::size_t at = dir > 0 ? (a + s2) % M : (a + M - (s2 % M)) % M;
              seg.push_back(cyc[at]);
            }
            emb.path_map[Edge(pv[j], pv[(j + 1) % L])] = Path(seg);
          }
          if (!sink(emb)) return false;
        }
      }
      return true;
    }
    for (std::size_t p = lo; p + (L - i - 1) < M; ++p) {
      pos[i] = p;
      if (!rec(i + 1, p + 1)) return false;
    }
    return true;
  };
  return rec(0, 0);
}

}  // namespace

SearchStats enumerate_embeddings(
    const LabeledGraph& host, const LabeledGraph& pattern,
    const SearchConstraints& c,
    const std::function<bool(const Embedding&)>& sink) {
  PatternInfo info = analyze_pattern(pattern);
  SearchStats stats;
  bool aborted = false;
  std::uint64_t emitted = 0;

  auto handle = [&](const CoreWitness& w) {
    auto emit = [&](const Embedding& emb) {
      if (!verify_embedding(host, emb, pattern))
        throw std::logic_error("internal: unsound embedding emitted");
      ++emitted;
      if (!sink(emb)) return false;
      if (c.witness_cap && emitted >= *c.witness_cap) return false;
      return true;
    };
    if (info.cycle)
      return enumerate_cycle_expansions(w, pattern.name(), c, stats.nodes,
                                        c.node_budget, aborted, emit);
    return enumerate_expansions(w, pattern, pattern.name(), c, stats.nodes,
                                c.node_budget, aborted, emit);
  };

  SearchConstraints core_c = c;
  // Pins on degree-2 pattern vertices are enforced during expansion.
  for (auto it = core_c.pins.begin(); it != core_c.pins.end();) {
    if (pattern.degree(it->first) == 2)
      it = core_c.pins.erase(it);
    else
      ++it;
  }
  SearchStats inner = enumerate_core_witnesses(host, pattern, core_c, handle);
  stats.nodes += inner.nodes;
  stats.witnesses = emitted;
  stats.exhausted = inner.exhausted && !aborted;
  return stats;
}

EmbeddingResult find_topological_minor(const LabeledGraph& host,
                                       const LabeledGraph& pattern,
                                       const SearchConstraints& c) {
  EmbeddingResult res;
  SearchConstraints cc = c;
  cc.witness_cap = 1;
  res.stats = enumerate_embeddings(host, pattern, cc,
                                   [&](const Embedding& emb) {
                                     res.witness = emb;
                                     return false;
                                   });
  if (res.witness)
    res.outcome = SearchOutcome::Found;
  else if (res.stats.exhausted)
    res.outcome = SearchOutcome::None;
  else
    res.outcome = SearchOutcome::BudgetExceeded;
  return res;
}

// ---------------------------------------------------------------------------
// Linkages

bool verify_linkage(const LabeledGraph& host, const Linkage& l, VertexId a,
                    VertexId b, VertexId c, VertexId d) {
  if (!l.pab.valid_in(host) || !l.pcd.valid_in(host)) return false;
  if (!((l.pab.front() == a && l.pab.back() == b) ||
        (l.pab.front() == b && l.pab.back() == a)))
    return false;
  if (!((l.pcd.front() == c && l.pcd.back() == d) ||
        (l.pcd.front() == d && l.pcd.back() == c)))
    return false;
  std::set<VertexId> s1(l.pab.verts.begin(), l.pab.verts.end());
  for (VertexId v : l.pcd.verts)
    if (s1.count(v)) return false;
  return true;
}

namespace {

struct LinkEngine {
  std::vector<VertexId> ids;
  std::map<VertexId, int> idx;
  int n = 0;
  std::vector<std::vector<int>> adj;
  std::vector<std::vector<char>> eexcl;
  std::uint64_t nodes = 0, budget;
  bool aborted = false;

  LinkEngine(const LabeledGraph& g, std::uint64_t b,
             const std::set<Edge>& excluded)
      : budget(b) {
    ids = g.vertices();
    n = (int)ids.size();
    for (int i = 0; i < n; ++i) idx[ids[i]] = i;
    adj.assign(n, {});
    eexcl.assign(n, std::vector<char>(n, 0));
    for (Edge e : g.edges()) {
      int a = idx.at(e.u), b2 = idx.at(e.v);
      adj[a].push_back(b2);
      adj[b2].push_back(a);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    for (Edge e : excluded) {
      auto iu = idx.find(e.u), iv = idx.find(e.v);
      if (iu != idx.end() && iv != idx.end())
        eexcl[iu->second][iv->second] = eexcl[iv->second][iu->second] = 1;
    }
  }

  bool tick() {
    if (++nodes > budget) aborted = true;
    return !aborted;
  }

  bool reach(int from, int to, const std::vector<char>& avoid) const {
    if (avoid[from] || avoid[to]) return false;
    if (from == to) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (eexcl[v][w]) continue;
        if (w == to) return true;
        if (avoid[w] || seen[w]) continue;
        seen[w] = 1;
        stack.push_back(w);
      }
    }
    return false;
  }

  /// Deterministic shortest path via BFS with ascending tie-break; empty if
  /// none. `avoid` must exclude the endpoints.
  std::vector<int> bfs_path(int from, int to,
                            const std::vector<char>& avoid) const {
    std::vector<int> par(n, -2);
    std::vector<int> q{from};
    par[from] = -1;
    for (std::size_t qi = 0; qi < q.size(); ++qi) {
      int v = q[qi];
      for (int w : adj[v]) {
        if (eexcl[v][w] || par[w] != -2) continue;
        if (w != to && avoid[w]) continue;
        par[w] = v;
        if (w == to) {
          std::vector<int> path;
          for (int x = to; x != -1; x = par[x]) path.push_back(x);
          std::reverse(path.begin(), path.end());
          return path;
        }
        q.push_back(w);
      }
    }
    return {};
  }

  Path to_path(const std::vector<int>& p) const {
    std::vector<VertexId> verts;
    for (int d : p) verts.push_back(ids[d]);
    return Path(verts);
  }

  /// Enumerates simple s1->t1 paths in ascending order. After every
  /// extension two prunes apply: t1 must stay reachable, and prune() (the
  /// monotone separation test) must keep returning true. on_path returns
  /// false to stop the whole enumeration.
  bool for_paths(int s1, int t1, std::vector<char>& avoid,
                 const std::function<bool(const std::vector<int>&)>& prune,
                 const std::function<bool(const std::vector<int>&)>& on_path) {
    std::vector<int> path{s1};
    bool go_on = true;
    auto dfs = [&](auto&& self, int cur) -> void {
      if (aborted || !go_on) return;
      for (int w : adj[cur]) {
        if (aborted || !go_on) return;
        if (eexcl[cur][w]) continue;
        if (!tick()) return;
        if (w == t1) {
          path.push_back(w);
          if (!on_path(path)) go_on = false;
          path.pop_back();
          continue;
        }
        if (avoid[w]) continue;
        avoid[w] = 1;
        path.push_back(w);
        avoid[w] = 0;  // reach() refuses avoided endpoints
        bool feasible = reach(w, t1, avoid);
        avoid[w] = 1;
        if (feasible && prune(path)) self(self, w);
        path.pop_back();
        avoid[w] = 0;
      }
    };
    avoid[s1] = 1;
    dfs(dfs, s1);
    avoid[s1] = 0;
    return go_on;
  }
};

}  // namespace

LinkageResult find_disjoint_pair(const LabeledGraph& host, VertexId s1,
                                 VertexId t1, VertexId s2, VertexId t2,
                                 std::uint64_t budget,
                                 const std::set<Edge>& excluded_edges) {
  for (VertexId v : {s1, t1, s2, t2})
    if (!host.has_vertex(v)) throw InputError("pair endpoint not in host");
  LinkageResult res;
  LinkEngine eng(host, budget, excluded_edges);
  int a = eng.idx.at(s1), b = eng.idx.at(t1), c = eng.idx.at(s2),
      d = eng.idx.at(t2);
  std::vector<char> avoid(eng.n, 0);

  auto prune = [&](const std::vector<int>&) {
    // Monotone: once the prefix separates s2 from t2, every extension does.
    return eng.reach(c, d, avoid);
  };
  auto on_path = [&](const std::vector<int>& p1) {
    std::vector<char> av(eng.n, 0);
    for (int v : p1) av[v] = 1;
    if (av[c] || av[d]) return true;
    auto p2 = eng.bfs_path(c, d, av);
    if (p2.empty()) return true;
    res.witness = Linkage{eng.to_path(p1), eng.to_path(p2)};
    return false;
  };
  eng.for_paths(a, b, avoid, prune, on_path);
  res.stats.nodes = eng.nodes;
  res.stats.exhausted = !eng.aborted;
  if (res.witness)
    res.outcome = SearchOutcome::Found;
  else
    res.outcome = eng.aborted ? SearchOutcome::BudgetExceeded : SearchOutcome::None;
  if (res.witness) res.stats.witnesses = 1;
  return res;
}

LinkageResult find_linkage(const LabeledGraph& host, std::uint64_t budget) {
  VertexId a = require_terminal(host, TerminalName::A);
  VertexId b = require_terminal(host, TerminalName::B);
  VertexId c = require_terminal(host, TerminalName::C);
  VertexId d = require_terminal(host, TerminalName::D);
  auto res = find_disjoint_pair(host, a, b, c, d, budget);
  if (res.witness && !verify_linkage(host, *res.witness, a, b, c, d))
    throw std::logic_error("internal: unsound linkage witness");
  return res;
}

TwoLinkagesResult find_two_edge_disjoint_linkages(const LabeledGraph& host,
                                                  std::uint64_t budget) {
  VertexId av = require_terminal(host, TerminalName::A);
  VertexId bv = require_terminal(host, TerminalName::B);
  VertexId cv = require_terminal(host, TerminalName::C);
  VertexId dv = require_terminal(host, TerminalName::D);

  TwoLinkagesResult res;
  LinkEngine eng(host, budget, {});
  int a = eng.idx.at(av), b = eng.idx.at(bv), c = eng.idx.at(cv),
      d = eng.idx.at(dv);

  std::vector<char> avoid1(eng.n, 0);
  auto prune1 = [&](const std::vector<int>&) { return eng.reach(c, d, avoid1); };

  auto try_l1 = [&](const std::vector<int>& p1ab) {
    // All c-d paths disjoint from p1ab; for each, run a full linkage search
    // on the edge-residual graph.
    std::vector<char> avoid2(eng.n, 0);
    for (int v : p1ab) avoid2[v] = 1;
    if (avoid2[c] || avoid2[d]) return true;
    auto prune2 = [&](const std::vector<int>&) { return true; };
    bool keep_going = eng.for_paths(c, d, avoid2, prune2,
        [&](const std::vector<int>& p1cd) {
          // Mask the first linkage's edges, search for the second.
          auto mask = [&](const std::vector<int>& p, char val) {
            for (std::size_t i = 0; i + 1 < p.size(); ++i)
              eng.eexcl[p[i]][p[i + 1]] = eng.eexcl[p[i + 1]][p[i]] = val;
          };
          mask(p1ab, 1);
          mask(p1cd, 1);
          std::vector<char> avoid3(eng.n, 0);
          std::optional<Linkage> second;
          auto prune3 = [&](const std::vector<int>&) {
            return eng.reach(c, d, avoid3);
          };
          eng.for_paths(a, b, avoid3, prune3, [&](const std::vector<int>& p2ab) {
            std::vector<char> av(eng.n, 0);
            for (int v : p2ab) av[v] = 1;
            if (av[c] || av[d]) return true;
            auto p2cd = eng.bfs_path(c, d, av);
            if (p2cd.empty()) return true;
            second = Linkage{eng.to_path(p2ab), eng.to_path(p2cd)};
            return false;
          });
          mask(p1ab, 0);
          mask(p1cd, 0);
          if (second) {
            res.witness = {Linkage{eng.to_path(p1ab), eng.to_path(p1cd)},
                           *second};
            return false;
          }
          return !eng.aborted;
        });
    return keep_going && !eng.aborted;
  };

  eng.for_paths(a, b, avoid1, prune1, try_l1);
  res.stats.nodes = eng.nodes;
  res.stats.exhausted = !eng.aborted;
  if (res.witness) {
    res.outcome = SearchOutcome::Found;
    res.stats.witnesses = 1;
  } else {
    res.outcome = eng.aborted ? SearchOutcome::BudgetExceeded : SearchOutcome::None;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Packings

bool verify_packing(const LabeledGraph& host, const Packing& p,
                    const LabeledGraph& pattern) {
  std::set<Edge> seen;
  for (const Embedding& emb : p.embeddings) {
    if (!verify_embedding(host, emb, pattern)) return false;
    for (Edge e : emb.image_edges())
      if (!seen.insert(e).second) return false;
  }
  return true;
}

PackingResult find_edge_disjoint_packing(const LabeledGraph& host,
                                         const LabeledGraph& pattern, int k,
                                         const SearchConstraints& c) {
  if (k < 0) throw InputError("packing size must be >= 0");
  PackingResult res;
  if (k == 0) {
    res.outcome = SearchOutcome::Found;
    res.witness = Packing{};
    res.stats.exhausted = true;
    return res;
  }

  std::set<Edge> all_edges;
  if (c.allowed_edges)
    all_edges = *c.allowed_edges;
  else
    for (Edge e : host.edges()) all_edges.insert(e);

  std::vector<Embedding> chosen;
  std::uint64_t spent = 0;
  bool aborted = false;

  std::function<bool(const std::set<Edge>&)> level =
      [&](const std::set<Edge>& allowed) -> bool {
    if ((int)chosen.size() == k) return true;
    SearchConstraints cc = c;
    cc.allowed_edges = allowed;
    cc.node_budget = c.node_budget > spent ? c.node_budget - spent : 0;
    cc.witness_cap.reset();
    bool found = false;
    SearchStats st = enumerate_embeddings(host, pattern, cc,
        [&](const Embedding& emb) {
          chosen.push_back(emb);
          std::set<Edge> rest = allowed;
          for (Edge e : emb.image_edges()) rest.erase(e);
          if (level(rest)) {
            found = true;
            return false;
          }
          chosen.pop_back();
          return true;
        });
    spent += st.nodes;
    if (!st.exhausted && !found) aborted = true;
    return found;
  };

  bool found = level(all_edges);
  res.stats.nodes = spent;
  res.stats.exhausted = !aborted;
  if (found) {
    res.outcome = SearchOutcome::Found;
    res.witness = Packing{chosen};
    res.stats.witnesses = 1;
    if (!verify_packing(host, *res.witness, pattern))
      throw std::logic_error("internal: unsound packing witness");
  } else {
    res.outcome = aborted ? SearchOutcome::BudgetExceeded : SearchOutcome::None;
  }
  return res;
}

}  // namespace wallcheck
